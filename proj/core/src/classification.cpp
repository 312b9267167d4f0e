#include "fano3/classification.hpp"

#include <stdexcept>

#include "fano3/errors.hpp"

namespace fano3 {

FanoDescriptor FanoDescriptor::index_one(int genus) {
  if (!((genus >= 2 && genus <= 10) || genus == 12))
    throw solver_error(errc::genus_out_of_range,
                       "index-1 genus must be 2..10 or 12, got " + std::to_string(genus));
  return FanoDescriptor(Kind::IndexOne, genus);
}

FanoDescriptor FanoDescriptor::index_two(int degree_d) {
  if (degree_d < 1 || degree_d > 5)
    throw solver_error(errc::degree_out_of_range,
                       "index-2 degree must be 1..5, got " + std::to_string(degree_d));
  return FanoDescriptor(Kind::IndexTwo, degree_d);
}

int FanoDescriptor::index() const {
  switch (kind_) {
    case Kind::IndexOne: return 1;
    case Kind::IndexTwo: return 2;
    case Kind::Quadric: return 3;
    case Kind::ProjSpace: return 4;
  }
  return 0;
}

int FanoDescriptor::anticanonical_degree() const {
  switch (kind_) {
    case Kind::IndexOne: return 2 * param_ - 2;
    case Kind::IndexTwo: return 8 * param_;
    case Kind::Quadric: return 54;
    case Kind::ProjSpace: return 64;
  }
  return 0;
}

std::string FanoDescriptor::name() const {
  switch (kind_) {
    case Kind::IndexOne: return "X" + std::to_string(2 * param_ - 2);
    case Kind::IndexTwo: return "V" + std::to_string(param_);
    case Kind::Quadric: return "Q";
    case Kind::ProjSpace: return "P3";
  }
  return "?";
}

const std::vector<FanoDescriptor>& all_rank_one_targets() {
  static const std::vector<FanoDescriptor> table = [] {
    std::vector<FanoDescriptor> t;
    for (int g : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) t.push_back(FanoDescriptor::index_one(g));
    for (int d = 1; d <= 5; ++d) t.push_back(FanoDescriptor::index_two(d));
    t.push_back(FanoDescriptor::quadric());
    t.push_back(FanoDescriptor::proj_space());
    return t;  // already (index asc, degree asc): both parameters increase the degree
  }();
  return table;
}

int h21_cap(const FanoDescriptor& f) {
  // h^{2,1} of the smooth representative (classification data).
  switch (f.kind()) {
    case FanoDescriptor::Kind::IndexOne:
      switch (f.parameter()) {
        case 2: return 52;
        case 3: return 30;  // b_3 = 60 for the smooth quartic
        case 4: return 20;
        case 5: return 14;
        case 6: return 10;
        case 7: return 7;
        case 8: return 5;
        case 9: return 3;
        case 10: return 2;
        case 12: return 0;
      }
      break;
    case FanoDescriptor::Kind::IndexTwo:
      switch (f.parameter()) {
        case 1: return 21;
        case 2: return 10;
        case 3: return 5;
        case 4: return 2;
        case 5: return 0;
      }
      break;
    case FanoDescriptor::Kind::Quadric: return 0;
    case FanoDescriptor::Kind::ProjSpace: return 0;
  }
  throw solver_error(errc::degree_out_of_range, "invalid descriptor");
}

}  // namespace fano3
