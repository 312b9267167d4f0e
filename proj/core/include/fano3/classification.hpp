#ifndef FANO3_CLASSIFICATION_HPP
#define FANO3_CLASSIFICATION_HPP

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace fano3 {

// A smooth Picard-rank-1 Fano 3-fold class, identified by its Fano index
// and the discrete parameter of the classification:
//   index 1: genus g with 2 <= g <= 10 or g = 12,  -K^3 = 2g-2
//   index 2: degree d with 1 <= d <= 5,            -K^3 = 8d
//   index 3: the quadric,                          -K^3 = 54
//   index 4: projective 3-space,                   -K^3 = 64
class FanoDescriptor {
public:
  enum class Kind { IndexOne, IndexTwo, Quadric, ProjSpace };

  static FanoDescriptor index_one(int genus);
  static FanoDescriptor index_two(int degree_d);
  static FanoDescriptor quadric() { return FanoDescriptor(Kind::Quadric, 0); }
  static FanoDescriptor proj_space() { return FanoDescriptor(Kind::ProjSpace, 0); }

  Kind kind() const { return kind_; }
  int index() const;
  // -K^3
  int anticanonical_degree() const;
  // parameter: genus for IndexOne, d for IndexTwo, 0 otherwise
  int parameter() const { return param_; }

  // X_{2g-2} / V_d / Q / P3
  std::string name() const;

  friend bool operator==(const FanoDescriptor&, const FanoDescriptor&) = default;
  friend auto operator<=>(const FanoDescriptor&, const FanoDescriptor&) = default;

private:
  FanoDescriptor(Kind k, int p) : kind_(k), param_(p) {}
  Kind kind_;
  int param_;
};

// The 17 classes, sorted by (index ascending, anticanonical degree ascending).
const std::vector<FanoDescriptor>& all_rank_one_targets();

// Smooth Hodge number h^{2,1}; standard classification data, with the
// g=3 entry anchored to b_3(quartic) = 60.
int h21_cap(const FanoDescriptor& f);

}  // namespace fano3

#endif
