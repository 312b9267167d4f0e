#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fano3/classification.hpp"
#include "fano3/errors.hpp"

using namespace fano3;

TEST_CASE("the classification lists exactly 17 rank-one classes") {
  const auto& t = all_rank_one_targets();
  CHECK(t.size() == 17);
  CHECK(std::set<FanoDescriptor>(t.begin(), t.end()).size() == 17);

  // sorted by (index, anticanonical degree)
  for (std::size_t i = 1; i < t.size(); ++i) {
    const auto a = std::make_pair(t[i - 1].index(), t[i - 1].anticanonical_degree());
    const auto b = std::make_pair(t[i].index(), t[i].anticanonical_degree());
    CHECK(a < b);
  }

  bool has_x22 = false, has_p3 = false;
  for (const auto& f : t) {
    if (f.kind() == FanoDescriptor::Kind::IndexOne && f.parameter() == 12) {
      has_x22 = true;
      CHECK(f.anticanonical_degree() == 22);
    }
    if (f.kind() == FanoDescriptor::Kind::ProjSpace) {
      has_p3 = true;
      CHECK(f.anticanonical_degree() == 64);
    }
  }
  CHECK(has_x22);
  CHECK(has_p3);
}

TEST_CASE("index-1 degrees are even and equal 2g-2") {
  for (const auto& f : all_rank_one_targets()) {
    if (f.kind() != FanoDescriptor::Kind::IndexOne) continue;
    CHECK(f.anticanonical_degree() % 2 == 0);
    CHECK(f.anticanonical_degree() == 2 * f.parameter() - 2);
  }
}

TEST_CASE("h^{2,1} table") {
  CHECK(h21_cap(FanoDescriptor::index_one(3)) == 30);  // b3(quartic) = 60
  CHECK(h21_cap(FanoDescriptor::proj_space()) == 0);
  CHECK(h21_cap(FanoDescriptor::index_one(8)) == 5);
  CHECK(h21_cap(FanoDescriptor::index_one(2)) == 52);
  CHECK(h21_cap(FanoDescriptor::index_two(1)) == 21);
  CHECK(h21_cap(FanoDescriptor::index_two(4)) == 2);

  // zero exactly for X22, V5, Q, P3
  std::set<std::string> zero;
  for (const auto& f : all_rank_one_targets())
    if (h21_cap(f) == 0) zero.insert(f.name());
  CHECK(zero == std::set<std::string>{"X22", "V5", "Q", "P3"});
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FanoDescriptor::index_one(11), solver_error);
  CHECK_THROWS_AS(FanoDescriptor::index_one(1), solver_error);
  CHECK_THROWS_AS(FanoDescriptor::index_two(0), solver_error);
  CHECK_THROWS_AS(FanoDescriptor::index_two(6), solver_error);
}

TEST_CASE("names and stability across calls") {
  CHECK(FanoDescriptor::index_one(12).name() == "X22");
  CHECK(FanoDescriptor::index_two(5).name() == "V5");
  CHECK(FanoDescriptor::quadric().name() == "Q");
  CHECK(&all_rank_one_targets() == &all_rank_one_targets());
  CHECK(all_rank_one_targets() == all_rank_one_targets());
}
