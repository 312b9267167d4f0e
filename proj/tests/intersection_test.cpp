#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fano3/errors.hpp"
#include "fano3/intersection.hpp"

using namespace fano3;

namespace {
BlowdownData row1_table() {
  return e1_table(3, FanoDescriptor::index_one(12), CurveInvariants{0, 8});
}
}  // namespace

TEST_CASE("blowdown tables") {
  const auto b = row1_table();
  CHECK(b.k3 == 4);
  CHECK(b.k2e == 10);
  CHECK(b.ke2 == -2);
  CHECK(b.e3 == -6);

  const auto p = e1_table(3, FanoDescriptor::proj_space(), CurveInvariants{3, 8});
  CHECK(p.A == 32);
  CHECK(p.k3 == 4);
  CHECK(p.k2e == 28);
  CHECK(p.ke2 == 4);
  CHECK(p.e3 == -36);

  // pa = 1 gives (-K).E^2 = 0
  const auto q = e1_table(3, FanoDescriptor::index_one(7), CurveInvariants{1, 4});
  CHECK(q.ke2 == 0);
}

TEST_CASE("blowdown invariant violations") {
  // wrong target degree
  CHECK_THROWS_AS(e1_table(3, FanoDescriptor::index_one(9), CurveInvariants{0, 8}),
                  solver_error);
  // A + 2 - 2 pa <= 0
  CHECK_THROWS_WITH_AS(e1_table(3, FanoDescriptor::index_two(1), CurveInvariants{5, 3}),
                       doctest::Contains("positive"), solver_error);
  // A > target degree surfaces as an inconsistency of one of the bounds
  CHECK_THROWS_AS(e1_table(3, FanoDescriptor::index_one(4), CurveInvariants{0, 30}),
                  solver_error);
  CHECK_THROWS_AS(e1_table(2, FanoDescriptor::index_one(12), CurveInvariants{0, 8}),
                  solver_error);
}

TEST_CASE("flop transport") {
  const auto b = row1_table();
  const auto t = flop_transport(b, 268);
  CHECK(t.k3 == 4);
  CHECK(t.k2e == 10);
  CHECK(t.ke2 == -2);
  CHECK(t.e3t == -274);
  CHECK(flop_transport(b, 1).e3t == b.e3 - 1);
  CHECK_THROWS_AS(flop_transport(b, 0), solver_error);
  CHECK_THROWS_AS(flop_transport(b, -5), solver_error);
}

TEST_CASE("triple products of the published first row") {
  const auto b = row1_table();
  CHECK(triple_product(b, 268, {6, -1}, {6, -1}, {5, -1}) == 0);
  CHECK(triple_product(b, 268, {6, -1}, {6, -1}, {6, -1}) == 22);
  // (-K~)^3 is flop-invariant
  for (i64 e : {1, 7, 268, 100000})
    CHECK(triple_product(b, e, {1, 0}, {1, 0}, {1, 0}) == 2 * b.g - 2);
}

TEST_CASE("triple product is symmetric and flop-invariant away from E~^3") {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<i64> coef(-6, 6);
  const auto b = e1_table(3, FanoDescriptor::index_one(9), CurveInvariants{1, 6});
  for (int it = 0; it < 200; ++it) {
    Divisor u{coef(rng), coef(rng)}, v{coef(rng), coef(rng)}, w{coef(rng), coef(rng)};
    const i64 base = triple_product(b, 5, u, v, w);
    CHECK(triple_product(b, 5, v, u, w) == base);
    CHECK(triple_product(b, 5, w, v, u) == base);
    CHECK(triple_product(b, 5, u, w, v) == base);
    if (u.second * v.second * w.second == 0) {
      // no E~^3 monomial: independent of e
      CHECK(triple_product(b, 77, u, v, w) == base);
    }
  }
}

TEST_CASE("target degree reconstructs from the quadruple (randomized)") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, all_rank_one_targets().size() - 1);
  std::uniform_int_distribution<i64> genus(3, 40);
  int built = 0;
  for (int it = 0; it < 5000 && built < 1000; ++it) {
    const auto& target = all_rank_one_targets()[pick(rng)];
    const i64 g = genus(rng);
    const i64 degZ = target.anticanonical_degree();
    if ((degZ - (2 * g - 2)) % 2 != 0) continue;
    const i64 half = (degZ - (2 * g - 2)) / 2;
    std::uniform_int_distribution<i64> pa_dist(0, 40);
    const i64 pa = pa_dist(rng);
    const i64 A = half - 1 + pa;
    if (A < 1 || A % target.index() != 0 || A > degZ) continue;
    if (A + 2 - 2 * pa <= 0) continue;
    const auto b = e1_table(g, target, CurveInvariants{pa, A / target.index()});
    // reconstruct: -K_{Z1}^3 = k3 + 2(A + 1 - pa) with A = k2e - 2 + 2 pa
    const i64 A_back = b.k2e - 2 + 2 * b.curve.pa;
    CHECK(A_back == b.A);
    CHECK(b.k3 + 2 * (A_back + 1 - b.curve.pa) == degZ);
    CHECK(b.e3 == -(A_back - 2 + 2 * b.curve.pa));
    ++built;
  }
  CHECK(built == 1000);
}

TEST_CASE("degree jumps") {
  CHECK(degree_jump({ContractionKind::E2, {}, 0}, 14) == 22);
  CHECK(degree_jump({ContractionKind::E1, CurveInvariants{0, 8}, 8}, 4) == 22);
  CHECK(degree_jump({ContractionKind::E3, {}, 0}, 4) == 6);
  CHECK(degree_jump({ContractionKind::E4, {}, 0}, 4) == 6);
  // flopping-curve limit: pa = 0, -K.Gamma = 0 adds exactly 2
  CHECK(degree_jump({ContractionKind::E1, CurveInvariants{0, 1}, 0}, 10) == 12);
  CHECK_THROWS_AS(degree_jump({ContractionKind::E1, CurveInvariants{3, 1}, 1}, 4),
                  solver_error);
}

TEST_CASE("overflow is detected, not wrapped") {
  const auto b = row1_table();
  CHECK_THROWS_AS(
      triple_product(b, 1, {i64{1} << 40, 0}, {i64{1} << 40, 0}, {i64{1} << 40, 0}),
      solver_error);
}
