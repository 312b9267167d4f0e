#include "fano3/intersection.hpp"

#include <string>

#include "fano3/errors.hpp"

namespace fano3 {

namespace {

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw solver_error(errc::overflow, "integer overflow in intersection product");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw solver_error(errc::overflow, "integer overflow in intersection product");
  return r;
}

}  // namespace

BlowdownData e1_table(i64 g, const FanoDescriptor& target, const CurveInvariants& curve) {
  if (g < 3)
    throw solver_error(errc::genus_out_of_range,
                       "ambient genus must be >= 3, got " + std::to_string(g));
  if (curve.pa < 0 || curve.deg < 1)
    throw solver_error(errc::degree_out_of_range, "invalid curve invariants");

  BlowdownData b;
  b.g = g;
  b.target = target;
  b.curve = curve;
  b.A = static_cast<i64>(target.index()) * curve.deg;
  b.k3 = 2 * g - 2;
  b.k2e = b.A + 2 - 2 * curve.pa;
  b.ke2 = 2 * curve.pa - 2;
  b.e3 = -(b.A - 2 + 2 * curve.pa);

  if (b.k2e <= 0)
    throw solver_error(errc::nonpositive_surface_degree,
                       "(-K)^2.E = " + std::to_string(b.k2e) + " must be positive");
  if (b.A > target.anticanonical_degree())
    throw solver_error(errc::degree_exceeds_target,
                       "-K_{Z1}.Gamma = " + std::to_string(b.A) + " exceeds -K_{Z1}^3 = " +
                           std::to_string(target.anticanonical_degree()));
  if (target.anticanonical_degree() != b.k3 + 2 * (b.A + 1 - curve.pa))
    throw solver_error(errc::inconsistent_target,
                       "target degree " + std::to_string(target.anticanonical_degree()) +
                           " != " + std::to_string(b.k3 + 2 * (b.A + 1 - curve.pa)));
  return b;
}

FlopTable flop_transport(const BlowdownData& b, i64 e) {
  if (e <= 0)
    throw solver_error(errc::nonpositive_flop_defect,
                       "flop defect must be a strictly positive integer, got " +
                           std::to_string(e));
  return FlopTable{b.k3, b.k2e, b.ke2, b.e3 - e};
}

i64 triple_product(const FlopTable& t, Divisor u, Divisor v, Divisor w) {
  // symmetric expansion in the monomials (-K~)^3, (-K~)^2.E~, (-K~).E~^2, E~^3
  const i64 c3 = checked_mul(checked_mul(u.first, v.first), w.first);
  const i64 c2 = checked_add(checked_add(checked_mul(checked_mul(u.first, v.first), w.second),
                                         checked_mul(checked_mul(u.first, v.second), w.first)),
                             checked_mul(checked_mul(u.second, v.first), w.first));
  const i64 c1 = checked_add(checked_add(checked_mul(checked_mul(u.first, v.second), w.second),
                                         checked_mul(checked_mul(u.second, v.first), w.second)),
                             checked_mul(checked_mul(u.second, v.second), w.first));
  const i64 c0 = checked_mul(checked_mul(u.second, v.second), w.second);
  i64 acc = checked_mul(c3, t.k3);
  acc = checked_add(acc, checked_mul(c2, t.k2e));
  acc = checked_add(acc, checked_mul(c1, t.ke2));
  acc = checked_add(acc, checked_mul(c0, t.e3t));
  return acc;
}

i64 triple_product(const BlowdownData& b, i64 e, Divisor u, Divisor v, Divisor w) {
  return triple_product(flop_transport(b, e), u, v, w);
}

i64 degree_jump(const JumpSpec& spec, i64 k3_before) {
  switch (spec.kind) {
    case ContractionKind::E2:
      return k3_before + 8;
    case ContractionKind::E3:
    case ContractionKind::E4:
      return k3_before + 2;
    case ContractionKind::E1: {
      const i64 jump = 2 * (spec.target_k + 1 - spec.curve.pa);
      if (jump <= 0)
        throw solver_error(errc::negative_jump,
                           "E1 degree jump " + std::to_string(jump) + " must be positive");
      return k3_before + jump;
    }
  }
  throw solver_error(errc::degree_out_of_range, "invalid contraction kind");
}

}  // namespace fano3
