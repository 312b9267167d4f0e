#ifndef FANO3_INTERSECTION_HPP
#define FANO3_INTERSECTION_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "fano3/classification.hpp"

namespace fano3 {

using i64 = std::int64_t;

// (arithmetic genus, H-degree) of a curve on a rank-1 Fano 3-fold,
// H the ample generator with -K = index * H.
struct CurveInvariants {
  i64 pa = 0;   // >= 0
  i64 deg = 1;  // >= 1
  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
  friend auto operator<=>(const CurveInvariants&, const CurveInvariants&) = default;
};

// Intersection table of an E1 blowdown psi: Z -> Z1 contracting a Cartier
// divisor E to the curve Gamma, on the ambient of genus g (-K_Z^3 = 2g-2):
//   k3  = (-K)^3 = 2g-2
//   k2e = (-K)^2.E = A + 2 - 2 pa          (A = -K_{Z1}.Gamma = index * deg)
//   ke2 = (-K).E^2 = 2 pa - 2
//   e3  = E^3 = -(A - 2 + 2 pa)
// subject to k2e > 0, A <= -K_{Z1}^3 and the degree identity
//   -K_{Z1}^3 = (2g-2) + 2 (A + 1 - pa).
struct BlowdownData {
  i64 g = 3;
  FanoDescriptor target = FanoDescriptor::quadric();
  CurveInvariants curve;
  i64 A = 0;
  i64 k3 = 0, k2e = 0, ke2 = 0, e3 = 0;
  friend bool operator==(const BlowdownData&, const BlowdownData&) = default;
};

// Validates and fills the table; throws solver_error on violated invariants:
//   inconsistent_target, nonpositive_surface_degree, degree_exceeds_target.
BlowdownData e1_table(i64 g, const FanoDescriptor& target, const CurveInvariants& curve);

// Monomial values of the cubic intersection form after a composite of flops
// of total defect e:  (-K~)^3, (-K~)^2.E~, (-K~).E~^2 stay fixed, E~^3 = e3 - e.
struct FlopTable {
  i64 k3, k2e, ke2, e3t;
};

// e >= 1 (throws nonpositive_flop_defect otherwise).
FlopTable flop_transport(const BlowdownData& b, i64 e);

// Divisor in the (-K~, E~) basis: first*( -K~ ) + second*( E~ ).
using Divisor = std::pair<i64, i64>;

// Trilinear product (u1*-K~+u2*E~).(v1*-K~+v2*E~).(w1*-K~+w2*E~) on the
// flop-transported table; exact, overflow-checked.
i64 triple_product(const BlowdownData& b, i64 e,
                   Divisor u, Divisor v, Divisor w);
i64 triple_product(const FlopTable& t, Divisor u, Divisor v, Divisor w);

// Degree jumps of the four divisorial contraction types.
enum class ContractionKind { E1, E2, E3, E4 };

struct JumpSpec {
  ContractionKind kind = ContractionKind::E2;
  // E1 only: curve invariants and target_k = -K_{X'}.Gamma >= 0
  CurveInvariants curve;
  i64 target_k = 0;
};

// E1: +2 (target_k + 1 - pa);  E2: +8;  E3/E4: +2.
// Throws negative_jump when the E1 jump would be <= 0.
i64 degree_jump(const JumpSpec& spec, i64 k3_before);

}  // namespace fano3

#endif
