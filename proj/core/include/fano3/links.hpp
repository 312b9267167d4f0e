#ifndef FANO3_LINKS_HPP
#define FANO3_LINKS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "fano3/intersection.hpp"

namespace fano3 {

// The alpha-side contraction of a two-ray game whose psi side is an E1
// blowdown: either a fibration (conic bundle over P2, del Pezzo fibration
// over P1) or a divisorial E1 contraction to a rank-1 Fano.
struct ConicBundle {
  i64 delta_deg = 0;  // degree of the discriminant curve, 0 <= . <= 11
  friend bool operator==(const ConicBundle&, const ConicBundle&) = default;
};
struct DelPezzoFibration {
  i64 d = 3;  // generic fibre degree, 3..9
  friend bool operator==(const DelPezzoFibration&, const DelPezzoFibration&) = default;
};
struct DivisorialE1 {
  FanoDescriptor target = FanoDescriptor::quadric();
  CurveInvariants curve;  // centre C of alpha
  friend bool operator==(const DivisorialE1&, const DivisorialE1&) = default;
};
using AlphaContraction = std::variant<DivisorialE1, ConicBundle, DelPezzoFibration>;

// One admissible (psi, alpha) configuration.
//   D (or L) = x*(-K~) - y*E~ on the flopped side; e = E^3 - E~^3 >= 1.
//   k is set for divisorial alpha only (x + 1 = y k, y = index of the target).
struct LinkSolution {
  i64 g = 3;
  BlowdownData psi;
  i64 x = 1, y = 1;
  std::optional<i64> k;
  i64 e = 1;
  AlphaContraction alpha;
  i64 max_deg_f = 1;
  bool hodge_feasible = true;
  friend bool operator==(const LinkSolution&, const LinkSolution&) = default;
};

// All admissible psi-side E1 blowdowns for ambient genus g: every
// (target, pa, deg) satisfying the degree identity with A <= -K_{Z1}^3 and
// (-K)^2.E > 0.  Deterministic: target order of all_rank_one_targets(),
// then pa ascending.  Throws genus_out_of_range for g < 3.
std::vector<BlowdownData> enumerate_psi(i64 g);

// The three alpha-side solvers.  Every equation is evaluated through
// triple_product on the flop-transported table; nothing is transcribed.
std::vector<LinkSolution> solve_conic_bundle(const BlowdownData& psi);
std::vector<LinkSolution> solve_del_pezzo(const BlowdownData& psi);
std::vector<LinkSolution> solve_divisorial(const BlowdownData& psi);

// True iff the h^{2,1} bookkeeping of the two sides is compatible:
// [pa(Gamma), pa(Gamma)+cap(Z1)] meets [pa(C), pa(C)+cap(Z1~)].
// Fibration alphas are always feasible.
bool hodge_filter(const LinkSolution& sol);

// Degree bound for the non-Cartier surface witnessing the link:
// psi.k2e for fibrations, min(psi.k2e, x(2g-2) - y*psi.k2e) for E1/E1.
i64 max_deg_f(const LinkSolution& sol);

// Union of the three solvers over enumerate_psi(g); e <= 0 discarded
// always, Hodge-infeasible rows discarded iff apply_hodge; canonical
// deterministic order (psi target grouped as index-1 by degree descending,
// then index-2 by d ascending, then quadric, then P3; pa ascending; then
// alpha kind E1 < conic bundle < del Pezzo).
std::vector<LinkSolution> enumerate_links(i64 g, bool apply_hodge);

// Fault injection for the self-check machinery (see selfcheck.hpp):
// deliberately broken solver variants whose misbehaviour is pinned.
enum class SolverQuirk {
  None,
  // keep Hodge-infeasible rows and drop feasible ones
  InvertedHodgeFilter,
  // solve the del Pezzo flop defect from the unbalanced second constraint
  // (first term not multiplied by x^2)
  DelPezzoMissingSquare,
};
std::vector<LinkSolution> enumerate_links_with_quirk(i64 g, bool apply_hodge,
                                                     SolverQuirk quirk);

}  // namespace fano3

#endif
