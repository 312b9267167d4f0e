#ifndef FANO3_DEFECT_HPP
#define FANO3_DEFECT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano3/intersection.hpp"

namespace fano3 {

enum class Scenario { NoPlaneNoQuadric, QuadricNoPlane, PlaneQuartic, IndexTwo };

// One move of the degree-bookkeeping search.  Terminal entries carry the
// final degree in both fields and encode the Mori-fibre / Fano endpoint.
struct SearchStep {
  enum class Kind {
    QuadricContraction,  // divisorial step while a quadric persists, +>=2 even
    Divisorial,          // generic divisorial step, +>=4 even
    E2,                  // smooth-point blowdown, +8, index-2 regime
    EndFano,             // rank-1 Fano endpoint                (+1 rank)
    EndDelPezzo,         // del Pezzo fibration over P1         (+2 rank)
    EndConicP2,          // conic bundle over P2                (+2 rank)
    EndConicRuled,       // conic bundle over F0 or F2          (+3 rank)
  };
  Kind kind;
  i64 deg_before;
  i64 deg_after;
  friend bool operator==(const SearchStep&, const SearchStep&) = default;
  friend auto operator<=>(const SearchStep&, const SearchStep&) = default;
};

std::string to_string(SearchStep::Kind k);

struct DefectBoundResult {
  Scenario scenario;
  i64 param = 0;  // genus, or h^3 for the index-2 scenario
  i64 bound = 0;
  std::optional<i64> rank_cap;                       // index-2 scenario
  std::optional<std::pair<i64, i64>> maximizer_nm;   // plane scenario (N, M)
  std::optional<std::vector<SearchStep>> witness;    // search results
};

// Closed forms.  Valid genera: 3..10 and 12 (genus_out_of_range otherwise).
DefectBoundResult bound_no_quadric(i64 g);      // floor((12-g)/2) + 4
DefectBoundResult bound_with_quadric(i64 g);    // 14 - g
DefectBoundResult bound_index_two(i64 h3);      // rank cap 8-h^3, defect 7-h^3
DefectBoundResult bound_plane_quartic();        // 15, attained at (N,M) = (4,0)

enum class QuarticContains { None, Quadric, Plane };
DefectBoundResult main_theorem(QuarticContains c);  // 8 / 11 / 15

// Weil-rank bound 8 + 2N + M of a cubic del Pezzo fibration with N
// three-component and M two-component reducible fibres (N + M <= 4;
// fibre_budget_exceeded otherwise).  Returns (weil_rank, defect_bound).
std::pair<i64, i64> weil_rank_del_pezzo3(i64 n, i64 m);

// Exhaustive replay of the contraction bookkeeping: maximal defect over
// contraction sequences from degree 2g-2 with a witness.  Deterministic
// tie-break: max defect, then shortest witness, then lexicographically
// smallest step list.
DefectBoundResult search_bound(i64 g, bool allow_quadrics);

}  // namespace fano3

#endif
