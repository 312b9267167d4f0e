#include "fano3/defect.hpp"

#include <algorithm>
#include <array>

#include "fano3/errors.hpp"

namespace fano3 {

namespace {

void require_valid_genus(i64 g) {
  if (!((g >= 3 && g <= 10) || g == 12))
    throw solver_error(errc::genus_out_of_range,
                       "genus must be 3..10 or 12, got " + std::to_string(g));
}

// degrees of rank-1 classes landable by divisorial steps
constexpr std::array<i64, 12> kRankOneDegrees = {2, 4, 6, 8, 10, 12, 14, 16, 18, 22, 54, 64};
constexpr std::array<i64, 5> kIndexTwoDegrees = {8, 16, 24, 32, 40};

bool is_index_two_degree(i64 d) {
  return std::find(kIndexTwoDegrees.begin(), kIndexTwoDegrees.end(), d) !=
         kIndexTwoDegrees.end();
}

struct Candidate {
  i64 defect = -1;
  std::vector<SearchStep> witness;
};

void offer(Candidate& best, i64 defect, const std::vector<SearchStep>& w) {
  if (defect > best.defect ||
      (defect == best.defect &&
       std::make_pair(w.size(), w) < std::make_pair(best.witness.size(), best.witness))) {
    best.defect = defect;
    best.witness = w;
  }
}

}  // namespace

std::string to_string(SearchStep::Kind k) {
  switch (k) {
    case SearchStep::Kind::QuadricContraction: return "quadric-contraction";
    case SearchStep::Kind::Divisorial: return "divisorial";
    case SearchStep::Kind::E2: return "E2";
    case SearchStep::Kind::EndFano: return "end:rank-1-fano";
    case SearchStep::Kind::EndDelPezzo: return "end:del-pezzo-fibration";
    case SearchStep::Kind::EndConicP2: return "end:conic-bundle/P2";
    case SearchStep::Kind::EndConicRuled: return "end:conic-bundle/F0-F2";
  }
  return "?";
}

DefectBoundResult bound_no_quadric(i64 g) {
  require_valid_genus(g);
  return {Scenario::NoPlaneNoQuadric, g, (12 - g) / 2 + 4, {}, {}, {}};
}

DefectBoundResult bound_with_quadric(i64 g) {
  require_valid_genus(g);
  return {Scenario::QuadricNoPlane, g, 14 - g, {}, {}, {}};
}

DefectBoundResult bound_index_two(i64 h3) {
  if (h3 < 1 || h3 > 5)
    throw solver_error(errc::degree_out_of_range,
                       "index-2 degree h^3 must be 1..5, got " + std::to_string(h3));
  DefectBoundResult r{Scenario::IndexTwo, h3, (8 - h3) - 1, {}, {}, {}};
  r.rank_cap = 8 - h3;
  return r;
}

DefectBoundResult bound_plane_quartic() {
  i64 best = -1;
  std::pair<i64, i64> arg{0, 0};
  for (i64 n = 0; n <= 4; ++n)
    for (i64 m = 0; n + m <= 4; ++m) {
      const i64 v = 7 + 2 * n + m;
      if (v > best) {
        best = v;
        arg = {n, m};
      }
    }
  DefectBoundResult r{Scenario::PlaneQuartic, 3, best, {}, {}, {}};
  r.maximizer_nm = arg;
  return r;
}

DefectBoundResult main_theorem(QuarticContains c) {
  switch (c) {
    case QuarticContains::None: return bound_no_quadric(3);
    case QuarticContains::Quadric: return bound_with_quadric(3);
    case QuarticContains::Plane: return bound_plane_quartic();
  }
  throw solver_error(errc::degree_out_of_range, "invalid scenario");
}

std::pair<i64, i64> weil_rank_del_pezzo3(i64 n, i64 m) {
  if (n < 0 || m < 0)
    throw solver_error(errc::fibre_budget_exceeded, "fibre counts must be nonnegative");
  if (n + m > 4)
    throw solver_error(errc::fibre_budget_exceeded,
                       "a terminal quartic cubic fibration has at most 4 reducible fibres");
  return {8 + 2 * n + m, 7 + 2 * n + m};
}

DefectBoundResult search_bound(i64 g, bool allow_quadrics) {
  require_valid_genus(g);
  const i64 start = 2 * g - 2;
  const i64 quadric_budget = allow_quadrics ? std::max<i64>(0, 11 - g) : 0;

  Candidate best;
  std::vector<SearchStep> trail;

  // index: 1 = index-1 chain, 2 = index-2 (E2 regime), 3 = quadric, 4 = P3
  // steps = number of divisorial contractions so far;
  // defect = steps + terminal rank contribution - 1
  auto rec = [&](auto&& self, i64 deg, int index, i64 qused, bool generic_done,
                 i64 steps) -> void {
    auto end_with = [&](SearchStep::Kind k, i64 contribution) {
      trail.push_back({k, deg, deg});
      offer(best, steps + contribution - 1, trail);
      trail.pop_back();
    };
    end_with(SearchStep::Kind::EndFano, 1);
    end_with(SearchStep::Kind::EndDelPezzo, 2);
    end_with(SearchStep::Kind::EndConicP2, 2);
    end_with(SearchStep::Kind::EndConicRuled, 3);

    if (index == 1) {
      if (qused < quadric_budget && !generic_done) {
        // quadric persists: divisorial step of any even jump >= 2 onto an
        // index-1 degree (front-loaded per the forward propagation of
        // quadric-freeness)
        for (i64 nd : kRankOneDegrees) {
          if (nd >= 54) continue;
          const i64 delta = nd - deg;
          if (delta >= 2 && delta % 2 == 0) {
            trail.push_back({SearchStep::Kind::QuadricContraction, deg, nd});
            self(self, nd, 1, qused + 1, generic_done, steps + 1);
            trail.pop_back();
          }
        }
      }
      for (i64 nd : kRankOneDegrees) {
        const i64 delta = nd - deg;
        if (delta >= 4 && delta % 2 == 0) {
          trail.push_back({SearchStep::Kind::Divisorial, deg, nd});
          self(self, nd, nd == 54 ? 3 : (nd == 64 ? 4 : 1), qused, true, steps + 1);
          trail.pop_back();
        }
      }
      if (is_index_two_degree(deg + 8)) {
        trail.push_back({SearchStep::Kind::E2, deg, deg + 8});
        self(self, deg + 8, 2, qused, true, steps + 1);
        trail.pop_back();
      }
    } else if (index == 2) {
      if (is_index_two_degree(deg + 8)) {
        trail.push_back({SearchStep::Kind::E2, deg, deg + 8});
        self(self, deg + 8, 2, qused, true, steps + 1);
        trail.pop_back();
      }
    } else if (index == 3) {
      // quadric -> P3 is the only remaining divisorial landing
      trail.push_back({SearchStep::Kind::Divisorial, deg, 64});
      self(self, 64, 4, qused, true, steps + 1);
      trail.pop_back();
    }
    // index 4 (P3): endpoints only
  };
  rec(rec, start, 1, 0, false, 0);

  DefectBoundResult r{allow_quadrics ? Scenario::QuadricNoPlane : Scenario::NoPlaneNoQuadric,
                      g, best.defect, {}, {}, {}};
  r.witness = best.witness;
  return r;
}

}  // namespace fano3
