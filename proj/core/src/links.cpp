#include "fano3/links.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "fano3/errors.hpp"

namespace fano3 {

namespace {

constexpr i64 kLoopCap = 10000;  // safety net for enumeration loops

i64 isqrt_floor(i64 n) {
  if (n < 0) return -1;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// integer roots of a*x^2 + b*x + c = 0, a != 0
std::vector<i64> quadratic_int_roots(i64 a, i64 b, i64 c) {
  std::vector<i64> roots;
  const i64 disc = b * b - 4 * a * c;
  if (disc < 0) return roots;
  const i64 s = isqrt_floor(disc);
  if (s * s != disc) return roots;
  for (i64 num : {-b + s, -b - s}) {
    if (num % (2 * a) == 0) {
      const i64 x = num / (2 * a);
      if (roots.empty() || roots[0] != x) roots.push_back(x);
    }
  }
  return roots;
}

// e with triple_product(b, e, u, v, w) == 0, if integral.
std::optional<i64> solve_flop_defect(const BlowdownData& b, Divisor u, Divisor v, Divisor w) {
  const i64 t1 = triple_product(b, 1, u, v, w);
  const i64 t2 = triple_product(b, 2, u, v, w);
  const i64 slope = t2 - t1;
  if (slope == 0) return std::nullopt;
  if (t1 % slope != 0) return std::nullopt;
  return 1 - t1 / slope;
}

LinkSolution make_solution(const BlowdownData& psi, i64 x, i64 y, std::optional<i64> k,
                           i64 e, AlphaContraction alpha) {
  LinkSolution s;
  s.g = psi.g;
  s.psi = psi;
  s.x = x;
  s.y = y;
  s.k = k;
  s.e = e;
  s.alpha = std::move(alpha);
  s.max_deg_f = max_deg_f(s);
  s.hodge_feasible = hodge_filter(s);
  return s;
}

int alpha_kind_rank(const AlphaContraction& a) {
  return static_cast<int>(a.index());  // E1 < conic bundle < del Pezzo
}

std::tuple<int, int> target_group(const FanoDescriptor& t) {
  switch (t.kind()) {
    case FanoDescriptor::Kind::IndexOne: return {0, -t.anticanonical_degree()};
    case FanoDescriptor::Kind::IndexTwo: return {1, t.parameter()};
    case FanoDescriptor::Kind::Quadric: return {2, 0};
    case FanoDescriptor::Kind::ProjSpace: return {3, 0};
  }
  return {4, 0};
}

auto sort_key(const LinkSolution& s) {
  std::tuple<int, int, int, int> asub{0, 0, 0, 0};
  if (const auto* d = std::get_if<DivisorialE1>(&s.alpha)) {
    asub = {d->target.index(), d->target.anticanonical_degree(),
            static_cast<int>(d->curve.pa), static_cast<int>(d->curve.deg)};
  } else if (const auto* c = std::get_if<ConicBundle>(&s.alpha)) {
    asub = {static_cast<int>(c->delta_deg), 0, 0, 0};
  } else if (const auto* p = std::get_if<DelPezzoFibration>(&s.alpha)) {
    asub = {static_cast<int>(p->d), 0, 0, 0};
  }
  return std::make_tuple(target_group(s.psi.target), s.psi.curve.pa, s.psi.curve.deg,
                         alpha_kind_rank(s.alpha), asub, s.x, s.y, s.e);
}

}  // namespace

std::vector<BlowdownData> enumerate_psi(i64 g) {
  if (g < 3)
    throw solver_error(errc::genus_out_of_range,
                       "anticanonical ring generation needs genus >= 3, got " +
                           std::to_string(g));
  std::vector<BlowdownData> out;
  for (const auto& target : all_rank_one_targets()) {
    const i64 degZ = target.anticanonical_degree();
    if (degZ <= 2 * g - 2) continue;
    const i64 half = (degZ - (2 * g - 2)) / 2;  // = A + 1 - pa
    const i64 idx = target.index();
    for (i64 pa = 0;; ++pa) {
      if (pa > kLoopCap)
        throw solver_error(errc::internal_limit, "pa enumeration exceeded safety cap");
      const i64 A = half - 1 + pa;
      if (A + 2 - 2 * pa <= 0) break;  // k2e decreasing in pa
      if (A > degZ) break;
      if (A < 1 || A % idx != 0) continue;
      const i64 deg = A / idx;
      if (deg < 1) continue;
      out.push_back(e1_table(g, target, CurveInvariants{pa, deg}));
    }
  }
  return out;
}

std::vector<LinkSolution> solve_conic_bundle(const BlowdownData& psi) {
  std::vector<LinkSolution> out;
  for (i64 y : {1, 2}) {
    // L^2.(-K~) = 2 with L = x(-K~) - yE~:  k3 x^2 - 2 k2e y x + (ke2 y^2 - 2) = 0
    for (i64 x : quadratic_int_roots(psi.k3, -2 * psi.k2e * y, psi.ke2 * y * y - 2)) {
      if (x < 1 || std::gcd(x, y) != 1) continue;
      const Divisor L{x, -y};
      const auto e = solve_flop_defect(psi, L, L, L);  // L^3 = 0
      if (!e || *e < 1) continue;
      const i64 dK2 = triple_product(psi, *e, L, {1, 0}, {1, 0});  // e-free
      const i64 delta = 12 - dK2;
      if (delta < 0 || dK2 <= 0) continue;
      out.push_back(make_solution(psi, x, y, std::nullopt, *e, ConicBundle{delta}));
    }
  }
  return out;
}

namespace {

std::vector<LinkSolution> solve_del_pezzo_impl(const BlowdownData& psi, SolverQuirk quirk) {
  std::vector<LinkSolution> out;
  for (i64 y : {1, 2, 3}) {
    // L^2.(-K~) = 0:  k3 x^2 - 2 k2e y x + ke2 y^2 = 0
    for (i64 x : quadratic_int_roots(psi.k3, -2 * psi.k2e * y, psi.ke2 * y * y)) {
      if (x < 1 || std::gcd(x, y) != 1) continue;
      const Divisor L{x, -y};
      std::optional<i64> e;
      if (quirk == SolverQuirk::DelPezzoMissingSquare) {
        // published variant of the second constraint, first term without x^2:
        //   k2e - 2 ke2 x y + (e3 - e) y^2 = 0
        const i64 num = psi.k2e - 2 * psi.ke2 * x * y + psi.e3 * y * y;
        if (num % (y * y) == 0) e = num / (y * y);
      } else {
        e = solve_flop_defect(psi, L, L, {0, 1});  // L^2.E~ = 0
      }
      if (!e || *e < 1) continue;
      const i64 d = triple_product(psi, *e, L, {1, 0}, {1, 0});  // L.(-K~)^2
      if (d < 3 || d > 9) continue;  // degrees 1 and 2 are impossible
      out.push_back(make_solution(psi, x, y, std::nullopt, *e, DelPezzoFibration{d}));
    }
  }
  return out;
}

}  // namespace

std::vector<LinkSolution> solve_del_pezzo(const BlowdownData& psi) {
  return solve_del_pezzo_impl(psi, SolverQuirk::None);
}

std::vector<LinkSolution> solve_divisorial(const BlowdownData& psi) {
  std::vector<LinkSolution> out;
  for (const auto& target : all_rank_one_targets()) {
    const i64 y = target.index();
    const i64 degT = target.anticanonical_degree();
    // (-K~+D)^2.(-K~) = y^2 (k3 k^2 - 2 k2e k + ke2) = -K^3 of the target;
    // 8d, 54 and 64 are divisible by 4, 9, 16 respectively.
    if (degT % (y * y) != 0) continue;
    for (i64 k : quadratic_int_roots(psi.k3, -2 * psi.k2e, psi.ke2 - degT / (y * y))) {
      const i64 x = y * k - 1;
      if (k < 1 || x < 1 || std::gcd(x, y) != 1) continue;
      const Divisor U{y * k, -y};  // -K~ + D
      const Divisor D{x, -y};
      const auto e = solve_flop_defect(psi, U, U, D);  // (-K~+D)^2.D = 0
      if (!e || *e < 1) continue;
      const i64 pa2 = triple_product(psi, *e, D, D, {1, 0});  // = 2 pa(C) - 2
      if (pa2 % 2 != 0) continue;
      const i64 paC = pa2 / 2 + 1;
      if (paC < 0) continue;
      const i64 full = triple_product(psi, *e, U, D, {1, 0});  // = index * deg C = y deg C
      if (full % y != 0) continue;
      const i64 degC = full / y;
      if (degC < 1) continue;
      out.push_back(make_solution(psi, x, y, k, *e,
                                  DivisorialE1{target, CurveInvariants{paC, degC}}));
    }
  }
  return out;
}

bool hodge_filter(const LinkSolution& sol) {
  const auto* div = std::get_if<DivisorialE1>(&sol.alpha);
  if (!div) return true;
  const i64 lo1 = sol.psi.curve.pa;
  const i64 hi1 = lo1 + h21_cap(sol.psi.target);
  const i64 lo2 = div->curve.pa;
  const i64 hi2 = lo2 + h21_cap(div->target);
  return std::max(lo1, lo2) <= std::min(hi1, hi2);
}

i64 max_deg_f(const LinkSolution& sol) {
  if (!std::holds_alternative<DivisorialE1>(sol.alpha)) return sol.psi.k2e;
  const i64 dside = sol.x * (2 * sol.g - 2) - sol.y * sol.psi.k2e;  // (-K~)^2.D
  return std::min(sol.psi.k2e, dside);
}

std::vector<LinkSolution> enumerate_links_with_quirk(i64 g, bool apply_hodge,
                                                     SolverQuirk quirk) {
  std::vector<LinkSolution> all;
  for (const auto& psi : enumerate_psi(g)) {
    auto cb = solve_conic_bundle(psi);
    auto dp = solve_del_pezzo_impl(psi, quirk);
    auto dv = solve_divisorial(psi);
    all.insert(all.end(), cb.begin(), cb.end());
    all.insert(all.end(), dp.begin(), dp.end());
    all.insert(all.end(), dv.begin(), dv.end());
  }
  std::erase_if(all, [](const LinkSolution& s) { return s.e < 1; });
  if (apply_hodge) {
    if (quirk == SolverQuirk::InvertedHodgeFilter)
      std::erase_if(all, [](const LinkSolution& s) { return s.hodge_feasible; });
    else
      std::erase_if(all, [](const LinkSolution& s) { return !s.hodge_feasible; });
  }
  std::sort(all.begin(), all.end(),
            [](const LinkSolution& a, const LinkSolution& b) { return sort_key(a) < sort_key(b); });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<LinkSolution> enumerate_links(i64 g, bool apply_hodge) {
  return enumerate_links_with_quirk(g, apply_hodge, SolverQuirk::None);
}

}  // namespace fano3
