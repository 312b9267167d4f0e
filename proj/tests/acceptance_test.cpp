// Acceptance suite: one pass/fail line per criterion.
//
// Each criterion is checked exactly as stated, against an independent
// brute-force oracle where the criterion concerns derived values.  Two
// criteria encode requirements that the published reference data itself
// violates (see README, "published-table errata"); they are implemented
// faithfully and reported honestly rather than weakened:
//   - criterion 1 expects all 32 published rows with a single erratum, but
//     published row 31 requires a negative flop defect and cannot occur;
//   - criterion 5 expects the contraction-replay search to agree with the
//     published closed form 14-g in the quadric scenario, while the replay
//     of the underlying argument attains 15-g.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fano3/defect.hpp"
#include "fano3/expected_table.hpp"
#include "fano3/nodal.hpp"
#include "fano3/selfcheck.hpp"

using namespace fano3;

namespace {

struct Criterion {
  int id;
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------
// Independent oracle: explicit transcriptions of the three systems,
// solved by scanning x (resp. k) and dividing out the flop defect.
// This path shares no solver code with fano3::enumerate_links.
// ---------------------------------------------------------------------

struct OracleRow {
  std::string z1, base, kind;
  i64 pa, deg, aux1, aux2, maxf;
  i64 x, y, e;
  friend auto operator<=>(const OracleRow&, const OracleRow&) = default;
};

std::vector<OracleRow> oracle_rows(i64 g) {
  std::vector<OracleRow> out;
  for (const auto& target : all_rank_one_targets()) {
    const i64 degZ = target.anticanonical_degree();
    if (degZ <= 2 * g - 2) continue;
    const i64 half = (degZ - (2 * g - 2)) / 2;
    for (i64 pa = 0; pa <= half; ++pa) {
      const i64 A = half - 1 + pa;
      if (A < 1 || A % target.index() != 0 || A > degZ) continue;
      const i64 deg = A / target.index();
      const i64 k3 = 2 * g - 2;
      const i64 k2e = A + 2 - 2 * pa;
      const i64 ke2 = 2 * pa - 2;
      if (k2e <= 0) continue;
      const std::string z1 = target.name();

      // conic bundle over P2
      for (i64 y = 1; y <= 2; ++y)
        for (i64 x = 1; x <= 2000; ++x) {
          if (std::gcd(x, y) != 1) continue;
          if (k3 * x * x - 2 * k2e * x * y + ke2 * y * y != 2) continue;
          const i64 lhs = k3 * x * x * x - 3 * k2e * x * x * y + 3 * ke2 * x * y * y;
          if (lhs % (y * y * y) != 0) continue;
          const i64 e3t = lhs / (y * y * y);            // E~^3 from L^3 = 0
          const i64 e = -(A - 2 + 2 * pa) - e3t;        // e3 - E~^3
          if (e < 1) continue;
          const i64 dK2 = k3 * x - k2e * y;
          if (dK2 <= 0 || dK2 > 12) continue;
          out.push_back({z1, "P2", "cb", pa, deg, 12 - dK2, -1, k2e, x, y, e});
        }

      // del Pezzo fibration over P1
      for (i64 y = 1; y <= 3; ++y)
        for (i64 x = 1; x <= 2000; ++x) {
          if (std::gcd(x, y) != 1) continue;
          if (k3 * x * x - 2 * k2e * x * y + ke2 * y * y != 0) continue;
          const i64 lhs = k2e * x * x - 2 * ke2 * x * y;
          if (lhs % (y * y) != 0) continue;
          const i64 e3t = -lhs / (y * y);               // from L^2.E~ = 0
          const i64 e = -(A - 2 + 2 * pa) - e3t;
          if (e < 1) continue;
          const i64 d = k3 * x - k2e * y;
          if (d < 3 || d > 9) continue;
          out.push_back({z1, "P1", "dp", pa, deg, d, -1, k2e, x, y, e});
        }

      // divisorial E1 onto each possible rank-1 target
      for (const auto& t2 : all_rank_one_targets()) {
        const i64 y = t2.index();
        for (i64 k = 1; k <= 2000; ++k) {
          const i64 x = y * k - 1;
          if (x < 1 || std::gcd(x, y) != 1) continue;
          if (y * y * (k3 * k * k - 2 * k2e * k + ke2) != t2.anticanonical_degree()) continue;
          // (-K~+D)^2 D = 0, divided by y^2
          const i64 c = k3 * k * k * x - k2e * (3 * k * k * y - 2 * k) +
                        ke2 * (3 * k * y - 1);
          if (c % y != 0) continue;
          const i64 e3t = c / y;  // (-K~+D)^2.D = 0 reads c - y E~^3 = 0
          const i64 e = -(A - 2 + 2 * pa) - e3t;
          if (e < 1) continue;
          const i64 pac2 = k3 * x * x - 2 * k2e * x * y + ke2 * y * y;
          if (pac2 % 2 != 0 || pac2 / 2 + 1 < 0) continue;
          const i64 paC = pac2 / 2 + 1;
          const i64 degC = k3 * k * x - k2e * (2 * y * k - 1) + ke2 * y;
          if (degC < 1) continue;
          const i64 dside = x * k3 - y * k2e;
          out.push_back({z1, t2.name(), "e1", pa, deg, paC, degC,
                         std::min(k2e, dside), x, y, e});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OracleRow key_of_solution(const LinkSolution& s) {
  OracleRow r;
  r.z1 = s.psi.target.name();
  r.pa = s.psi.curve.pa;
  r.deg = s.psi.curve.deg;
  r.maxf = s.max_deg_f;
  r.x = s.x;
  r.y = s.y;
  r.e = s.e;
  if (const auto* d = std::get_if<DivisorialE1>(&s.alpha)) {
    r.base = d->target.name();
    r.kind = "e1";
    r.aux1 = d->curve.pa;
    r.aux2 = d->curve.deg;
  } else if (const auto* c = std::get_if<ConicBundle>(&s.alpha)) {
    r.base = "P2";
    r.kind = "cb";
    r.aux1 = c->delta_deg;
    r.aux2 = -1;
  } else {
    r.base = "P1";
    r.kind = "dp";
    r.aux1 = std::get<DelPezzoFibration>(s.alpha).d;
    r.aux2 = -1;
  }
  return r;
}

// ---------------------------------------------------------------------

Criterion criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sols = enumerate_links(3, false);

  // cross-check the solver against the independent oracle first
  std::vector<OracleRow> got;
  for (const auto& s : sols) got.push_back(key_of_solution(s));
  std::sort(got.begin(), got.end());
  const auto oracle = oracle_rows(3);
  std::ostringstream detail;
  bool pass = true;
  if (got != oracle) {
    pass = false;
    detail << "solver and independent oracle disagree; ";
  }

  // literal criterion: all 32 published rows, exactly one documented erratum
  int matched = 0, errata_used = 0;
  std::vector<int> missing;
  for (const auto& row : expected_table_g3()) {
    bool found = false;
    for (const auto& s : sols) {
      const auto m = match_expected_row(s);
      if (m && *m == row.row) {
        found = true;
        break;
      }
    }
    if (found) {
      ++matched;
      if (!row.erratum.empty()) ++errata_used;
    } else {
      missing.push_back(row.row);
    }
  }
  int extras = 0;
  for (const auto& s : sols)
    if (is_extra_row(s)) ++extras;

  const double dt = seconds_since(t0);
  detail << matched << "/32 published rows matched, " << errata_used
         << " via the documented erratum, " << extras << " extra rows, " << dt << "s";
  if (!missing.empty()) {
    detail << "; unmatched published rows:";
    for (int r : missing) detail << " " << r;
    detail << " (row 31 requires flop defect e = -10 < 1 and cannot be produced; "
              "second documented erratum, see README)";
  }
  pass = pass && missing.empty() && errata_used == 1 && extras == 0 && dt < 10.0;
  return {1, pass, detail.str()};
}

Criterion criterion2() {
  const auto all = enumerate_links(3, false);
  const auto kept = enumerate_links(3, true);
  std::set<int> removed;
  for (const auto& s : all) {
    if (std::any_of(kept.begin(), kept.end(), [&](const LinkSolution& t) { return t == s; }))
      continue;
    const auto m = match_expected_row(s);
    removed.insert(m ? *m : -1);
  }
  const bool pass = removed == std::set<int>{16, 25, 32};
  std::ostringstream detail;
  detail << "removed published rows:";
  for (int r : removed) detail << " " << r;
  return {2, pass, detail.str()};
}

Criterion criterion3() {
  bool pass = true;
  std::ostringstream detail;
  std::size_t total = 0;
  for (i64 g : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    for (const auto& s : enumerate_links(g, false)) {
      ++total;
      if (s.e < 1) {
        pass = false;
        detail << "g=" << g << " has a solution with e=" << s.e << "; ";
      }
    }
  }
  detail << total << " solutions across genera 3-10, 12, all with integer e >= 1";
  return {3, pass, detail.str()};
}

Criterion criterion4() {
  struct Spot {
    int row;
    std::optional<i64> k;
    i64 x, y, e;
    std::optional<CurveInvariants> c;
  };
  const std::vector<Spot> spots = {
      {1, 6, 5, 1, 268, std::nullopt},
      {4, std::nullopt, 4, 1, 92, std::nullopt},
      {21, std::nullopt, 2, 1, 12, std::nullopt},
      {10, 4, 11, 3, 103, CurveInvariants{3, 9}},
      {23, 3, 5, 2, 23, CurveInvariants{7, 12}},
  };
  bool pass = true;
  std::ostringstream detail;
  const auto sols = enumerate_links(3, false);
  for (const auto& sp : spots) {
    bool ok = false;
    for (const auto& s : sols) {
      if (match_expected_row(s) != std::optional<int>(sp.row)) continue;
      ok = s.k == sp.k && s.x == sp.x && s.y == sp.y && s.e == sp.e;
      if (ok && sp.c) {
        const auto& d = std::get<DivisorialE1>(s.alpha);
        ok = d.curve == *sp.c;
      }
      break;
    }
    pass = pass && ok;
    detail << "row " << sp.row << (ok ? " ok; " : " MISMATCH; ");
  }
  return {4, pass, detail.str()};
}

Criterion criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream detail;
  pass = pass && main_theorem(QuarticContains::None).bound == 8 &&
         main_theorem(QuarticContains::Quadric).bound == 11 &&
         main_theorem(QuarticContains::Plane).bound == 15;
  detail << "main theorem (8,11,15) ok; ";
  for (i64 g : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    pass = pass && bound_no_quadric(g).bound == (12 - g) / 2 + 4;
    pass = pass && bound_with_quadric(g).bound == 14 - g;
  }
  detail << "closed forms ok; ";
  for (i64 h3 = 1; h3 <= 5; ++h3) pass = pass && *bound_index_two(h3).rank_cap == 8 - h3;
  bool search_ok = true;
  for (i64 g : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    const i64 s0 = search_bound(g, false).bound;
    if (s0 != bound_no_quadric(g).bound) {
      search_ok = false;
      detail << "search(g=" << g << ",no-quadric)=" << s0 << " != closed form; ";
    }
    const i64 s1 = search_bound(g, true).bound;
    const i64 closed = std::max(bound_with_quadric(g).bound, bound_no_quadric(g).bound);
    if (s1 != closed) {
      search_ok = false;
      detail << "search(g=" << g << ",quadric)=" << s1 << " vs closed form " << closed
             << "; ";
    }
  }
  if (!search_ok)
    detail << "(the quadric-scenario replay attains 15-g, one above the published 14-g; "
              "see README) ";
  const double dt = seconds_since(t0);
  detail << dt << "s";
  pass = pass && search_ok && dt < 5.0;
  return {5, pass, detail.str()};
}

Criterion criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = burkhardt_configuration();
  const auto reports = verify_nodes(cfg);
  bool verified = reports.size() == 45;
  for (const auto& r : reports)
    verified = verified && r.on_hypersurface && r.critical && r.ordinary;
  const auto m = cubic_condition_matrix(cfg);
  const bool shape = m.size() == 45 && !m.empty() && m[0].size() == 35;
  const int rank = exact_rank(m);
  const auto d = nodal_defect(cfg);
  const auto betti = betti_bookkeeping(45, 15, 1);
  const double dt = seconds_since(t0);
  const bool pass = verified && shape && rank == 30 && d.defect == 15 &&
                    defect_lower_bound(45) == 15 && betti.b2_blowup == 61 && dt < 30.0;
  std::ostringstream detail;
  detail << "45 nodes verified=" << (verified ? "yes" : "NO") << ", matrix 45x35, rank "
         << rank << ", defect " << d.defect << ", lower bound " << defect_lower_bound(45)
         << ", b2(blowup) " << betti.b2_blowup << ", " << dt << "s (exact mode)";
  return {6, pass, detail.str()};
}

Criterion criterion7() {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<long long> entry(-5, 5);
  auto random_pgl = [&] {
    while (true) {
      Matrix<Rational> a(5, std::vector<Rational>(5));
      for (auto& row : a)
        for (auto& v : row) v = Rational(entry(rng));
      if (exact_rank(a) == 5) return a;
    }
  };
  auto transform = [](const NodalConfiguration<Rational>& cfg, const Matrix<Rational>& a) {
    NodalConfiguration<Rational> out;
    for (const auto& p : cfg.nodes) {
      std::array<Rational, 5> q{};
      for (std::size_t i = 0; i < 5; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < 5; ++j) acc += p[j] * a[i][j];
        q[i] = acc;
      }
      out.nodes.push_back(q);
    }
    return out;
  };

  const auto cb9 = cayley_bacharach9_configuration();
  const auto p5 = five_general_points_configuration();
  bool pass = nodal_defect(cb9).defect == 1 && nodal_defect(p5).defect == 0;
  int stable = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_pgl();
    if (nodal_defect(transform(cb9, a)).defect == 1 &&
        nodal_defect(transform(p5, a)).defect == 0)
      ++stable;
  }
  pass = pass && stable == 10;
  std::ostringstream detail;
  detail << "9-point defect 1, 5-point defect 0, " << stable << "/10 PGL(5) trials stable";
  return {7, pass, detail.str()};
}

Criterion criterion8() {
  // published (unbalanced) second del Pezzo constraint makes the degree-4
  // fibration row require e = 0; the derived form yields e = 12
  const auto psi = e1_table(3, FanoDescriptor::index_one(7), CurveInvariants{1, 4});
  const i64 x = 2, y = 1;
  const i64 printed_e = psi.k2e - 2 * psi.ke2 * x * y + psi.e3 * y * y;  // = e
  i64 derived_e = 0;
  for (const auto& s : enumerate_links(3, false))
    if (match_expected_row(s) == std::optional<int>(21)) derived_e = s.e;
  const auto mutant = enumerate_links_with_quirk(3, false, SolverQuirk::DelPezzoMissingSquare);
  bool mutant_drops_row21 = true;
  for (const auto& s : mutant)
    if (match_expected_row(s) == std::optional<int>(21)) mutant_drops_row21 = false;
  const bool pass = printed_e == 0 && derived_e == 12 && mutant_drops_row21;
  std::ostringstream detail;
  detail << "published form gives e=" << printed_e << " (violates positivity), derived form e="
         << derived_e << ", fault-injected solver drops the row";
  return {8, pass, detail.str()};
}

Criterion criterion9() {
  bool pass = true;
  std::ostringstream detail;

  // flop invariance of products without the E~^3 monomial
  const auto b = e1_table(3, FanoDescriptor::index_one(12), CurveInvariants{0, 8});
  for (i64 e : {1, 2, 50, 268, 9999}) {
    pass = pass && triple_product(b, e, {1, 0}, {1, 0}, {1, 0}) == 4;
    pass = pass && triple_product(b, e, {3, -2}, {5, 0}, {7, 0}) ==
                       triple_product(b, 1, {3, -2}, {5, 0}, {7, 0});
  }
  detail << "flop invariance ok; ";

  // target-degree round trip on 1000 randomized valid tables
  std::mt19937 rng(1729);
  std::uniform_int_distribution<std::size_t> pick(0, all_rank_one_targets().size() - 1);
  std::uniform_int_distribution<i64> genus(3, 60), pa_dist(0, 60);
  int built = 0, tries = 0;
  while (built < 1000 && tries < 100000) {
    ++tries;
    const auto& target = all_rank_one_targets()[pick(rng)];
    const i64 g = genus(rng);
    const i64 degZ = target.anticanonical_degree();
    if (degZ <= 2 * g - 2 || (degZ - (2 * g - 2)) % 2 != 0) continue;
    const i64 half = (degZ - (2 * g - 2)) / 2;
    const i64 pa = pa_dist(rng);
    const i64 A = half - 1 + pa;
    if (A < 1 || A % target.index() != 0 || A > degZ || A + 2 - 2 * pa <= 0) continue;
    const auto t = e1_table(g, target, CurveInvariants{pa, A / target.index()});
    const i64 A_back = t.k2e - 2 + 2 * pa;
    if (t.k3 + 2 * (A_back + 1 - pa) != degZ) {
      pass = false;
      break;
    }
    ++built;
  }
  pass = pass && built == 1000;
  detail << built << " randomized round-trips ok; ";

  // symmetry of the trilinear form
  std::uniform_int_distribution<i64> coef(-8, 8);
  for (int i = 0; i < 300; ++i) {
    Divisor u{coef(rng), coef(rng)}, v{coef(rng), coef(rng)}, w{coef(rng), coef(rng)};
    const i64 ref = triple_product(b, 7, u, v, w);
    pass = pass && triple_product(b, 7, v, w, u) == ref &&
           triple_product(b, 7, w, u, v) == ref && triple_product(b, 7, v, u, w) == ref;
  }
  detail << "symmetry ok";
  return {9, pass, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }
  std::vector<Criterion (*)()> checks = {criterion1, criterion2, criterion3,
                                         criterion4, criterion5, criterion6,
                                         criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const Criterion c = checks[i]();
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " -- "
              << c.detail << "\n";
    if (!c.pass) ++failures;
  }
  if (only == 0) {
    std::cout << (failures ? "acceptance: FAILURES present\n" : "acceptance: all criteria pass\n");
  }
  return failures ? 1 : 0;
}
