#include "fano3/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fano3/defect.hpp"
#include "fano3/expected_table.hpp"
#include "fano3/render.hpp"

namespace fano3 {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

// paper-row numbers matched by a list of solutions
std::set<int> matched_rows(const std::vector<LinkSolution>& sols) {
  std::set<int> rows;
  for (const auto& s : sols)
    if (auto r = match_expected_row(s)) rows.insert(*r);
  return rows;
}

}  // namespace

Row31Forensics row31_forensics() {
  const auto psi = e1_table(3, FanoDescriptor::index_two(5), CurveInvariants{9, 13});
  // L = 4(-K~) - E~ solves L^2.(-K~) = 0; solve L^2.E~ = 0 for e by linearity
  const Divisor L{4, -1};
  const i64 t1 = triple_product(psi, 1, L, L, {0, 1});
  const i64 t2 = triple_product(psi, 2, L, L, {0, 1});
  const i64 e = 1 - t1 / (t2 - t1);
  const i64 d = triple_product(psi, 1, L, {1, 0}, {1, 0});
  return {4, 1, d, e};
}

NodalConfiguration<Rational> cayley_bacharach9_configuration() {
  // 3x3 grid in the plane {x0 = x1 = 0}: base locus of a pencil of
  // totally reducible cubics; nine rational points imposing 8 conditions.
  NodalConfiguration<Rational> cfg;
  const Rational as[3] = {Rational(-1), Rational(3), Rational(BigInt(-3), BigInt(2))};
  const Rational bs[3] = {Rational(BigInt(6), BigInt(5)), Rational(-3),
                          Rational(BigInt(2), BigInt(3))};
  for (const auto& a : as)
    for (const auto& b : bs)
      cfg.nodes.push_back({Rational(0), Rational(0), Rational(1), a, b});
  return cfg;
}

NodalConfiguration<Rational> five_general_points_configuration() {
  NodalConfiguration<Rational> cfg;
  auto q = [](long long n, long long d) { return Rational(BigInt(n), BigInt(d)); };
  cfg.nodes.push_back({q(-1, 2), q(5, 3), q(3, 1), q(1, 5), q(-2, 1)});
  cfg.nodes.push_back({q(2, 1), q(0, 1), q(-1, 1), q(-7, 3), q(-6, 7)});
  cfg.nodes.push_back({q(-9, 7), q(3, 1), q(0, 1), q(-1, 1), q(-1, 1)});
  cfg.nodes.push_back({q(7, 2), q(4, 5), q(-8, 3), q(-1, 1), q(7, 1)});
  cfg.nodes.push_back({q(8, 5), q(-1, 7), q(6, 1), q(2, 1), q(-4, 1)});
  return cfg;
}

const std::vector<std::pair<i64, std::size_t>>& expected_link_counts() {
  static const std::vector<std::pair<i64, std::size_t>> counts = {
      {3, 31}, {4, 20}, {5, 9}, {6, 9}, {7, 3}, {8, 3}, {9, 1}, {10, 1}, {12, 0}};
  return counts;
}

const std::vector<std::pair<i64, i64>>& searched_quadric_bounds() {
  static const std::vector<std::pair<i64, i64>> vals = {
      {3, 12}, {4, 11}, {5, 10}, {6, 9}, {7, 8}, {8, 7}, {9, 6}, {10, 5}, {12, 4}};
  return vals;
}

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;

  // --- table reproduction, errata treated as the verified expectation ---
  const auto sols = enumerate_links(3, false);
  {
    const auto rows = matched_rows(sols);
    std::set<int> expect;
    for (const auto& r : expected_table_g3())
      if (r.derivable) expect.insert(r.row);
    std::ostringstream detail;
    bool pass = rows == expect && sols.size() == 31;
    detail << sols.size() << " solutions; matched " << rows.size() << "/31 derivable rows";
    int extras = 0;
    for (const auto& s : sols)
      if (is_extra_row(s)) ++extras;
    if (extras) {
      pass = false;
      detail << "; " << extras << " unexpected extra rows";
    }
    add(out, "genus-3 table (31 derivable rows, row 30 in derived form)", pass, detail.str());
  }
  {
    const auto f = row31_forensics();
    const bool pass = f.d == 6 && f.e == -10;
    std::ostringstream detail;
    detail << "candidate (x,y)=(4,1): d=" << f.d << ", e=" << f.e
           << " (< 1, correctly rejected)";
    add(out, "row 31 rejection (flop defect must be >= 1)", pass, detail.str());
  }

  // --- Hodge filter removes exactly rows 16, 25, 32 ---
  {
    const auto filtered = enumerate_links(3, true);
    const auto all_rows = matched_rows(sols);
    const auto kept = matched_rows(filtered);
    std::set<int> removed;
    std::set_difference(all_rows.begin(), all_rows.end(), kept.begin(), kept.end(),
                        std::inserter(removed, removed.begin()));
    const bool pass = removed == std::set<int>{16, 25, 32};
    std::ostringstream detail;
    detail << "removed rows:";
    for (int r : removed) detail << " " << r;
    add(out, "Hodge filter removes rows 16, 25, 32", pass, detail.str());
  }

  // --- e-positivity and frozen counts over all genera ---
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& [g, count] : expected_link_counts()) {
      const auto rows = enumerate_links(g, false);
      bool all_pos = std::all_of(rows.begin(), rows.end(),
                                 [](const LinkSolution& s) { return s.e >= 1; });
      if (!all_pos || rows.size() != count) {
        pass = false;
        detail << "g=" << g << ": " << rows.size() << " rows (expected " << count << ")"
               << (all_pos ? "" : ", nonpositive e present") << "; ";
      }
    }
    add(out, "flop defect e >= 1 and solution counts across genera", pass, detail.str());
  }

  // --- spot derivations (hidden unknowns of five published rows) ---
  {
    struct Spot {
      int row;
      i64 x, y, e;
      std::optional<i64> k;
    };
    const std::vector<Spot> spots = {{1, 5, 1, 268, 6},
                                     {4, 4, 1, 92, std::nullopt},
                                     {21, 2, 1, 12, std::nullopt},
                                     {10, 11, 3, 103, 4},
                                     {23, 5, 2, 23, 3}};
    bool pass = true;
    std::ostringstream detail;
    for (const auto& sp : spots) {
      bool found = false;
      for (const auto& s : sols) {
        const auto m = match_expected_row(s);
        if (m && *m == sp.row) {
          found = s.x == sp.x && s.y == sp.y && s.e == sp.e && s.k == sp.k;
          if (!found) {
            detail << "row " << sp.row << ": got (x,y,e)=(" << s.x << "," << s.y << "," << s.e
                   << "); ";
          }
          break;
        }
      }
      pass = pass && found;
      if (!found) detail << "row " << sp.row << " mismatch; ";
    }
    add(out, "spot derivations rows 1, 4, 10, 21, 23", pass, detail.str());
  }

  // --- defect bounds ---
  {
    bool pass = main_theorem(QuarticContains::None).bound == 8 &&
                main_theorem(QuarticContains::Quadric).bound == 11 &&
                main_theorem(QuarticContains::Plane).bound == 15;
    for (i64 g : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
      pass = pass && bound_no_quadric(g).bound == (12 - g) / 2 + 4;
      pass = pass && bound_with_quadric(g).bound == 14 - g;
      pass = pass && search_bound(g, false).bound == bound_no_quadric(g).bound;
    }
    for (i64 h3 = 1; h3 <= 5; ++h3)
      pass = pass && *bound_index_two(h3).rank_cap == 8 - h3 &&
             bound_index_two(h3).bound == 7 - h3;
    for (const auto& [g, v] : searched_quadric_bounds())
      pass = pass && search_bound(g, true).bound == v;
    pass = pass && weil_rank_del_pezzo3(4, 0) == std::make_pair<i64, i64>(16, 15);
    add(out, "defect bounds (closed forms; search replay incl. quadric-flag values)", pass);
  }

  // --- Burkhardt end-to-end (exact Eisenstein arithmetic) ---
  {
    const auto cfg = burkhardt_configuration();
    const auto reports = verify_nodes(cfg);
    bool verified = reports.size() == 45;
    for (const auto& r : reports)
      verified = verified && r.on_hypersurface && r.critical && r.ordinary;
    const auto m = cubic_condition_matrix(cfg);
    const bool shape = m.size() == 45 && m[0].size() == 35;
    const auto d = nodal_defect(cfg);
    const auto betti = betti_bookkeeping(45, 15, 1);
    const bool pass = verified && shape && d.rank == 30 && d.defect == 15 &&
                      defect_lower_bound(45) == 15 && betti.b3_y == 30 &&
                      betti.b2_small_res == 16 && betti.b2_blowup == 61;
    std::ostringstream detail;
    detail << "rank=" << d.rank << " defect=" << d.defect << " b2(blowup)=" << betti.b2_blowup;
    add(out, "45-node quartic: verification, rank 30, defect 15, b2 bookkeeping", pass,
        detail.str());
  }

  // --- control fixtures ---
  {
    const auto d9 = nodal_defect(cayley_bacharach9_configuration());
    const auto d5 = nodal_defect(five_general_points_configuration());
    const bool pass = d9.defect == 1 && d9.rank == 8 && d5.defect == 0 && d5.rank == 5;
    std::ostringstream detail;
    detail << "9-point defect=" << d9.defect << ", 5-point defect=" << d5.defect;
    add(out, "plane-cubic 9-point control (defect 1) and 5 general points (defect 0)", pass,
        detail.str());
  }

  // --- mutation: inverted Hodge filter must surface rows 16, 25, 32 ---
  {
    const auto mutant = enumerate_links_with_quirk(3, true, SolverQuirk::InvertedHodgeFilter);
    const auto rows = matched_rows(mutant);
    const bool pass = rows == std::set<int>{16, 25, 32};
    std::ostringstream detail;
    detail << "mutant kept rows:";
    for (int r : rows) detail << " " << r;
    add(out, "fault injection: inverted Hodge filter detected (rows 16/25/32)", pass,
        detail.str());
  }

  // --- mutation: unbalanced del Pezzo constraint kills row 21 (e = 0) ---
  {
    const auto mutant = enumerate_links_with_quirk(3, false, SolverQuirk::DelPezzoMissingSquare);
    const auto rows = matched_rows(mutant);
    const bool row21_gone = !rows.contains(21);
    // direct arithmetic: published-form flop defect for row 21 is 0, derived is 12
    const auto psi = e1_table(3, FanoDescriptor::index_one(7), CurveInvariants{1, 4});
    const i64 e_printed = psi.k2e - 2 * psi.ke2 * 2 * 1 + psi.e3;  // x=2, y=1
    i64 e_derived = 0;
    for (const auto& s : enumerate_links(3, false))
      if (match_expected_row(s) == std::optional<int>(21)) e_derived = s.e;
    const bool pass = row21_gone && e_printed == 0 && e_derived == 12;
    std::ostringstream detail;
    detail << "published-form e=" << e_printed << ", derived e=" << e_derived
           << (row21_gone ? ", mutant drops row 21" : ", mutant KEPT row 21");
    add(out, "fault injection: unbalanced del Pezzo constraint detected (row 21)", pass,
        detail.str());
  }

  // --- rendering determinism and CSV/JSON agreement ---
  {
    const auto csv1 = render_links(sols, 3, false, OutputFormat::Csv);
    const auto csv2 = render_links(enumerate_links(3, false), 3, false, OutputFormat::Csv);
    const auto js = render_links(sols, 3, false, OutputFormat::Json);
    const bool pass = csv1 == csv2 && !js.empty();
    add(out, "deterministic rendering", pass);
  }

  // --- float mode agrees with exact mode on the fixtures ---
  {
    auto to_double = [](const NodalConfiguration<Rational>& cfg) {
      NodalConfiguration<double> f;
      for (const auto& p : cfg.nodes)
        f.nodes.push_back({p[0].to_double(), p[1].to_double(), p[2].to_double(),
                           p[3].to_double(), p[4].to_double()});
      return f;
    };
    const auto cb9 = cayley_bacharach9_configuration();
    const auto p5 = five_general_points_configuration();
    const bool pass =
        nodal_defect_float(to_double(cb9), 1e-9).rank == nodal_defect(cb9).rank &&
        nodal_defect_float(to_double(p5), 1e-9).rank == nodal_defect(p5).rank;
    add(out, "float-mode rank agrees with exact mode (tol 1e-9)", pass);
  }

  return out;
}

}  // namespace fano3
