#ifndef FANO3_SELFCHECK_HPP
#define FANO3_SELFCHECK_HPP

#include <string>
#include <utility>
#include <vector>

#include "fano3/links.hpp"
#include "fano3/nodal.hpp"

namespace fano3 {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Regression checks of a build against the verified expected behaviour,
// documented table errata included (rows 30 and 31 of the published
// genus-3 table; see README).  All green on a correct build.  Includes the
// two fault-injection mutations (inverted Hodge filter; del Pezzo flop
// defect solved from the unbalanced published constraint).
std::vector<CheckResult> run_selfcheck();

// Forensics for published row 31: the unique candidate of the (V5, pa=9,
// deg=13) del Pezzo system.  Returns (x, y, d, e) with e = -10.
struct Row31Forensics {
  i64 x, y, d, e;
};
Row31Forensics row31_forensics();

// Embedded exact-mode control fixtures.
NodalConfiguration<Rational> cayley_bacharach9_configuration();  // defect 1
NodalConfiguration<Rational> five_general_points_configuration();  // defect 0

// Expected solution counts of enumerate_links(g, false), g in 3..10, 12.
const std::vector<std::pair<i64, std::size_t>>& expected_link_counts();

// search_bound values with allow_quadrics = true (these exceed the
// published closed form 14-g by one for g <= 9; see README).
const std::vector<std::pair<i64, i64>>& searched_quadric_bounds();

}  // namespace fano3

#endif
