#ifndef FANO3_EXPECTED_TABLE_HPP
#define FANO3_EXPECTED_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fano3/links.hpp"

namespace fano3 {

// Reference row of the published genus-3 link table, as printed.
// alpha_kind: "e1" (aux1 = pa(C), aux2 = deg C), "cb" (aux1 = deg Delta),
// "dp" (aux1 = fibre degree).
struct ExpectedRow {
  int row;
  std::string z1;
  std::string z1_base;
  i64 pa_gamma;
  i64 deg_gamma;
  std::string alpha_kind;
  i64 aux1;
  i64 aux2;  // -1 when absent
  i64 max_deg_f;
  // erratum annotation; empty for clean rows
  std::string erratum;
  // derived replacements for annotated rows (negative when row has none)
  i64 derived_deg_gamma = -1;
  i64 derived_max_deg_f = -1;
  bool derivable = true;  // false: no admissible solution exists for this row
};

// The 32 published rows (rows 30 and 31 carry erratum annotations).
const std::vector<ExpectedRow>& expected_table_g3();

// Match key of a solver row against the printed table, honouring the
// row-30 derived substitution.  Returns the published row number, or
// nullopt when the solution is not in the table (an "extra" row).
std::optional<int> match_expected_row(const LinkSolution& sol);

// True when the genus-3 solution corresponds to no published row.
bool is_extra_row(const LinkSolution& sol);

}  // namespace fano3

#endif
