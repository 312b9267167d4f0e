#ifndef FANO3_RENDER_HPP
#define FANO3_RENDER_HPP

#include <string>
#include <vector>

#include "fano3/links.hpp"

namespace fano3 {

enum class OutputFormat { Markdown, Csv, Json };
enum class AlphaFilter { All, E1, CB, DP };

// Stable row view of a link solution; fields are the CSV columns.
struct LinkRow {
  int row;
  std::string z1;
  std::string z1_base;
  i64 pa_gamma;
  i64 deg_gamma;  // H-degree
  i64 a_gamma;    // anticanonical degree -K_{Z1}.Gamma = index * deg
  std::string alpha;
  i64 max_deg_f;
  i64 x, y;
  std::optional<i64> k;
  i64 e;
  bool hodge_feasible;
  bool extra;
};

std::string describe_alpha(const AlphaContraction& a);
bool alpha_matches(const AlphaContraction& a, AlphaFilter f);

std::vector<LinkRow> link_rows(const std::vector<LinkSolution>& sols, AlphaFilter filter);

// Renders enumerate_links output; JSON schema:
//   {"schema":1,"genus":g,"hodge_filter":h,"rows":[{...csv column names...}]}
std::string render_links(const std::vector<LinkSolution>& sols, i64 genus, bool hodge,
                         OutputFormat format, AlphaFilter filter = AlphaFilter::All);

}  // namespace fano3

#endif
