#include "fano3/render.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "fano3/expected_table.hpp"

namespace fano3 {

std::string describe_alpha(const AlphaContraction& a) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DivisorialE1>(&a)) {
    os << "E1 -> " << d->target.name() << " pa(C)=" << d->curve.pa
       << " deg(C)=" << d->curve.deg;
  } else if (const auto* c = std::get_if<ConicBundle>(&a)) {
    os << "conic bundle deg(Delta)=" << c->delta_deg;
  } else {
    os << "del Pezzo fibration of degree " << std::get<DelPezzoFibration>(a).d;
  }
  return os.str();
}

bool alpha_matches(const AlphaContraction& a, AlphaFilter f) {
  switch (f) {
    case AlphaFilter::All: return true;
    case AlphaFilter::E1: return std::holds_alternative<DivisorialE1>(a);
    case AlphaFilter::CB: return std::holds_alternative<ConicBundle>(a);
    case AlphaFilter::DP: return std::holds_alternative<DelPezzoFibration>(a);
  }
  return false;
}

std::vector<LinkRow> link_rows(const std::vector<LinkSolution>& sols, AlphaFilter filter) {
  std::vector<LinkRow> rows;
  int n = 0;
  for (const auto& s : sols) {
    if (!alpha_matches(s.alpha, filter)) continue;
    LinkRow r;
    r.row = ++n;
    r.z1 = s.psi.target.name();
    if (const auto* d = std::get_if<DivisorialE1>(&s.alpha))
      r.z1_base = d->target.name();
    else if (std::holds_alternative<ConicBundle>(s.alpha))
      r.z1_base = "P2";
    else
      r.z1_base = "P1";
    r.pa_gamma = s.psi.curve.pa;
    r.deg_gamma = s.psi.curve.deg;
    r.a_gamma = s.psi.A;
    r.alpha = describe_alpha(s.alpha);
    r.max_deg_f = s.max_deg_f;
    r.x = s.x;
    r.y = s.y;
    r.k = s.k;
    r.e = s.e;
    r.hodge_feasible = s.hodge_feasible;
    r.extra = is_extra_row(s);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

constexpr const char* kColumns[] = {"row", "z1", "z1_base", "pa_gamma", "deg_gamma",
                                    "a_gamma", "alpha", "max_deg_f", "x", "y",
                                    "k", "e", "hodge_feasible", "extra"};

std::string csv_of(const std::vector<LinkRow>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::size(kColumns); ++i)
    os << (i ? "," : "") << kColumns[i];
  os << "\n";
  for (const auto& r : rows) {
    os << r.row << "," << r.z1 << "," << r.z1_base << "," << r.pa_gamma << "," << r.deg_gamma
       << "," << r.a_gamma << "," << r.alpha << "," << r.max_deg_f << "," << r.x << "," << r.y
       << ",";
    if (r.k) os << *r.k;
    os << "," << r.e << "," << (r.hodge_feasible ? "true" : "false") << ","
       << (r.extra ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string markdown_of(const std::vector<LinkRow>& rows) {
  std::ostringstream os;
  os << "| row | Z1 | Z1~/base | pa(Gamma) | deg(Gamma) | alpha | max deg F | x | y | k | e "
        "| hodge | extra |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.row << " | " << r.z1 << " | " << r.z1_base << " | " << r.pa_gamma << " | "
       << r.deg_gamma;
    if (r.a_gamma != r.deg_gamma) os << " (A=" << r.a_gamma << ")";
    os << " | " << r.alpha << " | " << r.max_deg_f << " | " << r.x << " | " << r.y << " | ";
    if (r.k) os << *r.k;
    os << " | " << r.e << " | " << (r.hodge_feasible ? "yes" : "no") << " | "
       << (r.extra ? "yes" : "") << " |\n";
  }
  return os.str();
}

std::string json_of(const std::vector<LinkRow>& rows, i64 genus, bool hodge) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["genus"] = genus;
  doc["hodge_filter"] = hodge;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["row"] = r.row;
    j["z1"] = r.z1;
    j["z1_base"] = r.z1_base;
    j["pa_gamma"] = r.pa_gamma;
    j["deg_gamma"] = r.deg_gamma;
    j["a_gamma"] = r.a_gamma;
    j["alpha"] = r.alpha;
    j["max_deg_f"] = r.max_deg_f;
    j["x"] = r.x;
    j["y"] = r.y;
    if (r.k)
      j["k"] = *r.k;
    else
      j["k"] = nullptr;
    j["e"] = r.e;
    j["hodge_feasible"] = r.hodge_feasible;
    j["extra"] = r.extra;
    doc["rows"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_links(const std::vector<LinkSolution>& sols, i64 genus, bool hodge,
                         OutputFormat format, AlphaFilter filter) {
  const auto rows = link_rows(sols, filter);
  switch (format) {
    case OutputFormat::Csv: return csv_of(rows);
    case OutputFormat::Markdown: return markdown_of(rows);
    case OutputFormat::Json: return json_of(rows, genus, hodge);
  }
  return {};
}

}  // namespace fano3
