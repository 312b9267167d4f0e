#include "fano3/nodal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fano3 {

namespace {

std::string_view trim(std::string_view s, std::size_t& col) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++col;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// number := ['-'|'+'] digits ['/' digits]
Rational parse_number(std::string_view& s, std::size_t line, std::size_t& col) {
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw parse_error(line, col + i, "expected a number");
  BigInt num = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    num = num * 10 + (s[i++] - '0');
  BigInt den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error(line, col + i, "expected a denominator");
    den = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      den = den * 10 + (s[i++] - '0');
    if (den == 0) throw parse_error(line, col + i, "zero denominator");
  }
  s.remove_prefix(i);
  col += i;
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace

Rational parse_rational_field(std::string_view text, std::size_t line, std::size_t col) {
  std::string_view s = trim(text, col);
  if (s.empty()) throw parse_error(line, col, "empty field");
  const Rational r = parse_number(s, line, col);
  if (!s.empty()) throw parse_error(line, col, "trailing input in rational field");
  return r;
}

Eisenstein parse_eisenstein_field(std::string_view text, std::size_t line, std::size_t col) {
  std::string_view s = trim(text, col);
  if (s.empty()) throw parse_error(line, col, "empty field");

  auto take_w = [&](void) -> bool {
    if (!s.empty() && (s.front() == 'w' || s.front() == 'W')) {
      s.remove_prefix(1);
      ++col;
      return true;
    }
    return false;
  };

  // leading bare w / -w
  if (s.front() == 'w' || ((s.front() == '-' || s.front() == '+') && s.size() > 1 && s[1] == 'w')) {
    Rational sign(1);
    if (s.front() == '-' || s.front() == '+') {
      if (s.front() == '-') sign = Rational(-1);
      s.remove_prefix(1);
      ++col;
    }
    take_w();
    if (!s.empty()) throw parse_error(line, col, "trailing input after w");
    return Eisenstein(Rational(0), sign);
  }

  Rational first = parse_number(s, line, col);
  if (!s.empty() && s.front() == '*') {
    s.remove_prefix(1);
    ++col;
    if (!take_w()) throw parse_error(line, col, "expected w after '*'");
    if (!s.empty()) throw parse_error(line, col, "trailing input after w");
    return Eisenstein(Rational(0), first);  // pure w part
  }
  if (s.empty()) return Eisenstein(first);  // pure rational part

  // second summand: ('+'|'-') (number '*w' | 'w')
  if (s.front() != '+' && s.front() != '-')
    throw parse_error(line, col, "expected '+' or '-' before the w part");
  if (s.size() > 1 && s[1] == 'w') {
    const Rational sign = s.front() == '-' ? Rational(-1) : Rational(1);
    s.remove_prefix(1);
    ++col;
    take_w();
    if (!s.empty()) throw parse_error(line, col, "trailing input after w");
    return Eisenstein(first, sign);
  }
  Rational second = parse_number(s, line, col);
  if (s.empty() || s.front() != '*') throw parse_error(line, col, "expected '*w'");
  s.remove_prefix(1);
  ++col;
  if (!take_w()) throw parse_error(line, col, "expected w after '*'");
  if (!s.empty()) throw parse_error(line, col, "trailing input after w");
  return Eisenstein(first, second);
}

std::string to_string(FieldMode m) {
  switch (m) {
    case FieldMode::Rational: return "rational";
    case FieldMode::Eisenstein: return "eisenstein";
    case FieldMode::Float: return "float";
  }
  return "?";
}

FieldMode mode_of(const AnyConfiguration& cfg) {
  if (std::holds_alternative<NodalConfiguration<Rational>>(cfg)) return FieldMode::Rational;
  if (std::holds_alternative<NodalConfiguration<Eisenstein>>(cfg)) return FieldMode::Eisenstein;
  return FieldMode::Float;
}

namespace {

double parse_double_field(std::string_view text, std::size_t line, std::size_t col) {
  std::string_view s = trim(text, col);
  if (s.empty()) throw parse_error(line, col, "empty field");
  std::string buf(s);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    throw parse_error(line, col, "expected a floating-point number");
  }
  if (used != buf.size()) throw parse_error(line, col + used, "trailing input in float field");
  return v;
}

template <class K, class FieldParser>
AnyConfiguration parse_rows(std::istream& in, std::size_t lineno, FieldParser&& parse_field) {
  NodalConfiguration<K> cfg;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t c0 = 1;
    std::string_view lv = trim(raw, c0);
    if (lv.empty() || lv.front() == '#') continue;
    std::array<K, 5> point;
    std::size_t field = 0;
    std::size_t col = 1;
    std::string_view rest = raw;
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view cell = rest.substr(0, comma);
      if (field >= 5) throw parse_error(lineno, col, "expected exactly 5 fields");
      point[field++] = parse_field(cell, lineno, col);
      if (comma == std::string_view::npos) break;
      col += comma + 1;
      rest.remove_prefix(comma + 1);
    }
    if (field != 5) throw parse_error(lineno, col, "expected exactly 5 fields");
    cfg.nodes.push_back(point);
  }
  return cfg;
}

}  // namespace

AnyConfiguration parse_node_file(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t col = 1;
    std::string_view lv = trim(raw, col);
    if (lv.empty()) continue;
    if (lv.substr(0, 1) != "#") throw parse_error(lineno, col, "missing '# field: ...' header");
    std::string squashed;
    for (char ch : lv)
      if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
    if (squashed == "#field:rational")
      return parse_rows<Rational>(in, lineno, parse_rational_field);
    if (squashed == "#field:eisenstein")
      return parse_rows<Eisenstein>(in, lineno, parse_eisenstein_field);
    if (squashed == "#field:float")
      return parse_rows<double>(in, lineno, parse_double_field);
    throw parse_error(lineno, col, "header must be '# field: rational|eisenstein|float'");
  }
  throw parse_error(lineno + 1, 1, "empty node file");
}

AnyConfiguration load_node_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(1, 1, "cannot open node file: " + path);
  return parse_node_file(in);
}

void attach_quartic(AnyConfiguration& cfg, const Polynomial<Rational>& quartic) {
  if (auto* r = std::get_if<NodalConfiguration<Rational>>(&cfg)) {
    r->quartic = quartic;
  } else if (auto* e = std::get_if<NodalConfiguration<Eisenstein>>(&cfg)) {
    e->quartic =
        quartic.map_coefficients<Eisenstein>([](const Rational& c) { return Eisenstein(c); });
  } else {
    auto* f = std::get_if<NodalConfiguration<double>>(&cfg);
    f->quartic = quartic.map_coefficients<double>([](const Rational& c) { return c.to_double(); });
  }
}

void write_node_file(std::ostream& out, const NodalConfiguration<Eisenstein>& cfg) {
  out << "# field: eisenstein\n";
  for (const auto& p : cfg.nodes) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (i) out << ",";
      out << p[i].str();
    }
    out << "\n";
  }
}

}  // namespace fano3
