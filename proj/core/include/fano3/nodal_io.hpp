#ifndef FANO3_NODAL_IO_HPP
#define FANO3_NODAL_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "fano3/nodal.hpp"

namespace fano3 {

enum class FieldMode { Rational, Eisenstein, Float };

std::string to_string(FieldMode m);

// A parsed node file in whichever field its header declares.
using AnyConfiguration = std::variant<NodalConfiguration<Rational>,
                                      NodalConfiguration<Eisenstein>,
                                      NodalConfiguration<double>>;

FieldMode mode_of(const AnyConfiguration& cfg);

// Node file format: mandatory header "# field: rational|eisenstein|float",
// then one node per line, 5 comma-separated fields.
//   rational:   p/q or integer
//   eisenstein: p/q+r/s*w with either summand omissible (w is the cube root)
//   float:      decimal literals
// Throws parse_error with 1-based line/column positions.
AnyConfiguration parse_node_file(std::istream& in);
AnyConfiguration load_node_file(const std::string& path);

// Attaches a quartic read from the polynomial format to the configuration,
// lifting rational coefficients into the configuration's field.
void attach_quartic(AnyConfiguration& cfg, const Polynomial<Rational>& quartic);

// Single field-element parsers (exposed for tests).
Rational parse_rational_field(std::string_view text, std::size_t line, std::size_t col);
Eisenstein parse_eisenstein_field(std::string_view text, std::size_t line, std::size_t col);

// Node-file writer matching the parser (used by the fixture generator path).
void write_node_file(std::ostream& out, const NodalConfiguration<Eisenstein>& cfg);

}  // namespace fano3

#endif
