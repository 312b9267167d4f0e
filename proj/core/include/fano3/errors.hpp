#ifndef FANO3_ERRORS_HPP
#define FANO3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fano3 {

enum class errc {
  genus_out_of_range,
  degree_out_of_range,
  inconsistent_target,
  nonpositive_surface_degree,
  degree_exceeds_target,
  nonpositive_flop_defect,
  negative_jump,
  fibre_budget_exceeded,
  zero_point,
  missing_polynomial,
  negative_betti,
  overflow,
  internal_limit,
};

// Precondition / domain violations raised by the numeric engines.
class solver_error : public std::runtime_error {
public:
  solver_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Input-format violation with a 1-based source position.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fano3

#endif
