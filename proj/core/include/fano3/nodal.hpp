#ifndef FANO3_NODAL_HPP
#define FANO3_NODAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fano3/errors.hpp"
#include "fano3/polynomial.hpp"

namespace fano3 {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Node set in P^4 over one coefficient field, with an optional defining
// quartic.  Coordinates are homogeneous; at least one must be nonzero.
template <class K>
struct NodalConfiguration {
  std::vector<std::array<K, 5>> nodes;
  std::optional<Polynomial<K>> quartic;
};

// The 35 degree-3 monomials of x0..x4 in graded-lex order with
// x0 > x1 > x2 > x3 > x4 (all of degree 3, so plain lex on exponents,
// descending); this order is the column order of the conditions matrix.
const std::vector<Exponents>& cubic_monomials();

// Affine normalization: divide by the first nonzero coordinate.
// Throws zero_point if all coordinates vanish.
template <class K>
std::array<K, 5> normalize_point(const std::array<K, 5>& p);

// Throws on a zero point or a projectively repeated point.
template <class K>
void validate_configuration(const NodalConfiguration<K>& cfg);

// N x 35 evaluation matrix of the cubic monomials at the normalized nodes.
template <class K>
Matrix<K> cubic_condition_matrix(const NodalConfiguration<K>& cfg);

// Exact rank by fraction-free (Bareiss) elimination after clearing row
// denominators; works over Rational and Eisenstein entries.
template <class K>
int exact_rank(Matrix<K> m);

// Rank by singular values: count of sigma_i > tol * sigma_max.
int float_rank(const Matrix<double>& m, double tol);

struct NodalDefect {
  std::int64_t n = 0;
  std::int64_t rank = 0;
  std::int64_t defect = 0;  // n - rank
};

template <class K>
NodalDefect nodal_defect(const NodalConfiguration<K>& cfg);
NodalDefect nodal_defect_float(const NodalConfiguration<double>& cfg, double tol);

// max(0, N - 30): nodes beyond half of b_3 of a smooth quartic force defect.
std::int64_t defect_lower_bound(std::int64_t n);

struct BettiBookkeeping {
  std::int64_t b3_y;          // 60 + sigma - N
  std::int64_t b2_small_res;  // b2(Y) + sigma
  std::int64_t b2_blowup;     // b2_small_res + N
};

// Throws negative_betti when 60 + sigma - N < 0.
BettiBookkeeping betti_bookkeeping(std::int64_t n, std::int64_t sigma, std::int64_t b2y);

// sigma = b3(resolution) - b3(Y) + sum of analytic local defects.
std::int64_t defect_from_resolution(std::int64_t b3_tilde, std::int64_t b3_y,
                                    std::int64_t sigma_an_sum);

struct NodeReport {
  bool on_hypersurface = false;  // f = 0
  bool critical = false;         // all five partials vanish
  bool ordinary = false;         // Hessian rank 4
};

// Requires cfg.quartic (missing_polynomial otherwise).  Exact Hessian rank
// in Rational/Eisenstein instantiations.
template <class K>
std::vector<NodeReport> verify_nodes(const NodalConfiguration<K>& cfg);
std::vector<NodeReport> verify_nodes_float(const NodalConfiguration<double>& cfg, double tol);

// The 45-node configuration of the unique maximally nodal quartic,
// over Q(w), with its defining polynomial (embedded fixture).
NodalConfiguration<Eisenstein> burkhardt_configuration();
extern const char* const kBurkhardtPolynomialText;

}  // namespace fano3

#endif
