#include "fano3/nodal.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace fano3 {

namespace mp = boost::multiprecision;

const std::vector<Exponents>& cubic_monomials() {
  static const std::vector<Exponents> mons = [] {
    std::vector<Exponents> v;
    for (int e0 = 3; e0 >= 0; --e0)
      for (int e1 = 3 - e0; e1 >= 0; --e1)
        for (int e2 = 3 - e0 - e1; e2 >= 0; --e2)
          for (int e3 = 3 - e0 - e1 - e2; e3 >= 0; --e3)
            v.push_back({e0, e1, e2, e3, 3 - e0 - e1 - e2 - e3});
    return v;
  }();
  return mons;
}

namespace {

template <class K>
bool k_is_zero(const K& v) {
  return v == K{};
}
bool k_is_zero(const double& v) { return v == 0.0; }

// least common multiple of the denominators appearing in one entry
BigInt denominator_lcm(const Rational& r) { return r.den(); }
BigInt denominator_lcm(const Eisenstein& e) {
  return mp::lcm(e.re().den(), e.wc().den());
}

template <class K>
K from_bigint(const BigInt& n) {
  return K(Rational(n));
}

}  // namespace

template <class K>
std::array<K, 5> normalize_point(const std::array<K, 5>& p) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (!k_is_zero(p[i])) {
      std::array<K, 5> out;
      for (std::size_t j = 0; j < 5; ++j) out[j] = p[j] / p[i];
      return out;
    }
  }
  throw solver_error(errc::zero_point, "projective point with all coordinates zero");
}

template <class K>
void validate_configuration(const NodalConfiguration<K>& cfg) {
  std::vector<std::array<K, 5>> seen;
  for (const auto& p : cfg.nodes) {
    auto n = normalize_point(p);
    for (const auto& q : seen)
      if (n == q)
        throw solver_error(errc::zero_point, "projectively repeated node in configuration");
    seen.push_back(std::move(n));
  }
  if (cfg.quartic && !cfg.quartic->is_homogeneous_of_degree(4))
    throw solver_error(errc::missing_polynomial, "quartic must be homogeneous of degree 4");
}

template <class K>
Matrix<K> cubic_condition_matrix(const NodalConfiguration<K>& cfg) {
  Matrix<K> m;
  m.reserve(cfg.nodes.size());
  for (const auto& p : cfg.nodes) {
    const auto q = normalize_point(p);
    std::vector<K> row;
    row.reserve(cubic_monomials().size());
    for (const auto& e : cubic_monomials()) {
      K v(1);
      for (int i = 0; i < 5; ++i)
        for (int k = 0; k < e[i]; ++k) v = v * q[static_cast<std::size_t>(i)];
      row.push_back(std::move(v));
    }
    m.push_back(std::move(row));
  }
  return m;
}

template <class K>
int exact_rank(Matrix<K> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();

  // clear denominators row-wise so Bareiss stays fraction-free
  for (auto& row : m) {
    BigInt l = 1;
    for (const auto& v : row) l = mp::lcm(l, denominator_lcm(v));
    if (l != 1) {
      const K f = from_bigint<K>(l);
      for (auto& v : row) v = v * f;
    }
  }

  std::size_t r = 0;
  K prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && k_is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = K{};
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int float_rank(const Matrix<double>& m, double tol) {
  if (m.empty()) return 0;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.size()),
                    static_cast<Eigen::Index>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank;
}

template <class K>
NodalDefect nodal_defect(const NodalConfiguration<K>& cfg) {
  validate_configuration(cfg);
  const auto m = cubic_condition_matrix(cfg);
  NodalDefect d;
  d.n = static_cast<std::int64_t>(cfg.nodes.size());
  d.rank = exact_rank(m);
  d.defect = d.n - d.rank;
  return d;
}

NodalDefect nodal_defect_float(const NodalConfiguration<double>& cfg, double tol) {
  validate_configuration(cfg);
  const auto m = cubic_condition_matrix(cfg);
  NodalDefect d;
  d.n = static_cast<std::int64_t>(cfg.nodes.size());
  d.rank = float_rank(m, tol);
  d.defect = d.n - d.rank;
  return d;
}

std::int64_t defect_lower_bound(std::int64_t n) { return std::max<std::int64_t>(0, n - 30); }

BettiBookkeeping betti_bookkeeping(std::int64_t n, std::int64_t sigma, std::int64_t b2y) {
  const std::int64_t b3 = 60 + sigma - n;
  if (b3 < 0)
    throw solver_error(errc::negative_betti,
                       "b3 = 60 + sigma - N is negative: inconsistent quartic data");
  return {b3, b2y + sigma, b2y + sigma + n};
}

std::int64_t defect_from_resolution(std::int64_t b3_tilde, std::int64_t b3_y,
                                    std::int64_t sigma_an_sum) {
  return b3_tilde - b3_y + sigma_an_sum;
}

namespace {

template <class K, class RankFn>
std::vector<NodeReport> verify_nodes_impl(const NodalConfiguration<K>& cfg, RankFn&& rank_of) {
  if (!cfg.quartic)
    throw solver_error(errc::missing_polynomial, "node verification needs a quartic");
  const auto& f = *cfg.quartic;
  std::array<Polynomial<K>, 5> grad;
  for (int i = 0; i < 5; ++i) grad[static_cast<std::size_t>(i)] = f.partial(i);
  std::array<std::array<Polynomial<K>, 5>, 5> hess;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          grad[static_cast<std::size_t>(i)].partial(j);

  std::vector<NodeReport> out;
  out.reserve(cfg.nodes.size());
  for (const auto& p : cfg.nodes) {
    NodeReport rep;
    rep.on_hypersurface = k_is_zero(f.evaluate(p));
    rep.critical = true;
    for (int i = 0; i < 5; ++i)
      rep.critical = rep.critical && k_is_zero(grad[static_cast<std::size_t>(i)].evaluate(p));
    Matrix<K> h(5, std::vector<K>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].evaluate(p);
    rep.ordinary = (rank_of(h) == 4);
    out.push_back(rep);
  }
  return out;
}

}  // namespace

template <class K>
std::vector<NodeReport> verify_nodes(const NodalConfiguration<K>& cfg) {
  return verify_nodes_impl(cfg, [](const Matrix<K>& h) { return exact_rank(h); });
}

std::vector<NodeReport> verify_nodes_float(const NodalConfiguration<double>& cfg, double tol) {
  return verify_nodes_impl(cfg, [tol](const Matrix<double>& h) { return float_rank(h, tol); });
}

// explicit instantiations for the two exact fields
template std::array<Rational, 5> normalize_point(const std::array<Rational, 5>&);
template std::array<Eisenstein, 5> normalize_point(const std::array<Eisenstein, 5>&);
template std::array<double, 5> normalize_point(const std::array<double, 5>&);
template void validate_configuration(const NodalConfiguration<Rational>&);
template void validate_configuration(const NodalConfiguration<Eisenstein>&);
template void validate_configuration(const NodalConfiguration<double>&);
template Matrix<Rational> cubic_condition_matrix(const NodalConfiguration<Rational>&);
template Matrix<Eisenstein> cubic_condition_matrix(const NodalConfiguration<Eisenstein>&);
template Matrix<double> cubic_condition_matrix(const NodalConfiguration<double>&);
template int exact_rank(Matrix<Rational>);
template int exact_rank(Matrix<Eisenstein>);
template NodalDefect nodal_defect(const NodalConfiguration<Rational>&);
template NodalDefect nodal_defect(const NodalConfiguration<Eisenstein>&);
template std::vector<NodeReport> verify_nodes(const NodalConfiguration<Rational>&);
template std::vector<NodeReport> verify_nodes(const NodalConfiguration<Eisenstein>&);

}  // namespace fano3
