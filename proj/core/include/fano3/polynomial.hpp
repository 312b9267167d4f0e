#ifndef FANO3_POLYNOMIAL_HPP
#define FANO3_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "fano3/numeric.hpp"

namespace fano3 {

// Exponent vector of a monomial in x0..x4.
using Exponents = std::array<int, 5>;

// Sparse multivariate polynomial over a field K (Rational, Eisenstein or
// double).  K needs +, -, *, == and is_zero-like semantics via K{} == k.
template <class K>
class Polynomial {
public:
  using Terms = std::map<Exponents, K>;

  Polynomial() = default;

  static Polynomial constant(K c) {
    Polynomial p;
    p.add_term(Exponents{0, 0, 0, 0, 0}, std::move(c));
    return p;
  }
  static Polynomial variable(int i, int power = 1) {
    Polynomial p;
    Exponents e{0, 0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = power;
    p.add_term(e, K(1));
    return p;
  }

  void add_term(const Exponents& e, K c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!(c == K{})) terms_.emplace(e, std::move(c));
      return;
    }
    it->second = it->second + c;
    if (it->second == K{}) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, K{} - c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e;
        for (int i = 0; i < 5; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  // true iff nonzero and every monomial has total degree exactly d
  bool is_homogeneous_of_degree(int d) const {
    if (terms_.empty()) return false;
    for (const auto& [e, c] : terms_)
      if (e[0] + e[1] + e[2] + e[3] + e[4] != d) return false;
    return true;
  }

  K evaluate(const std::array<K, 5>& x) const {
    K acc{};
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (int i = 0; i < 5; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * x[static_cast<std::size_t>(i)];
      acc = acc + t;
    }
    return acc;
  }

  Polynomial partial(int var) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      r.add_term(d, c * K(e[var]));
    }
    return r;
  }

  template <class L, class F>
  Polynomial<L> map_coefficients(F&& f) const {
    Polynomial<L> r;
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

private:
  Terms terms_;
};

// Parses the hypersurface input grammar over variables x0..x4:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | var ('^' int)? | '(' expr ')'
// with integer or rational ("p/q") coefficients.  Accepts exactly nonzero
// homogeneous polynomials of degree 4; anything else raises parse_error
// with a 1-based line/column position.
Polynomial<Rational> parse_quartic(std::string_view text);

// Same grammar without the degree restriction (used by tests).
Polynomial<Rational> parse_polynomial(std::string_view text);

}  // namespace fano3

#endif
