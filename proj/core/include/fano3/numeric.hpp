#ifndef FANO3_NUMERIC_HPP
#define FANO3_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace fano3 {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts; always reduced,
// denominator positive.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;
  double to_double() const;
  std::string str() const;  // "p" or "p/q"

private:
  void normalize();
  BigInt num_, den_;
};

// Element of Q(w) with w^2 + w + 1 = 0 (primitive cube root of unity):
// a + b*w.  Multiplication rewrites w^2 = -1 - w.
class Eisenstein {
public:
  Eisenstein() = default;
  Eisenstein(long long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Eisenstein(Rational a) : a_(std::move(a)) {}
  Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Eisenstein omega() { return Eisenstein(Rational(0), Rational(1)); }

  const Rational& re() const { return a_; }   // coefficient of 1
  const Rational& wc() const { return b_; }   // coefficient of w
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Eisenstein operator-() const { return Eisenstein(-a_, -b_); }
  Eisenstein& operator+=(const Eisenstein& o);
  Eisenstein& operator-=(const Eisenstein& o);
  Eisenstein& operator*=(const Eisenstein& o);
  Eisenstein& operator/=(const Eisenstein& o);

  friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
  friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
  friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
  friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }
  friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
    return a.a_ == b.a_ && a.b_ == b.b_;
  }

  // field norm a^2 - a b + b^2 (> 0 unless zero)
  Rational norm() const;
  Eisenstein inverse() const;
  std::string str() const;  // "p/q", "r/s*w" or "p/q+r/s*w"

private:
  Rational a_, b_;
};

}  // namespace fano3

#endif
