#include "fano3/numeric.hpp"

#include <stdexcept>

namespace fano3 {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r(*this);
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("inverse of zero");
  return Rational(den_, num_);
}

double Rational::to_double() const {
  return static_cast<double>(mp::cpp_rational(num_, den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
  // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
  const Rational ac = a_ * o.a_;
  const Rational bd = b_ * o.b_;
  const Rational mixed = a_ * o.b_ + b_ * o.a_;
  a_ = ac - bd;
  b_ = mixed - bd;
  return *this;
}

Rational Eisenstein::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Eisenstein Eisenstein::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // conjugate a + b w^2 = (a - b) - b w, norm = a^2 - ab + b^2
  const Rational n = norm();
  return Eisenstein((a_ - b_) / n, (-b_) / n);
}

Eisenstein& Eisenstein::operator/=(const Eisenstein& o) { return *this *= o.inverse(); }

std::string Eisenstein::str() const {
  if (b_.is_zero()) return a_.str();
  const std::string wpart = b_.str() + "*w";
  if (a_.is_zero()) return wpart;
  if (b_ > Rational(0)) return a_.str() + "+" + wpart;
  return a_.str() + wpart;  // the w coefficient carries its own sign
}

}  // namespace fano3
