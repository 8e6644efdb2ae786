#include "ptq/rational.hpp"

#include <stdexcept>

namespace ptq {

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den.is_negative()) {
    num = -num;
    den = -den;
  }
  BigInt g = BigInt::gcd(num, den);
  if (!g.is_zero() && g != BigInt(1)) {
    num = num / g;
    den = den / g;
  }
  if (num.is_zero()) den = BigInt(1);
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(text), BigInt(1));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& r) const {
  return Rational(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
}

Rational Rational::operator-(const Rational& r) const {
  return Rational(num_ * r.den_ - r.num_ * den_, den_ * r.den_);
}

Rational Rational::operator*(const Rational& r) const {
  return Rational(num_ * r.num_, den_ * r.den_);
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

std::strong_ordering Rational::operator<=>(const Rational& r) const {
  return (num_ * r.den_) <=> (r.num_ * den_);
}

bool Rational::operator==(const Rational& r) const {
  return num_ == r.num_ && den_ == r.den_;
}

Rational Rational::midpoint(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_ * BigInt(2));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace ptq
