#ifndef PTQ_RATIONAL_HPP
#define PTQ_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "ptq/bigint.hpp"

namespace ptq {

// Exact fraction, always stored fully reduced with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(BigInt num, BigInt den);

  // Parses "n" or "n/d".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == BigInt(1); }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator+(const Rational& r) const;
  Rational operator-(const Rational& r) const;
  Rational operator*(const Rational& r) const;
  Rational operator-() const;

  std::strong_ordering operator<=>(const Rational& r) const;
  bool operator==(const Rational& r) const;

  static Rational midpoint(const Rational& a, const Rational& b);

  // "n" when integral, else "n/d".
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace ptq

#endif
