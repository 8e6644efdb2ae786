#ifndef PTQ_BIGINT_HPP
#define PTQ_BIGINT_HPP

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ptq {

struct BigIntDivMod;

// Sign-magnitude arbitrary-precision integer. Supports exactly the operations
// the rational layer needs: ring arithmetic, divmod, gcd, decimal I/O.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);
  explicit BigInt(std::string_view decimal);

  static BigInt from_u64(std::uint64_t v);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;

  BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
  BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

  // Truncated division (quotient rounds toward zero, remainder has the
  // dividend's sign). Divisor must be nonzero.
  BigIntDivMod divmod(const BigInt& divisor) const;
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  BigInt shl(unsigned bits) const;
  BigInt shr(unsigned bits) const;

  std::strong_ordering operator<=>(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const;

  // gcd of absolute values; gcd(0,0) = 0.
  static BigInt gcd(BigInt a, BigInt b);

  std::string to_string() const;

  // Value as u64 if it fits and is nonnegative.
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

 private:
  int sign_ = 0;                   // -1, 0, +1
  std::vector<std::uint32_t> mag_; // little-endian base 2^32, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

struct BigIntDivMod {
  BigInt quot;
  BigInt rem;
};

}  // namespace ptq

#endif
