#include "ptq/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ptq {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on INT64_MIN.
  std::uint64_t u = v < 0 ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
  if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt BigInt::from_u64(std::uint64_t v) {
  BigInt r;
  if (v == 0) return r;
  r.sign_ = 1;
  r.mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
  if (v >> 32) r.mag_.push_back(static_cast<std::uint32_t>(v >> 32));
  return r;
}

BigInt::BigInt(std::string_view s) {
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt acc;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
    acc = acc * BigInt(10) + BigInt(c - '0');
  }
  *this = std::move(acc);
  if (neg && sign_ != 0) sign_ = -1;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> out;
  out.reserve(hi.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (sign_ == 0) return rhs;
  if (rhs.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == rhs.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, rhs.mag_);
    return r;
  }
  int c = cmp_mag(mag_, rhs.mag_);
  if (c == 0) return r;
  if (c > 0) {
    r.sign_ = sign_;
    r.mag_ = sub_mag(mag_, rhs.mag_);
  } else {
    r.sign_ = rhs.sign_;
    r.mag_ = sub_mag(rhs.mag_, mag_);
  }
  return r;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  BigInt r;
  if (sign_ == 0 || rhs.sign_ == 0) return r;
  r.sign_ = sign_ * rhs.sign_;
  r.mag_.assign(mag_.size() + rhs.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
      std::uint64_t cur = r.mag_[i + j] +
                          static_cast<std::uint64_t>(mag_[i]) * rhs.mag_[j] + carry;
      r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.mag_.size();
    while (carry) {
      std::uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

std::size_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  std::uint32_t top = mag_.back();
  std::size_t bits = (mag_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= mag_.size()) return false;
  return (mag_[limb] >> (i % 32)) & 1u;
}

BigInt BigInt::shl(unsigned bits) const {
  if (sign_ == 0 || bits == 0) return *this;
  BigInt r;
  r.sign_ = sign_;
  unsigned limbs = bits / 32, rem = bits % 32;
  r.mag_.assign(limbs, 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t v = (static_cast<std::uint64_t>(mag_[i]) << rem) | carry;
    r.mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    carry = rem ? static_cast<std::uint32_t>(v >> 32) : 0;
  }
  if (carry) r.mag_.push_back(carry);
  r.trim();
  return r;
}

BigInt BigInt::shr(unsigned bits) const {
  if (sign_ == 0) return *this;
  unsigned limbs = bits / 32, rem = bits % 32;
  if (limbs >= mag_.size()) return BigInt();
  BigInt r;
  r.sign_ = sign_;
  r.mag_.assign(mag_.begin() + limbs, mag_.end());
  if (rem) {
    std::uint32_t carry = 0;
    for (std::size_t i = r.mag_.size(); i-- > 0;) {
      std::uint32_t cur = r.mag_[i];
      r.mag_[i] = (cur >> rem) | carry;
      carry = cur << (32 - rem);
    }
  }
  r.trim();
  return r;
}

BigIntDivMod BigInt::divmod(const BigInt& divisor) const {
  if (divisor.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  BigIntDivMod out;
  int c = cmp_mag(mag_, divisor.mag_);
  if (sign_ == 0 || c < 0) {
    out.rem = *this;
    return out;
  }
  // Bitwise long division on magnitudes.
  BigInt rem;
  BigInt quot;
  quot.mag_.assign(mag_.size(), 0);
  BigInt dabs = divisor.abs();
  for (std::size_t i = bit_length(); i-- > 0;) {
    rem = rem.shl(1);
    if (bit(i)) {
      if (rem.sign_ == 0) {
        rem.sign_ = 1;
        rem.mag_.push_back(1);
      } else {
        rem.mag_[0] |= 1u;
      }
    }
    if (cmp_mag(rem.mag_, dabs.mag_) >= 0) {
      rem.mag_ = sub_mag(rem.mag_, dabs.mag_);
      rem.trim();
      if (!rem.mag_.empty()) rem.sign_ = 1;
      quot.mag_[i / 32] |= (1u << (i % 32));
    }
  }
  quot.sign_ = 1;
  quot.trim();
  rem.trim();
  out.quot = quot;
  out.rem = rem;
  if (out.quot.sign_ != 0) out.quot.sign_ = sign_ * divisor.sign_;
  if (out.rem.sign_ != 0) out.rem.sign_ = sign_;
  return out;
}

BigInt BigInt::operator/(const BigInt& rhs) const { return divmod(rhs).quot; }
BigInt BigInt::operator%(const BigInt& rhs) const { return divmod(rhs).rem; }

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int c = cmp_mag(mag_, rhs.mag_) * (sign_ == 0 ? 0 : sign_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Binary gcd: no division needed.
  unsigned shift = 0;
  while (a.is_even() && b.is_even()) {
    a = a.shr(1);
    b = b.shr(1);
    ++shift;
  }
  while (a.is_even()) a = a.shr(1);
  while (!b.is_zero()) {
    while (b.is_even()) b = b.shr(1);
    if (a > b) std::swap(a, b);
    b = b - a;
  }
  return a.shl(shift);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string digits;
  BigInt cur = abs();
  const BigInt chunk(1000000000);
  while (!cur.is_zero()) {
    auto dm = cur.divmod(chunk);
    std::uint64_t part = dm.rem.is_zero() ? 0 : dm.rem.to_u64();
    cur = dm.quot;
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + part % 10));
      part /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool BigInt::fits_u64() const {
  return sign_ >= 0 && mag_.size() <= 2;
}

std::uint64_t BigInt::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigInt: does not fit u64");
  std::uint64_t v = 0;
  if (mag_.size() > 1) v = static_cast<std::uint64_t>(mag_[1]) << 32;
  if (!mag_.empty()) v |= mag_[0];
  return v;
}

}  // namespace ptq
