#ifndef PTQ_TESTS_ORACLE_ORDINAL_HPP
#define PTQ_TESTS_ORACLE_ORDINAL_HPP

// Order-type oracle for ordinals below omega^4, built on the explicit
// lexicographic well-order on quadruples of naturals. An ordinal
// w^3*a + w^2*b + w*c + d is the order L_A of quadruples lex-below
// A = (a,b,c,d). Sums of such orders are concatenations of segments;
// Cantor coefficients are read off by repeatedly passing to the set of
// limit elements and counting the finite top block. This never consults
// the CNF term arithmetic it is used to check.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ptq/ordinal.hpp"

namespace ptq::testing {

using Quad = std::array<std::uint64_t, 4>;  // (c3, c2, c1, c0)

// L_C minus `drop` bottom elements, a contiguous block of a concatenation.
struct Segment {
  Quad bound;
  std::uint64_t drop = 0;
};

inline bool seg_infinite(const Segment& s) {
  return s.bound[0] | s.bound[1] | s.bound[2];
}

inline bool seg_empty(const Segment& s) {
  if (seg_infinite(s)) return false;
  return s.bound[3] <= s.drop;
}

// L_C has a maximum exactly when the last coordinate is positive.
inline bool seg_has_max(const Segment& s) { return s.bound[3] > 0; }

// Size of the finite tail after the last limit element.
inline std::uint64_t top_count(const std::vector<Segment>& segs) {
  std::uint64_t acc = 0;
  for (std::size_t i = segs.size(); i-- > 0;) {
    const Segment& s = segs[i];
    if (seg_empty(s)) continue;
    if (seg_infinite(s)) {
      acc += s.bound[3];
      return acc;
    }
    acc += s.bound[3] - s.drop;
  }
  return acc;
}

inline bool any_infinite(const std::vector<Segment>& segs) {
  for (const auto& s : segs) {
    if (!seg_empty(s) && seg_infinite(s)) return true;
  }
  return false;
}

// The limit elements of the concatenation, again as a concatenation.
// Within one segment the limits are the elements ending in 0 (excluding the
// segment minimum), which form a shifted lex order; the minimum of a later
// segment is a limit exactly when everything before it is nonempty with no
// maximum.
inline std::vector<Segment> derivative(const std::vector<Segment>& segs) {
  std::vector<Segment> out;
  const Segment* last_nonempty_prev = nullptr;
  for (const auto& s : segs) {
    if (seg_empty(s)) continue;
    if (last_nonempty_prev && !seg_has_max(*last_nonempty_prev)) {
      out.push_back(Segment{{0, 0, 0, 1}, 0});
    }
    Segment inner;
    inner.bound = {0, s.bound[0], s.bound[1], s.bound[2] + (s.bound[3] > 0 ? 1 : 0)};
    inner.drop = 1;
    if (!seg_empty(inner)) out.push_back(inner);
    last_nonempty_prev = &s;
  }
  return out;
}

// Cantor coefficients of the order (segments) + 1, i.e. of the closure.
inline Quad classify(std::vector<Segment> segs) {
  segs.push_back(Segment{{0, 0, 0, 1}, 0});
  Quad result{0, 0, 0, 0};
  for (int level = 0; level < 4; ++level) {
    std::uint64_t count = top_count(segs);
    bool infinite = any_infinite(segs);
    std::uint64_t coeff;
    if (level == 0) {
      coeff = count - 1;  // the closure point itself
    } else {
      coeff = infinite ? count - 1 : count;
    }
    result[3 - level] = coeff;
    segs = derivative(segs);
  }
  if (!segs.empty() && top_count(segs) > 0) {
    throw std::overflow_error("ordinal oracle: order type is omega^4 or larger");
  }
  return result;
}

inline Quad oracle_add(const Quad& a, const Quad& b) {
  return classify({Segment{a, 0}, Segment{b, 0}});
}

inline int oracle_cmp(const Quad& a, const Quad& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// Conversions between quadruples and STANDARD terms with natural exponents.
inline OrdTerm quad_to_term(const Quad& q) {
  std::vector<OrdTerm::Part> parts;
  for (int i = 0; i < 4; ++i) {
    if (q[i]) parts.push_back({ExpElem::nat(static_cast<std::uint64_t>(3 - i)), q[i]});
  }
  return OrdTerm::make(OrderKind::Standard, std::move(parts));
}

inline Quad term_to_quad(const OrdTerm& t) {
  Quad q{0, 0, 0, 0};
  for (const auto& p : t.parts()) {
    if (p.exponent.kind() != ExpElem::Kind::Nat || p.exponent.nat_value() > 3) {
      throw std::invalid_argument("ordinal oracle: term outside omega^4");
    }
    q[3 - p.exponent.nat_value()] = p.coefficient;
  }
  return q;
}

}  // namespace ptq::testing

#endif
