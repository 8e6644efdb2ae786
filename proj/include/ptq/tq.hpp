#ifndef PTQ_TQ_HPP
#define PTQ_TQ_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptq/rational.hpp"

namespace ptq {

// One constant piece of a step function: value `value` on the half-open
// interval reaching up to (and including) `right_endpoint`. The left end of
// the first piece is unbounded below.
struct TqPiece {
  Rational right_endpoint;
  std::uint64_t value = 0;

  bool operator==(const TqPiece& o) const {
    return value == o.value && right_endpoint == o.right_endpoint;
  }
};

// Element of the universal countable pseudotree: a finite-step partial
// function from an initial segment of the rationals to the naturals, ordered
// by extension. Canonical form: endpoints strictly increasing, adjacent
// pieces carry distinct values, and the empty piece list is the root.
class TqElement {
 public:
  TqElement() = default;

  // Validates strictly increasing endpoints and merges adjacent equal values.
  static TqElement from_pieces(std::vector<TqPiece> pieces);

  static TqElement root() { return TqElement(); }

  bool is_root() const { return pieces_.empty(); }
  const std::vector<TqPiece>& pieces() const { return pieces_; }

  // Largest point of the domain; nullopt for the root.
  std::optional<Rational> max_dom() const;

  // Restriction of this element to (-inf, cut]. Requires cut <= max_dom.
  TqElement truncate(const Rational& cut) const;

  // Value on the interval immediately to the right of `cut`; requires the
  // domain to extend strictly beyond cut.
  std::uint64_t value_after(const Rational& cut) const;

  bool operator==(const TqElement& o) const { return pieces_ == o.pieces_; }

  // Structural order, used only for map keys and deterministic sorting;
  // unrelated to the pseudotree order.
  std::strong_ordering operator<=>(const TqElement& o) const;

  // "[]" for the root, else "[(num/den:val),...]" with reduced fractions.
  std::string to_string() const;
  static TqElement parse(std::string_view text);

 private:
  std::vector<TqPiece> pieces_;
};

// Extension order: f <= g iff g restricted to f's domain equals f.
bool tq_leq(const TqElement& f, const TqElement& g);

// Longest common restriction of f and g; their infimum.
TqElement tq_meet(const TqElement& f, const TqElement& g);

// Density witness: some h with g < h < f. Requires g < f. The cut is chosen
// deterministically: halfway between max_dom(g) and the first breakpoint of
// f beyond it, or max_dom(f) - 1 when g is the root.
TqElement tq_between(const TqElement& g, const TqElement& f);

// Splitting witness: given f_i > g with pairwise meets equal to g, returns
// f_n > g with tq_meet(f_i, f_n) == g for all i. Deterministic: extends g by
// one piece of width 1 carrying the least value unused immediately past
// max_dom(g) by any f_i.
TqElement tq_split(const TqElement& g, const std::vector<TqElement>& family);

// Computable bijection between the naturals and canonical elements, ordered
// by total encoding size (piece count plus encoded endpoint/value weights).
// tq_enumerate(0) is the root.
TqElement tq_enumerate(std::uint64_t index);
BigInt tq_index(const TqElement& f);

}  // namespace ptq

#endif
