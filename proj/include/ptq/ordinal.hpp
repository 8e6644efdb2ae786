#ifndef PTQ_ORDINAL_HPP
#define PTQ_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptq/rational.hpp"

namespace ptq {

class OrdTerm;

// The two shipped exponent orders. STANDARD exponents are terms again
// (nesting bounded), every element standard: true ordinals below epsilon_0.
// CUT exponents are the naturals followed by a dense, endpoint-free copy of
// the rationals tagged non-standard: a toy model of an ill-founded omega_1.
enum class OrderKind { Standard, Cut };

// An element of an exponent order.
class ExpElem {
 public:
  enum class Kind { Nat, NonStdRat, Nested };

  ExpElem() = default;

  static ExpElem nat(std::uint64_t n);
  // A rational lying above every natural in the CUT order.
  static ExpElem nonstd(Rational r);
  // A term exponent in the STANDARD order; pure constants normalize to Nat.
  static ExpElem nested(OrdTerm t);

  Kind kind() const { return kind_; }
  bool standard() const { return kind_ != Kind::NonStdRat; }
  std::uint64_t nat_value() const { return nat_; }
  const Rational& rat_value() const { return rat_; }
  const OrdTerm& nested_term() const { return *nested_; }

  bool is_zero() const { return kind_ == Kind::Nat && nat_ == 0; }

 private:
  Kind kind_ = Kind::Nat;
  std::uint64_t nat_ = 0;
  Rational rat_;
  std::shared_ptr<const OrdTerm> nested_;
};

std::strong_ordering exp_cmp(const ExpElem& a, const ExpElem& b);
bool exp_eq(const ExpElem& a, const ExpElem& b);

// Strictly between two non-standard CUT exponents.
ExpElem exp_between(const ExpElem& lo, const ExpElem& hi);
// Below the given non-standard CUT exponent, still non-standard.
ExpElem exp_predecessor_unbounded(const ExpElem& e);

// Cantor-normal-form term: a finite descending sum of omega-powers with
// positive coefficients. The constant part is the term with exponent zero.
class OrdTerm {
 public:
  struct Part {
    ExpElem exponent;
    std::uint64_t coefficient = 1;
  };

  static constexpr std::uint64_t kDefaultMaxDepth = 3;

  OrdTerm() = default;  // zero over STANDARD

  // Validates strictly decreasing exponents, positive coefficients,
  // exponent kinds admissible for the order, and nesting depth.
  static OrdTerm make(OrderKind order, std::vector<Part> parts,
                      std::uint64_t max_depth = kDefaultMaxDepth);
  static OrdTerm zero(OrderKind order);
  static OrdTerm from_nat(OrderKind order, std::uint64_t n);
  static OrdTerm omega_power(OrderKind order, ExpElem exponent, std::uint64_t coefficient = 1);

  OrderKind order() const { return order_; }
  const std::vector<Part>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  // Nonzero with a constant part.
  bool is_successor() const;
  // Requires a successor; the term with the constant decremented.
  OrdTerm predecessor() const;
  // True when the term is a plain natural.
  bool is_finite() const;
  std::uint64_t to_nat() const;

  // Nesting depth: 0 for zero, else 1 beyond the deepest nested exponent.
  std::uint64_t depth() const;

  std::string to_string() const;

 private:
  OrderKind order_ = OrderKind::Standard;
  std::vector<Part> parts_;
};

std::strong_ordering ord_cmp(const OrdTerm& a, const OrdTerm& b);
bool ord_eq(const OrdTerm& a, const OrdTerm& b);

// CNF addition: terms of a below b's lead are absorbed.
OrdTerm ord_add(const OrdTerm& a, const OrdTerm& b);

// The c with a + c == b; requires a <= b.
OrdTerm ord_sub(const OrdTerm& a, const OrdTerm& b);

struct OrdSplit {
  OrdTerm nonstandard;  // terms whose exponents lie above the cut
  OrdTerm standard;     // terms with standard exponents
};

// Splits a into its non-standard and standard blocks; their sum is a.
OrdSplit split(const OrdTerm& a);

// A pure term strictly between two pure terms of the CUT order (pure: no
// standard-exponent part). Rejects non-pure input, a >= b, and orders
// without density below the relevant exponent.
OrdTerm dense_between(const OrdTerm& a, const OrdTerm& b);

// Fundamental sequence of a limit term over STANDARD: increasing with
// supremum alpha; term k is used as the rank of the k-th child of a
// canonical limit-rank tree.
OrdTerm fundamental_sequence(const OrdTerm& alpha, std::uint64_t k);

// Syntax: "w^{3/2'}*2 + w^{4} + 5"; a prime marks non-standard exponents,
// braces may hold a nested term in the STANDARD order. The order is
// inferred (any prime means CUT) unless forced.
OrdTerm parse_ord_term(std::string_view text, std::optional<OrderKind> force = std::nullopt);

}  // namespace ptq

#endif
