#include "ptq/ordinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptq {

ExpElem ExpElem::nat(std::uint64_t n) {
  ExpElem e;
  e.kind_ = Kind::Nat;
  e.nat_ = n;
  return e;
}

ExpElem ExpElem::nonstd(Rational r) {
  ExpElem e;
  e.kind_ = Kind::NonStdRat;
  e.rat_ = std::move(r);
  return e;
}

ExpElem ExpElem::nested(OrdTerm t) {
  if (t.is_finite()) return nat(t.to_nat());
  if (t.order() != OrderKind::Standard) {
    throw std::invalid_argument("ExpElem::nested: nested exponents are STANDARD-only");
  }
  ExpElem e;
  e.kind_ = Kind::Nested;
  e.nested_ = std::make_shared<const OrdTerm>(std::move(t));
  return e;
}

std::strong_ordering exp_cmp(const ExpElem& a, const ExpElem& b) {
  using K = ExpElem::Kind;
  // Non-standard exponents lie above every standard one.
  bool ans = a.kind() == K::NonStdRat;
  bool bns = b.kind() == K::NonStdRat;
  if (ans != bns) return ans ? std::strong_ordering::greater : std::strong_ordering::less;
  if (ans) return a.rat_value() <=> b.rat_value();
  if (a.kind() == K::Nat && b.kind() == K::Nat) return a.nat_value() <=> b.nat_value();
  // Nested terms are never pure constants, so they dominate naturals.
  if (a.kind() == K::Nat) return std::strong_ordering::less;
  if (b.kind() == K::Nat) return std::strong_ordering::greater;
  return ord_cmp(a.nested_term(), b.nested_term());
}

bool exp_eq(const ExpElem& a, const ExpElem& b) { return exp_cmp(a, b) == 0; }

ExpElem exp_between(const ExpElem& lo, const ExpElem& hi) {
  if (lo.standard() || hi.standard() || !(exp_cmp(lo, hi) < 0)) {
    throw std::invalid_argument("exp_between: needs non-standard lo < hi");
  }
  return ExpElem::nonstd(Rational::midpoint(lo.rat_value(), hi.rat_value()));
}

ExpElem exp_predecessor_unbounded(const ExpElem& e) {
  if (e.standard()) {
    throw std::invalid_argument("exp_predecessor_unbounded: needs a non-standard exponent");
  }
  return ExpElem::nonstd(e.rat_value() - Rational(1));
}

OrdTerm OrdTerm::make(OrderKind order, std::vector<Part> parts, std::uint64_t max_depth) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].coefficient == 0) {
      throw std::invalid_argument("OrdTerm: zero coefficient");
    }
    if (i > 0 && !(exp_cmp(parts[i].exponent, parts[i - 1].exponent) < 0)) {
      throw std::invalid_argument("OrdTerm: exponents not strictly decreasing");
    }
    switch (parts[i].exponent.kind()) {
      case ExpElem::Kind::Nat:
        break;
      case ExpElem::Kind::NonStdRat:
        if (order != OrderKind::Cut) {
          throw std::invalid_argument("OrdTerm: non-standard exponent in STANDARD order");
        }
        break;
      case ExpElem::Kind::Nested:
        if (order != OrderKind::Standard) {
          throw std::invalid_argument("OrdTerm: nested exponent in CUT order");
        }
        break;
    }
  }
  OrdTerm t;
  t.order_ = order;
  t.parts_ = std::move(parts);
  if (t.depth() > max_depth) {
    throw std::invalid_argument("OrdTerm: nesting depth exceeds limit");
  }
  return t;
}

OrdTerm OrdTerm::zero(OrderKind order) {
  OrdTerm t;
  t.order_ = order;
  return t;
}

OrdTerm OrdTerm::from_nat(OrderKind order, std::uint64_t n) {
  if (n == 0) return zero(order);
  return make(order, {{ExpElem::nat(0), n}});
}

OrdTerm OrdTerm::omega_power(OrderKind order, ExpElem exponent, std::uint64_t coefficient) {
  return make(order, {{std::move(exponent), coefficient}});
}

bool OrdTerm::is_successor() const {
  return !parts_.empty() && parts_.back().exponent.is_zero();
}

OrdTerm OrdTerm::predecessor() const {
  if (!is_successor()) throw std::invalid_argument("OrdTerm::predecessor: not a successor");
  OrdTerm t = *this;
  if (--t.parts_.back().coefficient == 0) t.parts_.pop_back();
  return t;
}

bool OrdTerm::is_finite() const {
  return parts_.empty() || (parts_.size() == 1 && parts_[0].exponent.is_zero());
}

std::uint64_t OrdTerm::to_nat() const {
  if (!is_finite()) throw std::invalid_argument("OrdTerm::to_nat: term is infinite");
  return parts_.empty() ? 0 : parts_[0].coefficient;
}

std::uint64_t OrdTerm::depth() const {
  if (parts_.empty()) return 0;
  std::uint64_t deepest = 0;
  for (const auto& p : parts_) {
    if (p.exponent.kind() == ExpElem::Kind::Nested) {
      deepest = std::max(deepest, p.exponent.nested_term().depth());
    }
  }
  return deepest + 1;
}

std::string OrdTerm::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " + ";
    const Part& p = parts_[i];
    if (p.exponent.is_zero()) {
      out += std::to_string(p.coefficient);
      continue;
    }
    out += "w^{";
    switch (p.exponent.kind()) {
      case ExpElem::Kind::Nat:
        out += std::to_string(p.exponent.nat_value());
        break;
      case ExpElem::Kind::NonStdRat:
        out += p.exponent.rat_value().to_string();
        out += "'";
        break;
      case ExpElem::Kind::Nested:
        out += p.exponent.nested_term().to_string();
        break;
    }
    out += "}";
    if (p.coefficient > 1) {
      out += "*";
      out += std::to_string(p.coefficient);
    }
  }
  return out;
}

namespace {

void require_same_order(const OrdTerm& a, const OrdTerm& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": mixed exponent orders");
  }
}

}  // namespace

std::strong_ordering ord_cmp(const OrdTerm& a, const OrdTerm& b) {
  require_same_order(a, b, "ord_cmp");
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i) {
    auto c = exp_cmp(pa[i].exponent, pb[i].exponent);
    if (c != 0) return c;
    auto k = pa[i].coefficient <=> pb[i].coefficient;
    if (k != 0) return k;
  }
  return pa.size() <=> pb.size();
}

bool ord_eq(const OrdTerm& a, const OrdTerm& b) { return ord_cmp(a, b) == 0; }

OrdTerm ord_add(const OrdTerm& a, const OrdTerm& b) {
  require_same_order(a, b, "ord_add");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const ExpElem& lead = b.parts().front().exponent;
  std::vector<OrdTerm::Part> parts;
  bool merged = false;
  for (const auto& p : a.parts()) {
    auto c = exp_cmp(p.exponent, lead);
    if (c > 0) {
      parts.push_back(p);
    } else if (c == 0) {
      parts.push_back({p.exponent, p.coefficient + b.parts().front().coefficient});
      merged = true;
      break;
    } else {
      break;  // absorbed by b's lead
    }
  }
  if (!merged) parts.push_back(b.parts().front());
  for (std::size_t i = 1; i < b.parts().size(); ++i) parts.push_back(b.parts()[i]);
  return OrdTerm::make(a.order(), std::move(parts),
                       std::max<std::uint64_t>(OrdTerm::kDefaultMaxDepth,
                                               std::max(a.depth(), b.depth())));
}

OrdTerm ord_sub(const OrdTerm& a, const OrdTerm& b) {
  require_same_order(a, b, "ord_sub");
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0;
  while (i < pa.size() && i < pb.size() && exp_eq(pa[i].exponent, pb[i].exponent) &&
         pa[i].coefficient == pb[i].coefficient) {
    ++i;
  }
  auto reject = [] { throw std::invalid_argument("ord_sub: requires a <= b"); };
  std::vector<OrdTerm::Part> parts;
  if (i == pa.size()) {
    parts.assign(pb.begin() + static_cast<std::ptrdiff_t>(i), pb.end());
  } else if (i == pb.size()) {
    reject();
  } else {
    auto c = exp_cmp(pa[i].exponent, pb[i].exponent);
    if (c > 0) reject();
    if (c < 0) {
      parts.assign(pb.begin() + static_cast<std::ptrdiff_t>(i), pb.end());
    } else {
      if (pa[i].coefficient > pb[i].coefficient) reject();
      parts.push_back({pb[i].exponent, pb[i].coefficient - pa[i].coefficient});
      parts.insert(parts.end(), pb.begin() + static_cast<std::ptrdiff_t>(i) + 1, pb.end());
    }
  }
  return OrdTerm::make(b.order(), std::move(parts),
                       std::max<std::uint64_t>(OrdTerm::kDefaultMaxDepth, b.depth()));
}

OrdSplit split(const OrdTerm& a) {
  std::vector<OrdTerm::Part> upper, lower;
  for (const auto& p : a.parts()) {
    (p.exponent.standard() ? lower : upper).push_back(p);
  }
  std::uint64_t depth = std::max<std::uint64_t>(OrdTerm::kDefaultMaxDepth, a.depth());
  OrdSplit out;
  out.nonstandard = OrdTerm::make(a.order(), std::move(upper), depth);
  out.standard = OrdTerm::make(a.order(), std::move(lower), depth);
  return out;
}

OrdTerm dense_between(const OrdTerm& a, const OrdTerm& b) {
  require_same_order(a, b, "dense_between");
  if (!(ord_cmp(a, b) < 0)) throw std::invalid_argument("dense_between: requires a < b");
  if (!split(a).standard.is_zero() || !split(b).standard.is_zero()) {
    throw std::invalid_argument("dense_between: arguments must be pure");
  }
  OrdTerm d = ord_sub(a, b);
  const ExpElem& lead = d.parts().front().exponent;
  if (lead.standard()) {
    throw std::invalid_argument("dense_between: no non-standard gap below the difference");
  }
  ExpElem q;
  if (!a.is_zero() && exp_cmp(a.parts().back().exponent, lead) < 0) {
    q = exp_between(a.parts().back().exponent, lead);
  } else {
    q = exp_predecessor_unbounded(lead);
  }
  return ord_add(a, OrdTerm::omega_power(a.order(), std::move(q)));
}

OrdTerm fundamental_sequence(const OrdTerm& alpha, std::uint64_t k) {
  if (alpha.order() != OrderKind::Standard) {
    throw std::invalid_argument("fundamental_sequence: STANDARD order only");
  }
  if (alpha.is_zero() || alpha.is_successor()) {
    throw std::invalid_argument("fundamental_sequence: not a limit term");
  }
  const auto& last = alpha.parts().back();
  // gamma + w^e with the final power peeled off.
  std::vector<OrdTerm::Part> head(alpha.parts().begin(), alpha.parts().end() - 1);
  if (last.coefficient > 1) head.push_back({last.exponent, last.coefficient - 1});
  std::uint64_t depth = std::max<std::uint64_t>(OrdTerm::kDefaultMaxDepth, alpha.depth());
  OrdTerm gamma = OrdTerm::make(OrderKind::Standard, std::move(head), depth);

  // Successor exponent e' + 1: step w^{e'} * k; limit exponent: recurse.
  OrdTerm e = last.exponent.kind() == ExpElem::Kind::Nat
                  ? OrdTerm::from_nat(OrderKind::Standard, last.exponent.nat_value())
                  : last.exponent.nested_term();
  OrdTerm tail;
  if (e.is_successor()) {
    if (k == 0) return gamma;
    tail = OrdTerm::omega_power(OrderKind::Standard, ExpElem::nested(e.predecessor()), k);
  } else {
    tail = OrdTerm::omega_power(OrderKind::Standard,
                                ExpElem::nested(fundamental_sequence(e, k)));
  }
  return ord_add(gamma, tail);
}

// ---- parsing ----

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::optional<OrderKind> force)
      : text_(text), force_(force) {}

  OrdTerm parse() {
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ == text_.size()) {
        return OrdTerm::zero(force_.value_or(OrderKind::Standard));
      }
      pos_ = save;
    }
    std::vector<OrdTerm::Part> parts;
    parts.push_back(parse_part());
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      skip_ws();
      parts.push_back(parse_part());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("trailing input");
    OrderKind order = force_.value_or(saw_prime_ ? OrderKind::Cut : OrderKind::Standard);
    if (force_ == OrderKind::Standard && saw_prime_) {
      fail("non-standard exponent in STANDARD order");
    }
    return OrdTerm::make(order, std::move(parts));
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("ord term parse error at offset " + std::to_string(pos_) +
                                ": " + why);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::uint64_t parse_nat() {
    if (peek() < '0' || peek() > '9') fail("expected a number");
    std::uint64_t v = 0;
    while (peek() >= '0' && peek() <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  OrdTerm::Part parse_part() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      if (peek() != '^') fail("expected '^'");
      ++pos_;
      if (peek() != '{') fail("expected '{'");
      ++pos_;
      ExpElem exponent = parse_exponent();
      if (peek() != '}') fail("expected '}'");
      ++pos_;
      std::uint64_t coeff = 1;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        coeff = parse_nat();
        if (coeff == 0) fail("zero coefficient");
      }
      return {std::move(exponent), coeff};
    }
    std::uint64_t c = parse_nat();
    if (c == 0) fail("zero constant part");
    return {ExpElem::nat(0), c};
  }

  ExpElem parse_exponent() {
    skip_ws();
    if (peek() == 'w') {
      // Nested term: scan to the matching brace, parse recursively.
      std::size_t depth = 0;
      std::size_t start = pos_;
      std::size_t end = pos_;
      for (; end < text_.size(); ++end) {
        if (text_[end] == '{') ++depth;
        if (text_[end] == '}') {
          if (depth == 0) break;
          --depth;
        }
      }
      if (end == text_.size()) fail("unterminated exponent");
      TermParser inner(text_.substr(start, end - start), OrderKind::Standard);
      OrdTerm t = inner.parse();
      pos_ = end;
      return ExpElem::nested(std::move(t));
    }
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::uint64_t num = parse_nat();
    std::uint64_t den = 0;
    if (peek() == '/') {
      ++pos_;
      den = parse_nat();
      if (den == 0) fail("zero denominator");
    }
    skip_ws();
    if (peek() == '\'') {
      ++pos_;
      saw_prime_ = true;
      Rational r(BigInt::from_u64(num), den ? BigInt::from_u64(den) : BigInt(1));
      return ExpElem::nonstd(neg ? -r : r);
    }
    if (neg || den) fail("standard exponents must be naturals");
    return ExpElem::nat(num);
  }

  std::string_view text_;
  std::optional<OrderKind> force_;
  std::size_t pos_ = 0;
  bool saw_prime_ = false;
};

}  // namespace

OrdTerm parse_ord_term(std::string_view text, std::optional<OrderKind> force) {
  return TermParser(text, force).parse();
}

}  // namespace ptq
