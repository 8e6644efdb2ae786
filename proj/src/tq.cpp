#include "ptq/tq.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptq {

namespace {

// ---- Calkin-Wilf bijection between naturals and positive rationals ----
//
// Node k+1 of the Calkin-Wilf tree (root 1/1, left child p/(p+q), right
// child (p+q)/q) is the k-th positive rational.

Rational cw_decode(const BigInt& k) {
  BigInt n = k + BigInt(1);
  BigInt p(1), q(1);
  if (n.bit_length() >= 2) {
    for (std::size_t i = n.bit_length() - 1; i-- > 0;) {
      if (n.bit(i)) {
        p = p + q;  // right child (p+q)/q
      } else {
        q = p + q;  // left child p/(p+q)
      }
    }
  }
  return Rational(p, q);
}

BigInt cw_encode(const Rational& r) {
  BigInt p = r.num();
  BigInt q = r.den();
  std::vector<bool> bits;  // child positions from the node up to the root
  while (!(p == BigInt(1) && q == BigInt(1))) {
    if (p < q) {
      bits.push_back(false);
      q = q - p;
    } else {
      bits.push_back(true);
      p = p - q;
    }
  }
  BigInt n(1);
  for (std::size_t i = bits.size(); i-- > 0;) {
    n = n.shl(1);
    if (bits[i]) n = n + BigInt(1);
  }
  return n - BigInt(1);
}

BigInt rat_to_nat(const Rational& r) {
  if (r.is_zero()) return BigInt(0);
  if (r.num().is_negative()) return cw_encode(-r) * BigInt(2) + BigInt(2);
  return cw_encode(r) * BigInt(2) + BigInt(1);
}

Rational nat_to_rat(const BigInt& n) {
  if (n.is_zero()) return Rational(0);
  BigInt m = n - BigInt(1);
  auto dm = m.divmod(BigInt(2));
  Rational r = cw_decode(dm.quot);
  return dm.rem.is_zero() ? r : -r;
}

// C(n, k) for small k, arbitrary n >= 0.
BigInt binom(const BigInt& n, std::uint64_t k) {
  if (n < BigInt::from_u64(k)) return BigInt(0);
  BigInt r(1);
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - BigInt::from_u64(k - i));
    r = r / BigInt::from_u64(i);
  }
  return r;
}

// Number of L-tuples of naturals summing to m.
BigInt compositions(const BigInt& m, std::uint64_t length) {
  if (length == 0) return m.is_zero() ? BigInt(1) : BigInt(0);
  return binom(m + BigInt::from_u64(length - 1), length - 1);
}

// Values with "skip" encoding so that consecutive piece values differ.
std::uint64_t skip_encode(std::uint64_t v, std::uint64_t prev) {
  return v < prev ? v : v - 1;
}
std::uint64_t skip_decode(std::uint64_t w, std::uint64_t prev) {
  return w < prev ? w : w + 1;
}

std::vector<BigInt> element_to_tuple(const TqElement& f) {
  std::vector<BigInt> out;
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i == 0) {
      out.push_back(rat_to_nat(ps[0].right_endpoint));
      out.push_back(BigInt::from_u64(ps[0].value));
    } else {
      Rational gap = ps[i].right_endpoint - ps[i - 1].right_endpoint;
      out.push_back(cw_encode(gap));
      out.push_back(BigInt::from_u64(skip_encode(ps[i].value, ps[i - 1].value)));
    }
  }
  return out;
}

TqElement tuple_to_element(const std::vector<BigInt>& tuple) {
  std::vector<TqPiece> pieces;
  for (std::size_t i = 0; i + 1 < tuple.size(); i += 2) {
    TqPiece p;
    if (i == 0) {
      p.right_endpoint = nat_to_rat(tuple[0]);
      p.value = tuple[1].to_u64();
    } else {
      p.right_endpoint = pieces.back().right_endpoint + cw_decode(tuple[i]);
      p.value = skip_decode(tuple[i + 1].to_u64(), pieces.back().value);
    }
    pieces.push_back(std::move(p));
  }
  return TqElement::from_pieces(std::move(pieces));
}

}  // namespace

TqElement TqElement::from_pieces(std::vector<TqPiece> pieces) {
  std::vector<TqPiece> canon;
  for (auto& p : pieces) {
    if (!canon.empty() && !(canon.back().right_endpoint < p.right_endpoint)) {
      throw std::invalid_argument("TqElement: endpoints not strictly increasing");
    }
    if (!canon.empty() && canon.back().value == p.value) {
      canon.back().right_endpoint = p.right_endpoint;  // merge equal run
    } else {
      canon.push_back(std::move(p));
    }
  }
  TqElement e;
  e.pieces_ = std::move(canon);
  return e;
}

std::optional<Rational> TqElement::max_dom() const {
  if (pieces_.empty()) return std::nullopt;
  return pieces_.back().right_endpoint;
}

TqElement TqElement::truncate(const Rational& cut) const {
  if (pieces_.empty() || pieces_.back().right_endpoint < cut) {
    throw std::invalid_argument("TqElement::truncate: cut beyond domain");
  }
  std::vector<TqPiece> out;
  for (const auto& p : pieces_) {
    if (p.right_endpoint < cut) {
      out.push_back(p);
    } else {
      out.push_back(TqPiece{cut, p.value});
      break;
    }
  }
  return from_pieces(std::move(out));
}

std::uint64_t TqElement::value_after(const Rational& cut) const {
  for (const auto& p : pieces_) {
    if (cut < p.right_endpoint) return p.value;
  }
  throw std::invalid_argument("TqElement::value_after: domain ends at or before cut");
}

std::strong_ordering TqElement::operator<=>(const TqElement& o) const {
  std::size_t n = std::min(pieces_.size(), o.pieces_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = pieces_[i].right_endpoint <=> o.pieces_[i].right_endpoint;
    if (c != 0) return c;
    auto v = pieces_[i].value <=> o.pieces_[i].value;
    if (v != 0) return v;
  }
  return pieces_.size() <=> o.pieces_.size();
}

std::string TqElement::to_string() const {
  if (pieces_.empty()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += ",";
    out += "(";
    out += pieces_[i].right_endpoint.num().to_string();
    out += "/";
    out += pieces_[i].right_endpoint.den().to_string();
    out += ":";
    out += std::to_string(pieces_[i].value);
    out += ")";
  }
  out += "]";
  return out;
}

TqElement TqElement::parse(std::string_view text) {
  auto fail = []() -> TqElement {
    throw std::invalid_argument("TqElement::parse: malformed element");
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') return fail();
  ++i;
  std::vector<TqPiece> pieces;
  skip_ws();
  while (i < text.size() && text[i] != ']') {
    if (!pieces.empty()) {
      if (text[i] != ',') return fail();
      ++i;
      skip_ws();
    }
    if (i >= text.size() || text[i] != '(') return fail();
    ++i;
    std::size_t colon = text.find(':', i);
    std::size_t close = text.find(')', i);
    if (colon == std::string_view::npos || close == std::string_view::npos || colon > close) {
      return fail();
    }
    TqPiece p;
    p.right_endpoint = Rational::parse(text.substr(i, colon - i));
    std::uint64_t v = 0;
    for (std::size_t j = colon + 1; j < close; ++j) {
      if (text[j] < '0' || text[j] > '9') return fail();
      v = v * 10 + static_cast<std::uint64_t>(text[j] - '0');
    }
    if (close == colon + 1) return fail();
    p.value = v;
    pieces.push_back(std::move(p));
    i = close + 1;
    skip_ws();
  }
  if (i >= text.size() || text[i] != ']') return fail();
  ++i;
  skip_ws();
  if (i != text.size()) return fail();
  return from_pieces(std::move(pieces));
}

bool tq_leq(const TqElement& f, const TqElement& g) {
  if (f.is_root()) return true;
  if (g.is_root()) return false;
  Rational fmax = *f.max_dom();
  if (*g.max_dom() < fmax) return false;
  return g.truncate(fmax) == f;
}

TqElement tq_meet(const TqElement& f, const TqElement& g) {
  if (f.is_root() || g.is_root()) return TqElement::root();
  const auto& fp = f.pieces();
  const auto& gp = g.pieces();
  std::size_t i = 0, j = 0;
  std::optional<Rational> agreed;  // agreement verified on (-inf, agreed]
  while (i < fp.size() && j < gp.size()) {
    if (fp[i].value != gp[j].value) break;
    const Rational& fe = fp[i].right_endpoint;
    const Rational& ge = gp[j].right_endpoint;
    if (fe < ge) {
      agreed = fe;
      ++i;
    } else if (ge < fe) {
      agreed = ge;
      ++j;
    } else {
      agreed = fe;
      ++i;
      ++j;
    }
  }
  if (!agreed) return TqElement::root();
  return f.truncate(*agreed);
}

TqElement tq_between(const TqElement& g, const TqElement& f) {
  if (g == f || !tq_leq(g, f)) {
    throw std::invalid_argument("tq_between: requires g < f");
  }
  if (g.is_root()) {
    Rational cut = *f.max_dom() - Rational(1);
    return f.truncate(cut);
  }
  Rational gmax = *g.max_dom();
  // First breakpoint of f strictly past g's domain; exists since g < f.
  const Rational* next = nullptr;
  for (const auto& p : f.pieces()) {
    if (gmax < p.right_endpoint) {
      next = &p.right_endpoint;
      break;
    }
  }
  Rational cut = Rational::midpoint(gmax, *next);
  return f.truncate(cut);
}

TqElement tq_split(const TqElement& g, const std::vector<TqElement>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == g || !tq_leq(g, family[i])) {
      throw std::invalid_argument("tq_split: family member " + std::to_string(i) +
                                  " is not strictly above g");
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!(tq_meet(family[i], family[j]) == g)) {
        throw std::invalid_argument("tq_split: meet of family members " +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    " is not g");
      }
    }
  }
  std::vector<bool> used(family.size() + 1, false);
  for (const auto& f : family) {
    std::uint64_t v = g.is_root() ? f.pieces().front().value : f.value_after(*g.max_dom());
    if (v < used.size()) used[v] = true;
  }
  std::uint64_t fresh = 0;
  while (fresh < used.size() && used[fresh]) ++fresh;
  Rational endpoint = g.is_root() ? Rational(0) : *g.max_dom() + Rational(1);
  std::vector<TqPiece> pieces = g.pieces();
  pieces.push_back(TqPiece{endpoint, fresh});
  return TqElement::from_pieces(std::move(pieces));
}

TqElement tq_enumerate(std::uint64_t index) {
  if (index == 0) return TqElement::root();
  BigInt target = BigInt::from_u64(index);
  // Locate the size class: 2^(s-2) elements of size < s for s >= 2.
  std::uint64_t size = 2;
  BigInt cum(1);
  while (true) {
    BigInt next = BigInt(1).shl(static_cast<unsigned>(size - 1));
    if (target < next) break;
    cum = next;
    ++size;
  }
  BigInt offset = target - cum;
  // Within the class: lengths ascending, then lexicographic.
  std::uint64_t length = 0;
  BigInt sum;
  for (std::uint64_t n = 1; 2 * n <= size; ++n) {
    BigInt m = BigInt::from_u64(size - 2 * n);
    BigInt cnt = compositions(m, 2 * n);
    if (offset < cnt) {
      length = 2 * n;
      sum = m;
      break;
    }
    offset = offset - cnt;
  }
  std::vector<BigInt> tuple;
  BigInt rem = sum;
  for (std::uint64_t pos = 0; pos < length; ++pos) {
    std::uint64_t parts_left = length - pos - 1;
    BigInt x(0);
    while (true) {
      BigInt cnt = compositions(rem - x, parts_left);
      if (offset < cnt) break;
      offset = offset - cnt;
      x = x + BigInt(1);
    }
    tuple.push_back(x);
    rem = rem - x;
  }
  return tuple_to_element(tuple);
}

BigInt tq_index(const TqElement& f) {
  if (f.is_root()) return BigInt(0);
  std::vector<BigInt> tuple = element_to_tuple(f);
  BigInt sum;
  for (const auto& x : tuple) sum = sum + x;
  BigInt size = sum + BigInt::from_u64(tuple.size());
  // Elements of strictly smaller size: 2^(size-2); size >= 2 here.
  BigInt index;
  {
    BigInt s_minus_2 = size - BigInt(2);
    if (s_minus_2.fits_u64()) {
      index = BigInt(1).shl(static_cast<unsigned>(s_minus_2.to_u64()));
    } else {
      throw std::overflow_error("tq_index: element too large to index");
    }
  }
  // Shorter tuples of the same size come first.
  for (std::uint64_t n = 1; 2 * n < tuple.size(); ++n) {
    index = index + compositions(size - BigInt::from_u64(2 * n), 2 * n);
  }
  // Lexicographic rank among tuples of this length and sum.
  BigInt rem = sum;
  for (std::size_t pos = 0; pos < tuple.size(); ++pos) {
    std::uint64_t parts_left = tuple.size() - pos - 1;
    const BigInt& a = tuple[pos];
    if (!a.is_zero()) {
      // sum over x < a of compositions(rem - x, parts_left), telescoped.
      if (parts_left == 0) {
        if (rem < a) index = index + BigInt(1);
      } else {
        BigInt upper = binom(rem + BigInt::from_u64(parts_left), parts_left);
        BigInt lower = binom(rem - a + BigInt::from_u64(parts_left), parts_left);
        index = index + (upper - lower);
      }
    }
    rem = rem - a;
  }
  return index;
}

}  // namespace ptq
