#ifndef PTQ_EMBEDDING_HPP
#define PTQ_EMBEDDING_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptq/pseudotree.hpp"
#include "ptq/structure.hpp"

namespace ptq {

// Finite partial map between two structures, kept in insertion order for
// deterministic output. A valid embedding is injective, maps root to root,
// and is a meet-homomorphism on a meet-closed domain; validity is checked
// by validate_embedding, not enforced here.
template <class D, class C>
class PartialEmbedding {
 public:
  PartialEmbedding() = default;

  static PartialEmbedding initial(const D& dom_root, const C& cod_root) {
    PartialEmbedding e;
    e.insert(dom_root, cod_root);
    return e;
  }

  bool contains(const D& d) const { return fwd_.count(d) != 0; }
  bool contains_image(const C& c) const { return bwd_.count(c) != 0; }

  const C& image(const D& d) const {
    auto it = fwd_.find(d);
    if (it == fwd_.end()) throw std::out_of_range("PartialEmbedding: element not in domain");
    return it->second;
  }
  const D& preimage(const C& c) const {
    auto it = bwd_.find(c);
    if (it == bwd_.end()) throw std::out_of_range("PartialEmbedding: element not in range");
    return it->second;
  }

  void insert(const D& d, const C& c) {
    auto f = fwd_.find(d);
    if (f != fwd_.end()) {
      if (f->second == c) return;
      throw std::invalid_argument("PartialEmbedding: conflicting image");
    }
    if (bwd_.count(c)) throw std::invalid_argument("PartialEmbedding: image already taken");
    fwd_.emplace(d, c);
    bwd_.emplace(c, d);
    pairs_.emplace_back(d, c);
  }

  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<D, C>>& pairs() const { return pairs_; }

  PartialEmbedding<C, D> inverse() const {
    PartialEmbedding<C, D> inv;
    for (const auto& [d, c] : pairs_) inv.insert(c, d);
    return inv;
  }

  // True when `other` contains every pair of *this.
  bool extended_by(const PartialEmbedding& other) const {
    for (const auto& [d, c] : pairs_) {
      if (!other.contains(d) || !(other.image(d) == c)) return false;
    }
    return true;
  }

 private:
  std::vector<std::pair<D, C>> pairs_;
  std::map<D, C> fwd_;
  std::map<C, D> bwd_;
};

// Independent validity check: root maps to root, the domain is meet-closed,
// meets are preserved on every domain pair, and the order is preserved and
// reflected (both directly and through the meet identity).
template <class D, class C>
CheckReport validate_embedding(const EnumeratedStructure<D>& dom,
                               const EnumeratedStructure<C>& cod,
                               const PartialEmbedding<D, C>& pi) {
  CheckReport report;
  auto sd = [&](const D& e) { return dom.show ? dom.show(e) : std::string("<element>"); };
  if (!pi.contains(dom.root)) {
    report.violations.push_back({"root-missing", {}});
    return report;
  }
  if (!(pi.image(dom.root) == cod.root)) {
    report.violations.push_back({"root-not-preserved", {sd(dom.root)}});
  }
  const auto& pairs = pi.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const auto& [x, px] = pairs[i];
      const auto& [y, py] = pairs[j];
      D m = dom.meet(x, y);
      if (!pi.contains(m)) {
        report.violations.push_back({"domain-not-meet-closed", {sd(x), sd(y), sd(m)}});
        continue;
      }
      if (!(cod.meet(px, py) == pi.image(m))) {
        report.violations.push_back({"meet-not-preserved", {sd(x), sd(y)}});
      }
      if (dom.leq(x, y) != cod.leq(px, py) || dom.leq(y, x) != cod.leq(py, px)) {
        report.violations.push_back({"order-not-preserved", {sd(x), sd(y)}});
      }
      if ((dom.meet(x, y) == x) != (cod.meet(px, py) == px)) {
        report.violations.push_back({"meet-identity-mismatch", {sd(x), sd(y)}});
      }
    }
  }
  return report;
}

// One-point extension of an embedding of a finite substructure of T into a
// structure Q with density and splitting witnesses. Follows the one-point
// extension argument: b = max over the current domain S of a^s; the image
// of b is found between pi(s1) and pi(s0) by density when b is new, and a
// itself is placed by splitting against the minimal elements of S above b.
// Returns pi extended to a meet-closed domain containing a; returns pi
// unchanged when a is already present. Inconsistencies discovered in T's
// operations are reported via ValidationError.
template <class D, class C>
PartialEmbedding<D, C> extend_embedding(const EnumeratedStructure<D>& dom,
                                        const EnumeratedStructure<C>& cod,
                                        PartialEmbedding<D, C> pi, const D& a) {
  if (!cod.witnesses) {
    throw std::invalid_argument("extend_embedding: codomain lacks witnesses");
  }
  if (!pi.contains(dom.root)) {
    throw std::invalid_argument("extend_embedding: embedding must contain the root");
  }
  if (pi.contains(a)) return pi;
  auto sd = [&](const D& e) { return dom.show ? dom.show(e) : std::string("<element>"); };

  std::vector<D> domain;
  domain.reserve(pi.size());
  for (const auto& [d, c] : pi.pairs()) domain.push_back(d);

  // b = max { a ^ s : s in S }; the meets lie in the down-set of a, which
  // must be a chain.
  D b = dom.meet(a, domain.front());
  for (std::size_t i = 1; i < domain.size(); ++i) {
    D m = dom.meet(a, domain[i]);
    if (dom.leq(b, m)) {
      b = m;
    } else if (!dom.leq(m, b)) {
      CheckReport rep;
      rep.violations.push_back({"downset-not-linear", {sd(a), sd(domain[i]), sd(m), sd(b)}});
      throw ValidationError("extend_embedding: meets below a are not a chain", rep);
    }
  }

  C b_image;
  if (pi.contains(b)) {
    b_image = pi.image(b);
  } else {
    // s0 = inf { s in S : s >= b } lies in S by meet-closure; s1 = max of
    // { s in S : s < b } exists because the root is below b.
    std::vector<D> above;
    for (const D& s : domain) {
      if (dom.leq(b, s)) above.push_back(s);
    }
    D s0 = above.front();
    for (std::size_t i = 1; i < above.size(); ++i) s0 = dom.meet(s0, above[i]);
    if (!pi.contains(s0)) {
      CheckReport rep;
      rep.violations.push_back({"domain-not-meet-closed", {sd(s0)}});
      throw ValidationError("extend_embedding: iterated meet left the domain", rep);
    }
    const D* s1 = nullptr;
    for (const D& s : domain) {
      if (dom.leq(s, b) && !(s == b) && (!s1 || dom.leq(*s1, s))) s1 = &s;
    }
    if (!s1) {
      CheckReport rep;
      rep.violations.push_back({"root-not-least", {sd(b)}});
      throw ValidationError("extend_embedding: no domain element strictly below b", rep);
    }
    b_image = cod.witnesses->density(pi.image(*s1), pi.image(s0));
    pi.insert(b, b_image);
  }

  if (!(a == b)) {
    // Minimal elements of S strictly above b; their images bound the
    // splitting witness placed over the image of b.
    std::vector<C> blockers;
    for (const D& s : domain) {
      if (!dom.leq(b, s) || s == b) continue;
      bool minimal = true;
      for (const D& t : domain) {
        if (!(t == s) && !(t == b) && dom.leq(b, t) && dom.leq(t, s)) {
          minimal = false;
          break;
        }
      }
      if (minimal) blockers.push_back(pi.image(s));
    }
    C a_image = cod.witnesses->split(b_image, blockers);
    pi.insert(a, a_image);
  }
  return pi;
}

// Embeds the enumerated elements of a countable structure with meets into a
// structure with witnesses, one element at a time. prefix(n) is an
// embedding whose domain contains element_at(0..n-1); successive prefixes
// extend each other.
template <class D, class C>
class CountableEmbedding {
 public:
  CountableEmbedding(EnumeratedStructure<D> dom, EnumeratedStructure<C> cod)
      : dom_(std::move(dom)), cod_(std::move(cod)) {
    current_ = PartialEmbedding<D, C>::initial(dom_.root, cod_.root);
    D first = dom_.element_at(0);
    if (!(first == dom_.root)) {
      CheckReport rep;
      rep.violations.push_back({"enumeration-root", {}});
      throw ValidationError("embedding: element_at(0) must be the root", rep);
    }
  }

  const PartialEmbedding<D, C>& prefix(std::uint64_t n) {
    while (processed_ < n) {
      D next = dom_.element_at(processed_);
      check_new_element(next);
      current_ = extend_embedding(dom_, cod_, std::move(current_), next);
      ++processed_;
    }
    return current_;
  }

 private:
  // Incremental law check over the elements seen so far: the root stays
  // least and meets with earlier elements stay below both arguments.
  void check_new_element(const D& e) {
    if (!dom_.leq(dom_.root, e)) {
      CheckReport rep;
      rep.violations.push_back({"root-not-least", {dom_.show ? dom_.show(e) : ""}});
      throw ValidationError("embedding: structure violates the meet laws", rep);
    }
    for (const D& prev : seen_) {
      D m = dom_.meet(e, prev);
      if (!dom_.leq(m, e) || !dom_.leq(m, prev)) {
        CheckReport rep;
        rep.violations.push_back(
            {"meet-not-lower-bound",
             {dom_.show ? dom_.show(e) : "", dom_.show ? dom_.show(prev) : ""}});
        throw ValidationError("embedding: structure violates the meet laws", rep);
      }
    }
    seen_.push_back(e);
  }

  EnumeratedStructure<D> dom_;
  EnumeratedStructure<C> cod_;
  PartialEmbedding<D, C> current_;
  std::vector<D> seen_;
  std::uint64_t processed_ = 0;
};

// Back-and-forth between two structures that both carry witnesses. After
// step_to(n), pi covers element_at(0..n-1) of A and sigma = pi^{-1} covers
// element_at(0..n-1) of B. Even steps pull the least unprocessed element
// of A, odd steps of B.
template <class EA, class EB>
class IsomorphismRun {
 public:
  IsomorphismRun(EnumeratedStructure<EA> a, EnumeratedStructure<EB> b)
      : a_(std::move(a)), b_(std::move(b)) {
    if (!a_.witnesses || !b_.witnesses) {
      throw std::invalid_argument("isomorphism: both structures need witnesses");
    }
    pi_ = PartialEmbedding<EA, EB>::initial(a_.root, b_.root);
  }

  void step_to(std::uint64_t n) {
    while (next_a_ < n || next_b_ < n) {
      if (next_a_ <= next_b_) {
        pi_ = extend_embedding(a_, b_, std::move(pi_), a_.element_at(next_a_));
        ++next_a_;
      } else {
        auto sigma = extend_embedding(b_, a_, pi_.inverse(), b_.element_at(next_b_));
        pi_ = sigma.inverse();
        ++next_b_;
      }
    }
  }

  const PartialEmbedding<EA, EB>& pi() const { return pi_; }
  PartialEmbedding<EB, EA> sigma() const { return pi_.inverse(); }

 private:
  EnumeratedStructure<EA> a_;
  EnumeratedStructure<EB> b_;
  PartialEmbedding<EA, EB> pi_;
  std::uint64_t next_a_ = 0;
  std::uint64_t next_b_ = 0;
};

struct IsoPrefixResult {
  PartialEmbedding<TqElement, TqElement> pi;
  PartialEmbedding<TqElement, TqElement> sigma;
};

// Mutually inverse partial embeddings covering the first n enumerated
// elements on each side.
template <class EA, class EB>
std::pair<PartialEmbedding<EA, EB>, PartialEmbedding<EB, EA>> isomorphism_prefix(
    const EnumeratedStructure<EA>& a, const EnumeratedStructure<EB>& b, std::uint64_t n) {
  IsomorphismRun<EA, EB> run(a, b);
  run.step_to(n);
  return {run.pi(), run.sigma()};
}

}  // namespace ptq

#endif
