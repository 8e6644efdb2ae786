#ifndef PTQ_STRUCTURE_HPP
#define PTQ_STRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptq/pseudotree.hpp"
#include "ptq/random.hpp"
#include "ptq/tq.hpp"

namespace ptq {

// Density and splitting witness oracles for a structure presented by
// operations. density(g, f) must land strictly between its arguments;
// split(g, family) must return an element above g meeting each family
// member exactly at g.
template <class E>
struct DpmWitnesses {
  std::function<E(const E&, const E&)> density;
  std::function<E(const E&, const std::vector<E>&)> split;
};

// A countable structure with meets presented by an element enumeration and
// operations. element_at(0) is the root by convention. Witnesses are absent
// for structures only known to have meets.
template <class E>
struct EnumeratedStructure {
  std::function<E(std::uint64_t)> element_at;
  std::function<bool(const E&, const E&)> leq;
  std::function<E(const E&, const E&)> meet;
  E root;
  std::optional<DpmWitnesses<E>> witnesses;
  std::function<std::string(const E&)> show;
};

struct DpmSampleSpec {
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  std::uint64_t enum_prefix = 200;   // elements are drawn from this prefix
  std::uint64_t max_family = 4;      // splitting families grow up to this size
};

// Samples density/splitting instances and checks the witness contracts:
// density(g, f) strictly between g and f for sampled comparable pairs, and
// split outputs above g with meets back to g. Deterministic given the seed.
template <class E>
CheckReport check_dpm_sampled(const EnumeratedStructure<E>& s, const DpmWitnesses<E>& w,
                              const DpmSampleSpec& spec) {
  CheckReport report;
  SplitMix64 rng(spec.seed);
  auto shown = [&](const E& e) { return s.show ? s.show(e) : std::string("<element>"); };

  for (std::uint64_t k = 0; k < spec.samples && report.violations.size() < 50; ++k) {
    E f = s.element_at(rng.below(spec.enum_prefix));
    E g = s.element_at(rng.below(spec.enum_prefix));

    // Density over a comparable pair; the meet supplies one when needed.
    E lo = s.leq(g, f) ? g : s.meet(f, g);
    if (!(lo == f)) {
      E h = w.density(lo, f);
      bool above = s.leq(lo, h) && !(h == lo);
      bool below = s.leq(h, f) && !(h == f);
      if (!above || !below) {
        report.violations.push_back(
            {"density-witness", {shown(lo), shown(f), shown(h)}});
      }
    }

    // Splitting: grow a family over g, validating each output before it
    // joins the family. The first round exercises the empty family.
    std::vector<E> family;
    std::uint64_t rounds = 1 + rng.below(spec.max_family);
    for (std::uint64_t t = 0; t < rounds; ++t) {
      E fresh = w.split(g, family);
      bool ok = s.leq(g, fresh) && !(fresh == g);
      for (const E& prev : family) {
        if (!(s.meet(prev, fresh) == g)) ok = false;
      }
      if (!ok) {
        report.violations.push_back({"splitting-witness", {shown(g), shown(fresh)}});
        break;
      }
      family.push_back(std::move(fresh));
    }
  }
  return report;
}

// Order and meet laws on the first n enumerated elements: root least,
// meets below both arguments, greatest among enumerated lower bounds,
// down-sets linear, and leq(x,y) iff meet(x,y) == x.
template <class E>
CheckReport check_pm_prefix(const EnumeratedStructure<E>& s, std::uint64_t n) {
  CheckReport report;
  auto shown = [&](const E& e) { return s.show ? s.show(e) : std::string("<element>"); };
  std::vector<E> prefix;
  for (std::uint64_t i = 0; i < n; ++i) prefix.push_back(s.element_at(i));
  if (n > 0 && !(prefix[0] == s.root)) {
    report.violations.push_back({"enumeration-root", {shown(prefix[0])}});
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < i; ++j) {
      if (prefix[i] == prefix[j]) {
        report.violations.push_back({"enumeration-repeat", {shown(prefix[i])}});
      }
    }
    if (!s.leq(s.root, prefix[i])) {
      report.violations.push_back({"root-not-least", {shown(prefix[i])}});
    }
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = i; j < n; ++j) {
      E m = s.meet(prefix[i], prefix[j]);
      if (!s.leq(m, prefix[i]) || !s.leq(m, prefix[j])) {
        report.violations.push_back({"meet-not-lower-bound", {shown(prefix[i]), shown(prefix[j])}});
        continue;
      }
      for (std::uint64_t z = 0; z < n; ++z) {
        if (s.leq(prefix[z], prefix[i]) && s.leq(prefix[z], prefix[j]) &&
            !s.leq(prefix[z], m)) {
          report.violations.push_back(
              {"meet-not-greatest", {shown(prefix[i]), shown(prefix[j]), shown(prefix[z])}});
        }
      }
      if (s.leq(prefix[i], prefix[j]) != (m == prefix[i])) {
        report.violations.push_back({"leq-meet-identity", {shown(prefix[i]), shown(prefix[j])}});
      }
    }
  }
  // Linearity below each element, within the prefix.
  for (std::uint64_t t = 0; t < n; ++t) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!s.leq(prefix[i], prefix[t])) continue;
      for (std::uint64_t j = i + 1; j < n; ++j) {
        if (s.leq(prefix[j], prefix[t]) && !s.leq(prefix[i], prefix[j]) &&
            !s.leq(prefix[j], prefix[i])) {
          report.violations.push_back(
              {"downset-linearity", {shown(prefix[i]), shown(prefix[j]), shown(prefix[t])}});
        }
      }
    }
  }
  return report;
}

// The universal pseudotree with its canonical enumeration and witnesses.
EnumeratedStructure<TqElement> make_tq_structure();

// Same structure under a different enumeration: indices are permuted
// block-by-block with a seeded shuffle (a bijection on the naturals).
EnumeratedStructure<TqElement> make_tq_structure_shuffled(std::uint64_t seed);

// Same structure presented through the order automorphism q -> scale * q
// of the rationals (scale > 0).
EnumeratedStructure<TqElement> make_tq_structure_scaled(const Rational& scale);

// Presents a finite structure with a meet table as an EnumeratedStructure.
// Enumeration order: root first, then the remaining nodes shuffled by seed;
// indices past the last node wrap around (the enumeration is onto).
EnumeratedStructure<std::string> make_finite_structure(const FinitePseudotree& p,
                                                       std::uint64_t order_seed);

}  // namespace ptq

#endif
