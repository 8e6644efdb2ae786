#include "ptq/structure.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace ptq {

EnumeratedStructure<TqElement> make_tq_structure() {
  EnumeratedStructure<TqElement> s;
  s.element_at = [](std::uint64_t i) { return tq_enumerate(i); };
  s.leq = [](const TqElement& a, const TqElement& b) { return tq_leq(a, b); };
  s.meet = [](const TqElement& a, const TqElement& b) { return tq_meet(a, b); };
  s.root = TqElement::root();
  DpmWitnesses<TqElement> w;
  w.density = [](const TqElement& g, const TqElement& f) { return tq_between(g, f); };
  w.split = [](const TqElement& g, const std::vector<TqElement>& fam) {
    return tq_split(g, fam);
  };
  s.witnesses = std::move(w);
  s.show = [](const TqElement& e) { return e.to_string(); };
  return s;
}

namespace {

constexpr std::uint64_t kShuffleBlock = 64;

// Permutes each block [k*B, (k+1)*B) with a Fisher-Yates shuffle seeded by
// (seed, k), fixing index 0 so the root convention survives.
std::uint64_t block_permuted(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t block = i / kShuffleBlock;
  SplitMix64 rng(seed * 0x9E3779B97F4A7C15ull + block + 1);
  std::vector<std::uint64_t> perm(kShuffleBlock);
  std::iota(perm.begin(), perm.end(), block * kShuffleBlock);
  std::size_t lo = block == 0 ? 1 : 0;
  for (std::size_t k = perm.size(); k > lo + 1; --k) {
    std::swap(perm[k - 1], perm[lo + rng.below(k - lo)]);
  }
  return perm[i % kShuffleBlock];
}

}  // namespace

EnumeratedStructure<TqElement> make_tq_structure_shuffled(std::uint64_t seed) {
  EnumeratedStructure<TqElement> s = make_tq_structure();
  s.element_at = [seed](std::uint64_t i) { return tq_enumerate(block_permuted(seed, i)); };
  return s;
}

EnumeratedStructure<TqElement> make_tq_structure_scaled(const Rational& scale) {
  if (!(Rational(0) < scale)) {
    throw std::invalid_argument("make_tq_structure_scaled: scale must be positive");
  }
  EnumeratedStructure<TqElement> s = make_tq_structure();
  auto rescale = [scale](const TqElement& e) {
    std::vector<TqPiece> pieces;
    for (const auto& p : e.pieces()) {
      pieces.push_back(TqPiece{p.right_endpoint * scale, p.value});
    }
    return TqElement::from_pieces(std::move(pieces));
  };
  s.element_at = [rescale](std::uint64_t i) { return rescale(tq_enumerate(i)); };
  return s;
}

EnumeratedStructure<std::string> make_finite_structure(const FinitePseudotree& p,
                                                       std::uint64_t order_seed) {
  CheckReport pm = check_pm(p);
  if (!pm.ok()) {
    throw ValidationError("make_finite_structure: input does not satisfy the meet laws", pm);
  }
  auto shared = std::make_shared<FinitePseudotree>(p);

  std::size_t root = 0;
  for (std::size_t a = 0; a < shared->size(); ++a) {
    bool least = true;
    for (std::size_t b = 0; b < shared->size(); ++b) {
      if (!shared->leq(a, b)) {
        least = false;
        break;
      }
    }
    if (least) {
      root = a;
      break;
    }
  }

  auto order = std::make_shared<std::vector<std::size_t>>();
  order->push_back(root);
  for (std::size_t i = 0; i < shared->size(); ++i) {
    if (i != root) order->push_back(i);
  }
  SplitMix64 rng(order_seed);
  for (std::size_t k = order->size(); k > 2; --k) {
    std::swap((*order)[k - 1], (*order)[1 + rng.below(k - 1)]);
  }

  auto index_of = [shared](const std::string& id) {
    auto i = shared->index_of(id);
    if (!i) throw std::invalid_argument("unknown element: " + id);
    return *i;
  };

  EnumeratedStructure<std::string> s;
  s.element_at = [shared, order](std::uint64_t i) {
    return shared->node((*order)[i % order->size()]);
  };
  s.leq = [shared, index_of](const std::string& a, const std::string& b) {
    return shared->leq(index_of(a), index_of(b));
  };
  s.meet = [shared, index_of](const std::string& a, const std::string& b) {
    std::size_t m = shared->has_meet_table() ? shared->meet(index_of(a), index_of(b))
                                             : *shared->glb(index_of(a), index_of(b));
    return shared->node(m);
  };
  s.root = shared->node(root);
  s.show = [](const std::string& e) { return e; };
  return s;
}

}  // namespace ptq
