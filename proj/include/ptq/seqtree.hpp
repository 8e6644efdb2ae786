#ifndef PTQ_SEQTREE_HPP
#define PTQ_SEQTREE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ptq/ordinal.hpp"

namespace ptq {

using Sequence = std::vector<std::uint32_t>;

// Prefix-closed set of finite sequences of naturals, ordered by reverse
// inclusion: longer sequences sit lower, the empty sequence is the maximum.
class SequentialTree {
 public:
  SequentialTree() = default;

  // Rejects inputs whose prefix closure is violated.
  static SequentialTree from_nodes(std::vector<Sequence> nodes);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const std::set<Sequence>& nodes() const { return nodes_; }
  bool contains(const Sequence& s) const { return nodes_.count(s) != 0; }

  std::string to_json() const;
  static SequentialTree from_json(const std::string& text);

 private:
  std::set<Sequence> nodes_;
};

struct RankResult {
  std::map<Sequence, std::uint64_t> ranks;
  std::uint64_t tree_rank = 0;  // rank of the empty sequence
};

// Exact rank of every node: 0 at nodes with no proper extension, else one
// more than the largest rank strictly below. Rejects empty trees.
RankResult rank(const SequentialTree& tree);

// Symbolic description of a tree of prescribed ordinal rank. A successor
// rank hangs one child; a limit rank hangs an omega-indexed family whose
// k-th child realizes the k-th term of the rank's fundamental sequence.
class RankRecipe {
 public:
  enum class Kind { Leaf, Successor, OmegaFamily };

  Kind kind() const { return kind_; }
  const OrdTerm& symbolic_rank() const { return rank_; }
  const RankRecipe& successor_child() const { return *child_; }
  // k-th child of an omega family (built on demand).
  RankRecipe family_child(std::uint64_t k) const;

  friend RankRecipe canonical_tree(const OrdTerm& alpha);

 private:
  Kind kind_ = Kind::Leaf;
  OrdTerm rank_;
  std::shared_ptr<const RankRecipe> child_;
};

// Recipe whose symbolic rank is exactly alpha. Requires alpha over the
// standard exponent order.
RankRecipe canonical_tree(const OrdTerm& alpha);

struct TruncationBounds {
  std::uint64_t max_family_width = 4;  // children materialized per omega family
  std::uint64_t max_depth = 32;        // maximum sequence length
};

// Finite tree materialized from a recipe. Every node rank stays at or below
// the recipe's symbolic rank.
SequentialTree truncate(const RankRecipe& recipe, const TruncationBounds& bounds);

}  // namespace ptq

#endif
