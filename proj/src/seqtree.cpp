#include "ptq/seqtree.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace ptq {

using nlohmann::json;

SequentialTree SequentialTree::from_nodes(std::vector<Sequence> nodes) {
  SequentialTree t;
  t.nodes_.insert(nodes.begin(), nodes.end());
  for (const auto& s : t.nodes_) {
    if (s.empty()) continue;
    Sequence prefix(s.begin(), s.end() - 1);
    if (!t.nodes_.count(prefix)) {
      throw std::invalid_argument("SequentialTree: missing prefix of a node");
    }
  }
  return t;
}

std::string SequentialTree::to_json() const {
  json out;
  out["nodes"] = json::array();
  for (const auto& s : nodes_) out["nodes"].push_back(s);
  return out.dump(2);
}

SequentialTree SequentialTree::from_json(const std::string& text) {
  json in = json::parse(text);
  if (!in.is_object() || !in.contains("nodes")) {
    throw std::invalid_argument("tree JSON needs \"nodes\"");
  }
  std::vector<Sequence> nodes;
  for (const auto& e : in.at("nodes")) {
    nodes.push_back(e.get<Sequence>());
  }
  return from_nodes(std::move(nodes));
}

RankResult rank(const SequentialTree& tree) {
  if (tree.empty()) throw std::invalid_argument("rank: empty tree");
  // Children by parent, then fold from the longest sequences up.
  std::map<Sequence, std::vector<const Sequence*>> children;
  for (const auto& s : tree.nodes()) {
    if (s.empty()) continue;
    Sequence prefix(s.begin(), s.end() - 1);
    children[prefix].push_back(&s);
  }
  std::vector<const Sequence*> order;
  order.reserve(tree.size());
  for (const auto& s : tree.nodes()) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const Sequence* a, const Sequence* b) { return a->size() > b->size(); });
  RankResult result;
  for (const Sequence* s : order) {
    std::uint64_t r = 0;
    auto it = children.find(*s);
    if (it != children.end()) {
      for (const Sequence* c : it->second) {
        r = std::max(r, result.ranks.at(*c) + 1);
      }
    }
    result.ranks[*s] = r;
  }
  result.tree_rank = result.ranks.at(Sequence{});
  return result;
}

RankRecipe RankRecipe::family_child(std::uint64_t k) const {
  if (kind_ != Kind::OmegaFamily) {
    throw std::invalid_argument("RankRecipe: not an omega family");
  }
  return canonical_tree(fundamental_sequence(rank_, k));
}

RankRecipe canonical_tree(const OrdTerm& alpha) {
  if (alpha.order() != OrderKind::Standard) {
    throw std::invalid_argument("canonical_tree: rank must be over the standard order");
  }
  RankRecipe r;
  r.rank_ = alpha;
  if (alpha.is_zero()) {
    r.kind_ = RankRecipe::Kind::Leaf;
  } else if (alpha.is_successor()) {
    r.kind_ = RankRecipe::Kind::Successor;
    r.child_ = std::make_shared<const RankRecipe>(canonical_tree(alpha.predecessor()));
  } else {
    r.kind_ = RankRecipe::Kind::OmegaFamily;
  }
  return r;
}

namespace {

void materialize(const RankRecipe& recipe, Sequence& prefix, const TruncationBounds& bounds,
                 std::vector<Sequence>& out) {
  out.push_back(prefix);
  if (prefix.size() >= bounds.max_depth) return;
  switch (recipe.kind()) {
    case RankRecipe::Kind::Leaf:
      return;
    case RankRecipe::Kind::Successor:
      prefix.push_back(0);
      materialize(recipe.successor_child(), prefix, bounds, out);
      prefix.pop_back();
      return;
    case RankRecipe::Kind::OmegaFamily:
      for (std::uint64_t k = 0; k < bounds.max_family_width; ++k) {
        prefix.push_back(static_cast<std::uint32_t>(k));
        materialize(recipe.family_child(k), prefix, bounds, out);
        prefix.pop_back();
      }
      return;
  }
}

}  // namespace

SequentialTree truncate(const RankRecipe& recipe, const TruncationBounds& bounds) {
  std::vector<Sequence> nodes;
  Sequence prefix;
  materialize(recipe, prefix, bounds, nodes);
  return SequentialTree::from_nodes(std::move(nodes));
}

}  // namespace ptq
