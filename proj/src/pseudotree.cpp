#include "ptq/pseudotree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ptq/random.hpp"

namespace ptq {

using nlohmann::json;

std::string CheckReport::to_json() const {
  json out;
  out["ok"] = ok();
  out["violations"] = json::array();
  for (const auto& v : violations) {
    out["violations"].push_back({{"kind", v.kind}, {"witnesses", v.witnesses}});
  }
  return out.dump(2);
}

FinitePseudotree FinitePseudotree::from_relation(
    std::vector<std::string> nodes,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    std::optional<std::string> root) {
  FinitePseudotree p;
  p.nodes_ = std::move(nodes);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.nodes_.size(); ++i) {
    if (!index.emplace(p.nodes_[i], i).second) {
      throw std::invalid_argument("duplicate node id: " + p.nodes_[i]);
    }
  }
  p.leq_.assign(p.nodes_.size() * p.nodes_.size(), false);
  for (std::size_t i = 0; i < p.nodes_.size(); ++i) p.set_leq(i, i);
  for (const auto& [a, b] : leq_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw std::invalid_argument("leq pair references unknown node");
    }
    p.set_leq(ia->second, ib->second);
  }
  if (root) {
    auto ir = index.find(*root);
    if (ir == index.end()) throw std::invalid_argument("root is not a node");
    p.root_ = ir->second;
  }
  return p;
}

std::optional<std::size_t> FinitePseudotree::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePseudotree::glb(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t z = 0; z < size(); ++z) {
    if (!leq(z, a) || !leq(z, b)) continue;
    if (!best || leq(*best, z)) best = z;
  }
  // best is only the glb if it dominates every common lower bound.
  if (best) {
    for (std::size_t z = 0; z < size(); ++z) {
      if (leq(z, a) && leq(z, b) && !leq(z, *best)) return std::nullopt;
    }
  }
  return best;
}

std::string FinitePseudotree::to_json() const {
  json out;
  out["nodes"] = nodes_;
  json rel = json::array();
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a != b && leq(a, b)) rel.push_back({nodes_[a], nodes_[b]});
    }
  }
  out["leq"] = rel;
  out["root"] = root_ ? json(nodes_[*root_]) : json(nullptr);
  return out.dump(2);
}

FinitePseudotree FinitePseudotree::from_json(const std::string& text) {
  json in = json::parse(text);
  if (!in.is_object() || !in.contains("nodes") || !in.contains("leq")) {
    throw std::invalid_argument("structure JSON needs \"nodes\" and \"leq\"");
  }
  std::vector<std::string> nodes = in.at("nodes").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : in.at("leq")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("leq entries must be [a, b] pairs");
    }
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::optional<std::string> root;
  if (in.contains("root") && !in.at("root").is_null()) {
    root = in.at("root").get<std::string>();
  }
  return from_relation(std::move(nodes), pairs, std::move(root));
}

std::string FinitePseudotree::to_dot() const {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& n : nodes_) out << "  \"" << n << "\";\n";
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;  // b covers a: nothing strictly between
      for (std::size_t z = 0; z < size(); ++z) {
        if (z != a && z != b && leq(a, z) && leq(z, b)) {
          covered = false;
          break;
        }
      }
      if (covered) out << "  \"" << nodes_[a] << "\" -> \"" << nodes_[b] << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

CheckReport check_pseudotree(const FinitePseudotree& p) {
  CheckReport r;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.leq(a, a)) r.violations.push_back({"reflexivity", {p.node(a)}});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.leq(a, b) && p.leq(b, a)) {
        r.violations.push_back({"antisymmetry", {p.node(a), p.node(b)}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != b && p.leq(b, c) && !p.leq(a, c)) {
          r.violations.push_back({"transitivity", {p.node(a), p.node(b), p.node(c)}});
        }
      }
    }
  }
  // Down-set of every t must be a chain.
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!p.leq(a, t)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (p.leq(b, t) && !p.leq(a, b) && !p.leq(b, a)) {
          r.violations.push_back({"downset-linearity", {p.node(a), p.node(b), p.node(t)}});
        }
      }
    }
  }
  if (p.root_index()) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!p.leq(*p.root_index(), a)) {
        r.violations.push_back({"root-not-least", {p.node(*p.root_index()), p.node(a)}});
      }
    }
  }
  return r;
}

CheckReport check_pm(const FinitePseudotree& p) {
  CheckReport r = check_pseudotree(p);
  if (!r.ok()) return r;
  const std::size_t n = p.size();
  std::optional<std::size_t> least;
  for (std::size_t a = 0; a < n; ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.leq(a, b)) {
        below_all = false;
        break;
      }
    }
    if (below_all) {
      least = a;
      break;
    }
  }
  if (!least) {
    r.violations.push_back({"no-least-element", {}});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto m = p.glb(a, b);
      if (!m) {
        r.violations.push_back({"no-meet", {p.node(a), p.node(b)}});
        continue;
      }
      if (p.has_meet_table() && p.meet(a, b) != *m) {
        r.violations.push_back(
            {"meet-table-mismatch", {p.node(a), p.node(b), p.node(p.meet(a, b)), p.node(*m)}});
      }
      // Definability of the order through the meet.
      if (p.leq(a, b) != (*m == a)) {
        r.violations.push_back({"leq-meet-identity", {p.node(a), p.node(b)}});
      }
    }
  }
  return r;
}

namespace {

std::string downset_id(const std::set<std::string>& members) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : members) {
    if (!first) out += ",";
    out += m;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

CompletionResult complete_to_pm(const FinitePseudotree& input) {
  CheckReport pre = check_pseudotree(input);
  if (!pre.ok()) {
    throw ValidationError("complete_to_pm: input is not a pseudotree", pre);
  }
  const std::size_t n = input.size();

  std::vector<std::set<std::string>> downsets(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t x = 0; x < n; ++x) {
      if (input.leq(x, t)) downsets[t].insert(input.node(x));
    }
  }

  // Down-sets, their pairwise intersections, and the empty set unless the
  // input already has a least element.
  std::set<std::set<std::string>> universe(downsets.begin(), downsets.end());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::set<std::string> inter;
      std::set_intersection(downsets[a].begin(), downsets[a].end(), downsets[b].begin(),
                            downsets[b].end(), std::inserter(inter, inter.begin()));
      universe.insert(std::move(inter));
    }
  }
  bool has_least = false;
  for (std::size_t a = 0; a < n && !has_least; ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (!input.leq(a, b)) {
        below_all = false;
        break;
      }
    }
    has_least = below_all;
  }
  if (!has_least) universe.insert(std::set<std::string>{});

  std::vector<std::set<std::string>> elems(universe.begin(), universe.end());
  std::sort(elems.begin(), elems.end(),
            [](const std::set<std::string>& a, const std::set<std::string>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  FinitePseudotree out;
  for (const auto& s : elems) out.nodes_.push_back(downset_id(s));
  const std::size_t m = elems.size();
  out.leq_.assign(m * m, false);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (std::includes(elems[b].begin(), elems[b].end(), elems[a].begin(), elems[a].end())) {
        out.set_leq(a, b);
      }
    }
  }
  out.root_ = 0;  // sorted by size: the least down-set comes first
  std::map<std::set<std::string>, std::size_t> elem_index;
  for (std::size_t i = 0; i < m; ++i) elem_index[elems[i]] = i;
  out.meet_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      std::set<std::string> inter;
      std::set_intersection(elems[a].begin(), elems[a].end(), elems[b].begin(), elems[b].end(),
                            std::inserter(inter, inter.begin()));
      auto it = elem_index.find(inter);
      if (it == elem_index.end()) {
        // Cannot happen for pseudotree input; guard against silent misuse.
        throw std::logic_error("completion universe not intersection-closed");
      }
      out.meet_[a * m + b] = it->second;
      out.meet_[b * m + a] = it->second;
    }
  }

  CompletionResult result;
  result.completed = std::move(out);
  for (std::size_t t = 0; t < n; ++t) {
    result.embedding[input.node(t)] = downset_id(downsets[t]);
  }
  return result;
}

FinitePseudotree random_pseudotree(std::uint64_t seed, std::size_t size) {
  if (size == 0) throw std::invalid_argument("random_pseudotree: size must be >= 1");
  SplitMix64 rng(seed);
  std::vector<std::optional<std::size_t>> parent(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::uint64_t r = rng.below(i + 1);
    if (r < i) parent[i] = static_cast<std::size_t>(r);
  }
  FinitePseudotree p;
  for (std::size_t i = 0; i < size; ++i) p.nodes_.push_back("n" + std::to_string(i));
  p.leq_.assign(size * size, false);
  for (std::size_t i = 0; i < size; ++i) {
    p.set_leq(i, i);
    for (auto a = parent[i]; a; a = parent[*a]) p.set_leq(*a, i);
  }
  std::size_t minimal_count = 0;
  std::size_t last_minimal = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (!parent[i]) {
      ++minimal_count;
      last_minimal = i;
    }
  }
  if (minimal_count == 1) p.root_ = last_minimal;
  return p;
}

}  // namespace ptq
