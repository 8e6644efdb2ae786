#ifndef PTQ_PSEUDOTREE_HPP
#define PTQ_PSEUDOTREE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptq {

// One failed axiom instance, named after the axiom with the offending nodes.
struct Violation {
  std::string kind;
  std::vector<std::string> witnesses;
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_json() const;
};

// Thrown when an operation's input fails its validity precondition.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, CheckReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

struct CompletionResult;

// Finite partial order intended to have linearly ordered down-sets. The
// relation is stored explicitly; nothing about it is assumed until checked.
class FinitePseudotree {
 public:
  FinitePseudotree() = default;

  // `leq_pairs` lists related node pairs by id; the reflexive pairs are
  // implied. Unknown ids are rejected with std::invalid_argument.
  static FinitePseudotree from_relation(
      std::vector<std::string> nodes,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs,
      std::optional<std::string> root);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::string& node(std::size_t i) const { return nodes_[i]; }
  std::optional<std::size_t> index_of(const std::string& id) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * nodes_.size() + b]; }
  const std::optional<std::size_t>& root_index() const { return root_; }

  bool has_meet_table() const { return !meet_.empty(); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * nodes_.size() + b]; }

  // Greatest lower bound computed from the relation, if one exists.
  std::optional<std::size_t> glb(std::size_t a, std::size_t b) const;

  std::string to_json() const;
  static FinitePseudotree from_json(const std::string& text);

  // Hasse diagram of the relation.
  std::string to_dot() const;

  friend CompletionResult complete_to_pm(const FinitePseudotree& input);
  friend FinitePseudotree random_pseudotree(std::uint64_t seed, std::size_t size);

 private:
  std::vector<std::string> nodes_;
  std::vector<bool> leq_;          // row-major adjacency
  std::optional<std::size_t> root_;
  std::vector<std::size_t> meet_;  // optional total meet table

  void set_leq(std::size_t a, std::size_t b) { leq_[a * nodes_.size() + b] = true; }
};

// Order axioms: reflexive, antisymmetric, transitive, linearly ordered
// down-sets, declared root below everything.
CheckReport check_pseudotree(const FinitePseudotree& p);

// Pseudotree axioms plus: a least element exists, every pair has a greatest
// lower bound, an explicit meet table (if any) matches it, and leq(p,q) is
// equivalent to meet(p,q) == p.
CheckReport check_pm(const FinitePseudotree& p);

struct CompletionResult {
  FinitePseudotree completed;                    // with root and meet table
  std::map<std::string, std::string> embedding;  // input node -> completed node
};

// Embeds the input into a structure with a least element and total binary
// meets: nodes become their down-sets, closed under pairwise intersection,
// with the empty set added when no least element arises otherwise. Output
// ids are canonical sorted-set encodings like "{a,b}". Throws
// ValidationError when the input fails check_pseudotree.
CompletionResult complete_to_pm(const FinitePseudotree& input);

// Seeded generator: grows a forest by attaching each node above a uniformly
// chosen existing node or as a new minimal node. Always a pseudotree;
// identical (seed, size) gives identical output. size must be >= 1.
FinitePseudotree random_pseudotree(std::uint64_t seed, std::size_t size);

}  // namespace ptq

#endif
