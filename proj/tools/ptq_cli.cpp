// Command-line surface for the pseudotree toolkit: structure generation and
// checking, completion to a meet-structure, embeddings into the universal
// pseudotree, back-and-forth isomorphism prefixes, sequential-tree ranks,
// and ordinal term arithmetic.
//
// Exit codes: 0 success, 1 validation failure (a JSON violation report is
// printed), 2 malformed input or unusable flags.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptq/embedding.hpp"
#include "ptq/ordinal.hpp"
#include "ptq/pseudotree.hpp"
#include "ptq/seqtree.hpp"
#include "ptq/structure.hpp"
#include "ptq/tq.hpp"

namespace {

using nlohmann::json;
using namespace ptq;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kBadInput = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw BadInput("cannot open output file: " + out_path);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw BadInput("cannot read input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

FinitePseudotree load_structure(const std::string& path) {
  try {
    return FinitePseudotree::from_json(slurp(path));
  } catch (const json::exception& e) {
    throw BadInput("bad structure JSON: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw BadInput("bad structure JSON: " + std::string(e.what()));
  }
}

int report_failure(const CheckReport& report) {
  std::cout << report.to_json() << '\n';
  return kValidationFailure;
}

int run_gen(std::uint64_t seed, std::uint64_t size, const std::string& format,
            const std::string& out) {
  if (size == 0) throw BadInput("--size must be at least 1");
  FinitePseudotree p = random_pseudotree(seed, size);
  emit(format == "dot" ? p.to_dot() : p.to_json(), out);
  return kOk;
}

int run_check(const std::string& in, bool pm) {
  FinitePseudotree p = load_structure(in);
  CheckReport report = pm ? check_pm(p) : check_pseudotree(p);
  std::cout << report.to_json() << '\n';
  return report.ok() ? kOk : kValidationFailure;
}

int run_complete(const std::string& in, const std::string& format, const std::string& out,
                 const std::string& embedding_out) {
  FinitePseudotree p = load_structure(in);
  CompletionResult r = complete_to_pm(p);
  emit(format == "dot" ? r.completed.to_dot() : r.completed.to_json(), out);
  if (!embedding_out.empty()) {
    json m = json::array();
    for (const auto& [from, to] : r.embedding) m.push_back({from, to});
    emit(m.dump(2), embedding_out);
  }
  return kOk;
}

int run_embed_tq(const std::string& in, std::uint64_t order_seed, const std::string& out) {
  FinitePseudotree p = load_structure(in);
  CheckReport pm = check_pm(p);
  if (!pm.ok()) return report_failure(pm);
  auto dom = make_finite_structure(p, order_seed);
  auto tq = make_tq_structure();
  CountableEmbedding<std::string, TqElement> run(dom, tq);
  const auto& pi = run.prefix(p.size());
  json pairs = json::array();
  for (const auto& [node, image] : pi.pairs()) {
    pairs.push_back({node, image.to_string()});
  }
  emit(pairs.dump(2), out);
  return kOk;
}

int run_iso_prefix(std::uint64_t n, const std::string& b_mode, std::uint64_t b_seed,
                   const std::string& b_scale, const std::string& out) {
  auto a = make_tq_structure();
  EnumeratedStructure<TqElement> b;
  if (b_mode == "shuffle") {
    b = make_tq_structure_shuffled(b_seed);
  } else {
    Rational scale;
    try {
      scale = Rational::parse(b_scale);
    } catch (const std::exception&) {
      throw BadInput("--b-scale must be a rational like 2 or 1/2");
    }
    if (!(Rational(0) < scale)) throw BadInput("--b-scale must be positive");
    b = make_tq_structure_scaled(scale);
  }
  auto [pi, sigma] = isomorphism_prefix(a, b, n);
  json out_json;
  json jp = json::array();
  for (const auto& [x, y] : pi.pairs()) jp.push_back({x.to_string(), y.to_string()});
  json js = json::array();
  for (const auto& [x, y] : sigma.pairs()) js.push_back({x.to_string(), y.to_string()});
  out_json["pi"] = std::move(jp);
  out_json["sigma"] = std::move(js);
  emit(out_json.dump(2), out);
  return kOk;
}

SequentialTree load_tree(const std::string& path) {
  try {
    return SequentialTree::from_json(slurp(path));
  } catch (const json::exception& e) {
    throw BadInput("bad tree JSON: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw BadInput("bad tree JSON: " + std::string(e.what()));
  }
}

json sequence_to_json(const Sequence& s) {
  json a = json::array();
  for (auto v : s) a.push_back(v);
  return a;
}

int run_rank(const std::string& in, const std::string& format, const std::string& out) {
  SequentialTree t = load_tree(in);
  if (t.empty()) throw BadInput("rank needs a nonempty tree");
  RankResult r = rank(t);
  if (format == "text") {
    std::ostringstream ss;
    for (const auto& [node, rk] : r.ranks) {
      ss << sequence_to_json(node).dump() << " " << rk << "\n";
    }
    ss << "tree rank: " << r.tree_rank << "\n";
    emit(ss.str(), out);
  } else {
    json j;
    json ranks = json::array();
    for (const auto& [node, rk] : r.ranks) ranks.push_back({sequence_to_json(node), rk});
    j["ranks"] = std::move(ranks);
    j["tree_rank"] = r.tree_rank;
    emit(j.dump(2), out);
  }
  return kOk;
}

int run_canonical_tree(const std::string& alpha_text, std::uint64_t width,
                       std::uint64_t depth, const std::string& format,
                       const std::string& out) {
  OrdTerm alpha;
  try {
    alpha = parse_ord_term(alpha_text);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  RankRecipe recipe;
  try {
    recipe = canonical_tree(alpha);
  } catch (const std::invalid_argument& e) {
    CheckReport report;
    report.violations.push_back({"precondition", {e.what()}});
    return report_failure(report);
  }
  TruncationBounds bounds;
  bounds.max_family_width = width;
  bounds.max_depth = depth;
  SequentialTree t = truncate(recipe, bounds);
  if (format == "text") {
    std::ostringstream ss;
    ss << "symbolic rank: " << recipe.symbolic_rank().to_string() << "\n";
    ss << "nodes: " << t.size() << "\n";
    ss << "truncation rank: " << rank(t).tree_rank << "\n";
    emit(ss.str(), out);
  } else {
    emit(t.to_json(), out);
  }
  return kOk;
}

int run_ord(const std::string& op, const std::vector<std::string>& args,
            const std::string& order_flag, const std::string& out) {
  std::optional<OrderKind> force;
  if (order_flag == "standard") force = OrderKind::Standard;
  if (order_flag == "cut") force = OrderKind::Cut;

  std::vector<OrdTerm> terms;
  try {
    for (const auto& a : args) terms.push_back(parse_ord_term(a, force));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  // Without an explicit order, homogenize: a prime anywhere makes the whole
  // invocation CUT (naturals embed into the cut order).
  if (!force) {
    bool any_cut = false;
    for (const auto& t : terms) any_cut |= t.order() == OrderKind::Cut;
    if (any_cut) {
      for (auto& t : terms) {
        if (t.order() == OrderKind::Standard) {
          t = OrdTerm::make(OrderKind::Cut, t.parts());
        }
      }
    }
  }

  try {
    std::ostringstream ss;
    if (op == "cmp") {
      auto c = ord_cmp(terms.at(0), terms.at(1));
      ss << (c < 0 ? "less" : c > 0 ? "greater" : "equal") << "\n";
    } else if (op == "add") {
      ss << ord_add(terms.at(0), terms.at(1)).to_string() << "\n";
    } else if (op == "sub") {
      ss << ord_sub(terms.at(0), terms.at(1)).to_string() << "\n";
    } else if (op == "split") {
      OrdSplit s = split(terms.at(0));
      ss << "i = " << s.nonstandard.to_string() << "\n";
      ss << "w = " << s.standard.to_string() << "\n";
    } else if (op == "between") {
      ss << dense_between(terms.at(0), terms.at(1)).to_string() << "\n";
    } else {
      throw BadInput("unknown ord operation: " + op);
    }
    emit(ss.str(), out);
    return kOk;
  } catch (const std::invalid_argument& e) {
    CheckReport report;
    report.violations.push_back({"precondition", {e.what()}});
    return report_failure(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal countable pseudotree toolkit"};
  app.require_subcommand(1);

  std::string out;

  auto* gen = app.add_subcommand("gen-pseudotree", "generate a seeded random pseudotree");
  std::uint64_t gen_seed = 0, gen_size = 8;
  std::string gen_format = "json";
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--size", gen_size, "number of nodes")->required();
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  gen->add_option("--out", out, "output path (default stdout)");

  auto* check = app.add_subcommand("check", "check the order axioms of a structure file");
  std::string check_in;
  bool check_pm_flag = false;
  check->add_option("--in", check_in, "structure JSON file")->required();
  check->add_flag("--pm", check_pm_flag, "also require least element and binary meets");

  auto* complete = app.add_subcommand("complete", "complete a pseudotree to a meet-structure");
  std::string complete_in, complete_format = "json", embedding_out;
  complete->add_option("--in", complete_in)->required();
  complete->add_option("--format", complete_format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  complete->add_option("--embedding-out", embedding_out, "write the node embedding here");
  complete->add_option("--out", out);

  auto* embed = app.add_subcommand(
      "embed-tq", "embed a finite meet-structure into the universal pseudotree");
  std::string embed_in;
  std::uint64_t embed_seed = 0;
  embed->add_option("--in", embed_in)->required();
  embed->add_option("--order-seed", embed_seed, "seed for the extension order")->capture_default_str();
  embed->add_option("--out", out);

  auto* iso = app.add_subcommand(
      "iso-prefix", "back-and-forth between two presentations of the universal pseudotree");
  std::uint64_t iso_n = 10, iso_b_seed = 1;
  std::string iso_b_mode = "shuffle", iso_b_scale = "2";
  iso->add_option("--n", iso_n, "enumeration prefix covered on each side")->capture_default_str();
  iso->add_option("--b-mode", iso_b_mode)->check(CLI::IsMember({"shuffle", "scale"}))->capture_default_str();
  iso->add_option("--b-seed", iso_b_seed, "shuffle seed for the second presentation")->capture_default_str();
  iso->add_option("--b-scale", iso_b_scale, "rational scale for the second presentation")->capture_default_str();
  iso->add_option("--out", out);

  auto* rank_cmd = app.add_subcommand("rank", "rank table of a sequential tree");
  std::string rank_in, rank_format = "json";
  rank_cmd->add_option("--in", rank_in)->required();
  rank_cmd->add_option("--format", rank_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  rank_cmd->add_option("--out", out);

  auto* canon = app.add_subcommand("canonical-tree",
                                   "truncated tree of a prescribed ordinal rank");
  std::string canon_alpha, canon_format = "json";
  std::uint64_t canon_width = 4, canon_depth = 32;
  canon->add_option("--alpha", canon_alpha, "ordinal term")->required();
  canon->add_option("--width", canon_width, "children per omega family")->capture_default_str();
  canon->add_option("--depth", canon_depth, "maximum sequence length")->capture_default_str();
  canon->add_option("--format", canon_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  canon->add_option("--out", out);

  auto* ord = app.add_subcommand("ord", "ordinal term arithmetic");
  std::string ord_op, ord_order = "infer";
  std::vector<std::string> ord_args;
  ord->add_option("op", ord_op, "cmp | add | sub | split | between")->required();
  ord->add_option("terms", ord_args, "term arguments")->expected(1, 2);
  ord->add_option("--order", ord_order)->check(CLI::IsMember({"infer", "standard", "cut"}))->capture_default_str();
  ord->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (gen->parsed()) return run_gen(gen_seed, gen_size, gen_format, out);
    if (check->parsed()) return run_check(check_in, check_pm_flag);
    if (complete->parsed())
      return run_complete(complete_in, complete_format, out, embedding_out);
    if (embed->parsed()) return run_embed_tq(embed_in, embed_seed, out);
    if (iso->parsed()) return run_iso_prefix(iso_n, iso_b_mode, iso_b_seed, iso_b_scale, out);
    if (rank_cmd->parsed()) return run_rank(rank_in, rank_format, out);
    if (canon->parsed())
      return run_canonical_tree(canon_alpha, canon_width, canon_depth, canon_format, out);
    if (ord->parsed()) {
      std::size_t want = (ord_op == "split") ? 1 : 2;
      if (ord_args.size() != want) {
        throw BadInput("ord " + ord_op + " takes " + std::to_string(want) + " term(s)");
      }
      return run_ord(ord_op, ord_args, ord_order, out);
    }
  } catch (const ValidationError& e) {
    return report_failure(e.report());
  } catch (const BadInput& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
