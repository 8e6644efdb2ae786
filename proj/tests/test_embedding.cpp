#include <doctest.h>

#include <stdexcept>

#include "ptq/embedding.hpp"
#include "ptq/random.hpp"

using namespace ptq;

namespace {

// T with root 0 and incomparable x, y above it.
FinitePseudotree vee() {
  return FinitePseudotree::from_relation({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}}, "0");
}

}  // namespace

TEST_CASE("one-point extension over the root uses an empty splitting family") {
  auto dom = make_finite_structure(
      FinitePseudotree::from_relation({"0", "a"}, {{"0", "a"}}, "0"), 0);
  auto tq = make_tq_structure();
  auto pi = PartialEmbedding<std::string, TqElement>::initial("0", tq.root);
  pi = extend_embedding(dom, tq, pi, std::string("a"));
  CHECK(pi.size() == 2);
  CHECK(pi.image("a") == TqElement::parse("[(0/1:0)]"));
  CHECK(validate_embedding(dom, tq, pi).ok());
}

TEST_CASE("one-point extension splits against the existing branch") {
  auto dom = make_finite_structure(vee(), 0);
  auto tq = make_tq_structure();
  auto pi = PartialEmbedding<std::string, TqElement>::initial("0", tq.root);
  pi = extend_embedding(dom, tq, pi, std::string("x"));
  CHECK(pi.image("x") == TqElement::parse("[(0/1:0)]"));
  pi = extend_embedding(dom, tq, pi, std::string("y"));
  CHECK(pi.image("y") == TqElement::parse("[(0/1:1)]"));
  CHECK(tq_meet(pi.image("x"), pi.image("y")).is_root());
  CHECK(validate_embedding(dom, tq, pi).ok());
}

TEST_CASE("extension is idempotent on elements already present") {
  auto dom = make_finite_structure(vee(), 0);
  auto tq = make_tq_structure();
  auto pi = PartialEmbedding<std::string, TqElement>::initial("0", tq.root);
  pi = extend_embedding(dom, tq, pi, std::string("x"));
  auto again = extend_embedding(dom, tq, pi, std::string("x"));
  CHECK(again.size() == pi.size());
  CHECK(again.image("x") == pi.image("x"));
}

TEST_CASE("a density step is used when the maximal meet is a new element") {
  // chain 0 < a < b embedded out of order: after 0 and b, inserting an
  // element whose meet with the domain falls strictly between them.
  auto dom = make_finite_structure(
      FinitePseudotree::from_relation({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}, {"a", "b"}},
                                      "0"),
      0);
  auto tq = make_tq_structure();
  auto pi = PartialEmbedding<std::string, TqElement>::initial("0", tq.root);
  pi = extend_embedding(dom, tq, pi, std::string("b"));
  pi = extend_embedding(dom, tq, pi, std::string("a"));
  CHECK(pi.size() == 3);
  CHECK(validate_embedding(dom, tq, pi).ok());
  CHECK(tq_leq(pi.image("a"), pi.image("b")));
  CHECK(pi.image("a") != pi.image("b"));
}

TEST_CASE("whole random completions embed into the universal structure") {
  SplitMix64 seeds(202);
  auto tq = make_tq_structure();
  for (int t = 0; t < 15; ++t) {
    auto completed = complete_to_pm(random_pseudotree(seeds.next(), 1 + seeds.below(12))).completed;
    auto dom = make_finite_structure(completed, seeds.next());
    CountableEmbedding<std::string, TqElement> run(dom, tq);
    const auto& pi = run.prefix(completed.size());
    for (std::size_t i = 0; i < completed.size(); ++i) {
      CHECK(pi.contains(completed.node(i)));
    }
    CHECK(validate_embedding(dom, tq, pi).ok());
  }
}

TEST_CASE("embedding prefixes form a chain") {
  auto completed = complete_to_pm(random_pseudotree(8, 10)).completed;
  auto dom = make_finite_structure(completed, 4);
  auto tq = make_tq_structure();
  CountableEmbedding<std::string, TqElement> run(dom, tq);
  PartialEmbedding<std::string, TqElement> prev = run.prefix(0);
  CHECK(prev.size() == 1);  // the root
  for (std::uint64_t n = 1; n <= completed.size(); ++n) {
    const auto& cur = run.prefix(n);
    CHECK(prev.extended_by(cur));
    prev = cur;
  }
}

TEST_CASE("self-embedding of the universal structure along its enumeration") {
  auto tq = make_tq_structure();
  CountableEmbedding<TqElement, TqElement> run(tq, tq);
  const auto& pi = run.prefix(25);
  CHECK(validate_embedding(tq, tq, pi).ok());
  for (std::uint64_t i = 0; i < 25; ++i) CHECK(pi.contains(tq_enumerate(i)));
}

TEST_CASE("embedding rejects structures that break the meet laws") {
  // Claim a meet table that is wrong: x ^ y = x although x, y are
  // incomparable. The law check must throw before anything is embedded.
  EnumeratedStructure<std::string> bogus;
  std::vector<std::string> elems = {"0", "x", "y"};
  bogus.element_at = [elems](std::uint64_t i) { return elems[i % elems.size()]; };
  bogus.leq = [](const std::string& a, const std::string& b) { return a == "0" || a == b; };
  bogus.meet = [](const std::string& a, const std::string& b) {
    return a == "0" || b == "0" ? std::string("0") : a;  // wrong on {x,y}
  };
  bogus.root = "0";
  bogus.show = [](const std::string& e) { return e; };
  auto tq = make_tq_structure();
  CountableEmbedding<std::string, TqElement> run(bogus, tq);
  CHECK_THROWS_AS(run.prefix(3), ValidationError);
}

TEST_CASE("back-and-forth at n = 0 maps root to root") {
  auto a = make_tq_structure();
  auto b = make_tq_structure_shuffled(17);
  auto [pi, sigma] = isomorphism_prefix(a, b, 0);
  CHECK(pi.size() == 1);
  CHECK(pi.image(a.root) == b.root);
  CHECK(sigma.image(b.root) == a.root);
}

TEST_CASE("back-and-forth between two enumerations of the universal structure") {
  auto a = make_tq_structure();
  auto b = make_tq_structure_shuffled(17);
  IsomorphismRun<TqElement, TqElement> run(a, b);
  PartialEmbedding<TqElement, TqElement> prev_pi = run.pi();
  for (std::uint64_t n = 1; n <= 12; ++n) {
    run.step_to(n);
    CHECK(prev_pi.extended_by(run.pi()));
    prev_pi = run.pi();
    for (std::uint64_t i = 0; i < n; ++i) {
      CHECK(run.pi().contains(a.element_at(i)));
      CHECK(run.pi().contains_image(b.element_at(i)));
    }
  }
  CHECK(validate_embedding(a, b, run.pi()).ok());
  CHECK(validate_embedding(b, a, run.sigma()).ok());
  // mutually inverse
  for (const auto& [x, y] : run.pi().pairs()) {
    CHECK(run.sigma().image(y) == x);
  }
}

TEST_CASE("back-and-forth against the rescaled presentation") {
  auto a = make_tq_structure();
  auto b = make_tq_structure_scaled(Rational(2));
  auto [pi, sigma] = isomorphism_prefix(a, b, 20);
  CHECK(validate_embedding(a, b, pi).ok());
  CHECK(validate_embedding(b, a, sigma).ok());
}

TEST_CASE("a completed size-20 structure embeds in enumeration order") {
  auto completed = complete_to_pm(random_pseudotree(321, 20)).completed;
  auto dom = make_finite_structure(completed, 9);
  auto tq = make_tq_structure();
  CountableEmbedding<std::string, TqElement> run(dom, tq);
  const auto& pi = run.prefix(20);
  for (std::uint64_t i = 0; i < 20; ++i) CHECK(pi.contains(dom.element_at(i)));
  CHECK(validate_embedding(dom, tq, pi).ok());
}
