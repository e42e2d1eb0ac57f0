#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "generators.hpp"
#include "minseq/calculus.hpp"
#include "minseq/core.hpp"
#include "minseq/errors.hpp"
#include "minseq/prover.hpp"
#include "minseq/semantics.hpp"

using namespace minseq;

namespace {

const Formula kWitness = parse_formula("((P & Q) | (~Q & P)) | ~P");

bool every_node(const Derivation& d, const std::function<bool(const Derivation&)>& p) {
  if (!p(d)) return false;
  for (const auto& k : d.premises)
    if (!every_node(k, p)) return false;
  return true;
}

bool uses_only(const Derivation& d, const System& sys) {
  return every_node(d, [&](const Derivation& n) { return sys.allows(n.rule); });
}

}  // namespace

TEST_CASE("context splitting reproduces the worked example") {
  Context delta = {parse_formula("~Q & P"), parse_formula("~P")};
  ContextSplit cs = split_context(delta, parse_formula("P"), parse_formula("Q"));
  CHECK(render(cs.shared) == "~P");
  CHECK(cs.left.empty());
  CHECK(render(cs.right) == "~Q & P");
}

TEST_CASE("context splitting with disjoint sides") {
  Context delta = {parse_formula("~P"), parse_formula("~Q")};
  ContextSplit cs = split_context(delta, parse_formula("P"), parse_formula("Q"));
  CHECK(cs.shared.empty());
  CHECK(render(cs.left) == "~P");
  CHECK(render(cs.right) == "~Q");
}

TEST_CASE("context splitting rejects non-minimal inputs") {
  Context junk = {parse_formula("Q"), parse_formula("~P")};
  CHECK_THROWS_AS(split_context(junk, parse_formula("P"), parse_formula("P")),
                  NotMinimalError);
  Context invalid = {parse_formula("P")};
  CHECK_THROWS_AS(split_context(invalid, parse_formula("P"), parse_formula("Q")),
                  NotMinimalError);
}

TEST_CASE("context splitting covers delta and keeps both premises minimal") {
  // Exhaustive over small minimal sequents whose last occurrence is a
  // conjunction; the two reconstructed premises must be minimal and the
  // three parts must repartition delta exactly.
  EnumerationBounds b;
  b.var_count = 2;
  b.max_connectives = 3;
  b.max_formulas_per_sequent = 3;
  int exercised = 0;
  for_each_sequent(b, SequentMode::Multisets, [&](const Sequent& s) {
    if (!is_minimal(s)) return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Formula f = s[i];
      if (f.is_literal() || f.conn() != Formula::Conn::And) continue;
      ContextSplit cs = split_context(s.without(i), f.left(), f.right());

      Context premise1 = cs.shared;
      premise1.insert(premise1.end(), cs.left.begin(), cs.left.end());
      premise1.push_back(f.left());
      Context premise2 = cs.shared;
      premise2.insert(premise2.end(), cs.right.begin(), cs.right.end());
      premise2.push_back(f.right());
      CHECK(is_minimal(Sequent(premise1)));
      CHECK(is_minimal(Sequent(premise2)));

      Context all = cs.shared;
      all.insert(all.end(), cs.left.begin(), cs.left.end());
      all.insert(all.end(), cs.right.begin(), cs.right.end());
      const Context delta = s.without(i);
      if (delta.empty()) {
        CHECK(all.empty());
      } else {
        CHECK(Sequent(all).canonical() == Sequent(delta).canonical());
      }
      ++exercised;
    }
    return exercised < 3000;
  });
  CHECK(exercised > 500);
}

TEST_CASE("the constructive prover handles the base cases exactly") {
  CHECK(render_derivation(prove_minimal(parse_sequent("P, ~P"))) ==
        "(ax [P, ~P])");
  CHECK(render_derivation(prove_formula(parse_formula("P | ~P"))) ==
        "(par [P | ~P] (ax [P, ~P]))");
}

TEST_CASE("the constructive prover rejects improper inputs") {
  CHECK_THROWS_AS(prove_minimal(parse_sequent("P, ~P, Q")), NotMinimalError);
  CHECK_THROWS_AS(prove_minimal(parse_sequent("P, Q")), NotMinimalError);
  CHECK_THROWS_AS(prove_formula(parse_formula("P & ~P")), NotValidError);
  CHECK_THROWS_AS(prove_formula(parse_formula("P | Q")), NotValidError);
}

TEST_CASE("the worked tautology gets the two-par wedge derivation") {
  Derivation d = prove_formula(kWitness);
  CHECK(d.conclusion == Sequent{kWitness});
  CHECK(d.rule == RuleId::Par);
  REQUIRE(d.premises.size() == 1);
  CHECK(d.premises[0].rule == RuleId::Par);
  CHECK(d.premises[0].premises[0].rule == RuleId::Wedge);
  CHECK(check_derivation(mp(), d).ok);
  CHECK(uses_only(d, mp()));
  CHECK(every_node(d, [](const Derivation& n) {
    return is_minimal(n.conclusion);
  }));
}

TEST_CASE("policies pick different principals but all derivations check") {
  Sequent s = parse_sequent("P & Q, ~P | ~Q");
  REQUIRE(is_minimal(s));
  Derivation left = prove_minimal(s, {Policy::Leftmost, 0});
  Derivation right = prove_minimal(s, {Policy::Rightmost, 0});
  CHECK(left.rule == RuleId::Wedge);
  CHECK(right.rule == RuleId::Par);
  CHECK(check_derivation(mp(), left).ok);
  CHECK(check_derivation(mp(), right).ok);
  CHECK(left.conclusion == s);
  CHECK(right.conclusion == s);

  Derivation r1 = prove_minimal(s, {Policy::Random, 12345});
  Derivation r2 = prove_minimal(s, {Policy::Random, 12345});
  CHECK(r1 == r2);  // same seed, same tree
  CHECK(check_derivation(mp(), r1).ok);
}

TEST_CASE("every small minimal sequent is provable with every node minimal") {
  EnumerationBounds b;
  b.var_count = 2;
  b.max_connectives = 3;
  b.max_formulas_per_sequent = 2;
  int proved = 0;
  for_each_sequent(b, SequentMode::Multisets, [&](const Sequent& s) {
    if (!is_minimal(s)) return true;
    Derivation d = prove_minimal(s);
    CHECK(d.conclusion == s);
    CHECK(check_derivation(mp(), d).ok);
    CHECK(every_node(d, [](const Derivation& n) {
      return is_minimal(n.conclusion);
    }));
    ++proved;
    return true;
  });
  CHECK(proved > 100);
}

TEST_CASE("search settles the worked incompleteness instance") {
  // The tautology above has no derivation once the blended conjunction is
  // replaced by its two standard halves.
  SearchOutcome out = search(mp_minus(), Sequent{kWitness});
  CHECK(out.kind == SearchOutcome::Kind::Underivable);
  CHECK(out.definitive);
  CHECK(!out.derivation.has_value());

  // The blended system derives it, and the found derivation re-checks.
  SearchOutcome in_mp = search(mp(), Sequent{kWitness});
  REQUIRE(in_mp.derivable());
  CHECK(in_mp.definitive);
  REQUIRE(in_mp.derivation.has_value());
  CHECK(in_mp.derivation->conclusion == Sequent{kWitness});
  CHECK(check_derivation(mp(), *in_mp.derivation).ok);
}

TEST_CASE("search outcomes on the padded axiom") {
  Sequent padded = parse_sequent("P, ~P, Q");

  // No weakening and no way to consume a bare Q: settled negative.
  SearchOutcome in_mp = search(mp(), padded);
  CHECK(in_mp.kind == SearchOutcome::Kind::Underivable);
  CHECK(in_mp.definitive);

  // Weakening absorbs the junk occurrence.
  SearchOutcome in_np = search(np(), padded);
  REQUIRE(in_np.derivable());
  REQUIRE(in_np.derivation.has_value());
  CHECK(in_np.derivation->conclusion == padded);
  CHECK(check_derivation(np(), *in_np.derivation).ok);

  // Contraction only ever grows the sequent here, so the search gives up at
  // its caps without a settled answer.
  SearchOutcome in_pp = search(pp(), padded);
  CHECK(in_pp.kind == SearchOutcome::Kind::Exhausted);
  CHECK(!in_pp.definitive);
}

TEST_CASE("search handles invalid goals and non-minimal derivable goals") {
  SearchOutcome invalid = search(gs1p(), parse_sequent("P, Q"));
  CHECK(invalid.kind == SearchOutcome::Kind::Underivable);
  CHECK(invalid.definitive);

  // Derivable but not minimal: the padded tautology.
  Sequent s = parse_sequent("~P, P | ~P");
  REQUIRE(!is_minimal(s));
  SearchOutcome out = search(mp(), s);
  REQUIRE(out.derivable());
  CHECK(out.derivation->conclusion == s);
  CHECK(check_derivation(mp(), *out.derivation).ok);
}

TEST_CASE("contraction can stand in for par when rebuilding a spare copy") {
  // With {&, +, c} one can contract the goal, keep one copy intact as the
  // shared context, and rebuild the other through plus steps into axioms.
  // The searcher must find this derivation and the checker must accept it.
  System sys = parse_system("with, plus, c");
  Sequent goal{parse_formula("P | (Q | (~P & ~Q))")};
  SearchOutcome out = search(sys, goal);
  REQUIRE(out.derivable());
  CHECK(check_derivation(sys, *out.derivation).ok);
  CHECK(out.derivation->conclusion == goal);
}

TEST_CASE("the four-way disjunction of conjunction pairs resists contraction") {
  // Every two-literal conjunct pairs complementary literals across variables,
  // so no width-2 interplay closes a branch without a context-splitting rule.
  Formula g4 = parse_formula("(~P & ~Q) | ((~P & Q) | ((P & ~Q) | (P & Q)))");
  REQUIRE(is_valid(Sequent{g4}));

  SearchOutcome free_of_c = search(parse_system("with, plus, par"), Sequent{g4});
  CHECK(free_of_c.kind == SearchOutcome::Kind::Underivable);
  CHECK(free_of_c.definitive);

  SearchOutcome with_c = search(parse_system("with, plus, par, c"), Sequent{g4});
  CHECK(!with_c.derivable());

  // The plain split is not enough either; blending or contraction over a
  // split is.
  SearchOutcome in_mp_minus = search(mp_minus(), Sequent{g4});
  CHECK(in_mp_minus.kind == SearchOutcome::Kind::Underivable);
  CHECK(in_mp_minus.definitive);
  CHECK(search(mp(), Sequent{g4}).derivable());
  CHECK(search(pp(), Sequent{g4}).derivable());
}

TEST_CASE("tight depth caps exhaust instead of refuting") {
  SearchBounds tight;
  tight.max_depth = 2;
  SearchOutcome out = search(mp(), Sequent{kWitness}, tight);
  CHECK(out.kind == SearchOutcome::Kind::Exhausted);
  CHECK(!out.definitive);
  CHECK(!out.derivation.has_value());
}

TEST_CASE("search agrees with the constructive prover on minimal sequents") {
  EnumerationBounds b;
  b.var_count = 2;
  b.max_connectives = 3;
  b.max_formulas_per_sequent = 2;
  SearchEngine engine(mp());
  int checked = 0;
  for_each_sequent(b, SequentMode::Multisets, [&](const Sequent& s) {
    if (!is_minimal(s)) return true;
    SearchOutcome out = engine.run(s);
    CHECK(out.derivable());
    if (out.derivation.has_value()) {
      CHECK(out.derivation->conclusion == s);
      CHECK(check_derivation(mp(), *out.derivation).ok);
    }
    ++checked;
    return checked < 400;
  });
  CHECK(checked == 400);
}

TEST_CASE("an engine keeps its conclusions across runs") {
  SearchEngine engine(np());
  Sequent goal = parse_sequent("P, ~P, Q");
  SearchOutcome first = engine.run(goal);
  SearchOutcome again = engine.run(goal);
  REQUIRE(first.derivable());
  REQUIRE(again.derivable());
  CHECK(*first.derivation == *again.derivation);

  CHECK(engine.run(parse_sequent("Q, P, ~P")).derivable());
  CHECK(!engine.run(parse_sequent("P, Q")).derivable());
  CHECK(engine.run(goal).derivable());
}

TEST_CASE("forward-grown derivations are found by search in their system") {
  testgen::Rng rng(20260831);
  const std::vector<std::string> vars = {"P", "Q"};
  for (const System& sys : {mp(), mp_minus(), np()}) {
    SearchEngine engine(sys);
    for (int k = 0; k < 40; ++k) {
      Derivation d = testgen::grow_derivation(rng, sys, vars, 3);
      if (measure(d.conclusion).connectives > 6 || d.conclusion.size() > 5)
        continue;
      SearchOutcome out = engine.run(d.conclusion);
      CHECK(out.derivable());
      if (out.derivation.has_value())
        CHECK(check_derivation(sys, *out.derivation).ok);
    }
  }
}
