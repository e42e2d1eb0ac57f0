#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "generators.hpp"
#include "minseq/calculus.hpp"
#include "minseq/core.hpp"
#include "minseq/errors.hpp"
#include "minseq/semantics.hpp"

using namespace minseq;

namespace {

const std::vector<std::string> kVars = {"P", "Q", "R"};

std::vector<Sequent> seqs(std::initializer_list<const char*> texts) {
  std::vector<Sequent> out;
  for (const char* t : texts) out.push_back(parse_sequent(t));
  return out;
}

StepResult step(const System& sys, RuleId rule, const char* conclusion,
                std::initializer_list<const char*> premises) {
  return check_step(sys, rule, parse_sequent(conclusion), seqs(premises));
}

const std::vector<System> kPresets = {gs1p(), gs3p(), mp(),
                                      mp_minus(), pp(), np()};

}  // namespace

TEST_CASE("rule names and arities") {
  CHECK(rule_arity(RuleId::Ax) == 0);
  for (RuleId r : {RuleId::Plus1, RuleId::Plus2, RuleId::Par, RuleId::Weaken,
                   RuleId::Contract})
    CHECK(rule_arity(r) == 1);
  for (RuleId r : {RuleId::Tensor, RuleId::With, RuleId::Wedge})
    CHECK(rule_arity(r) == 2);

  for (RuleId r : {RuleId::Ax, RuleId::Tensor, RuleId::With, RuleId::Wedge,
                   RuleId::Plus1, RuleId::Plus2, RuleId::Par, RuleId::Weaken,
                   RuleId::Contract})
    CHECK(rule_from_name(rule_name(r)) == r);
  CHECK(rule_name(RuleId::Weaken) == "w");
  CHECK(rule_name(RuleId::Wedge) == "wedge");
  CHECK(!rule_from_name("foo").has_value());
}

TEST_CASE("presets carry the advertised rules and axioms") {
  CHECK(gs1p().axiom == Axiom::Plain);
  CHECK(gs1p().has(Toggle::With));
  CHECK(gs1p().has(Toggle::Plus));
  CHECK(gs1p().has(Toggle::Weaken));
  CHECK(gs1p().has(Toggle::Contract));
  CHECK(!gs1p().has(Toggle::Tensor));
  CHECK(!gs1p().has(Toggle::Par));

  CHECK(gs3p().axiom == Axiom::WithContext);
  CHECK(gs3p().has(Toggle::With));
  CHECK(gs3p().has(Toggle::Par));
  CHECK(!gs3p().has(Toggle::Weaken));

  CHECK(mp().has(Toggle::Wedge));
  CHECK(mp().has(Toggle::Plus));
  CHECK(mp().has(Toggle::Par));
  CHECK(!mp().has(Toggle::Tensor));
  CHECK(!mp().has(Toggle::With));

  CHECK(mp_minus().has(Toggle::Tensor));
  CHECK(mp_minus().has(Toggle::With));
  CHECK(!mp_minus().has(Toggle::Wedge));

  CHECK(pp().has(Toggle::Tensor));
  CHECK(pp().has(Toggle::Contract));
  CHECK(np().has(Toggle::With));
  CHECK(np().has(Toggle::Weaken));

  // allows(): Ax always, members of the rule set, nothing else.
  CHECK(mp().allows(RuleId::Ax));
  CHECK(mp().allows(RuleId::Wedge));
  CHECK(mp().allows(RuleId::Plus1));
  CHECK(mp().allows(RuleId::Plus2));
  CHECK(mp().allows(RuleId::Par));
  CHECK(!mp().allows(RuleId::Tensor));
  CHECK(!mp().allows(RuleId::With));
  CHECK(!mp().allows(RuleId::Weaken));
  CHECK(!mp().allows(RuleId::Contract));
}

TEST_CASE("the system mini-language parses presets and rule lists") {
  for (const char* name : {"gs1p", "gs3p", "mp", "mp-", "pp", "np"}) {
    auto sys = find_preset(name);
    REQUIRE(sys.has_value());
    CHECK(parse_system(name) == *sys);
    CHECK(preset_name(*sys) == std::string(name));
    CHECK(render_system(*sys) == std::string(name));
  }
  CHECK(!find_preset("zzz").has_value());

  CHECK(parse_system("wedge, plus, par") == mp());
  CHECK(parse_system("tensor,with,plus,par") == mp_minus());
  CHECK(parse_system("with, par, ctx") == gs3p());
  CHECK(parse_system("none").rules == 0);
  CHECK(render_system(System{}) == "none");
  CHECK(render_system(parse_system("c, w")) == "w,c");  // canonical order

  CHECK_THROWS_AS(parse_system("bogus"), ParseError);
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("plus,"), ParseError);

  // Roundtrip over the whole extended family, both axiom variants.
  for (int mask = 0; mask <= int(kAllToggles); ++mask)
    for (Axiom ax : {Axiom::Plain, Axiom::WithContext}) {
      System sys{ax, std::uint8_t(mask)};
      CHECK(parse_system(render_system(sys)) == sys);
    }
}

TEST_CASE("axiom checking: plain is exact, the context variant is not") {
  CHECK(step(mp(), RuleId::Ax, "P, ~P", {}).ok);
  CHECK(step(mp(), RuleId::Ax, "~P, P", {}).ok);
  CHECK(step(mp(), RuleId::Ax, "P, ~Q", {}).kind == ViolationKind::RuleMismatch);
  CHECK(!step(mp(), RuleId::Ax, "P, P", {}).ok);
  CHECK(!step(mp(), RuleId::Ax, "P, ~P, Q", {}).ok);
  CHECK(!step(mp(), RuleId::Ax, "P", {}).ok);

  CHECK(step(gs3p(), RuleId::Ax, "P, ~P, Q", {}).ok);
  CHECK(step(gs3p(), RuleId::Ax, "Q | Q, ~P, P", {}).ok);
  CHECK(!step(gs3p(), RuleId::Ax, "P, Q", {}).ok);
}

TEST_CASE("single steps match by occurrence partition") {
  // Blended conjunction with shared context: the worked example splits
  // {~P, ~Q & P} into shared {~P}, left {}, right {~Q & P}.
  CHECK(step(mp(), RuleId::Wedge, "~P, ~Q & P, P & Q",
             {"~P, P", "~P, ~Q & P, Q"})
            .ok);
  auto m = match_step(Axiom::Plain, RuleId::Wedge,
                      parse_sequent("~P, ~Q & P, P & Q"),
                      seqs({"~P, P", "~P, ~Q & P, Q"}));
  REQUIRE(m.has_value());
  CHECK(m->principal == 2);
  CHECK(render(m->shared) == "~P");
  CHECK(m->left.empty());
  CHECK(render(m->right) == "~Q & P");

  CHECK(step(mp(), RuleId::Par, "P | Q", {"P, Q, Q"}).kind ==
        ViolationKind::RuleMismatch);
  CHECK(step(mp(), RuleId::Par, "P | Q", {"P, Q"}).ok);
  CHECK(step(mp(), RuleId::Par, "~P, P | Q", {"Q, P, ~P"}).ok);

  CHECK(step(mp_minus(), RuleId::Tensor, "~P, ~Q, P & Q",
             {"~P, P", "~Q, Q"})
            .ok);
  CHECK(!step(mp_minus(), RuleId::Tensor, "~P, ~Q, P & Q",
              {"~P, P", "~P, Q"})
             .ok);

  CHECK(step(gs1p(), RuleId::With, "~P, P & P", {"~P, P", "~P, P"}).ok);
  CHECK(!step(gs1p(), RuleId::With, "~P, P & P", {"~P, P", "~Q, P"}).ok);

  CHECK(step(mp(), RuleId::Plus1, "~P, P | Q", {"~P, P"}).ok);
  CHECK(step(mp(), RuleId::Plus2, "~P, P | Q", {"~P, Q"}).ok);
  CHECK(!step(mp(), RuleId::Plus1, "~P, P | Q", {"~P, Q"}).ok);
  CHECK(!step(mp(), RuleId::Plus2, "~P, P | Q", {"~P, P"}).ok);

  CHECK(step(np(), RuleId::Weaken, "~P, P, Q", {"~P, P"}).ok);
  CHECK(step(np(), RuleId::Weaken, "P, Q", {"Q"}).ok);
  CHECK(!step(np(), RuleId::Weaken, "P, Q", {"R"}).ok);
  CHECK(!step(np(), RuleId::Weaken, "P", {"P"}).ok);  // nothing was added

  CHECK(step(gs1p(), RuleId::Contract, "~P, P", {"~P, P, P"}).ok);
  CHECK(step(gs1p(), RuleId::Contract, "~P, P", {"~P, ~P, P"}).ok);
  CHECK(step(gs1p(), RuleId::Contract, "P & Q", {"P & Q, P & Q"}).ok);
  CHECK(!step(gs1p(), RuleId::Contract, "~P, P", {"~P, P"}).ok);
  CHECK(step(gs1p(), RuleId::Contract, "~P, P", {"~P, P, Q"}).kind ==
        ViolationKind::RuleMismatch);
}

TEST_CASE("rule membership and arity are checked before matching") {
  CHECK(step(mp(), RuleId::Weaken, "P, Q", {"Q"}).kind ==
        ViolationKind::RuleNotInSystem);
  CHECK(step(pp(), RuleId::Par, "P | Q", {"P, Q"}).kind ==
        ViolationKind::RuleNotInSystem);
  CHECK(step(mp(), RuleId::Par, "P | Q", {}).kind ==
        ViolationKind::ArityMismatch);
  CHECK(step(mp(), RuleId::Wedge, "~P, P & P", {"~P, P"}).kind ==
        ViolationKind::ArityMismatch);
  CHECK(step(mp(), RuleId::Ax, "P, ~P", {"P"}).kind ==
        ViolationKind::ArityMismatch);
}

TEST_CASE("a pin restricts which occurrence may be principal") {
  Sequent c = parse_sequent("~P, P | Q");
  auto ps = seqs({"~P, P"});
  CHECK(check_step(mp(), RuleId::Plus1, c, ps, 1).ok);
  CHECK(check_step(mp(), RuleId::Plus1, c, ps, 0).kind ==
        ViolationKind::RuleMismatch);
}

TEST_CASE("context-splitting and context-sharing steps blend") {
  // Every accepted Tensor step is a Wedge step with empty shared part, and
  // every accepted With step is a Wedge step with everything shared.
  testgen::Rng rng(20260821);
  int tensor_seen = 0, with_seen = 0;
  while (tensor_seen < 50 || with_seen < 50) {
    Derivation d = testgen::grow_derivation(rng, mp_minus(), kVars, 4);
    if (d.rule != RuleId::Tensor && d.rule != RuleId::With) continue;
    std::vector<Sequent> prem;
    for (const auto& k : d.premises) prem.push_back(k.conclusion);
    REQUIRE(match_step(Axiom::Plain, d.rule, d.conclusion, prem).has_value());
    CHECK(match_step(Axiom::Plain, RuleId::Wedge, d.conclusion, prem)
              .has_value());
    (d.rule == RuleId::Tensor ? tensor_seen : with_seen) += 1;
  }
}

TEST_CASE("whole-derivation checking walks every node") {
  // The worked tautology, derived with two pars and two nested wedges.
  const char* text =
      "(par [((P & Q) | (~Q & P)) | ~P]"
      " (par [(P & Q) | (~Q & P), ~P]"
      " (wedge [P & Q, ~Q & P, ~P]"
      " (ax [P, ~P])"
      " (wedge [Q, ~Q & P, ~P] (ax [Q, ~Q]) (ax [P, ~P])))))";
  Derivation d = parse_derivation(text);
  CHECK(check_derivation(mp(), d).ok);
  CHECK(is_valid(d.conclusion));

  // The same tree fails in systems lacking the blended rule.
  CheckReport in_gs1p = check_derivation(gs1p(), d);
  CHECK(!in_gs1p.ok);
  for (const auto& v : in_gs1p.violations)
    CHECK(v.kind == ViolationKind::RuleNotInSystem);

  // Weakening on top is fine where W lives, flagged where it does not.
  Derivation base = parse_derivation("(par [P | ~P] (ax [P, ~P]))");
  Derivation weakened(RuleId::Weaken, parse_sequent("P | ~P, Q"), {base});
  CHECK(check_derivation(np(), weakened).ok);
  CheckReport r = check_derivation(mp(), weakened);
  REQUIRE(!r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].path == "root");
  CHECK(r.violations[0].kind == ViolationKind::RuleNotInSystem);

  // A broken axiom is reported at its path, and all failures are collected.
  Derivation bad_ax(RuleId::Ax, parse_sequent("P, ~Q"));
  CheckReport r2 = check_derivation(mp(), bad_ax);
  REQUIRE(!r2.ok);
  CHECK(r2.violations[0].path == "root");
  CHECK(r2.violations[0].kind == ViolationKind::RuleMismatch);

  Derivation two_bad(RuleId::Par, parse_sequent("P | ~Q"), {bad_ax});
  CheckReport r3 = check_derivation(mp(), two_bad);
  CHECK(r3.violations.size() == 1);  // the par itself matches
  CHECK(r3.violations[0].path == "0");
}

TEST_CASE("derivation files parse and render verbatim") {
  Derivation ax = parse_derivation("(ax [P, ~P])");
  CHECK(ax.rule == RuleId::Ax);
  CHECK(ax.premises.empty());
  CHECK(ax.conclusion == parse_sequent("P, ~P"));
  CHECK(render_derivation(ax) == "(ax [P, ~P])");

  Derivation par = parse_derivation("(par [P | ~P] (ax [P, ~P]))");
  CHECK(par.rule == RuleId::Par);
  REQUIRE(par.premises.size() == 1);
  CHECK(par.premises[0] == ax);
  CHECK(render_derivation(par) == "(par [P | ~P] (ax [P, ~P]))");

  Derivation pinned = parse_derivation("(plus1@1 [~P, P | Q] (ax [~P, P]))");
  CHECK(pinned.pin == std::size_t{1});
  CHECK(render_derivation(pinned) == "(plus1@1 [~P, P | Q] (ax [~P, P]))");
  CHECK(check_derivation(mp(), pinned).ok);

  CHECK_THROWS_AS(parse_derivation("(foo [P])"), UnknownRuleError);
  try {
    parse_derivation("(foo [P])");
    CHECK(false);
  } catch (const UnknownRuleError& e) {
    CHECK(e.rule_name == "foo");
  }
  CHECK_THROWS_AS(parse_derivation("(ax [P, ~P]"), ParseError);
  CHECK_THROWS_AS(parse_derivation("ax [P, ~P]"), ParseError);
  CHECK_THROWS_AS(parse_derivation("(ax [])"), ParseError);
  CHECK_THROWS_AS(parse_derivation(""), ParseError);
}

TEST_CASE("forward-generated derivations always check and conclude validly") {
  testgen::Rng rng(20260822);
  for (const System& sys : kPresets) {
    for (int k = 0; k < 200; ++k) {
      Derivation d = testgen::grow_derivation(rng, sys, kVars, 5);
      CheckReport r = check_derivation(sys, d);
      CHECK(r.ok);
      CHECK(testgen::oracle_valid(d.conclusion));

      // Text roundtrip preserves the tree exactly.
      CHECK(parse_derivation(render_derivation(d)) == d);
    }
  }
}

TEST_CASE("mutated derivations never check") {
  testgen::Rng rng(20260823);
  for (const System& sys : kPresets) {
    for (int k = 0; k < 200; ++k) {
      Derivation d = testgen::grow_derivation(rng, sys, kVars, 5);
      REQUIRE(check_derivation(sys, d).ok);
      Derivation bad = testgen::mutate(rng, sys, d);
      CHECK(!check_derivation(sys, bad).ok);
    }
  }
}
