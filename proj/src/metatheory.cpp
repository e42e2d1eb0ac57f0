#include "minseq/metatheory.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minseq/errors.hpp"

namespace minseq {

namespace {

constexpr std::uint8_t bit(Toggle t) { return static_cast<std::uint8_t>(t); }

constexpr std::uint8_t both(Toggle a, Toggle b) { return bit(a) | bit(b); }

Toggle toggle_of(RuleId r) {
  switch (r) {
    case RuleId::Tensor: return Toggle::Tensor;
    case RuleId::With: return Toggle::With;
    case RuleId::Wedge: return Toggle::Wedge;
    case RuleId::Plus1:
    case RuleId::Plus2: return Toggle::Plus;
    case RuleId::Par: return Toggle::Par;
    case RuleId::Weaken: return Toggle::Weaken;
    case RuleId::Contract: return Toggle::Contract;
    case RuleId::Ax: break;
  }
  throw Error("axiom steps have no toggle");
}

struct ClosureInfo {
  std::uint8_t rules = 0;
  // Schema index that first derived each toggle (by bit position), else -1.
  // "First during the fixpoint" guarantees the schema's needs were justified
  // strictly earlier, so expansion by witness schemas terminates.
  std::array<int, 7> witness{};
};

ClosureInfo closure_info(std::uint8_t rules) {
  ClosureInfo info;
  info.rules = rules;
  info.witness.fill(-1);
  const auto& table = schema_table();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::uint8_t d = bit(table[i].derived);
      if ((info.rules & d) != 0) continue;
      if ((table[i].needs & ~info.rules) != 0) continue;
      info.rules |= d;
      const auto pos = static_cast<std::size_t>(
          std::countr_zero(static_cast<unsigned>(d)));
      info.witness[pos] = static_cast<int>(i);
      changed = true;
    }
  }
  return info;
}

Derivation chain(RuleId rule, Sequent conclusion, Derivation premise) {
  std::vector<Derivation> prems;
  prems.push_back(std::move(premise));
  return Derivation(rule, std::move(conclusion), std::move(prems));
}

Derivation pair_node(RuleId rule, Sequent conclusion, Derivation p0,
                     Derivation p1) {
  std::vector<Derivation> prems;
  prems.push_back(std::move(p0));
  prems.push_back(std::move(p1));
  return Derivation(rule, std::move(conclusion), std::move(prems));
}

Context remove_first(Context ctx, const Formula& f) {
  for (auto it = ctx.begin(); it != ctx.end(); ++it) {
    if (*it == f) {
      ctx.erase(it);
      return ctx;
    }
  }
  throw Error("expansion lost track of an occurrence of " + render(f));
}

/// Stacks one Weaken per formula in `extra` on top of `d`, appending to the
/// context in order.
Derivation weaken_in(Derivation d, const Context& extra) {
  for (const Formula& g : extra) {
    Context ctx = d.conclusion.occurrences();
    ctx.push_back(g);
    d = chain(RuleId::Weaken, Sequent(std::move(ctx)), std::move(d));
  }
  return d;
}

}  // namespace

const std::array<Schema, 8>& schema_table() {
  static const std::array<Schema, 8> kTable = {{
      {Toggle::Tensor, bit(Toggle::Wedge), "tensor from wedge"},
      {Toggle::With, bit(Toggle::Wedge), "with from wedge"},
      {Toggle::Tensor, both(Toggle::With, Toggle::Weaken), "tensor from with,w"},
      {Toggle::With, both(Toggle::Tensor, Toggle::Contract), "with from tensor,c"},
      {Toggle::Plus, both(Toggle::Par, Toggle::Weaken), "plus from par,w"},
      {Toggle::Par, both(Toggle::Plus, Toggle::Contract), "par from plus,c"},
      {Toggle::Wedge, both(Toggle::With, Toggle::Weaken), "wedge from with,w"},
      {Toggle::Wedge, both(Toggle::Tensor, Toggle::Contract), "wedge from tensor,c"},
  }};
  return kTable;
}

std::uint8_t closure(const System& sys) { return closure_info(sys.rules).rules; }

std::string render_rules(std::uint8_t rules) {
  static constexpr std::pair<Toggle, const char*> kNames[] = {
      {Toggle::Tensor, "tensor"}, {Toggle::With, "with"},
      {Toggle::Wedge, "wedge"},   {Toggle::Plus, "plus"},
      {Toggle::Par, "par"},       {Toggle::Weaken, "w"},
      {Toggle::Contract, "c"},
  };
  std::string out;
  for (const auto& [toggle, name] : kNames) {
    if ((rules & bit(toggle)) == 0) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out.empty() ? "none" : out;
}

bool contains(const System& s, const System& t) {
  if ((t.rules & ~closure(s)) != 0) return false;
  if (t.axiom == Axiom::WithContext && s.axiom != Axiom::WithContext)
    return false;
  return true;
}

Derivation expand_schema(std::size_t index, RuleId rule,
                         const Sequent& conclusion, const StepMatch& match,
                         std::vector<Derivation> premises) {
  const auto& table = schema_table();
  if (index >= table.size()) throw Error("schema index out of range");
  if (rule == RuleId::Ax || toggle_of(rule) != table[index].derived)
    throw Error("schema does not apply to rule '" +
                std::string(rule_name(rule)) + "'");
  if (premises.size() != static_cast<std::size_t>(rule_arity(rule)))
    throw Error("schema expansion needs exactly the rule's premises");
  const Formula principal = conclusion[match.principal];

  switch (index) {
    case 0:  // tensor from wedge: relabel, split context entirely unshared
    case 1:  // with from wedge: relabel, context entirely shared
      return Derivation(RuleId::Wedge, conclusion, std::move(premises));

    case 2:   // tensor from with,w: weaken each premise up to the full context
    case 6: { // wedge from with,w: same, sharing already-common occurrences
      Derivation left = weaken_in(std::move(premises[0]), match.right);
      Derivation right = weaken_in(std::move(premises[1]), match.left);
      return pair_node(RuleId::With, conclusion, std::move(left),
                       std::move(right));
    }

    case 3:   // with from tensor,c: tensor duplicates the shared context,
    case 7: { // wedge from tensor,c: contract the duplicates away
      if (match.shared.empty())
        return pair_node(RuleId::Tensor, conclusion, std::move(premises[0]),
                         std::move(premises[1]));
      Context ctx =
          remove_first(premises[0].conclusion.occurrences(), principal.left());
      const Context rest =
          remove_first(premises[1].conclusion.occurrences(), principal.right());
      ctx.insert(ctx.end(), rest.begin(), rest.end());
      ctx.push_back(principal);
      Derivation cur = pair_node(RuleId::Tensor, Sequent(ctx),
                                 std::move(premises[0]), std::move(premises[1]));
      for (std::size_t k = 0; k < match.shared.size(); ++k) {
        if (k + 1 == match.shared.size()) {
          cur = chain(RuleId::Contract, conclusion, std::move(cur));
        } else {
          ctx = remove_first(std::move(ctx), match.shared[k]);
          cur = chain(RuleId::Contract, Sequent(ctx), std::move(cur));
        }
      }
      return cur;
    }

    case 4: {  // plus from par,w: weaken in the missing disjunct, then par
      const Formula& other =
          rule == RuleId::Plus1 ? principal.right() : principal.left();
      Derivation padded = weaken_in(std::move(premises[0]), Context{other});
      return chain(RuleId::Par, conclusion, std::move(padded));
    }

    case 5: {  // par from plus,c: introduce the disjunction twice, contract
      Context first =
          remove_first(premises[0].conclusion.occurrences(), principal.right());
      first.push_back(principal);
      Derivation s1 =
          chain(RuleId::Plus2, Sequent(first), std::move(premises[0]));
      Context second = remove_first(std::move(first), principal.left());
      second.push_back(principal);
      Derivation s2 =
          chain(RuleId::Plus1, Sequent(std::move(second)), std::move(s1));
      return chain(RuleId::Contract, conclusion, std::move(s2));
    }

    default:
      throw Error("schema index out of range");
  }
}

namespace {

class Elaborator {
 public:
  explicit Elaborator(const System& target)
      : target_(target), info_(closure_info(target.rules)) {}

  Derivation walk(const Derivation& d) {
    std::vector<Derivation> kids;
    kids.reserve(d.premises.size());
    for (const Derivation& p : d.premises) kids.push_back(walk(p));
    return legalize(
        Derivation(d.rule, d.conclusion, std::move(kids), d.pin));
  }

 private:
  Derivation legalize(Derivation node) {
    if (node.rule == RuleId::Ax || target_.allows(node.rule)) return node;
    const std::uint8_t toggle = bit(toggle_of(node.rule));
    if ((info_.rules & toggle) == 0)
      throw NotContainedError("rule '" + std::string(rule_name(node.rule)) +
                              "' is not derivable in " +
                              render_system(target_));
    const auto pos =
        static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(toggle)));
    const int schema = info_.witness[pos];
    if (schema < 0)
      throw NotContainedError("rule '" + std::string(rule_name(node.rule)) +
                              "' has no expansion in " +
                              render_system(target_));
    std::vector<Sequent> prems;
    prems.reserve(node.premises.size());
    for (const Derivation& k : node.premises) prems.push_back(k.conclusion);
    const auto m = match_step(target_.axiom, node.rule, node.conclusion, prems,
                              node.pin);
    if (!m)
      throw Error("cannot elaborate: step does not match rule '" +
                  std::string(rule_name(node.rule)) + "' at " +
                  render(node.conclusion));
    const Derivation expanded =
        expand_schema(static_cast<std::size_t>(schema), node.rule,
                      node.conclusion, *m, std::move(node.premises));
    // The expansion's fresh steps may themselves be derived rules of strictly
    // earlier closure rank, so one more (terminating) pass legalizes them.
    return walk(expanded);
  }

  System target_;
  ClosureInfo info_;
};

}  // namespace

Derivation elaborate(const Derivation& d, const System& target) {
  return Elaborator(target).walk(d);
}

std::vector<System> family_systems(Family family) {
  std::vector<System> out;
  for (unsigned mask = 0; mask <= kAllToggles; ++mask) {
    if (family == Family::Standard && (mask & bit(Toggle::Wedge)) != 0)
      continue;
    out.push_back(System{Axiom::Plain, static_cast<std::uint8_t>(mask)});
  }
  return out;
}

namespace {

/// Witness formula for a system predicted incomplete, chosen from its closure.
/// The cases are checked in order and cover every closure that misses one of
/// wedge, plus, par; each returned formula is valid yet underivable in any
/// system with that closure.
Formula select_witness(std::uint8_t cl) {
  const auto has = [cl](Toggle t) { return (cl & bit(t)) != 0; };
  const bool any_conj =
      has(Toggle::Tensor) || has(Toggle::With) || has(Toggle::Wedge);
  const bool any_disj = has(Toggle::Plus) || has(Toggle::Par);
  if (!any_conj) return parse_formula("P | (~P & ~P)");
  if (!any_disj) return parse_formula("P | ~P");
  if (!has(Toggle::Weaken)) {
    if (!has(Toggle::Plus)) return parse_formula("(P | ~P) | Q");
    // Without Weaken or a context-splitting conjunction, every backward step
    // keeps or grows the width while axioms sit at width two, so a derivation
    // of a single formula lives entirely at width <= 2. There, closing a
    // branch under one of these conjuncts needs the other occurrence to reach
    // both complementary literals at once, and no other conjunct offers both.
    // (Beware of deceptively simpler candidates: with Contract available, a
    // spare copy of the goal can be rebuilt through Plus to absorb leftovers,
    // which derives e.g. "P | (Q | (~P & ~Q))" from {&,+,c} alone.)
    if (!has(Toggle::Tensor))
      return parse_formula("(~P & ~Q) | ((~P & Q) | ((P & ~Q) | (P & Q)))");
  }
  if (!has(Toggle::Contract)) {
    if (!has(Toggle::Par)) return parse_formula("P | ~P");
    if (!has(Toggle::With)) return parse_formula("P | (~P & ~P)");
  }
  // Remaining incomplete closures have tensor, with, plus, and par but
  // neither structural rule, and miss only the blended conjunction.
  return parse_formula("((P & Q) | (~Q & P)) | ~P");
}

struct FormulaUniverse {
  std::vector<Formula> valid;

  FormulaUniverse(int var_count, int max_connectives) {
    TableCache cache(enumeration_variables(var_count));
    EnumerationBounds fb;
    fb.var_count = var_count;
    fb.max_connectives = max_connectives;
    fb.max_formulas_per_sequent = 1;
    for (const Formula& f : enumerate_formulas(fb))
      if (cache.table(f) == cache.full()) valid.push_back(f);
  }
};

Classification classify_with(const System& sys, const CensusBounds& b,
                             const FormulaUniverse& universe) {
  Classification c;
  c.system = sys;
  c.closure_rules = closure(sys);
  c.predicted_complete = contains(sys, mp());
  if (c.predicted_complete) {
    c.complete_at_bound = true;
    for (const Formula& f : universe.valid) {
      bool ok = false;
      try {
        const Derivation d = prove_formula(f);
        const Derivation e = elaborate(d, sys);
        ok = check_derivation(sys, e).ok && e.conclusion == Sequent{f};
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        c.complete_at_bound = false;
        c.witness = f;
        break;
      }
      ++c.formulas_proved;
    }
    c.agreement = c.complete_at_bound;
  } else {
    const Formula w = select_witness(c.closure_rules);
    c.witness = w;
    const SearchOutcome out = search(sys, Sequent{w}, b.search);
    c.witness_underivable = !out.derivable();
    c.witness_definitive =
        out.kind == SearchOutcome::Kind::Underivable && out.definitive;
    c.agreement = c.witness_underivable;
  }
  return c;
}

}  // namespace

Classification classify_system(const System& sys, const CensusBounds& b) {
  if (sys.axiom != Axiom::Plain)
    throw Error("classification covers the plain-axiom families only");
  const FormulaUniverse universe(b.var_count, b.max_connectives);
  return classify_with(sys, b, universe);
}

CensusReport census(Family family, const CensusBounds& b, int jobs) {
  CensusReport report;
  report.family = family;
  report.bounds = b;
  const std::vector<System> systems = family_systems(family);
  const FormulaUniverse universe(b.var_count, b.max_connectives);
  report.rows.resize(systems.size());

  if (jobs <= 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<int>(jobs, static_cast<int>(systems.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto worker = [&] {
    try {
      for (;;) {
        if (failed.load()) return;
        const std::size_t i = next.fetch_add(1);
        if (i >= systems.size()) return;
        report.rows[i] = classify_with(systems[i], b, universe);
      }
    } catch (...) {
      failed.store(true);
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::map<std::uint8_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const Classification& c = report.rows[i];
    if (c.predicted_complete && c.complete_at_bound)
      groups[c.closure_rules].push_back(i);
  }
  for (auto& [cl, members] : groups) {
    System rep = report.rows[members.front()].system;
    for (const std::size_t i : members) {
      if (preset_name(report.rows[i].system)) {
        rep = report.rows[i].system;
        break;
      }
    }
    report.classes.push_back(std::move(members));
    report.representatives.push_back(rep);
  }
  report.all_agree = std::all_of(
      report.rows.begin(), report.rows.end(),
      [](const Classification& c) { return c.agreement; });
  return report;
}

std::string render_census_text(const CensusReport& report) {
  std::string out = "census: ";
  out += report.family == Family::Standard ? "standard" : "extended";
  out += " family, " + std::to_string(report.rows.size()) + " systems, " +
         std::to_string(report.bounds.var_count) + " variables, up to " +
         std::to_string(report.bounds.max_connectives) +
         " connectives per formula\n\n";

  std::vector<int> cls(report.rows.size(), -1);
  for (std::size_t c = 0; c < report.classes.size(); ++c)
    for (const std::size_t i : report.classes[c]) cls[i] = static_cast<int>(c);

  std::size_t complete = 0;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const Classification& r = report.rows[i];
    if (r.complete_at_bound) ++complete;
    std::string name = render_system(r.system);
    if (name.size() < 30) name.resize(30, ' ');
    std::string line = name + "  ";
    if (r.predicted_complete) {
      line += "complete    ";
      if (r.complete_at_bound)
        line += "all " + std::to_string(r.formulas_proved) +
                " valid formulas derived";
      else
        line += "FAILED on " +
                (r.witness ? render(*r.witness) : std::string("?"));
      if (cls[i] >= 0)
        line += "  [class " + std::to_string(cls[i] + 1) + ": " +
                render_system(
                    report.representatives[static_cast<std::size_t>(cls[i])]) +
                "]";
    } else {
      line += "incomplete  witness " +
              (r.witness ? render(*r.witness) : std::string("?"));
      if (!r.witness_underivable)
        line += " UNEXPECTEDLY DERIVED";
      else if (r.witness_definitive)
        line += " underivable (definitive)";
      else
        line += " has no proof within caps";
    }
    if (!r.agreement) line += "  <- MISMATCH";
    out += line + "\n";
  }

  out += "\n" + std::to_string(complete) + " of " +
         std::to_string(report.rows.size()) +
         " systems complete at this bound, in " +
         std::to_string(report.classes.size()) +
         " classes of mutually containing systems:\n";
  for (std::size_t c = 0; c < report.classes.size(); ++c)
    out += "  class " + std::to_string(c + 1) + " (" +
           std::to_string(report.classes[c].size()) +
           " systems): representative " +
           render_system(report.representatives[c]) + "\n";
  out += report.all_agree
             ? "every outcome matches its closure prediction\n"
             : "MISMATCH: some outcome contradicts its closure prediction\n";
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_census_csv(const CensusReport& report) {
  std::vector<int> cls(report.rows.size(), -1);
  for (std::size_t c = 0; c < report.classes.size(); ++c)
    for (const std::size_t i : report.classes[c]) cls[i] = static_cast<int>(c);

  std::string out =
      "family,mask,system,rules,closure,predicted_complete,complete_at_bound,"
      "formulas_proved,witness,witness_underivable,witness_definitive,"
      "class_representative,agreement\n";
  const std::string fam =
      report.family == Family::Standard ? "standard" : "extended";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const Classification& r = report.rows[i];
    out += fam + ',';
    out += std::to_string(static_cast<int>(r.system.rules)) + ',';
    out += csv_field(render_system(r.system)) + ',';
    out += csv_field(render_rules(r.system.rules)) + ',';
    out += csv_field(render_rules(r.closure_rules)) + ',';
    out += std::string(r.predicted_complete ? "1" : "0") + ',';
    out += std::string(r.complete_at_bound ? "1" : "0") + ',';
    out += std::to_string(r.formulas_proved) + ',';
    out += csv_field(r.witness ? render(*r.witness) : std::string()) + ',';
    out += std::string(r.witness_underivable ? "1" : "0") + ',';
    out += std::string(r.witness_definitive ? "1" : "0") + ',';
    out += csv_field(cls[i] >= 0
                         ? render_system(report.representatives
                                             [static_cast<std::size_t>(cls[i])])
                         : std::string()) +
           ',';
    out += std::string(r.agreement ? "1" : "0") + '\n';
  }
  return out;
}

namespace {

/// Decides derivability of a valid sequent, preferring constructions over
/// search: systems containing the minimal calculus get minimal sequents by
/// construction plus elaboration, and padded ones by weakening a proved
/// minimal core; everything else (and any unexpected construction failure)
/// falls back to the shared search engine.
class DerivabilityOracle {
 public:
  DerivabilityOracle(const System& sys, const SearchBounds& bounds)
      : sys_(sys),
        via_construction_(contains(sys, mp())),
        can_pad_(via_construction_ && sys.has(Toggle::Weaken)),
        engine_(sys, bounds) {}

  struct Answer {
    bool derivable = false;
    bool definitive = false;
  };

  Answer decide(const Sequent& s, bool minimal) {
    if (via_construction_) {
      if (minimal) {
        if (core_proved(s)) return {true, true};
      } else if (can_pad_) {
        const Sequent core = minimize(s);
        if (core_proved(core) && padding_checks(core, s)) return {true, true};
      }
    }
    const SearchOutcome out = engine_.run(s);
    const bool definitive =
        out.derivable() ||
        (out.kind == SearchOutcome::Kind::Underivable && out.definitive);
    return {out.derivable(), definitive};
  }

 private:
  bool core_proved(const Sequent& s) {
    const std::string key = render(s.canonical());
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool ok = false;
    try {
      const Derivation d = prove_minimal(s);
      const Derivation e = elaborate(d, sys_);
      ok = check_derivation(sys_, e).ok;
    } catch (const Error&) {
      ok = false;
    }
    cache_.emplace(key, ok);
    return ok;
  }

  /// Verifies the weakening chain from the proved core up to `s`, one checked
  /// step per padded occurrence.
  bool padding_checks(const Sequent& core, const Sequent& s) {
    std::vector<bool> used(s.size(), false);
    for (const Formula& f : core.occurrences()) {
      bool found = false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!used[i] && s[i] == f) {
          used[i] = found = true;
          break;
        }
      }
      if (!found) return false;
    }
    Context cur = core.occurrences();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (used[i]) continue;
      Context next = cur;
      next.push_back(s[i]);
      const StepResult r =
          check_step(sys_, RuleId::Weaken, Sequent(next), {Sequent(cur)});
      if (!r.ok) return false;
      cur = std::move(next);
    }
    return true;
  }

  System sys_;
  bool via_construction_;
  bool can_pad_;
  SearchEngine engine_;
  std::unordered_map<std::string, bool> cache_;
};

}  // namespace

DegreeReport degree_report(const System& sys, const DegreeBounds& b) {
  DegreeReport rep;
  rep.system = sys;
  TableCache cache(enumeration_variables(b.var_count));
  DerivabilityOracle oracle(sys, b.search);

  const auto record_failure = [](SweepResult& r, const Sequent& s,
                                 bool definitive) {
    r.pass = false;
    r.witness = s;
    r.witness_definitive = definitive;
  };

  {  // valid singleton formulas
    EnumerationBounds fb;
    fb.var_count = b.var_count;
    fb.max_connectives = b.max_connectives;
    fb.max_formulas_per_sequent = 1;
    for (const Formula& f : enumerate_formulas(fb)) {
      if (cache.table(f) != cache.full()) continue;
      ++rep.formula.checked;
      const auto ans = oracle.decide(Sequent{f}, true);
      if (!ans.derivable) {
        record_failure(rep.formula, Sequent{f}, ans.definitive);
        break;
      }
    }
  }

  EnumerationBounds eb;
  eb.var_count = b.var_count;
  eb.max_connectives = b.max_connectives;
  eb.max_formulas_per_sequent = b.max_occurrences;

  for_each_sequent(eb, SequentMode::DistinctSets, [&](const Sequent& s) {
    if (!cache.minimal(s)) return true;
    ++rep.minimal.checked;
    const auto ans = oracle.decide(s, true);
    if (ans.derivable) return true;
    record_failure(rep.minimal, s, ans.definitive);
    return false;
  });

  for_each_sequent(eb, SequentMode::DistinctSets, [&](const Sequent& s) {
    if (!cache.valid(s)) return true;
    ++rep.sequent.checked;
    const auto ans = oracle.decide(s, cache.minimal(s));
    if (ans.derivable) return true;
    record_failure(rep.sequent, s, ans.definitive);
    return false;
  });

  return rep;
}

namespace {

std::string render_sweep(const char* name, const SweepResult& r) {
  std::string out = std::string(name) + ": ";
  if (r.pass) {
    out += "pass (" + std::to_string(r.checked) + " checked)";
  } else {
    out += "fail at " + render(*r.witness);
    out += r.witness_definitive ? " (underivable, definitive)"
                                : " (no proof within caps)";
    out += ", " + std::to_string(r.checked) + " checked";
  }
  return out + "\n";
}

}  // namespace

std::string render_degree_text(const DegreeReport& report) {
  std::string out = "system: " + render_system(report.system) + "\n";
  out += render_sweep("  formula-complete", report.formula);
  out += render_sweep("  minimal-complete", report.minimal);
  out += render_sweep("  sequent-complete", report.sequent);
  return out;
}

}  // namespace minseq
