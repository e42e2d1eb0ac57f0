#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minseq/calculus.hpp"
#include "minseq/prover.hpp"
#include "minseq/semantics.hpp"

namespace minseq {

/// One derived-rule schema: any step of `derived` can be replaced by a fixed
/// tree of steps using only the `needs` rules (plus Ax).
struct Schema {
  Toggle derived;
  std::uint8_t needs;  // toggle mask
  const char* label;
};

/// The eight schemas: both conjunctions as special cases of the blended one,
/// the four structural simulations (Tensor via With+W, With via Tensor+C,
/// Plus via Par+W, Par via Plus+C), and the blended conjunction from either
/// plain conjunction plus the matching structural rule.
const std::array<Schema, 8>& schema_table();

/// Least fixpoint of the system's rules under the schema table.
std::uint8_t closure(const System& sys);

/// Comma list of toggle names (for reports); "none" when empty.
std::string render_rules(std::uint8_t rules);

/// True iff every rule of `t` is available in `s` — directly or through the
/// schema closure — and t's axiom is at most s's (plain below with-context).
bool contains(const System& s, const System& t);

/// Expands one step matching schema_table()[index].derived into steps using
/// only that schema's `needs` rules. `rule` disambiguates Plus1/Plus2;
/// `match` must come from match_step on the same conclusion and premise
/// sequents; `premises` derive those premises. The root conclusion of the
/// result is exactly `conclusion`.
Derivation expand_schema(std::size_t index, RuleId rule,
                         const Sequent& conclusion, const StepMatch& match,
                         std::vector<Derivation> premises);

/// Rewrites the derivation until every step's rule is directly in `target`,
/// expanding each derived rule by the schema that first justified it during
/// the closure computation (so expansion strictly descends and terminates).
/// Preserves the root conclusion. Throws NotContainedError when a rule lies
/// outside closure(target); throws Error when a step fails to match its rule.
Derivation elaborate(const Derivation& d, const System& target);

enum class Family : std::uint8_t { Standard, Extended };

/// The 64 (standard) or 128 (extended) plain-axiom systems, by rule mask.
std::vector<System> family_systems(Family family);

struct CensusBounds {
  int var_count = 2;
  int max_connectives = 4;
  SearchBounds search;  // witness confirmation for incomplete systems
};

struct Classification {
  System system;
  std::uint8_t closure_rules = 0;
  bool predicted_complete = false;  // closure covers wedge, plus, par
  bool complete_at_bound = false;   // every valid formula at bound was derived
  std::size_t formulas_proved = 0;
  std::optional<Formula> witness;   // selected for incomplete systems
  bool witness_underivable = false;
  bool witness_definitive = false;  // definitive refutation vs within caps
  bool agreement = false;           // empirical outcome matches the prediction
};

/// Predicts completeness from the closure, then verifies: complete systems
/// prove every valid formula at bound by elaborating constructed derivations;
/// incomplete systems get a table-driven witness confirmed by search.
/// Requires a plain-axiom system.
Classification classify_system(const System& sys, const CensusBounds& b = {});

struct CensusReport {
  Family family = Family::Standard;
  CensusBounds bounds;
  std::vector<Classification> rows;  // by rule mask, ascending
  /// Complete systems grouped by mutual containment (equal closures); each
  /// class lists row indices; representatives prefer preset systems.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<System> representatives;
  bool all_agree = false;
};

CensusReport census(Family family, const CensusBounds& b = {}, int jobs = 1);

std::string render_census_text(const CensusReport& report);
std::string render_census_csv(const CensusReport& report);

struct DegreeBounds {
  int var_count = 2;
  int max_connectives = 4;  // per formula, and total per sequent
  int max_occurrences = 3;
  SearchBounds search;
};

struct SweepResult {
  bool pass = true;
  std::size_t checked = 0;         // inputs that met the sweep's filter
  std::optional<Sequent> witness;  // first underivable input
  bool witness_definitive = false;
};

/// Three sweeps: valid singleton formulas, minimal sequents, valid sequents.
/// The sequent sweeps range over sequents of pairwise distinct formulas — a
/// sequent with duplicate occurrences is never minimal, and sweep order is
/// total connectives, then width, then enumeration order, so reported
/// witnesses are the smallest failures.
struct DegreeReport {
  System system;
  SweepResult formula, minimal, sequent;
};

DegreeReport degree_report(const System& sys, const DegreeBounds& b = {});

std::string render_degree_text(const DegreeReport& report);

}  // namespace minseq
