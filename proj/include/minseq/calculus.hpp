#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minseq/core.hpp"

namespace minseq {

/// One-sided sequent rules. Plus1/Plus2 are the two one-premise disjunction
/// introductions; systems toggle them as a single member.
enum class RuleId : std::uint8_t {
  Ax,        // P, ~P                    (no premises)
  Tensor,    // Δ,A  Σ,B  ⊢ Δ,Σ,A&B      (context-splitting conjunction)
  With,      // Γ,A  Γ,B  ⊢ Γ,A&B        (context-sharing conjunction)
  Wedge,     // Γ,Δ,A  Γ,Σ,B ⊢ Γ,Δ,Σ,A&B (blended conjunction)
  Plus1,     // Γ,A ⊢ Γ,A|B
  Plus2,     // Γ,B ⊢ Γ,A|B
  Par,       // Γ,A,B ⊢ Γ,A|B
  Weaken,    // Γ ⊢ Γ,A
  Contract,  // Γ,A,A ⊢ Γ,A
};

/// Number of premises the rule expects.
int rule_arity(RuleId r);

/// Name used in derivation files: ax, tensor, with, wedge, plus1, plus2, par, w, c.
std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);

enum class Axiom : std::uint8_t {
  Plain,        // conclusion is exactly P, ~P
  WithContext,  // conclusion contains P, ~P (arbitrary context)
};

/// System membership toggles; Plus covers both Plus1 and Plus2.
enum class Toggle : std::uint8_t {
  Tensor = 1 << 0,
  With = 1 << 1,
  Wedge = 1 << 2,
  Plus = 1 << 3,
  Par = 1 << 4,
  Weaken = 1 << 5,
  Contract = 1 << 6,
};

inline constexpr std::uint8_t kAllToggles = 0x7f;

/// An axiom variant plus a set of rules. A standard system has the plain
/// axiom and rules within {Tensor, With, Plus, Par, Weaken, Contract}; the
/// extended family adds Wedge.
struct System {
  Axiom axiom = Axiom::Plain;
  std::uint8_t rules = 0;  // bitmask of Toggle

  bool has(Toggle t) const { return rules & static_cast<std::uint8_t>(t); }
  /// Whether a derivation node with this rule is admitted (Ax always is).
  bool allows(RuleId r) const;

  friend bool operator==(const System&, const System&) = default;
};

// Named systems.
System gs1p();      // &, ⊕, W, C
System gs3p();      // &, ⅋ with the context axiom
System mp();        // ∧, ⊕, ⅋
System mp_minus();  // ⊗, &, ⊕, ⅋
System pp();        // ⊗, ⊕, C
System np();        // &, ⅋, W

/// Preset lookup by name (gs1p, gs3p, mp, mp-, pp, np).
std::optional<System> find_preset(std::string_view name);
/// Inverse lookup: the preset name of exactly this system, if any.
std::optional<std::string> preset_name(const System& sys);

/// Parses a preset name or a comma list of {tensor,with,wedge,plus,par,w,c};
/// the extra token `ctx` selects the context axiom. Throws ParseError.
System parse_system(std::string_view text);

/// Preset name when the system is one, else the comma list.
std::string render_system(const System& sys);

/// A tree of rule applications. Every node records its conclusion, so files
/// are self-describing; the checker never trusts the structure. `pin`, when
/// set, restricts matching to the given conclusion occurrence (0-based) as
/// principal. Arity violations are representable and reported by the checker.
struct Derivation {
  RuleId rule;
  Sequent conclusion;
  std::vector<Derivation> premises;
  std::optional<std::size_t> pin;

  Derivation(RuleId r, Sequent c, std::vector<Derivation> ps = {},
             std::optional<std::size_t> p = std::nullopt)
      : rule(r), conclusion(std::move(c)), premises(std::move(ps)), pin(p) {}

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

enum class ViolationKind : std::uint8_t {
  RuleNotInSystem,
  RuleMismatch,  // no instantiation of the rule schema matches
  ArityMismatch,
};

std::string_view violation_name(ViolationKind k);

struct StepResult {
  bool ok = true;
  ViolationKind kind = ViolationKind::RuleMismatch;
  std::string message;

  static StepResult pass() { return {}; }
  static StepResult fail(ViolationKind k, std::string msg) {
    return {false, k, std::move(msg)};
  }
};

/// How a step instantiates its rule schema. For the conjunction rules the
/// conclusion's context splits into shared/left/right parts (With uses only
/// shared, Tensor only left/right); elaboration consumes these.
struct StepMatch {
  std::size_t principal = 0;  // conclusion occurrence index; unused for Ax
  Context shared, left, right;
};

/// Finds an instantiation of `rule` matching the conclusion and premise
/// sequents, trying principal occurrences left to right (or only `pin`).
/// Assumes the premise count equals rule_arity(rule).
std::optional<StepMatch> match_step(Axiom axiom, RuleId rule,
                                    const Sequent& conclusion,
                                    const std::vector<Sequent>& premises,
                                    std::optional<std::size_t> pin = std::nullopt);

/// Checks one rule application in `sys`: membership, arity, and schema match.
StepResult check_step(const System& sys, RuleId rule, const Sequent& conclusion,
                      const std::vector<Sequent>& premises,
                      std::optional<std::size_t> pin = std::nullopt);

struct CheckViolation {
  std::string path;  // "root", "0", "0.1", ... (premise indices from the root)
  ViolationKind kind;
  std::string message;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckViolation> violations;
};

/// Checks every node of the derivation against `sys`; premises are the
/// children's recorded conclusions. All failures are collected, none thrown.
CheckReport check_derivation(const System& sys, const Derivation& d);

/// Derivation text: node := "(" rulename ("@" index)? " [" sequent "]" node* ")".
Derivation parse_derivation(std::string_view text);
std::string render_derivation(const Derivation& d);

}  // namespace minseq
