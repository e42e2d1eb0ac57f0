#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "minseq/calculus.hpp"
#include "minseq/semantics.hpp"

namespace minseq {

/// Which compound occurrence the constructive prover picks as principal.
enum class Policy : std::uint8_t { Leftmost, Rightmost, Random };

struct ProveOptions {
  Policy policy = Policy::Leftmost;
  std::uint64_t seed = 0;  // used only by Policy::Random
};

struct ContextSplit {
  Context shared, left, right;
};

/// For a minimal sequent (delta, a1&a2): splits delta so that
/// (shared, left, a1) and (shared, right, a2) are both minimal, with
/// shared++left++right a permutation of delta. Both sides come from greedy
/// minimization of (delta, ai); every delta occurrence lands in at least one
/// side, else deleting it would have left the input valid, contradicting
/// minimality. Throws NotMinimalError when the input sequent is not minimal.
ContextSplit split_context(const Context& delta, const Formula& a1,
                           const Formula& a2);

/// Builds a derivation of a minimal sequent using only Wedge/Plus/Par/Ax,
/// by induction on connectives: principal compound occurrence per `policy`;
/// a conjunction splits the context, a disjunction keeps one side when the
/// resulting premise is valid (Plus1 preferred) and otherwise keeps both
/// (Par). Every node's sequent is itself minimal. The root conclusion is
/// exactly the input. Throws NotMinimalError.
Derivation prove_minimal(const Sequent& s, const ProveOptions& opts = {});

/// prove_minimal on the singleton sequent {f}: a valid singleton is minimal.
/// Throws NotValidError.
Derivation prove_formula(const Formula& f, const ProveOptions& opts = {});

struct SearchBounds {
  int max_width = 0;    // cap on occurrences per sequent, applied to Contract
                        // expansions only; 0 means goal width + 4
  int max_depth = 32;   // rule applications along one branch
  std::size_t memo_limit = 1 << 20;  // cached sequents
};

struct SearchOutcome {
  enum class Kind : std::uint8_t { Derivable, Underivable, Exhausted };
  Kind kind;
  std::optional<Derivation> derivation;  // present iff Derivable
  bool definitive = false;  // true for Derivable and Underivable, never Exhausted

  bool derivable() const { return kind == Kind::Derivable; }
};

/// Backward proof search trying every rule of the system, every principal
/// occurrence, and every context partition, keyed on the canonical (sorted)
/// occurrence multiset. One pass is a depth-first sweep that memoizes every
/// completed refutation and treats a revisit of an on-stack sequent as a
/// failed instance: a derivation is a finite tree, so no proof of a sequent
/// can pass through that same sequent. Proofs found anywhere are kept for
/// good. A refutation recorded while some sequent was still unproved can go
/// stale once that sequent gains a proof, so whenever a pass added proofs
/// the refutation memo is discarded and the sweep runs again; proofs grow
/// monotonically over a finite state space, so this terminates. A pass that
/// adds no proof is a fixpoint: if the width and depth caps never cut a
/// branch during it, the goal is underivable outright (Underivable),
/// otherwise the search is only exhausted within the caps (Exhausted).
/// Invalid sequents are underivable in any system, since every rule
/// preserves validity downward. Refutations established at an uncut
/// fixpoint are independent of the caps; they and all proofs persist
/// across runs of the same engine.
class SearchEngine {
 public:
  explicit SearchEngine(System sys, SearchBounds bounds = {});

  SearchOutcome run(const Sequent& goal);

 private:
  struct RefutedEntry {
    int depth_left = 0;   // remaining budget the refutation was computed with
    bool pruned = false;  // a cap cut some branch beneath it
  };

  struct Result {
    std::optional<Derivation> proof;
    bool pruned = false;
  };

  Result explore(const Sequent& goal, int depth_left);
  Result apply_rules(const Sequent& goal, int depth_left);
  void put_proof(const std::string& key, const Derivation& proof);

  System sys_;
  SearchBounds bounds_;
  int width_cap_ = 0;        // effective cap for the current run
  bool pass_pruned_ = false;  // some cap cut a branch in the current pass
  bool proved_grew_ = false;  // proved_ gained an entry in the current pass
  std::unordered_map<std::string, Derivation> proved_;     // persistent
  std::unordered_set<std::string> clean_refuted_;          // persistent
  std::unordered_map<std::string, RefutedEntry> refuted_;  // one pass only
  std::unordered_set<std::string> on_stack_;
};

/// One-shot convenience wrapper around SearchEngine.
SearchOutcome search(const System& sys, const Sequent& goal,
                     const SearchBounds& bounds = {});

}  // namespace minseq
