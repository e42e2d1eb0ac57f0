#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "minseq/core.hpp"

namespace minseq {

/// Total map from variable names to truth values.
using Assignment = std::map<std::string, int>;

/// At most this many distinct variables per validity query (truth tables).
inline constexpr int kMaxVariables = 24;

/// Hard cap on materialized formulas per enumeration call.
inline constexpr std::size_t kMaxEnumeratedFormulas = 2'000'000;

/// Standard boolean evaluation; a negative literal ~P evaluates to 1 - a(P).
/// Throws MissingVariableError when `a` lacks a variable of `f`.
int evaluate(const Formula& f, const Assignment& a);

/// Distinct variables of a formula/sequent, sorted ascending.
std::vector<std::string> collect_vars(const Formula& f);
std::vector<std::string> collect_vars(const Sequent& s);

/// Truth table of `f` over an explicit variable list (at most 6 names, which
/// must cover vars(f)): bit j holds the value under the assignment that sets
/// vars[i] to bit i of j. Exposed for bulk sweeps that cache tables.
std::uint64_t truth_table(const Formula& f, const std::vector<std::string>& vars);

/// True iff under every assignment some occurrence evaluates to 1.
/// Throws VariableLimitError beyond kMaxVariables.
bool is_valid(const Sequent& s);

/// True iff s is valid and deleting any single occurrence (when more than one
/// is present) breaks validity. Single deletions suffice: validity is monotone
/// under adding occurrences, so a valid proper subsequent yields a valid
/// single-deletion subsequent.
bool is_minimal(const Sequent& s);

/// Greedy left-to-right extraction of a minimal subsequent: repeatedly delete
/// the leftmost occurrence whose removal preserves validity. Once an
/// occurrence fails that test it fails it forever (monotonicity), so one pass
/// suffices. Throws NotValidError on invalid input.
Sequent minimize(const Sequent& s);

struct EnumerationBounds {
  int var_count = 2;               // leaves drawn from the first var_count variables
  int max_connectives = 4;         // per formula, or total per sequent
  int max_formulas_per_sequent = 1;
};

/// Names of the first `count` enumeration variables: P, Q, R, ..., Z, A, ..., O.
std::vector<std::string> enumeration_variables(int count);

/// Every formula tree with at most b.max_connectives internal nodes over the
/// 2·var_count literals, in deterministic order: by connective count, then by
/// (left size, left, right, And-before-Or). No duplicates. Subtrees are shared
/// across the returned values. Throws BoundTooLargeError past the guards.
std::vector<Formula> enumerate_formulas(const EnumerationBounds& b);

/// How sequents are drawn from the formula universe.
enum class SequentMode {
  AllTuples,     // every ordered occurrence list
  Multisets,     // one representative per occurrence multiset
  DistinctSets,  // multisets with pairwise distinct formulas
};

/// Streams every sequent with 1..max_formulas_per_sequent occurrences and
/// total connective count at most max_connectives, ordered by (total
/// connectives, width, then a deterministic index order). The callback may
/// return false to stop early.
void for_each_sequent(const EnumerationBounds& b, SequentMode mode,
                      const std::function<bool(const Sequent&)>& fn);

/// Truth tables over a fixed variable list (at most 6 names), memoized by
/// formula node identity. Built for bulk sweeps where the same shared
/// subformulas recur across millions of sequents. Each cached formula is
/// retained alongside its table: node addresses key the map, so letting a
/// node die would allow a later allocation to reuse its address and collide.
class TableCache {
 public:
  explicit TableCache(std::vector<std::string> vars);

  std::uint64_t table(const Formula& f);
  std::uint64_t full() const { return full_; }

  bool valid(const Sequent& s);

  /// Valid, and no single deletion stays valid.
  bool minimal(const Sequent& s);

 private:
  std::vector<std::string> vars_;
  std::uint64_t full_;
  std::unordered_map<const void*, std::pair<Formula, std::uint64_t>> cache_;
};

}  // namespace minseq
