#include "minseq/semantics.hpp"

#include <algorithm>
#include <set>

namespace minseq {

int evaluate(const Formula& f, const Assignment& a) {
  if (f.is_literal()) {
    auto it = a.find(f.var());
    if (it == a.end()) throw MissingVariableError(f.var());
    const int v = it->second ? 1 : 0;
    return f.positive() ? v : 1 - v;
  }
  const int l = evaluate(f.left(), a);
  const int r = evaluate(f.right(), a);
  return f.conn() == Formula::Conn::And ? (l & r) : (l | r);
}

namespace {

void collect_into(const Formula& f, std::set<std::string>& vars) {
  if (f.is_literal()) {
    vars.insert(f.var());
    return;
  }
  collect_into(f.left(), vars);
  collect_into(f.right(), vars);
}

}  // namespace

std::vector<std::string> collect_vars(const Formula& f) {
  std::set<std::string> vars;
  collect_into(f, vars);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> collect_vars(const Sequent& s) {
  std::set<std::string> vars;
  for (const auto& f : s.occurrences()) collect_into(f, vars);
  return {vars.begin(), vars.end()};
}

namespace {

// Bit j of pattern i is set iff assignment j sets variable i; valid for
// tables over at most 6 variables (64 assignments).
constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::uint64_t full_mask(int var_count) {
  const int width = 1 << var_count;
  return width == 64 ? ~0ull : (1ull << width) - 1;
}

std::uint64_t table_rec(const Formula& f,
                        const std::map<std::string, int>& index,
                        std::uint64_t full) {
  if (f.is_literal()) {
    auto it = index.find(f.var());
    if (it == index.end()) throw MissingVariableError(f.var());
    const std::uint64_t p = kVarPattern[it->second] & full;
    return f.positive() ? p : (~p & full);
  }
  const std::uint64_t l = table_rec(f.left(), index, full);
  const std::uint64_t r = table_rec(f.right(), index, full);
  return f.conn() == Formula::Conn::And ? (l & r) : (l | r);
}

int eval_word(const Formula& f, const std::map<std::string, int>& index,
              std::uint32_t word) {
  if (f.is_literal()) {
    const int v = (word >> index.at(f.var())) & 1;
    return f.positive() ? v : 1 - v;
  }
  const int l = eval_word(f.left(), index, word);
  const int r = eval_word(f.right(), index, word);
  return f.conn() == Formula::Conn::And ? (l & r) : (l | r);
}

}  // namespace

std::uint64_t truth_table(const Formula& f,
                          const std::vector<std::string>& vars) {
  if (vars.size() > 6)
    throw VariableLimitError("truth_table supports at most 6 variables");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vars.size(); ++i)
    index[vars[i]] = static_cast<int>(i);
  return table_rec(f, index, full_mask(static_cast<int>(vars.size())));
}

bool is_valid(const Sequent& s) {
  const auto vars = collect_vars(s);
  const int n = static_cast<int>(vars.size());
  if (n > kMaxVariables)
    throw VariableLimitError("sequent has " + std::to_string(n) +
                             " variables; limit is " +
                             std::to_string(kMaxVariables));
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[vars[i]] = i;
  if (n <= 6) {
    const std::uint64_t full = full_mask(n);
    std::uint64_t covered = 0;
    for (const auto& f : s.occurrences()) {
      covered |= table_rec(f, index, full);
      if (covered == full) return true;
    }
    return false;
  }
  const std::uint32_t count = 1u << n;
  for (std::uint32_t word = 0; word < count; ++word) {
    bool some = false;
    for (const auto& f : s.occurrences())
      if (eval_word(f, index, word)) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;
}

bool is_minimal(const Sequent& s) {
  if (!is_valid(s)) return false;
  if (s.size() == 1) return true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (is_valid(Sequent(s.without(i)))) return false;
  return true;
}

Sequent minimize(const Sequent& s) {
  if (!is_valid(s)) throw NotValidError("minimize requires a valid sequent");
  Context kept = s.occurrences();
  std::size_t i = 0;
  while (i < kept.size()) {
    if (kept.size() > 1) {
      Context rest;
      rest.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) rest.push_back(kept[j]);
      if (is_valid(Sequent(rest))) {
        kept = std::move(rest);
        continue;  // same position now holds the next candidate
      }
    }
    ++i;
  }
  return Sequent(std::move(kept));
}

std::vector<std::string> enumeration_variables(int count) {
  static const char* kNames = "PQRSTUVWXYZABCDEFGHIJKLMNO";
  if (count < 1 || count > kMaxVariables)
    throw BoundTooLargeError("variable count must be between 1 and " +
                             std::to_string(kMaxVariables));
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) names.push_back(std::string(1, kNames[i]));
  return names;
}

namespace {

// Formulas grouped by exact connective count; level n is built from the
// levels below it, sharing subtrees.
std::vector<std::vector<Formula>> build_levels(const EnumerationBounds& b) {
  const auto vars = enumeration_variables(b.var_count);
  if (b.max_connectives < 0)
    throw BoundTooLargeError("max_connectives must be non-negative");
  std::vector<std::vector<Formula>> levels(b.max_connectives + 1);
  std::size_t total = 0;
  for (const auto& v : vars) {
    levels[0].push_back(Formula::literal(v, true));
    levels[0].push_back(Formula::literal(v, false));
  }
  total += levels[0].size();
  for (int n = 1; n <= b.max_connectives; ++n) {
    std::size_t count = 0;
    for (int k = 0; k < n; ++k)
      count += 2 * levels[k].size() * levels[n - 1 - k].size();
    total += count;
    if (total > kMaxEnumeratedFormulas)
      throw BoundTooLargeError("enumeration would produce more than " +
                               std::to_string(kMaxEnumeratedFormulas) +
                               " formulas");
    levels[n].reserve(count);
    for (int k = 0; k < n; ++k)
      for (const auto& left : levels[k])
        for (const auto& right : levels[n - 1 - k]) {
          levels[n].push_back(Formula::conj(left, right));
          levels[n].push_back(Formula::disj(left, right));
        }
  }
  return levels;
}

}  // namespace

std::vector<Formula> enumerate_formulas(const EnumerationBounds& b) {
  auto levels = build_levels(b);
  std::vector<Formula> all;
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  all.reserve(total);
  for (auto& level : levels)
    for (auto& f : level) all.push_back(std::move(f));
  return all;
}

namespace {

// Streams index tuples of the requested width whose sizes sum exactly to the
// target, in index order per slot. Ordering constraints between consecutive
// slots realize the three sequent modes.
class SequentStream {
 public:
  SequentStream(std::vector<std::vector<Formula>> levels, SequentMode mode,
                const std::function<bool(const Sequent&)>& fn)
      : levels_(std::move(levels)), mode_(mode), fn_(fn) {
    offsets_.resize(levels_.size());
    std::size_t base = 0;
    for (std::size_t s = 0; s < levels_.size(); ++s) {
      offsets_[s] = base;
      base += levels_[s].size();
    }
  }

  bool run(int total_conn, int width) {
    width_ = width;
    current_.clear();
    return pick(0, total_conn, 0);
  }

 private:
  // Chooses the formula for one slot; min_global enforces the mode's
  // ordering constraint relative to the previous slot.
  bool pick(int slot, int conn_left, std::size_t min_global) {
    if (slot == width_) {
      Context occs;
      occs.reserve(current_.size());
      for (const Formula* f : current_) occs.push_back(*f);
      return fn_(Sequent(std::move(occs)));
    }
    const int slots_after = width_ - slot - 1;
    const int max_size = static_cast<int>(levels_.size()) - 1;
    for (int s = 0; s <= std::min(conn_left, max_size); ++s) {
      const int rest = conn_left - s;
      if (rest > slots_after * max_size) continue;
      if (mode_ != SequentMode::AllTuples && rest < slots_after * s)
        continue;  // later sizes are forced to be >= s
      const auto& level = levels_[s];
      std::size_t i = 0;
      if (min_global > offsets_[s]) {
        if (min_global >= offsets_[s] + level.size()) continue;
        i = min_global - offsets_[s];
      }
      for (; i < level.size(); ++i) {
        current_.push_back(&level[i]);
        std::size_t next_min = 0;
        if (mode_ == SequentMode::Multisets) next_min = offsets_[s] + i;
        if (mode_ == SequentMode::DistinctSets) next_min = offsets_[s] + i + 1;
        const bool keep_going = pick(slot + 1, rest, next_min);
        current_.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Formula>> levels_;
  std::vector<std::size_t> offsets_;
  SequentMode mode_;
  const std::function<bool(const Sequent&)>& fn_;
  std::vector<const Formula*> current_;
  int width_ = 0;
};

}  // namespace

void for_each_sequent(const EnumerationBounds& b, SequentMode mode,
                      const std::function<bool(const Sequent&)>& fn) {
  if (b.max_formulas_per_sequent < 1)
    throw BoundTooLargeError("max_formulas_per_sequent must be at least 1");
  SequentStream stream(build_levels(b), mode, fn);
  for (int t = 0; t <= b.max_connectives; ++t)
    for (int w = 1; w <= b.max_formulas_per_sequent; ++w)
      if (!stream.run(t, w)) return;
}

TableCache::TableCache(std::vector<std::string> vars)
    : vars_(std::move(vars)), full_(0) {
  if (vars_.size() > 6)
    throw VariableLimitError("TableCache supports at most 6 variables");
  full_ = full_mask(static_cast<int>(vars_.size()));
}

std::uint64_t TableCache::table(const Formula& f) {
  auto it = cache_.find(f.id());
  if (it != cache_.end()) return it->second.second;
  std::uint64_t t;
  if (f.is_literal()) {
    t = truth_table(f, vars_);
  } else {
    const std::uint64_t l = table(f.left());
    const std::uint64_t r = table(f.right());
    t = f.conn() == Formula::Conn::And ? (l & r) : (l | r);
  }
  cache_.emplace(f.id(), std::make_pair(f, t));
  return t;
}

bool TableCache::valid(const Sequent& s) {
  std::uint64_t covered = 0;
  for (const auto& f : s.occurrences()) {
    covered |= table(f);
    if (covered == full_) return true;
  }
  return false;
}

bool TableCache::minimal(const Sequent& s) {
  const std::size_t n = s.size();
  if (n == 1) return table(s[0]) == full_;
  // One pass computes suffix unions, then sweeps with a running prefix.
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | table(s[i]);
  if (suffix[0] != full_) return false;
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((prefix | suffix[i + 1]) == full_) return false;  // occurrence i is redundant
    prefix |= table(s[i]);
  }
  return true;
}

}  // namespace minseq
