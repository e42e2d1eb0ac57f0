#include "minseq/prover.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace minseq {

namespace {

// Greedy minimization of (delta, principal), reported as the set of delta
// occurrences that survive. The principal always survives: delta alone is a
// subsequent of an invalid context, so dropping the principal kills validity.
std::vector<bool> survivors(const Context& delta, const Formula& principal) {
  std::vector<bool> kept(delta.size(), true);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    kept[i] = false;
    Context trial;
    trial.reserve(delta.size());
    for (std::size_t j = 0; j < delta.size(); ++j)
      if (kept[j]) trial.push_back(delta[j]);
    trial.push_back(principal);
    if (!is_valid(Sequent(std::move(trial)))) kept[i] = true;
  }
  return kept;
}

// Precondition (not re-checked): (delta, a1 & a2) is minimal.
ContextSplit split_unchecked(const Context& delta, const Formula& a1,
                             const Formula& a2) {
  const auto kept1 = survivors(delta, a1);
  const auto kept2 = survivors(delta, a2);
  ContextSplit split;
  for (std::size_t j = 0; j < delta.size(); ++j) {
    if (kept1[j] && kept2[j])
      split.shared.push_back(delta[j]);
    else if (kept1[j])
      split.left.push_back(delta[j]);
    else if (kept2[j])
      split.right.push_back(delta[j]);
    else
      // Impossible for a minimal input: deleting this occurrence would have
      // left both premises valid, hence the whole sequent valid.
      throw Error("context split failed to cover an occurrence");
  }
  return split;
}

class MinimalProver {
 public:
  explicit MinimalProver(const ProveOptions& opts)
      : policy_(opts.policy), rng_(opts.seed) {}

  Derivation build(Sequent s) {
    const Context& occ = s.occurrences();
    std::vector<std::size_t> compounds;
    for (std::size_t i = 0; i < occ.size(); ++i)
      if (!occ[i].is_literal()) compounds.push_back(i);
    if (compounds.empty())
      // A minimal sequent of literals is a complementary pair.
      return Derivation(RuleId::Ax, std::move(s));
    const std::size_t i = pick(compounds);
    const Formula f = occ[i];
    const Context rest = s.without(i);
    if (f.conn() == Formula::Conn::And) {
      ContextSplit split = split_unchecked(rest, f.left(), f.right());
      Context p1 = split.shared;
      p1.insert(p1.end(), split.left.begin(), split.left.end());
      p1.push_back(f.left());
      Context p2 = std::move(split.shared);
      p2.insert(p2.end(), split.right.begin(), split.right.end());
      p2.push_back(f.right());
      std::vector<Derivation> premises;
      premises.push_back(build(Sequent(std::move(p1))));
      premises.push_back(build(Sequent(std::move(p2))));
      return Derivation(RuleId::Wedge, std::move(s), std::move(premises));
    }
    Context one = rest;
    one.push_back(f.left());
    if (is_valid(Sequent(one))) {
      std::vector<Derivation> premises;
      premises.push_back(build(Sequent(std::move(one))));
      return Derivation(RuleId::Plus1, std::move(s), std::move(premises));
    }
    Context two = rest;
    two.push_back(f.right());
    if (is_valid(Sequent(two))) {
      std::vector<Derivation> premises;
      premises.push_back(build(Sequent(std::move(two))));
      return Derivation(RuleId::Plus2, std::move(s), std::move(premises));
    }
    Context both = rest;
    both.push_back(f.left());
    both.push_back(f.right());
    std::vector<Derivation> premises;
    premises.push_back(build(Sequent(std::move(both))));
    return Derivation(RuleId::Par, std::move(s), std::move(premises));
  }

 private:
  std::size_t pick(const std::vector<std::size_t>& compounds) {
    switch (policy_) {
      case Policy::Leftmost:
        return compounds.front();
      case Policy::Rightmost:
        return compounds.back();
      case Policy::Random:
        return compounds[std::uniform_int_distribution<std::size_t>(
            0, compounds.size() - 1)(rng_)];
    }
    return compounds.front();
  }

  Policy policy_;
  std::mt19937_64 rng_;
};

}  // namespace

ContextSplit split_context(const Context& delta, const Formula& a1,
                           const Formula& a2) {
  Context whole = delta;
  whole.push_back(Formula::conj(a1, a2));
  Sequent s(std::move(whole));
  if (!is_minimal(s))
    throw NotMinimalError("split_context requires a minimal sequent, got: " +
                          render(s));
  return split_unchecked(delta, a1, a2);
}

Derivation prove_minimal(const Sequent& s, const ProveOptions& opts) {
  if (!is_minimal(s))
    throw NotMinimalError((is_valid(s) ? "sequent is not minimal: "
                                       : "sequent is not valid: ") +
                          render(s));
  return MinimalProver(opts).build(s);
}

Derivation prove_formula(const Formula& f, const ProveOptions& opts) {
  Sequent s{f};
  if (!is_valid(s))
    throw NotValidError("formula is not valid: " + render(f));
  // A valid singleton is minimal: deleting its only occurrence leaves nothing.
  return MinimalProver(opts).build(std::move(s));
}

SearchEngine::SearchEngine(System sys, SearchBounds bounds)
    : sys_(sys), bounds_(bounds) {}

SearchOutcome SearchEngine::run(const Sequent& goal) {
  width_cap_ = bounds_.max_width > 0 ? bounds_.max_width
                                     : static_cast<int>(goal.size()) + 4;
  if (width_cap_ < static_cast<int>(goal.size()))
    width_cap_ = static_cast<int>(goal.size());
  const Sequent root = goal.canonical();
  while (true) {
    refuted_.clear();
    on_stack_.clear();
    pass_pruned_ = false;
    proved_grew_ = false;
    Result res = explore(root, bounds_.max_depth);
    if (res.proof) {
      Derivation d = std::move(*res.proof);
      d.conclusion = goal;  // restore the caller's occurrence order at the root
      return {SearchOutcome::Kind::Derivable, std::move(d), true};
    }
    if (proved_grew_) continue;  // fresh proofs can unseat stale refutations
    if (pass_pruned_)
      return {SearchOutcome::Kind::Exhausted, std::nullopt, false};
    // Fixpoint with nothing cut: every refutation this pass is genuine and
    // independent of the caps, so it can serve any later run.
    for (const auto& [key, entry] : refuted_) clean_refuted_.insert(key);
    return {SearchOutcome::Kind::Underivable, std::nullopt, true};
  }
}

SearchEngine::Result SearchEngine::explore(const Sequent& goal, int depth_left) {
  const std::string key = render(goal);
  if (auto it = proved_.find(key); it != proved_.end())
    return {it->second, false};
  if (clean_refuted_.count(key)) return {std::nullopt, false};
  if (auto it = refuted_.find(key); it != refuted_.end()) {
    if (!it->second.pruned) return {std::nullopt, false};
    // A cut refutation only stands for budgets no larger than it saw.
    if (depth_left <= it->second.depth_left) return {std::nullopt, true};
    refuted_.erase(it);  // retry with the larger budget
  }
  if (on_stack_.count(key))
    // A derivation is a finite tree: no proof of this sequent can pass
    // through itself, so the enclosing instance fails. If another branch
    // proves the sequent later, the next pass benefits from it.
    return {std::nullopt, false};
  // Every rule preserves validity downward, so invalid sequents are
  // underivable outright; this prunes most context splits immediately.
  if (!is_valid(goal)) {
    clean_refuted_.insert(key);
    return {std::nullopt, false};
  }
  static const std::vector<Sequent> kNoPremises;
  if (match_step(sys_.axiom, RuleId::Ax, goal, kNoPremises)) {
    Derivation ax(RuleId::Ax, goal);
    put_proof(key, ax);
    return {std::move(ax), false};
  }
  if (depth_left <= 0) {
    pass_pruned_ = true;
    return {std::nullopt, true};
  }
  on_stack_.insert(key);
  Result res = apply_rules(goal, depth_left);
  on_stack_.erase(key);
  if (res.proof) {
    put_proof(key, *res.proof);
    return res;
  }
  if (refuted_.size() < bounds_.memo_limit)
    refuted_[key] = RefutedEntry{depth_left, res.pruned};
  return res;
}

SearchEngine::Result SearchEngine::apply_rules(const Sequent& goal,
                                               int depth_left) {
  Result acc{std::nullopt, false};
  const Context& occ = goal.occurrences();

  auto try_unary = [&](RuleId rule, Context premise) {
    Result r = explore(Sequent(std::move(premise)).canonical(), depth_left - 1);
    if (r.proof) {
      std::vector<Derivation> kids;
      kids.push_back(std::move(*r.proof));
      acc.proof = Derivation(rule, goal, std::move(kids));
      return true;
    }
    acc.pruned |= r.pruned;
    return false;
  };
  auto try_binary = [&](RuleId rule, Context premise1, Context premise2) {
    Result r1 = explore(Sequent(std::move(premise1)).canonical(), depth_left - 1);
    if (!r1.proof) {
      acc.pruned |= r1.pruned;
      return false;
    }
    Result r2 = explore(Sequent(std::move(premise2)).canonical(), depth_left - 1);
    if (!r2.proof) {
      acc.pruned |= r2.pruned;
      return false;
    }
    std::vector<Derivation> kids;
    kids.push_back(std::move(*r1.proof));
    kids.push_back(std::move(*r2.proof));
    acc.proof = Derivation(rule, goal, std::move(kids));
    return true;
  };

  if (sys_.has(Toggle::Plus))
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i].is_literal() || occ[i].conn() != Formula::Conn::Or) continue;
      Context one = goal.without(i);
      one.push_back(occ[i].left());
      if (try_unary(RuleId::Plus1, std::move(one))) return acc;
      Context two = goal.without(i);
      two.push_back(occ[i].right());
      if (try_unary(RuleId::Plus2, std::move(two))) return acc;
    }
  if (sys_.has(Toggle::Par))
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i].is_literal() || occ[i].conn() != Formula::Conn::Or) continue;
      Context both = goal.without(i);
      both.push_back(occ[i].left());
      both.push_back(occ[i].right());
      if (try_unary(RuleId::Par, std::move(both))) return acc;
    }
  if (sys_.has(Toggle::With))
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i].is_literal() || occ[i].conn() != Formula::Conn::And) continue;
      Context d = goal.without(i);
      Context p1 = d, p2 = std::move(d);
      p1.push_back(occ[i].left());
      p2.push_back(occ[i].right());
      if (try_binary(RuleId::With, std::move(p1), std::move(p2))) return acc;
    }
  if (sys_.has(Toggle::Tensor))
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i].is_literal() || occ[i].conn() != Formula::Conn::And) continue;
      const Context d = goal.without(i);
      if (d.size() > 24) throw BoundTooLargeError("tensor split too wide");
      const std::size_t parts = std::size_t{1} << d.size();
      for (std::size_t mask = 0; mask < parts; ++mask) {
        Context p1, p2;
        for (std::size_t j = 0; j < d.size(); ++j)
          (mask >> j & 1 ? p1 : p2).push_back(d[j]);
        p1.push_back(occ[i].left());
        p2.push_back(occ[i].right());
        if (try_binary(RuleId::Tensor, std::move(p1), std::move(p2)))
          return acc;
      }
    }
  if (sys_.has(Toggle::Wedge))
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i].is_literal() || occ[i].conn() != Formula::Conn::And) continue;
      const Context d = goal.without(i);
      if (d.size() > 15) throw BoundTooLargeError("wedge split too wide");
      // Each context occurrence goes to shared (0), left (1), or right (2).
      std::vector<int> part(d.size(), 0);
      bool done = false;
      while (!done) {
        Context p1, p2;
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (part[j] != 2) p1.push_back(d[j]);
          if (part[j] != 1) p2.push_back(d[j]);
        }
        p1.push_back(occ[i].left());
        p2.push_back(occ[i].right());
        if (try_binary(RuleId::Wedge, std::move(p1), std::move(p2)))
          return acc;
        done = true;
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (++part[j] <= 2) {
            done = false;
            break;
          }
          part[j] = 0;
        }
      }
    }
  if (sys_.has(Toggle::Weaken) && occ.size() >= 2)
    for (std::size_t i = 0; i < occ.size(); ++i)
      if (try_unary(RuleId::Weaken, goal.without(i))) return acc;
  if (sys_.has(Toggle::Contract)) {
    if (static_cast<int>(occ.size()) + 1 > width_cap_) {
      acc.pruned = true;  // the cap blocked a contraction expansion
      pass_pruned_ = true;
    } else {
      for (std::size_t i = 0; i < occ.size(); ++i) {
        Context wider = occ;
        wider.push_back(occ[i]);
        if (try_unary(RuleId::Contract, std::move(wider))) return acc;
      }
    }
  }
  return acc;
}

void SearchEngine::put_proof(const std::string& key, const Derivation& proof) {
  if (proved_.size() >= bounds_.memo_limit && !proved_.count(key)) return;
  if (proved_.emplace(key, proof).second) proved_grew_ = true;
}

SearchOutcome search(const System& sys, const Sequent& goal,
                     const SearchBounds& bounds) {
  SearchEngine engine(sys, bounds);
  return engine.run(goal);
}

}  // namespace minseq
