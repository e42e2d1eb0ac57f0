#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minseq/errors.hpp"

namespace minseq {

/// A propositional formula over signed literals, `&` and `|`.
///
/// Negation is an operation, not a connective: it lives only on literals, and
/// negating a compound formula pushes `~` to the leaves by de Morgan duality.
/// Formulas are immutable trees with shared substructure; copies are cheap and
/// values are safe to share across threads. Tree shape is significant:
/// `(A|B)|C` and `A|(B|C)` are distinct formulas.
class Formula {
 public:
  enum class Conn : std::uint8_t { And, Or };

  static Formula literal(std::string var, bool positive = true);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula compound(Conn conn, Formula left, Formula right);

  bool is_literal() const { return node_->data.index() == 0; }

  // Literal accessors. Precondition: is_literal().
  const std::string& var() const;
  bool positive() const;

  // Compound accessors. Precondition: !is_literal(). Children are returned
  // by value; a Formula is one shared pointer, so this is a refcount bump.
  Conn conn() const;
  Formula left() const;
  Formula right() const;

  /// Number of `&`/`|` nodes in the tree.
  int connectives() const { return node_->connectives; }

  /// Identity of the underlying shared node; usable as a cache key while the
  /// formula (or any copy of it) is alive.
  const void* id() const { return node_.get(); }

  /// Total structural order: literals before compounds; literals by
  /// (variable, positive-first); compounds by (And before Or, left, right).
  /// Returns <0, 0, >0.
  static int compare(const Formula& a, const Formula& b);

  friend bool operator==(const Formula& a, const Formula& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Formula& a, const Formula& b) {
    return compare(a, b) < 0;
  }

 private:
  struct LiteralData {
    std::string var;
    bool positive;
  };
  struct Node;
  struct CompoundData {
    Conn conn;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  struct Node {
    std::variant<LiteralData, CompoundData> data;
    int connectives;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A possibly-empty list of formula occurrences (the paper's Γ, Δ, Σ).
using Context = std::vector<Formula>;

/// A non-empty list of formula occurrences, read disjunctively.
///
/// Occurrence identity is positional: two occurrences may be structurally
/// equal yet remain distinct. Structural equality of whole sequents is a
/// separate comparison used for canonical (memoization) keys.
class Sequent {
 public:
  explicit Sequent(Context occurrences);
  Sequent(std::initializer_list<Formula> occurrences);

  const Context& occurrences() const { return occs_; }
  std::size_t size() const { return occs_.size(); }
  const Formula& operator[](std::size_t i) const { return occs_[i]; }

  /// Occurrences minus position `i`, as a context (may be empty).
  Context without(std::size_t i) const;

  /// Occurrences sorted by the structural order; equal multisets canonicalize
  /// to equal sequents.
  Sequent canonical() const;

  friend bool operator==(const Sequent& a, const Sequent& b);

 private:
  Context occs_;
};

/// Termination measure: total connective count and occurrence count.
struct Measure {
  int connectives = 0;
  int formulas = 0;
  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Flips literal polarity and swaps And/Or at every node (de Morgan).
Formula negate(const Formula& f);

Measure measure(const Sequent& s);

/// Canonical text. `&` binds tighter than `|`, both right-associative;
/// parentheses appear exactly where the tree deviates from that default.
std::string render(const Formula& f);

/// Occurrences joined by ", " in list order.
std::string render(const Sequent& s);

std::string render(const Context& c);

/// Parses `formula := term ("|" formula)?`, `term := factor ("&" term)?`,
/// `factor := atom | "~" factor | "(" formula ")"`, `atom := [A-Z][A-Za-z0-9_]*`.
/// `~` may apply to any subformula; it is pushed to the literals at parse time.
/// Throws ParseError on malformed input.
Formula parse_formula(std::string_view text);

/// Parses `sequent := formula ("," formula)*`. Whitespace is insignificant.
Sequent parse_sequent(std::string_view text);

/// Parses a sequent starting at `pos` and advances `pos` past it, stopping at
/// the first character that cannot extend the sequent. Lets other grammars
/// embed sequents while keeping error offsets relative to the whole input.
Sequent parse_sequent_prefix(std::string_view text, std::size_t& pos);

}  // namespace minseq
