#include "minseq/core.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace minseq {

Formula Formula::literal(std::string var, bool positive) {
  auto node = std::make_shared<Node>();
  node->data = LiteralData{std::move(var), positive};
  node->connectives = 0;
  return Formula(std::move(node));
}

Formula Formula::compound(Conn conn, Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->connectives = left.connectives() + right.connectives() + 1;
  node->data = CompoundData{conn, std::move(left.node_), std::move(right.node_)};
  return Formula(std::move(node));
}

Formula Formula::conj(Formula left, Formula right) {
  return compound(Conn::And, std::move(left), std::move(right));
}

Formula Formula::disj(Formula left, Formula right) {
  return compound(Conn::Or, std::move(left), std::move(right));
}

const std::string& Formula::var() const {
  return std::get<LiteralData>(node_->data).var;
}

bool Formula::positive() const {
  return std::get<LiteralData>(node_->data).positive;
}

Formula::Conn Formula::conn() const {
  return std::get<CompoundData>(node_->data).conn;
}

Formula Formula::left() const {
  return Formula(std::get<CompoundData>(node_->data).left);
}

Formula Formula::right() const {
  return Formula(std::get<CompoundData>(node_->data).right);
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;  // shared subtree
  const bool la = a.is_literal(), lb = b.is_literal();
  if (la != lb) return la ? -1 : 1;
  if (la) {
    if (int c = a.var().compare(b.var()); c != 0) return c;
    if (a.positive() == b.positive()) return 0;
    return a.positive() ? -1 : 1;
  }
  if (a.conn() != b.conn()) return a.conn() == Conn::And ? -1 : 1;
  if (int c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

Sequent::Sequent(Context occurrences) : occs_(std::move(occurrences)) {
  if (occs_.empty()) throw Error("sequent must have at least one occurrence");
}

Sequent::Sequent(std::initializer_list<Formula> occurrences)
    : Sequent(Context(occurrences)) {}

Context Sequent::without(std::size_t i) const {
  Context rest;
  rest.reserve(occs_.size() - 1);
  for (std::size_t j = 0; j < occs_.size(); ++j)
    if (j != i) rest.push_back(occs_[j]);
  return rest;
}

Sequent Sequent::canonical() const {
  Context sorted = occs_;
  std::stable_sort(sorted.begin(), sorted.end());
  return Sequent(std::move(sorted));
}

bool operator==(const Sequent& a, const Sequent& b) {
  return std::equal(a.occs_.begin(), a.occs_.end(), b.occs_.begin(),
                    b.occs_.end());
}

Formula negate(const Formula& f) {
  if (f.is_literal()) return Formula::literal(f.var(), !f.positive());
  const auto dual = f.conn() == Formula::Conn::And ? Formula::Conn::Or
                                                   : Formula::Conn::And;
  return Formula::compound(dual, negate(f.left()), negate(f.right()));
}

Measure measure(const Sequent& s) {
  Measure m{0, static_cast<int>(s.size())};
  for (const auto& f : s.occurrences()) m.connectives += f.connectives();
  return m;
}

namespace {

// Binding levels: `|` = 1, `&` = 2, literal = 3. A child is printed bare when
// its level is high enough for the default (right-associative) reading to
// rebuild the tree; otherwise it is parenthesized.
int level(const Formula& f) {
  if (f.is_literal()) return 3;
  return f.conn() == Formula::Conn::Or ? 1 : 2;
}

void render_into(const Formula& f, std::string& out) {
  if (f.is_literal()) {
    if (!f.positive()) out += '~';
    out += f.var();
    return;
  }
  const int lv = level(f);
  const bool pl = level(f.left()) < lv + 1;   // left child: strict subexpression
  const bool pr = level(f.right()) < lv;      // right child: same level folds in
  if (pl) out += '(';
  render_into(f.left(), out);
  if (pl) out += ')';
  out += f.conn() == Formula::Conn::And ? " & " : " | ";
  if (pr) out += '(';
  render_into(f.right(), out);
  if (pr) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render(const Context& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    render_into(c[i], out);
  }
  return out;
}

std::string render(const Sequent& s) { return render(s.occurrences()); }

namespace {

// Recursive-descent parser for the formula/sequent grammar.
class Parser {
 public:
  explicit Parser(std::string_view text, std::size_t pos = 0)
      : text_(text), pos_(pos) {}

  std::size_t pos() const { return pos_; }

  Formula formula() {
    Formula lhs = term();
    if (peek() == '|') {
      ++pos_;
      return Formula::disj(std::move(lhs), formula());
    }
    return lhs;
  }

  Sequent sequent() {
    Context occs;
    occs.push_back(formula());
    while (peek() == ',') {
      ++pos_;
      occs.push_back(formula());
    }
    return Sequent(std::move(occs));
  }

  void expect_end() {
    if (peek() != '\0') throw ParseError("unexpected trailing input", pos_);
  }

 private:
  Formula term() {
    Formula lhs = factor();
    if (peek() == '&') {
      ++pos_;
      return Formula::conj(std::move(lhs), term());
    }
    return lhs;
  }

  Formula factor() {
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return negate(factor());
    }
    if (c == '(') {
      ++pos_;
      Formula inner = formula();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isupper(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected a variable (uppercase letter)", pos_);
    const std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return Formula::literal(std::string(text_.substr(start, pos_ - start)));
  }

  // Returns the next significant character without consuming it ('\0' at end).
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

Sequent parse_sequent_prefix(std::string_view text, std::size_t& pos) {
  Parser p(text, pos);
  Sequent s = p.sequent();
  pos = p.pos();
  return s;
}

}  // namespace minseq
