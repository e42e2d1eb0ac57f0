#include "minseq/calculus.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace minseq {

int rule_arity(RuleId r) {
  switch (r) {
    case RuleId::Ax:
      return 0;
    case RuleId::Plus1:
    case RuleId::Plus2:
    case RuleId::Par:
    case RuleId::Weaken:
    case RuleId::Contract:
      return 1;
    case RuleId::Tensor:
    case RuleId::With:
    case RuleId::Wedge:
      return 2;
  }
  return 0;
}

std::string_view rule_name(RuleId r) {
  switch (r) {
    case RuleId::Ax:
      return "ax";
    case RuleId::Tensor:
      return "tensor";
    case RuleId::With:
      return "with";
    case RuleId::Wedge:
      return "wedge";
    case RuleId::Plus1:
      return "plus1";
    case RuleId::Plus2:
      return "plus2";
    case RuleId::Par:
      return "par";
    case RuleId::Weaken:
      return "w";
    case RuleId::Contract:
      return "c";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, RuleId> kNames[] = {
      {"ax", RuleId::Ax},       {"tensor", RuleId::Tensor},
      {"with", RuleId::With},   {"wedge", RuleId::Wedge},
      {"plus1", RuleId::Plus1}, {"plus2", RuleId::Plus2},
      {"par", RuleId::Par},     {"w", RuleId::Weaken},
      {"c", RuleId::Contract},
  };
  for (const auto& [n, r] : kNames)
    if (n == name) return r;
  return std::nullopt;
}

bool System::allows(RuleId r) const {
  switch (r) {
    case RuleId::Ax:
      return true;
    case RuleId::Tensor:
      return has(Toggle::Tensor);
    case RuleId::With:
      return has(Toggle::With);
    case RuleId::Wedge:
      return has(Toggle::Wedge);
    case RuleId::Plus1:
    case RuleId::Plus2:
      return has(Toggle::Plus);
    case RuleId::Par:
      return has(Toggle::Par);
    case RuleId::Weaken:
      return has(Toggle::Weaken);
    case RuleId::Contract:
      return has(Toggle::Contract);
  }
  return false;
}

namespace {

constexpr std::uint8_t bit(Toggle t) { return static_cast<std::uint8_t>(t); }

template <typename... Ts>
constexpr std::uint8_t bits(Ts... ts) {
  return (bit(ts) | ...);
}

struct Preset {
  std::string_view name;
  System sys;
};

const std::array<Preset, 6>& presets() {
  static const std::array<Preset, 6> kPresets = {{
      {"gs1p", {Axiom::Plain, bits(Toggle::With, Toggle::Plus, Toggle::Weaken,
                                   Toggle::Contract)}},
      {"gs3p", {Axiom::WithContext, bits(Toggle::With, Toggle::Par)}},
      {"mp", {Axiom::Plain, bits(Toggle::Wedge, Toggle::Plus, Toggle::Par)}},
      {"mp-", {Axiom::Plain, bits(Toggle::Tensor, Toggle::With, Toggle::Plus,
                                  Toggle::Par)}},
      {"pp", {Axiom::Plain, bits(Toggle::Tensor, Toggle::Plus, Toggle::Contract)}},
      {"np", {Axiom::Plain, bits(Toggle::With, Toggle::Par, Toggle::Weaken)}},
  }};
  return kPresets;
}

constexpr std::pair<std::string_view, Toggle> kToggleNames[] = {
    {"tensor", Toggle::Tensor}, {"with", Toggle::With}, {"wedge", Toggle::Wedge},
    {"plus", Toggle::Plus},     {"par", Toggle::Par},   {"w", Toggle::Weaken},
    {"c", Toggle::Contract},
};

}  // namespace

System gs1p() { return presets()[0].sys; }
System gs3p() { return presets()[1].sys; }
System mp() { return presets()[2].sys; }
System mp_minus() { return presets()[3].sys; }
System pp() { return presets()[4].sys; }
System np() { return presets()[5].sys; }

std::optional<System> find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p.sys;
  return std::nullopt;
}

std::optional<std::string> preset_name(const System& sys) {
  for (const auto& p : presets())
    if (p.sys == sys) return std::string(p.name);
  return std::nullopt;
}

System parse_system(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  // Strip whitespace, remembering original offsets for error messages.
  std::string compact;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < lowered.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(lowered[i]))) {
      compact += lowered[i];
      offset.push_back(i);
    }
  if (compact.empty()) throw ParseError("empty system description", 0);
  if (auto preset = find_preset(compact)) return *preset;
  if (compact == "none") return System{};
  System sys;
  std::size_t start = 0;
  while (start <= compact.size()) {
    const std::size_t comma = compact.find(',', start);
    const std::size_t end = comma == std::string::npos ? compact.size() : comma;
    const std::string_view token = std::string_view(compact).substr(start, end - start);
    const std::size_t at = start < offset.size() ? offset[start] : lowered.size();
    if (token.empty()) throw ParseError("empty rule name in system", at);
    bool known = false;
    for (const auto& [n, t] : kToggleNames)
      if (n == token) {
        sys.rules |= bit(t);
        known = true;
        break;
      }
    if (token == "ctx") {
      sys.axiom = Axiom::WithContext;
      known = true;
    }
    if (!known)
      throw ParseError("unknown rule or preset '" + std::string(token) + "'", at);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return sys;
}

std::string render_system(const System& sys) {
  if (auto name = preset_name(sys)) return *name;
  std::string out;
  if (sys.axiom == Axiom::WithContext) out = "ctx";
  for (const auto& [n, t] : kToggleNames)
    if (sys.has(t)) {
      if (!out.empty()) out += ',';
      out += n;
    }
  return out.empty() ? "none" : out;
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::RuleNotInSystem:
      return "rule-not-in-system";
    case ViolationKind::RuleMismatch:
      return "rule-mismatch";
    case ViolationKind::ArityMismatch:
      return "arity-mismatch";
  }
  return "?";
}

namespace {

Context sorted(Context v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool same_multiset(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  return sorted(a) == sorted(b);
}

/// Removes the first occurrence structurally equal to f, or fails.
std::optional<Context> remove_one(const Context& v, const Formula& f) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == f) {
      Context rest;
      rest.reserve(v.size() - 1);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (j != i) rest.push_back(v[j]);
      return rest;
    }
  return std::nullopt;
}

bool complementary_literals(const Formula& x, const Formula& y) {
  return x.is_literal() && y.is_literal() && x.var() == y.var() &&
         x.positive() != y.positive();
}

bool is_conn(const Formula& f, Formula::Conn c) {
  return !f.is_literal() && f.conn() == c;
}

int count_of(const Context& sorted_v, const Formula& f) {
  auto [lo, hi] = std::equal_range(sorted_v.begin(), sorted_v.end(), f);
  return static_cast<int>(hi - lo);
}

}  // namespace

std::optional<StepMatch> match_step(Axiom axiom, RuleId rule,
                                    const Sequent& conclusion,
                                    const std::vector<Sequent>& premises,
                                    std::optional<std::size_t> pin) {
  const Context& occ = conclusion.occurrences();
  if (rule == RuleId::Ax) {
    if (axiom == Axiom::Plain)
      return occ.size() == 2 && complementary_literals(occ[0], occ[1])
                 ? std::optional<StepMatch>(StepMatch{})
                 : std::nullopt;
    for (std::size_t i = 0; i < occ.size(); ++i)
      for (std::size_t j = i + 1; j < occ.size(); ++j)
        if (complementary_literals(occ[i], occ[j])) return StepMatch{};
    return std::nullopt;
  }

  std::size_t first = 0, last = occ.size();
  if (pin) {
    if (*pin >= occ.size()) return std::nullopt;
    first = *pin;
    last = *pin + 1;
  }

  for (std::size_t i = first; i < last; ++i) {
    const Formula& p = occ[i];
    switch (rule) {
      case RuleId::Plus1:
      case RuleId::Plus2: {
        if (!is_conn(p, Formula::Conn::Or)) break;
        Context want = conclusion.without(i);
        want.push_back(rule == RuleId::Plus1 ? p.left() : p.right());
        if (same_multiset(premises[0].occurrences(), want))
          return StepMatch{i, {}, {}, {}};
        break;
      }
      case RuleId::Par: {
        if (!is_conn(p, Formula::Conn::Or)) break;
        Context want = conclusion.without(i);
        want.push_back(p.left());
        want.push_back(p.right());
        if (same_multiset(premises[0].occurrences(), want))
          return StepMatch{i, {}, {}, {}};
        break;
      }
      case RuleId::Weaken: {
        if (same_multiset(premises[0].occurrences(), conclusion.without(i)))
          return StepMatch{i, {}, {}, {}};
        break;
      }
      case RuleId::Contract: {
        Context want = occ;
        want.push_back(occ[i]);
        if (same_multiset(premises[0].occurrences(), want))
          return StepMatch{i, {}, {}, {}};
        break;
      }
      case RuleId::With: {
        if (!is_conn(p, Formula::Conn::And)) break;
        Context shared = conclusion.without(i);
        Context want1 = shared, want2 = shared;
        want1.push_back(p.left());
        want2.push_back(p.right());
        if (same_multiset(premises[0].occurrences(), want1) &&
            same_multiset(premises[1].occurrences(), want2))
          return StepMatch{i, std::move(shared), {}, {}};
        break;
      }
      case RuleId::Tensor: {
        if (!is_conn(p, Formula::Conn::And)) break;
        auto left = remove_one(premises[0].occurrences(), p.left());
        auto right = remove_one(premises[1].occurrences(), p.right());
        if (!left || !right) break;
        Context both = *left;
        both.insert(both.end(), right->begin(), right->end());
        if (same_multiset(both, conclusion.without(i)))
          return StepMatch{i, {}, std::move(*left), std::move(*right)};
        break;
      }
      case RuleId::Wedge: {
        if (!is_conn(p, Formula::Conn::And)) break;
        auto m1 = remove_one(premises[0].occurrences(), p.left());
        auto m2 = remove_one(premises[1].occurrences(), p.right());
        if (!m1 || !m2) break;
        const Context d = sorted(conclusion.without(i));
        const Context s1 = sorted(*m1), s2 = sorted(*m2);
        // Distinct formulas across the three contexts.
        Context keys = d;
        keys.insert(keys.end(), s1.begin(), s1.end());
        keys.insert(keys.end(), s2.begin(), s2.end());
        keys = sorted(std::move(keys));
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        // Per formula, the shared part must take g = m1+m2-d copies; the
        // split parts take the rest. Feasible iff max(m1,m2) <= d <= m1+m2.
        StepMatch match{i, {}, {}, {}};
        bool ok = true;
        for (const Formula& f : keys) {
          const int dc = count_of(d, f);
          const int c1 = count_of(s1, f);
          const int c2 = count_of(s2, f);
          if (dc < std::max(c1, c2) || dc > c1 + c2) {
            ok = false;
            break;
          }
          const int g = c1 + c2 - dc;
          for (int k = 0; k < g; ++k) match.shared.push_back(f);
          for (int k = 0; k < dc - c2; ++k) match.left.push_back(f);
          for (int k = 0; k < dc - c1; ++k) match.right.push_back(f);
        }
        if (ok) return match;
        break;
      }
      case RuleId::Ax:
        break;
    }
  }
  return std::nullopt;
}

StepResult check_step(const System& sys, RuleId rule, const Sequent& conclusion,
                      const std::vector<Sequent>& premises,
                      std::optional<std::size_t> pin) {
  if (!sys.allows(rule))
    return StepResult::fail(ViolationKind::RuleNotInSystem,
                            "rule '" + std::string(rule_name(rule)) +
                                "' is not available in " + render_system(sys));
  const int arity = rule_arity(rule);
  if (static_cast<int>(premises.size()) != arity)
    return StepResult::fail(ViolationKind::ArityMismatch,
                            "rule '" + std::string(rule_name(rule)) + "' expects " +
                                std::to_string(arity) + " premise(s), got " +
                                std::to_string(premises.size()));
  if (match_step(sys.axiom, rule, conclusion, premises, pin))
    return StepResult::pass();
  std::string msg = "no instantiation of '" + std::string(rule_name(rule)) +
                    "' derives [" + render(conclusion) + "]";
  if (!premises.empty()) {
    msg += " from";
    for (const auto& p : premises) msg += " [" + render(p) + "]";
  }
  if (pin) msg += " with principal occurrence pinned to " + std::to_string(*pin);
  return StepResult::fail(ViolationKind::RuleMismatch, std::move(msg));
}

namespace {

void check_walk(const System& sys, const Derivation& d, const std::string& path,
                CheckReport& report) {
  std::vector<Sequent> premises;
  premises.reserve(d.premises.size());
  for (const auto& child : d.premises) premises.push_back(child.conclusion);
  StepResult r = check_step(sys, d.rule, d.conclusion, premises, d.pin);
  if (!r.ok) {
    report.ok = false;
    report.violations.push_back({path, r.kind, std::move(r.message)});
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i)
    check_walk(sys, d.premises[i],
               path == "root" ? std::to_string(i) : path + "." + std::to_string(i),
               report);
}

}  // namespace

CheckReport check_derivation(const System& sys, const Derivation& d) {
  CheckReport report;
  check_walk(sys, d, "root", report);
  return report;
}

namespace {

class DerivationParser {
 public:
  explicit DerivationParser(std::string_view text) : text_(text) {}

  Derivation node() {
    if (peek() != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    skip_ws();
    const std::size_t name_start = pos_;
    while (pos_ < text_.size() &&
           (std::islower(static_cast<unsigned char>(text_[pos_])) ||
            std::isdigit(static_cast<unsigned char>(text_[pos_]))))
      ++pos_;
    if (pos_ == name_start) throw ParseError("expected a rule name", pos_);
    const std::string name(text_.substr(name_start, pos_ - name_start));
    const auto rule = rule_from_name(name);
    if (!rule) throw UnknownRuleError(name, name_start);
    std::optional<std::size_t> pin;
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      std::size_t value = 0;
      const std::size_t digits_start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == digits_start)
        throw ParseError("expected an occurrence index after '@'", pos_);
      pin = value;
    }
    if (peek() != '[') throw ParseError("expected '['", pos_);
    ++pos_;
    Sequent conclusion = parse_sequent_prefix(text_, pos_);
    if (peek() != ']') throw ParseError("expected ']'", pos_);
    ++pos_;
    std::vector<Derivation> premises;
    while (peek() == '(') premises.push_back(node());
    if (peek() != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return Derivation(*rule, std::move(conclusion), std::move(premises), pin);
  }

  void expect_end() {
    if (peek() != '\0') throw ParseError("unexpected trailing input", pos_);
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_walk(const Derivation& d, std::string& out) {
  out += '(';
  out += rule_name(d.rule);
  if (d.pin) {
    out += '@';
    out += std::to_string(*d.pin);
  }
  out += " [";
  out += render(d.conclusion);
  out += ']';
  for (const auto& p : d.premises) {
    out += ' ';
    render_walk(p, out);
  }
  out += ')';
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  DerivationParser p(text);
  Derivation d = p.node();
  p.expect_end();
  return d;
}

std::string render_derivation(const Derivation& d) {
  std::string out;
  render_walk(d, out);
  return out;
}

}  // namespace minseq
