#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>

#include "minseq/calculus.hpp"
#include "minseq/core.hpp"
#include "minseq/errors.hpp"
#include "minseq/metatheory.hpp"
#include "minseq/prover.hpp"
#include "minseq/semantics.hpp"

namespace py = pybind11;

namespace {

minseq::Policy policy_from(const std::string& name) {
  if (name == "leftmost") return minseq::Policy::Leftmost;
  if (name == "rightmost") return minseq::Policy::Rightmost;
  if (name == "random") return minseq::Policy::Random;
  throw minseq::Error("unknown policy '" + name +
                      "' (expected leftmost, rightmost, or random)");
}

minseq::Family family_from(const std::string& name) {
  if (name == "standard") return minseq::Family::Standard;
  if (name == "extended") return minseq::Family::Extended;
  throw minseq::Error("unknown family '" + name +
                      "' (expected standard or extended)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using namespace minseq;

  m.doc() =
      "Workbench for one-sided sequent calculi of classical propositional "
      "logic";

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; },
           py::is_operator())
      .def("__hash__",
           [](const Formula& f) { return std::hash<std::string>{}(render(f)); })
      .def_property_readonly("connectives", &Formula::connectives)
      .def_property_readonly("is_literal", &Formula::is_literal);

  py::class_<Sequent>(m, "Sequent")
      .def("__str__", [](const Sequent& s) { return render(s); })
      .def("__repr__",
           [](const Sequent& s) { return "Sequent('" + render(s) + "')"; })
      .def("__eq__", [](const Sequent& a, const Sequent& b) { return a == b; },
           py::is_operator())
      .def("__len__", &Sequent::size)
      .def_property_readonly(
          "formulas", [](const Sequent& s) { return s.occurrences(); });

  py::class_<System>(m, "System")
      .def("__str__", [](const System& s) { return render_system(s); })
      .def("__repr__",
           [](const System& s) { return "System('" + render_system(s) + "')"; })
      .def("__eq__", [](const System& a, const System& b) { return a == b; },
           py::is_operator());

  py::class_<Derivation>(m, "Derivation")
      .def("__str__", [](const Derivation& d) { return render_derivation(d); })
      .def_property_readonly(
          "rule",
          [](const Derivation& d) { return std::string(rule_name(d.rule)); })
      .def_property_readonly(
          "conclusion", [](const Derivation& d) { return d.conclusion; })
      .def_property_readonly(
          "premises", [](const Derivation& d) { return d.premises; });

  m.def("parse_formula",
        [](const std::string& text) { return parse_formula(text); },
        py::arg("text"), "Parse a formula.");
  m.def("parse_sequent",
        [](const std::string& text) { return parse_sequent(text); },
        py::arg("text"), "Parse a comma-separated sequent.");
  m.def("parse_system",
        [](const std::string& text) { return parse_system(text); },
        py::arg("text"),
        "Parse a preset name (gs1p, gs3p, mp, mp-, pp, np) or a comma list "
        "of rules.");
  m.def("parse_derivation",
        [](const std::string& text) { return parse_derivation(text); },
        py::arg("text"), "Parse a derivation in the parenthesised format.");

  m.def("is_valid", &is_valid, py::arg("sequent"),
        "Classical validity by truth tables.");
  m.def("is_minimal", &is_minimal, py::arg("sequent"),
        "Valid, and every proper subsequent is invalid.");
  m.def("minimize", &minimize, py::arg("sequent"),
        "A minimal valid subsequent of a valid sequent.");

  m.def(
      "prove",
      [](const Sequent& s, const std::string& system,
         const std::string& policy, std::uint64_t seed) {
        ProveOptions opts;
        opts.policy = policy_from(policy);
        opts.seed = seed;
        return elaborate(prove_minimal(s, opts), parse_system(system));
      },
      py::arg("sequent"), py::arg("system") = "mp",
      py::arg("policy") = "leftmost", py::arg("seed") = 0,
      "Construct a derivation of a minimal sequent, elaborated into the "
      "target system.");

  m.def(
      "check",
      [](const System& sys, const Derivation& d) {
        const CheckReport report = check_derivation(sys, d);
        std::vector<std::string> violations;
        for (const CheckViolation& v : report.violations)
          violations.push_back(v.path + ": " +
                               std::string(violation_name(v.kind)) + ": " +
                               v.message);
        return violations;
      },
      py::arg("system"), py::arg("derivation"),
      "Check every step; returns the list of violations (empty = ok).");

  m.def(
      "search",
      [](const System& sys, const Sequent& goal, int max_width,
         int max_depth) {
        SearchBounds bounds;
        bounds.max_width = max_width;
        bounds.max_depth = max_depth;
        const SearchOutcome out = search(sys, goal, bounds);
        py::dict result;
        switch (out.kind) {
          case SearchOutcome::Kind::Derivable:
            result["status"] = "derivable";
            break;
          case SearchOutcome::Kind::Underivable:
            result["status"] = "underivable";
            break;
          case SearchOutcome::Kind::Exhausted:
            result["status"] = "exhausted";
            break;
        }
        result["definitive"] = out.derivable() || out.definitive;
        result["derivation"] =
            out.derivation ? py::cast(*out.derivation) : py::none();
        return result;
      },
      py::arg("system"), py::arg("goal"), py::arg("max_width") = 0,
      py::arg("max_depth") = 32,
      "Backward proof search; returns {status, definitive, derivation}.");

  m.def("elaborate", &elaborate, py::arg("derivation"), py::arg("target"),
        "Rewrite a derivation so every step uses a rule of the target "
        "system.");
  m.def("contains", &contains, py::arg("outer"), py::arg("inner"),
        "Does the outer system simulate every rule of the inner one?");
  m.def(
      "closure_rules",
      [](const System& sys) { return render_rules(closure(sys)); },
      py::arg("system"),
      "Comma list of the rules derivable in the system.");

  m.def(
      "census_text",
      [](const std::string& family, int var_count, int max_connectives,
         int jobs) {
        CensusBounds bounds;
        bounds.var_count = var_count;
        bounds.max_connectives = max_connectives;
        const CensusReport report =
            census(family_from(family), bounds, jobs);
        return render_census_text(report);
      },
      py::arg("family") = "standard", py::arg("var_count") = 2,
      py::arg("max_connectives") = 4, py::arg("jobs") = 0,
      "Classify every system of a family; returns the text report.");

  m.def(
      "degree_text",
      [](const System& sys, int var_count, int max_connectives,
         int max_occurrences) {
        DegreeBounds bounds;
        bounds.var_count = var_count;
        bounds.max_connectives = max_connectives;
        bounds.max_occurrences = max_occurrences;
        return render_degree_text(degree_report(sys, bounds));
      },
      py::arg("system"), py::arg("var_count") = 2,
      py::arg("max_connectives") = 4, py::arg("max_occurrences") = 3,
      "Sweep the three completeness degrees; returns the text report.");

  m.def(
      "preset",
      [](const std::string& name) {
        const auto sys = find_preset(name);
        if (!sys) throw Error("unknown preset '" + name + "'");
        return *sys;
      },
      py::arg("name"), "Look up a preset system by name.");
}
