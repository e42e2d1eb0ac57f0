#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "minseq/calculus.hpp"
#include "minseq/core.hpp"
#include "minseq/errors.hpp"
#include "minseq/metatheory.hpp"
#include "minseq/prover.hpp"
#include "minseq/semantics.hpp"

namespace {

constexpr int kExitYes = 0;    // affirmative answer / output produced
constexpr int kExitNo = 1;     // negative answer (invalid, underivable, ...)
constexpr int kExitUsage = 2;  // bad invocation or unparseable input
constexpr int kExitBound = 3;  // a resource cap cut the answer short

std::string slurp_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

/// Inline argument text, with "-" standing for stdin.
std::string argument_text(const std::string& arg) {
  return arg == "-" ? slurp_stdin() : arg;
}

/// File contents, with "-" standing for stdin.
std::string file_text(const std::string& path) {
  if (path == "-") return slurp_stdin();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw minseq::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace minseq;

  CLI::App app{
      "minseq: a workbench for one-sided sequent calculi of classical "
      "propositional logic"};
  app.require_subcommand(1);
  int rc = kExitYes;

  const std::map<std::string, Policy> policy_map{
      {"leftmost", Policy::Leftmost},
      {"rightmost", Policy::Rightmost},
      {"random", Policy::Random},
  };
  const std::map<std::string, Family> family_map{
      {"standard", Family::Standard},
      {"extended", Family::Extended},
  };

  // parse
  std::string parse_arg;
  auto* parse_cmd =
      app.add_subcommand("parse", "Parse a sequent and print it back");
  parse_cmd->add_option("sequent", parse_arg, "sequent text, or - for stdin")
      ->required();
  parse_cmd->callback([&] {
    std::cout << render(parse_sequent(argument_text(parse_arg))) << "\n";
  });

  // valid
  std::string valid_arg;
  auto* valid_cmd =
      app.add_subcommand("valid", "Is the sequent a classical tautology?");
  valid_cmd->add_option("sequent", valid_arg, "sequent text, or - for stdin")
      ->required();
  valid_cmd->callback([&] {
    if (is_valid(parse_sequent(argument_text(valid_arg)))) {
      std::cout << "valid\n";
    } else {
      std::cout << "not valid\n";
      rc = kExitNo;
    }
  });

  // minimal
  std::string minimal_arg;
  auto* minimal_cmd = app.add_subcommand(
      "minimal", "Is the sequent valid with no valid proper subsequent?");
  minimal_cmd
      ->add_option("sequent", minimal_arg, "sequent text, or - for stdin")
      ->required();
  minimal_cmd->callback([&] {
    const Sequent s = parse_sequent(argument_text(minimal_arg));
    if (is_minimal(s)) {
      std::cout << "minimal\n";
    } else {
      std::cout << (is_valid(s) ? "valid but not minimal\n" : "not valid\n");
      rc = kExitNo;
    }
  });

  // minimize
  std::string minimize_arg;
  auto* minimize_cmd = app.add_subcommand(
      "minimize", "Print a minimal valid subsequent of a valid sequent");
  minimize_cmd
      ->add_option("sequent", minimize_arg, "sequent text, or - for stdin")
      ->required();
  minimize_cmd->callback([&] {
    std::cout << render(minimize(parse_sequent(argument_text(minimize_arg))))
              << "\n";
  });

  // prove
  std::string prove_arg;
  std::string prove_system = "mp";
  Policy prove_policy = Policy::Leftmost;
  std::uint64_t prove_seed = 0;
  auto* prove_cmd = app.add_subcommand(
      "prove", "Construct a derivation of a minimal sequent");
  prove_cmd->add_option("sequent", prove_arg, "sequent text, or - for stdin")
      ->required();
  prove_cmd->add_option("--system", prove_system,
                        "target system; the construction is elaborated into "
                        "it (default mp)");
  prove_cmd
      ->add_option("--policy", prove_policy,
                   "principal choice: leftmost|rightmost|random")
      ->transform(CLI::CheckedTransformer(policy_map, CLI::ignore_case));
  prove_cmd->add_option("--seed", prove_seed, "seed for --policy random");
  prove_cmd->callback([&] {
    const Sequent s = parse_sequent(argument_text(prove_arg));
    const System target = parse_system(prove_system);
    ProveOptions opts;
    opts.policy = prove_policy;
    opts.seed = prove_seed;
    const Derivation d = elaborate(prove_minimal(s, opts), target);
    std::cout << render_derivation(d) << "\n";
  });

  // check
  std::string check_system, check_file;
  auto* check_cmd = app.add_subcommand(
      "check", "Check every step of a derivation file against a system");
  check_cmd->add_option("--system", check_system, "system to check against")
      ->required();
  check_cmd->add_option("file", check_file, "derivation file, or - for stdin")
      ->required();
  check_cmd->callback([&] {
    const System sys = parse_system(check_system);
    const Derivation d = parse_derivation(file_text(check_file));
    const CheckReport report = check_derivation(sys, d);
    if (report.ok) {
      std::cout << "ok: derives " << render(d.conclusion) << "\n";
    } else {
      for (const CheckViolation& v : report.violations)
        std::cout << v.path << ": " << violation_name(v.kind) << ": "
                  << v.message << "\n";
      rc = kExitNo;
    }
  });

  // search
  std::string search_arg, search_system;
  int search_width = 0, search_depth = 32;
  auto* search_cmd = app.add_subcommand(
      "search", "Backward proof search for a sequent in a system");
  search_cmd->add_option("sequent", search_arg, "sequent text, or - for stdin")
      ->required();
  search_cmd->add_option("--system", search_system, "system to search in")
      ->required();
  search_cmd->add_option("--max-width", search_width,
                         "cap on sequent width during contraction "
                         "(0 = goal width + 4)");
  search_cmd->add_option("--max-depth", search_depth,
                         "cap on rule applications along a branch");
  search_cmd->callback([&] {
    const System sys = parse_system(search_system);
    const Sequent goal = parse_sequent(argument_text(search_arg));
    SearchBounds bounds;
    bounds.max_width = search_width;
    bounds.max_depth = search_depth;
    const SearchOutcome out = search(sys, goal, bounds);
    switch (out.kind) {
      case SearchOutcome::Kind::Derivable:
        std::cout << render_derivation(*out.derivation) << "\n";
        break;
      case SearchOutcome::Kind::Underivable:
        std::cout << "underivable (definitive)\n";
        rc = kExitNo;
        break;
      case SearchOutcome::Kind::Exhausted:
        std::cout << "no proof within caps\n";
        rc = kExitBound;
        break;
    }
  });

  // contains
  std::string outer_system, inner_system;
  auto* contains_cmd = app.add_subcommand(
      "contains",
      "Does the first system simulate every rule of the second?");
  contains_cmd->add_option("outer", outer_system, "candidate larger system")
      ->required();
  contains_cmd->add_option("inner", inner_system, "candidate smaller system")
      ->required();
  contains_cmd->callback([&] {
    const System outer = parse_system(outer_system);
    const System inner = parse_system(inner_system);
    if (contains(outer, inner)) {
      std::cout << "yes\n";
    } else {
      std::cout << "no\n";
      rc = kExitNo;
    }
  });

  // elaborate
  std::string elaborate_from, elaborate_to;
  auto* elaborate_cmd = app.add_subcommand(
      "elaborate",
      "Rewrite a derivation so every step uses a rule of the target system");
  elaborate_cmd
      ->add_option("--from", elaborate_from, "derivation file, or - for stdin")
      ->required();
  elaborate_cmd->add_option("--to", elaborate_to, "target system")->required();
  elaborate_cmd->callback([&] {
    const Derivation d = parse_derivation(file_text(elaborate_from));
    const System target = parse_system(elaborate_to);
    std::cout << render_derivation(elaborate(d, target)) << "\n";
  });

  // census
  Family census_family = Family::Standard;
  CensusBounds census_bounds;
  int census_jobs = 0;
  bool census_csv = false;
  auto* census_cmd = app.add_subcommand(
      "census",
      "Classify every system of a family as complete or incomplete");
  census_cmd->add_option("--family", census_family, "standard|extended")
      ->transform(CLI::CheckedTransformer(family_map, CLI::ignore_case));
  census_cmd->add_option("--vars", census_bounds.var_count,
                         "number of enumeration variables");
  census_cmd->add_option("--max-connectives", census_bounds.max_connectives,
                         "per-formula connective bound");
  census_cmd->add_option("--jobs", census_jobs,
                         "worker threads (0 = all cores)");
  census_cmd->add_flag("--csv", census_csv, "machine-readable output");
  census_cmd->callback([&] {
    const CensusReport report = census(census_family, census_bounds, census_jobs);
    std::cout << (census_csv ? render_census_csv(report)
                             : render_census_text(report));
    if (!report.all_agree) rc = kExitNo;
  });

  // degrees
  std::string degrees_system;
  DegreeBounds degree_bounds;
  auto* degrees_cmd = app.add_subcommand(
      "degrees",
      "Sweep formula-, minimal-, and sequent-completeness of a system");
  degrees_cmd->add_option("--system", degrees_system, "system to sweep")
      ->required();
  degrees_cmd->add_option("--vars", degree_bounds.var_count,
                          "number of enumeration variables");
  degrees_cmd->add_option("--max-connectives", degree_bounds.max_connectives,
                          "connective bound (per formula and per sequent)");
  degrees_cmd->add_option("--max-occurrences", degree_bounds.max_occurrences,
                          "occurrence bound per sequent");
  degrees_cmd->add_option("--max-width", degree_bounds.search.max_width,
                          "search width cap (0 = goal width + 4)");
  degrees_cmd->add_option("--max-depth", degree_bounds.search.max_depth,
                          "search depth cap");
  degrees_cmd->callback([&] {
    const System sys = parse_system(degrees_system);
    const DegreeReport report = degree_report(sys, degree_bounds);
    std::cout << render_degree_text(report);
    if (!(report.formula.pass && report.minimal.pass && report.sequent.pass))
      rc = kExitNo;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotValidError& e) {
    std::cerr << e.what() << "\n";
    return kExitNo;
  } catch (const NotMinimalError& e) {
    std::cerr << e.what() << "\n";
    return kExitNo;
  } catch (const NotContainedError& e) {
    std::cerr << e.what() << "\n";
    return kExitNo;
  } catch (const BoundTooLargeError& e) {
    std::cerr << e.what() << "\n";
    return kExitBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
