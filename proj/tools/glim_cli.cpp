// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through glim.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "glim/glim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

// Thrown to abort a command with a library status.
struct Failure {
  int code;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Text = std::unique_ptr<glim_text, Deleter<glim_text, glim_text_free>>;
using Structure =
    std::unique_ptr<glim_structure, Deleter<glim_structure, glim_structure_free>>;
using FormulaH = std::unique_ptr<glim_formula, Deleter<glim_formula, glim_formula_free>>;
using FamilyH = std::unique_ptr<glim_family, Deleter<glim_family, glim_family_free>>;
using LatticeH = std::unique_ptr<glim_lattice, Deleter<glim_lattice, glim_lattice_free>>;
using MeasureH = std::unique_ptr<glim_measure, Deleter<glim_measure, glim_measure_free>>;

void check(glim_status status) {
  if (status == GLIM_OK) return;
  std::cerr << "error: " << glim_last_error_message() << '\n';
  throw Failure{kExitError};
}

std::string str(const Text& t) {
  return std::string(glim_text_data(t.get()), glim_text_size(t.get()));
}

// `@PATH` reads the file; anything else is literal text.
std::string text_arg(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1), std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << value.substr(1) << '\n';
    throw Failure{kExitError};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Structure load_structure(const std::string& path) {
  glim_structure* s = nullptr;
  check(glim_structure_load(path.c_str(), &s));
  return Structure(s);
}

FamilyH open_family(const std::string& name) {
  glim_family* f = nullptr;
  check(glim_family_open(name.c_str(), &f));
  return FamilyH(f);
}

Structure family_member(const FamilyH& family, std::size_t index) {
  glim_structure* s = nullptr;
  check(glim_family_member(family.get(), index, &s));
  return Structure(s);
}

// Built-in names first, then a formula over the structure's signature.
FormulaH formula(const std::string& arg, const Structure& signature_source) {
  const std::string text = text_arg(arg);
  glim_formula* f = nullptr;
  if (glim_formula_builtin(text.c_str(), &f) == GLIM_OK) return FormulaH(f);
  check(glim_formula_parse(text.c_str(), signature_source.get(), &f));
  return FormulaH(f);
}

LatticeH load_lattice(const std::string& path) {
  glim_lattice* l = nullptr;
  check(glim_lattice_load(path.c_str(), &l));
  return LatticeH(l);
}

MeasureH load_measure(const std::string& path) {
  glim_measure* m = nullptr;
  check(glim_measure_load(path.c_str(), &m));
  return MeasureH(m);
}

const char* vars_or_null(const std::string& vars) {
  return vars.empty() ? nullptr : vars.c_str();
}

struct Options {
  std::string structure;
  std::string formula;
  std::string vars;
  std::string family;
  std::size_t index = 0;
  std::size_t horizon = 0;
  std::string csv;
  std::string lattice;
  std::string measure;
  int grid = 0;
  std::string lhs;
  std::string rhs;
  std::size_t max_n = 0;
  std::size_t max_m = 0;
};

int cmd_pair(const Options& o) {
  Structure s;
  if (!o.structure.empty()) {
    s = load_structure(o.structure);
  } else {
    s = family_member(open_family(o.family), o.index);
  }
  const auto f = formula(o.formula, s);
  glim_pairing p{};
  check(glim_pair(s.get(), f.get(), vars_or_null(o.vars), &p));
  const Text classical(p.classical);
  const Text gamma(p.gamma);
  std::cout << p.count << ' ' << p.total << ' ' << str(classical) << ' '
            << str(gamma) << '\n';
  return kExitOk;
}

int cmd_integrate(const Options& o) {
  const auto s = load_structure(o.structure);
  const auto f = formula(o.formula, s);
  glim_text* out = nullptr;
  check(glim_integrate(s.get(), f.get(), vars_or_null(o.vars), &out));
  std::cout << str(Text(out)) << '\n';
  return kExitOk;
}

int cmd_converge(const Options& o) {
  const auto family = open_family(o.family);
  const auto first = family_member(family, 1);
  const auto f = formula(o.formula, first);
  glim_text* csv = nullptr;
  glim_text* verdict = nullptr;
  check(glim_converge(family.get(), f.get(), vars_or_null(o.vars), o.horizon,
                      &csv, &verdict));
  const Text table(csv);
  const Text line(verdict);
  if (o.csv.empty()) {
    std::cout << str(table);
  } else {
    std::ofstream out(o.csv, std::ios::binary);
    out << str(table);
    if (!out) {
      std::cerr << "error: cannot write " << o.csv << '\n';
      return kExitError;
    }
  }
  std::cout << str(line) << '\n';
  return kExitOk;
}

int cmd_check_measure(const Options& o) {
  const auto m = load_measure(o.measure);
  int valid = 0;
  glim_text* report = nullptr;
  check(glim_measure_check(m.get(), &valid, &report));
  std::cout << str(Text(report));
  return valid ? kExitOk : kExitError;
}

int cmd_eval(const Options& o) {
  const std::string phi = text_arg(o.formula);
  int result = 0;
  if (!o.measure.empty()) {
    const auto m = load_measure(o.measure);
    check(glim_pl_eval_measure(m.get(), phi.c_str(), &result));
  } else {
    const auto s = load_structure(o.structure);
    check(glim_pl_eval_structure(s.get(), phi.c_str(), &result));
  }
  std::cout << (result ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_entail(const Options& o) {
  const auto l = load_lattice(o.lattice);
  const std::string lhs = text_arg(o.lhs);
  const std::string rhs = text_arg(o.rhs);
  int holds = 0;
  glim_text* report = nullptr;
  check(glim_entail(l.get(), o.grid, lhs.c_str(), rhs.c_str(), &holds, &report));
  std::cout << str(Text(report));
  return kExitOk;
}

int cmd_soundness(const Options& o) {
  const auto l = load_lattice(o.lattice);
  int sound = 0;
  glim_text* report = nullptr;
  check(glim_soundness(l.get(), o.grid, 0, &sound, &report));
  std::cout << str(Text(report));
  return sound ? kExitOk : kExitError;
}

int cmd_duality(const Options& o) {
  int pass = 0;
  glim_text* report = nullptr;
  check(glim_duality_verify(o.max_n, o.max_m, &pass, &report));
  std::cout << str(Text(report));
  return pass ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Γ-valued measures, Stone pairings and finite duality checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(glim_version()));
  Options o;

  auto* pair = app.add_subcommand("pair", "Count satisfying assignments in one structure");
  auto* pair_structure = pair->add_option("--structure", o.structure, "Structure file");
  auto* pair_family = pair->add_option("--family", o.family, "fence or a directory");
  auto* pair_index = pair->add_option("--index", o.index, "Family member (from 1)");
  pair->add_option("--formula", o.formula, "Formula text or @PATH")->required();
  pair->add_option("--vars", o.vars, "Comma-separated context");
  pair_structure->excludes(pair_family)->excludes(pair_index);
  pair_family->needs(pair_index);
  pair_index->needs(pair_family);

  auto* converge = app.add_subcommand("converge", "Pair a family up to a horizon");
  converge->add_option("--family", o.family, "fence or a directory")->required();
  converge->add_option("--formula", o.formula, "Formula text or @PATH")->required();
  converge->add_option("--vars", o.vars, "Comma-separated context");
  converge->add_option("--horizon", o.horizon, "Last index")->required();
  converge->add_option("--csv", o.csv, "Write the table here instead of stdout");

  auto* check_measure = app.add_subcommand("check-measure", "Validate a measure file");
  check_measure->add_option("--measure", o.measure, "Measure file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a PL formula");
  auto* eval_measure = eval->add_option("--measure", o.measure, "Measure file");
  auto* eval_structure = eval->add_option("--structure", o.structure, "Structure file");
  eval->add_option("--formula", o.formula, "PL formula text or @PATH")->required();
  eval_measure->excludes(eval_structure);

  auto* entail = app.add_subcommand("entail", "Decide entailment on a measure grid");
  entail->add_option("--lattice", o.lattice, "Lattice file")->required();
  entail->add_option("--grid", o.grid, "Grid resolution k")->required();
  entail->add_option("--lhs", o.lhs, "Premise")->required();
  entail->add_option("--rhs", o.rhs, "Conclusion")->required();

  auto* soundness = app.add_subcommand("soundness", "Check rules L1-L6 on a measure grid");
  soundness->add_option("--lattice", o.lattice, "Lattice file")->required();
  soundness->add_option("--grid", o.grid, "Grid resolution k")->required();

  auto* duality = app.add_subcommand("duality-verify", "Run the finite duality checks");
  duality->add_option("--max-n", o.max_n, "Bound on chain sizes");
  duality->add_option("--max-m", o.max_m, "Bound on refinement factors");

  auto* integrate = app.add_subcommand("integrate",
                                       "Integrate the assignment distribution over the satisfying set");
  integrate->add_option("--structure", o.structure, "Structure file")->required();
  integrate->add_option("--formula", o.formula, "Formula text or @PATH")->required();
  integrate->add_option("--vars", o.vars, "Comma-separated context");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << glim_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*pair && o.structure.empty() && o.family.empty()) {
    std::cerr << "usage error: pair needs --structure or --family with --index\n";
    return kExitUsage;
  }
  if (*eval && o.structure.empty() && o.measure.empty()) {
    std::cerr << "usage error: eval needs --measure or --structure\n";
    return kExitUsage;
  }

  try {
    if (*pair) return cmd_pair(o);
    if (*converge) return cmd_converge(o);
    if (*check_measure) return cmd_check_measure(o);
    if (*eval) return cmd_eval(o);
    if (*entail) return cmd_entail(o);
    if (*soundness) return cmd_soundness(o);
    if (*duality) return cmd_duality(o);
    if (*integrate) return cmd_integrate(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
