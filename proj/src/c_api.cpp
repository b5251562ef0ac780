// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/glim.h"

#include <new>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "glim/duality.hpp"
#include "glim/error.hpp"
#include "glim/fo.hpp"
#include "glim/gamma.hpp"
#include "glim/lattice.hpp"
#include "glim/measure.hpp"
#include "glim/pairing.hpp"
#include "glim/pl.hpp"
#include "text_util.hpp"

struct glim_text {
  std::string data;
};

struct glim_structure {
  glim::FiniteStructure value;
};

struct glim_formula {
  glim::Formula value;
};

struct glim_family {
  glim::Family value;
  bool fence = false;
};

struct glim_lattice {
  glim::LatticePtr value;
  std::string path;
};

struct glim_measure {
  glim::Measure value;
  std::string lattice_path;
};

namespace {

thread_local std::string last_error;

glim_status fail(glim_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, mapping exceptions to status codes.
template <typename F>
glim_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return GLIM_OK;
  } catch (const glim::ParseError& e) {
    return fail(GLIM_ERR_PARSE, e.what());
  } catch (const glim::DomainError& e) {
    return fail(GLIM_ERR_DOMAIN, e.what());
  } catch (const glim::SizeError& e) {
    return fail(GLIM_ERR_SIZE, e.what());
  } catch (const glim::PresentationError& e) {
    return fail(GLIM_ERR_PRESENTATION, e.what());
  } catch (const glim::IoError& e) {
    return fail(GLIM_ERR_IO, e.what());
  } catch (const glim::InternalError& e) {
    return fail(GLIM_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GLIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GLIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GLIM_ERR_INTERNAL, "unknown exception");
  }
}

glim_text* make_text(std::string s) { return new glim_text{std::move(s)}; }

std::vector<std::string> context_of(const glim::Formula& f, const char* vars) {
  if (vars == nullptr || *vars == '\0') return glim::free_vars(f);
  std::vector<std::string> out;
  for (auto part : glim::detail::split(vars, ',')) {
    part = glim::detail::trim(part);
    if (part.empty()) throw glim::DomainError("empty variable name in context");
    out.emplace_back(part);
  }
  return out;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

bool any_null() { return false; }
template <typename T, typename... Rest>
bool any_null(const T* p, const Rest*... rest) {
  return p == nullptr || any_null(rest...);
}

#define GLIM_REQUIRE(...)                                               \
  do {                                                                  \
    if (any_null(__VA_ARGS__))                                          \
      return fail(GLIM_ERR_INVALID_ARGUMENT, "null argument");          \
  } while (0)

}  // namespace

extern "C" {

const char* glim_last_error_message(void) { return last_error.c_str(); }

const char* glim_version(void) { return "0.1.0"; }

const char* glim_text_data(const glim_text* text) {
  return text ? text->data.c_str() : "";
}

size_t glim_text_size(const glim_text* text) { return text ? text->data.size() : 0; }

void glim_text_free(glim_text* text) { delete text; }

glim_status glim_structure_parse(const char* text, glim_structure** out) {
  GLIM_REQUIRE(text, out);
  return guarded([&] { *out = new glim_structure{glim::parse_structure(text)}; });
}

glim_status glim_structure_load(const char* path, glim_structure** out) {
  GLIM_REQUIRE(path, out);
  return guarded([&] { *out = new glim_structure{glim::load_structure(path)}; });
}

glim_status glim_structure_format(const glim_structure* s, glim_text** out) {
  GLIM_REQUIRE(s, out);
  return guarded([&] { *out = make_text(glim::format_structure(s->value)); });
}

void glim_structure_free(glim_structure* s) { delete s; }

glim_status glim_family_open(const char* name, glim_family** out) {
  GLIM_REQUIRE(name, out);
  return guarded([&] {
    const std::string n = name;
    if (n == "fence") {
      *out = new glim_family{glim::fence_family(), true};
    } else {
      *out = new glim_family{glim::directory_family(n), false};
    }
  });
}

glim_status glim_family_member(const glim_family* family, size_t index,
                               glim_structure** out) {
  GLIM_REQUIRE(family, out);
  if (index == 0) return fail(GLIM_ERR_DOMAIN, "family indices start at 1");
  return guarded([&] { *out = new glim_structure{family->value.member(index)}; });
}

void glim_family_free(glim_family* family) { delete family; }

glim_status glim_formula_parse(const char* text,
                               const glim_structure* signature_source,
                               glim_formula** out) {
  GLIM_REQUIRE(text, signature_source, out);
  return guarded([&] {
    *out = new glim_formula{
        glim::parse_formula(text, signature_source->value.signature())};
  });
}

glim_status glim_formula_builtin(const char* name, glim_formula** out) {
  GLIM_REQUIRE(name, out);
  const std::string n(glim::detail::trim(name));
  if (n == "psi" || n == "<psi>" || n == "<ψ>") {
    *out = new glim_formula{glim::maximal_not_maximum()};
  } else if (n == "!psi" || n == "<!psi>" || n == "<¬ψ>") {
    *out = new glim_formula{!glim::maximal_not_maximum()};
  } else {
    return fail(GLIM_ERR_DOMAIN, "unknown built-in formula '" + n + "'");
  }
  last_error.clear();
  return GLIM_OK;
}

glim_status glim_formula_free_vars(const glim_formula* f, glim_text** out) {
  GLIM_REQUIRE(f, out);
  return guarded([&] {
    std::string s;
    for (const auto& v : glim::free_vars(f->value)) {
      if (!s.empty()) s += ',';
      s += v;
    }
    *out = make_text(std::move(s));
  });
}

glim_status glim_formula_format(const glim_formula* f, glim_text** out) {
  GLIM_REQUIRE(f, out);
  return guarded([&] { *out = make_text(glim::format_formula(f->value)); });
}

void glim_formula_free(glim_formula* f) { delete f; }

glim_status glim_pair(const glim_structure* s, const glim_formula* f,
                      const char* vars, glim_pairing* out) {
  GLIM_REQUIRE(s, f, out);
  return guarded([&] {
    const auto ctx = context_of(f->value, vars);
    glim::CountOptions opts;
    opts.workers = default_workers();
    const auto r = glim::stone_pairing(s->value, f->value, ctx, opts);
    out->count = r.count;
    out->total = r.total;
    out->classical = make_text(r.classical.str());
    out->gamma = make_text(glim::format_gamma(r.gamma));
  });
}

glim_status glim_integrate(const glim_structure* s, const glim_formula* f,
                           const char* vars, glim_text** out) {
  GLIM_REQUIRE(s, f, out);
  return guarded([&] {
    const auto ctx = context_of(f->value, vars);
    const auto dist = glim::assignment_distribution(s->value, ctx.size());
    const auto subset = glim::satisfying_set(s->value, f->value, ctx);
    *out = make_text(glim::format_gamma(glim::integrate(dist, subset)));
  });
}

glim_status glim_converge(const glim_family* family, const glim_formula* f,
                          const char* vars, size_t horizon, glim_text** csv,
                          glim_text** verdict) {
  GLIM_REQUIRE(family, f, csv, verdict);
  return guarded([&] {
    const auto ctx = context_of(f->value, vars);
    glim::SequenceOptions opts;
    opts.workers = default_workers();
    if (family->fence) opts.closed_form = glim::fence_closed_form(f->value);
    const auto report =
        glim::pairing_sequence(family->value, f->value, ctx, horizon, opts);
    std::ostringstream table;
    table << "index,count,total,classical,gamma\n";
    for (std::size_t i = 0; i < report.terms.size(); ++i) {
      const auto& t = report.terms[i];
      table << (i + 1) << ',' << t.count << ',' << t.total << ','
            << t.classical.str() << ",\"" << glim::format_gamma(t.gamma)
            << "\"\n";
    }
    *csv = make_text(table.str());
    *verdict = make_text(glim::format_verdict_line(report));
  });
}

glim_status glim_lattice_load(const char* path, glim_lattice** out) {
  GLIM_REQUIRE(path, out);
  return guarded([&] {
    *out = new glim_lattice{glim::share(glim::load_lattice(path)), path};
  });
}

glim_status glim_lattice_parse(const char* text, glim_lattice** out) {
  GLIM_REQUIRE(text, out);
  return guarded([&] {
    *out = new glim_lattice{glim::share(glim::parse_lattice(text)), ""};
  });
}

size_t glim_lattice_size(const glim_lattice* l) { return l ? l->value->size() : 0; }

void glim_lattice_free(glim_lattice* l) { delete l; }

glim_status glim_measure_load(const char* path, glim_measure** out) {
  GLIM_REQUIRE(path, out);
  return guarded([&] {
    auto file = glim::load_measure(path);
    *out = new glim_measure{std::move(file.measure), std::move(file.lattice_path)};
  });
}

glim_status glim_measure_check(const glim_measure* m, int* valid,
                               glim_text** report) {
  GLIM_REQUIRE(m, valid, report);
  return guarded([&] {
    const auto violations = glim::validate_measure(m->value);
    std::string s;
    for (const auto& v : violations) {
      s += "FAIL " + v.describe(*m->value.lattice) + "\n";
    }
    if (violations.empty()) s = "OK\n";
    *valid = violations.empty() ? 1 : 0;
    *report = make_text(std::move(s));
  });
}

void glim_measure_free(glim_measure* m) { delete m; }

glim_status glim_pl_eval_measure(const glim_measure* m, const char* formula,
                                 int* result) {
  GLIM_REQUIRE(m, formula, result);
  return guarded([&] {
    const auto phi = glim::parse_pl_lattice(formula, *m->value.lattice);
    *result = glim::eval_pl_measure(m->value, phi) ? 1 : 0;
  });
}

glim_status glim_pl_eval_structure(const glim_structure* s, const char* formula,
                                   int* result) {
  GLIM_REQUIRE(s, formula, result);
  return guarded([&] {
    const auto phi = glim::parse_pl_fo(formula, s->value.signature());
    *result = glim::eval_pl_structure(s->value, phi) ? 1 : 0;
  });
}

glim_status glim_entail(const glim_lattice* l, int k, const char* lhs,
                        const char* rhs, int* holds, glim_text** report) {
  GLIM_REQUIRE(l, lhs, rhs, holds, report);
  return guarded([&] {
    const auto a = glim::parse_pl_lattice(lhs, *l->value);
    const auto b = glim::parse_pl_lattice(rhs, *l->value);
    const auto r = glim::entails_grid(a, b, l->value, k);
    *holds = r.holds ? 1 : 0;
    if (r.holds) {
      *report = make_text("HOLDS\n");
    } else {
      *report = make_text("# countermodel\n" +
                          glim::format_measure(*r.countermodel, l->path));
    }
  });
}

glim_status glim_soundness(const glim_lattice* l, int k, unsigned workers,
                           int* sound, glim_text** report) {
  GLIM_REQUIRE(l, sound, report);
  return guarded([&] {
    const auto r = glim::check_soundness_grid(
        l->value, k, workers == 0 ? default_workers() : workers);
    std::ostringstream out;
    out << "measures=" << r.measures << '\n';
    for (const auto& rule : r.rules) {
      out << rule.rule << " instances=" << rule.instances
          << " countermodels=" << rule.countermodels << '\n';
    }
    out << r.total_countermodels() << " countermodels\n";
    *sound = r.total_countermodels() == 0 ? 1 : 0;
    *report = make_text(out.str());
  });
}

glim_status glim_duality_verify(size_t max_n, size_t max_m, int* pass,
                                glim_text** report) {
  GLIM_REQUIRE(pass, report);
  return guarded([&] {
    glim::DualityBounds b;
    if (max_n != 0) {
      b.adjunction_n = b.oplus_n = b.ominus_n = b.derived_n = b.floor_n =
          b.cone_n = max_n;
    }
    if (max_m != 0) {
      if (max_m < 2) throw glim::DomainError("--max-m must be at least 2");
      b.oplus_m = b.ominus_m = b.floor_m = b.cone_m = max_m;
    }
    const auto r = glim::run_duality_suite(b);
    *pass = r.all_pass() ? 1 : 0;
    *report = make_text(glim::format_duality_report(r));
  });
}

glim_status glim_gamma_normalize(const char* text, glim_text** out) {
  GLIM_REQUIRE(text, out);
  return guarded([&] { *out = make_text(glim::format_gamma(glim::parse_gamma(text))); });
}

glim_status glim_gamma_apply(const char* op, const char* x, const char* y,
                             glim_text** out) {
  GLIM_REQUIRE(op, x, y, out);
  const std::string o = op;
  if (o != "mip" && o != "miss" && o != "plus") {
    return fail(GLIM_ERR_INVALID_ARGUMENT, "unknown operation '" + o + "'");
  }
  return guarded([&] {
    const auto a = glim::parse_gamma(x);
    const auto b = glim::parse_gamma(y);
    const auto r = o == "mip" ? glim::mip(a, b)
                   : o == "miss" ? glim::miss(a, b)
                                 : glim::plus(a, b);
    *out = make_text(glim::format_gamma(r));
  });
}

glim_status glim_gamma_compare(const char* x, const char* y, int* out) {
  GLIM_REQUIRE(x, y, out);
  return guarded([&] {
    switch (glim::compare(glim::parse_gamma(x), glim::parse_gamma(y))) {
      case glim::Ordering::Less: *out = -1; break;
      case glim::Ordering::Equal: *out = 0; break;
      case glim::Ordering::Greater: *out = 1; break;
    }
  });
}

}  // extern "C"
