// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/pairing.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <thread>

#include "glim/error.hpp"

namespace glim {

PairingResult stone_pairing(const FiniteStructure& structure,
                            const Formula& formula,
                            std::span<const std::string> context,
                            CountOptions options) {
  PairingResult r;
  r.total = assignment_count(structure.universe_size(), context.size());
  r.count = count_satisfying(structure, formula, context, options);
  r.classical = Rational(static_cast<std::int64_t>(r.count)) /
                Rational(static_cast<std::int64_t>(r.total));
  r.gamma = iota_exact(r.classical);
  return r;
}

PairingResult stone_pairing(const FiniteStructure& structure,
                            const Formula& formula) {
  const auto ctx = free_vars(formula);
  return stone_pairing(structure, formula, ctx);
}

std::vector<std::string> standard_context(const Formula& formula,
                                          std::size_t n) {
  std::vector<std::string> ctx = free_vars(formula);
  if (ctx.size() > n) {
    throw DomainError("formula has " + std::to_string(ctx.size()) +
                      " free variables, more than the context size " +
                      std::to_string(n));
  }
  const auto used = all_vars(formula);
  for (std::size_t i = 1; ctx.size() < n; ++i) {
    std::string name = "v" + std::to_string(i);
    if (std::find(used.begin(), used.end(), name) != used.end()) continue;
    if (std::find(ctx.begin(), ctx.end(), name) != ctx.end()) continue;
    ctx.push_back(std::move(name));
  }
  return ctx;
}

FinSuppFn assignment_distribution(const FiniteStructure& structure,
                                  std::size_t arity) {
  const std::uint64_t total = assignment_count(structure.universe_size(), arity);
  if (total > (std::uint64_t{1} << 20)) {
    throw SizeError("assignment distribution limited to 2^20 points");
  }
  const GammaValue w = GammaValue::exact(
      Rational(1) / Rational(static_cast<std::int64_t>(total)));
  return FinSuppFn(std::vector<GammaValue>(total, w));
}

std::vector<bool> satisfying_set(const FiniteStructure& structure,
                                 const Formula& formula,
                                 std::span<const std::string> context) {
  const CompiledFormula compiled(structure, formula, context);
  const std::size_t n = structure.universe_size();
  const std::uint64_t total = assignment_count(n, context.size());
  if (total > (std::uint64_t{1} << 24)) {
    throw SizeError("satisfying set limited to 2^24 assignments");
  }
  std::vector<bool> out(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    out[i] = compiled.evaluate(decode_assignment(i, n, context.size()));
  }
  return out;
}

PaddingCheck check_padding_invariance(const FiniteStructure& structure,
                                      const Formula& formula, std::size_t n,
                                      std::size_t m) {
  if (n > m) throw DomainError("padding check needs n <= m");
  PaddingCheck out;
  out.narrow = stone_pairing(structure, formula, standard_context(formula, n));
  out.wide = stone_pairing(structure, formula, standard_context(formula, m));
  out.ok = out.narrow.classical == out.wide.classical &&
           out.narrow.gamma == out.wide.gamma;
  return out;
}

Family fence_family() { return {"fence", fence_structure}; }

Family directory_family(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("'" + dir + "' is not a directory");
  }
  auto files = std::make_shared<std::map<std::size_t, std::string>>();
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string stem = entry.path().stem().string();
    std::size_t index = 0;
    const auto [ptr, err] =
        std::from_chars(stem.data(), stem.data() + stem.size(), index);
    if (err != std::errc() || ptr != stem.data() + stem.size() || index == 0) {
      continue;
    }
    if (!files->emplace(index, entry.path().string()).second) {
      throw IoError("two structure files for index " + std::to_string(index) +
                    " in '" + dir + "'");
    }
  }
  return {dir, [files, dir](std::size_t index) {
            const auto it = files->find(index);
            if (it == files->end()) {
              throw IoError("no structure file for this index in '" + dir + "'");
            }
            return load_structure(it->second);
          }};
}

Rational MobiusForm::at(std::size_t j) const {
  const Rational x(static_cast<std::int64_t>(j));
  const Rational den = c * x + d;
  if (den == Rational(0)) throw DomainError("closed form has a pole");
  return (a * x + b) / den;
}

std::optional<SequenceClosedForm> fence_closed_form(const Formula& formula) {
  const Formula psi = maximal_not_maximum();
  const Rational zero(0);
  const Rational one(1);
  const Rational two(2);
  // Index 2k-1 is a chain (no witness); index 2k has two witnesses among
  // k+2 elements.
  if (alpha_equivalent(formula, psi)) {
    return SequenceClosedForm{{zero, zero, zero, one}, {zero, two, one, two}};
  }
  if (alpha_equivalent(formula, Formula::negation(psi))) {
    return SequenceClosedForm{{zero, one, zero, one}, {one, zero, one, two}};
  }
  return std::nullopt;
}

std::string format_limit(const Verdict& verdict) {
  if (!verdict.limit) return "?";
  return format_gamma(*verdict.limit);
}

std::string format_verdict_line(const SequenceReport& report) {
  std::string out;
  switch (report.whole.kind) {
    case VerdictKind::ConvergesExact:
    case VerdictKind::ConvergesApprox:
      out = "CONVERGES " + format_limit(report.whole);
      break;
    case VerdictKind::DivergentAtHorizon:
      out = "DIVERGENT odd->" + format_limit(report.odd) +
            " even->" + format_limit(report.even);
      break;
    case VerdictKind::Inconclusive:
      out = "INCONCLUSIVE odd->" + format_limit(report.odd) +
            " even->" + format_limit(report.even);
      break;
  }
  if (!report.exact) out += " (at horizon)";
  return out;
}

namespace {

[[noreturn]] void rethrow_with_index(std::size_t index) {
  const std::string prefix = "index " + std::to_string(index) + ": ";
  try {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(prefix + e.message(), e.line(), e.column());
  } catch (const IoError& e) {
    throw IoError(prefix + e.what());
  } catch (const SizeError& e) {
    throw SizeError(prefix + e.what());
  } catch (const Error& e) {
    throw DomainError(prefix + e.what());
  }
}

}  // namespace

SequenceReport pairing_sequence(const Family& family, const Formula& formula,
                                std::span<const std::string> context,
                                std::size_t horizon,
                                const SequenceOptions& options) {
  if (horizon < 4) throw DomainError("horizon must be at least 4");
  std::vector<std::optional<PairingResult>> slots(horizon);
  std::vector<std::exception_ptr> errors(horizon);
  auto work = [&](std::size_t i) {
    const std::size_t index = i + 1;
    try {
      try {
        const FiniteStructure a = family.member(index);
        slots[i] = stone_pairing(a, formula, context);
      } catch (const Error&) {
        rethrow_with_index(index);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers =
      std::clamp<unsigned>(options.workers, 1, static_cast<unsigned>(horizon));
  if (workers == 1) {
    for (std::size_t i = 0; i < horizon; ++i) work(i);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < horizon; i += workers) work(i);
      });
    }
    for (auto& t : threads) t.join();
  }
  // Report the lowest failing index, independent of scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SequenceReport report;
  for (auto& s : slots) report.terms.push_back(std::move(*s));

  std::vector<Rational> odd_terms;
  std::vector<Rational> even_terms;
  for (std::size_t i = 0; i < horizon; ++i) {
    ((i + 1) % 2 ? odd_terms : even_terms).push_back(report.terms[i].classical);
  }

  if (options.closed_form) {
    const auto& cf = *options.closed_form;
    for (std::size_t j = 0; j < odd_terms.size(); ++j) {
      if (cf.odd.at(j + 1) != odd_terms[j]) {
        throw InternalError("closed form disagrees with index " +
                            std::to_string(2 * j + 1));
      }
    }
    for (std::size_t j = 0; j < even_terms.size(); ++j) {
      if (cf.even.at(j + 1) != even_terms[j]) {
        throw InternalError("closed form disagrees with index " +
                            std::to_string(2 * j + 2));
      }
    }
    report.odd = classify(cf.odd);
    report.even = classify(cf.even);
  } else {
    report.odd = analyze_prefix(odd_terms);
    report.even = analyze_prefix(even_terms);
  }
  report.whole = combine(report.odd, report.even);
  report.exact = report.odd.exact && report.even.exact;
  if (report.odd.limit && report.even.limit &&
      report.odd.limit->value() == report.even.limit->value()) {
    report.classical_limit = report.odd.limit->value();
  }
  return report;
}

}  // namespace glim
