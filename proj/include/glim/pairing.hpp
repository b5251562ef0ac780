// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glim/fo.hpp"
#include "glim/gamma.hpp"
#include "glim/measure.hpp"
#include "glim/rational.hpp"

namespace glim {

/// ⟨φ, A⟩ for one structure: `count` of `total` = N^|context| assignments.
struct PairingResult {
  std::uint64_t count = 0;
  std::uint64_t total = 1;
  Rational classical;  ///< count / total
  GammaValue gamma;    ///< classical°

  friend bool operator==(const PairingResult&, const PairingResult&) = default;
};

/// Throws DomainError when the context misses a free variable of φ or
/// repeats a name, and SizeError when N^|context| overflows 64 bits.
PairingResult stone_pairing(const FiniteStructure& structure,
                            const Formula& formula,
                            std::span<const std::string> context,
                            CountOptions options = {});

/// Pairing in the default context, the free variables of φ.
PairingResult stone_pairing(const FiniteStructure& structure,
                            const Formula& formula);

/// free_vars(φ) followed by fresh names v1, v2, ... not occurring in φ, up
/// to n variables. Throws DomainError when φ has more than n free variables.
std::vector<std::string> standard_context(const Formula& formula,
                                          std::size_t n);

/// The uniform weighting of all N^arity assignments, each (1/N^arity)°, in
/// decode_assignment order. Throws SizeError above 2^20 points.
FinSuppFn assignment_distribution(const FiniteStructure& structure,
                                  std::size_t arity);

/// Membership vector of the satisfying assignments, in the same order as
/// assignment_distribution.
std::vector<bool> satisfying_set(const FiniteStructure& structure,
                                 const Formula& formula,
                                 std::span<const std::string> context);

struct PaddingCheck {
  bool ok = false;
  PairingResult narrow;  ///< standard_context(φ, n)
  PairingResult wide;    ///< standard_context(φ, m)
};

/// Compares the pairings in the n- and m-variable standard contexts.
/// Throws DomainError unless |free_vars(φ)| <= n <= m.
PaddingCheck check_padding_invariance(const FiniteStructure& structure,
                                      const Formula& formula, std::size_t n,
                                      std::size_t m);

/// An indexed family of structures A_1, A_2, ...
struct Family {
  std::string name;
  std::function<FiniteStructure(std::size_t index)> member;
};

/// The built-in poset family (see fence_structure).
Family fence_family();
/// Files in `dir` whose stem is a positive integer (e.g. `3.struct`) give
/// the member with that index. Throws IoError if `dir` is not a directory.
Family directory_family(const std::string& dir);

/// Term j (1-based position within a parity subsequence) equals
/// (a·j + b) / (c·j + d).
struct MobiusForm {
  Rational a, b, c, d;

  /// Throws DomainError where the denominator vanishes.
  Rational at(std::size_t j) const;
};

/// Closed forms for the odd-index and even-index subsequences.
struct SequenceClosedForm {
  MobiusForm odd;
  MobiusForm even;
};

/// Known closed forms of the fence family: recognized for formulas
/// alpha-equivalent to the maximal-but-not-maximum formula or its negation.
std::optional<SequenceClosedForm> fence_closed_form(const Formula& formula);

enum class VerdictKind {
  ConvergesExact,   ///< to q°: x_i → q and eventually x_i >= q
  ConvergesApprox,  ///< to r⁻: x_i → r and eventually x_i < r
  DivergentAtHorizon,
  Inconclusive,
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<GammaValue> limit;  ///< set for the two Converges kinds
  /// true when derived from a closed form rather than the finite prefix.
  bool exact = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Γ limit of a Möbius closed form as j → ∞.
Verdict classify(const MobiusForm& form);

/// Heuristic verdict for a subsequence known only up to the horizon. A
/// constant tail (last ⌈m/2⌉ terms) converges exactly; otherwise a Möbius
/// form fitted through every term (needs at least 5 terms) is classified;
/// otherwise Inconclusive.
Verdict analyze_prefix(std::span<const Rational> terms);

/// Whole-sequence verdict from the parity verdicts: the same Γ point for
/// both converges, two different points diverge.
Verdict combine(const Verdict& odd, const Verdict& even);

struct SequenceReport {
  std::vector<PairingResult> terms;      ///< indices 1..horizon
  std::optional<Rational> classical_limit;
  Verdict whole;
  Verdict odd;
  Verdict even;
  bool exact = false;  ///< both parity verdicts come from closed forms
};

struct SequenceOptions {
  unsigned workers = 1;
  /// When set, verdicts are computed from these forms after checking
  /// every term against them (InternalError on mismatch).
  std::optional<SequenceClosedForm> closed_form;
};

/// Pairs A_1..A_horizon with φ in `context`. Throws DomainError when
/// horizon < 4; a generator failure is rethrown with its index prepended.
SequenceReport pairing_sequence(const Family& family, const Formula& formula,
                                std::span<const std::string> context,
                                std::size_t horizon,
                                const SequenceOptions& options = {});

/// e.g. `CONVERGES 0^o`, `DIVERGENT odd->1^o even->1^-`, with
/// ` (at horizon)` appended for heuristic verdicts.
std::string format_verdict_line(const SequenceReport& report);
/// `1^o`, `1^-`, or `?`.
std::string format_limit(const Verdict& verdict);

}  // namespace glim
