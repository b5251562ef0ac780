// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glim/fo.hpp"
#include "glim/lattice.hpp"
#include "glim/measure.hpp"
#include "glim/rational.hpp"

namespace glim {

/// What a probabilistic quantifier measures: a lattice element or a
/// first-order formula.
using PLAtom = std::variant<Element, Formula>;

enum class PLKind { True, False, GE, LT, And, Or, Not };

/// A Boolean combination of P≥q a and P<q a. Copies share structure.
class PLFormula {
 public:
  static PLFormula truth();
  static PLFormula falsity();
  /// P≥q a. Throws DomainError unless 0 <= q <= 1.
  static PLFormula ge(Rational q, PLAtom atom);
  /// P<q a. Throws DomainError unless 0 <= q <= 1.
  static PLFormula lt(Rational q, PLAtom atom);
  static PLFormula conjunction(PLFormula lhs, PLFormula rhs);
  static PLFormula disjunction(PLFormula lhs, PLFormula rhs);
  static PLFormula negation(PLFormula f);

  PLKind kind() const;
  /// GE / LT only.
  const Rational& threshold() const;
  const PLAtom& atom() const;
  /// Not: the operand; And / Or: the left operand.
  const PLFormula& lhs() const;
  const PLFormula& rhs() const;

 private:
  struct Node;
  explicit PLFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// μ ⊨ Φ with μ ⊨ P≥q a iff μ(a) >= q° and μ ⊨ P<q a iff μ(a) < q°.
/// Throws DomainError on a formula atom or an element outside μ's lattice.
bool eval_pl_measure(const Measure& mu, const PLFormula& phi);

/// A ⊨ Φ with A ⊨ P≥q φ iff ⟨φ, A⟩ >= q°, each atom paired in the context
/// of its own free variables. Throws DomainError on a lattice-element atom.
bool eval_pl_structure(const FiniteStructure& structure, const PLFormula& phi);

/// No Not and no P<q atoms: truth is preserved upward along μ <= ν.
bool is_monotone_fragment(const PLFormula& phi);

/// Text form with `[>= q]{atom}`, `!`, `&`, `|`; lattice atoms print their
/// label, so `lattice` is required when Φ has any.
std::string format_pl(const PLFormula& phi, const FiniteLattice* lattice = nullptr);

// Grammar: `|` loosest, then `&`, then `!`; atoms `[>= q]{ X }`,
// `[< q]{ X }`, `true`, `false`, parentheses. X is everything up to the
// matching `}`.

/// X is a lattice label (surrounding blanks ignored).
PLFormula parse_pl_lattice(std::string_view text, const FiniteLattice& lattice);
/// X is a first-order formula over `signature`.
PLFormula parse_pl_fo(std::string_view text, const Signature& signature);

// -- finite semantic universe ------------------------------------------------

/// Every measure with values in gamma_grid(k), in lexicographic order of the
/// value tuple (element 0 most significant, grid order within a position).
/// Throws SizeError unless |D| <= 6 and 1 <= k <= 6.
std::vector<Measure> grid_measures(const LatticePtr& lattice, int k);

struct EntailmentResult {
  bool holds = true;
  std::optional<Measure> countermodel;  ///< the first in enumeration order
  std::size_t measures_checked = 0;
};

/// Φ ⊨ Ψ over the given measures.
EntailmentResult entails_on(const PLFormula& lhs, const PLFormula& rhs,
                            const std::vector<Measure>& measures);
/// Φ ⊨ Ψ over grid_measures(D, k).
EntailmentResult entails_grid(const PLFormula& lhs, const PLFormula& rhs,
                              const LatticePtr& lattice, int k);

struct RuleInstance {
  std::string rule;  ///< "L1" .. "L6"
  Rational p, q, r;
  Element a = 0;
  Element b = 0;
  PLFormula premise;
  PLFormula conclusion;
};

/// All instances of L1-L6 with thresholds in {0, 1/k, ..., 1} and elements
/// of D; L4/L5 keep only 0 <= p+q-r <= 1. Grouped by rule, in a fixed order.
std::vector<RuleInstance> rule_instances(const LatticePtr& lattice, int k);

struct RuleStats {
  std::string rule;
  std::size_t instances = 0;
  std::size_t countermodels = 0;
  /// First failing instance and its countermodel, if any.
  std::optional<std::pair<RuleInstance, Measure>> first_failure;
};

struct SoundnessReport {
  std::size_t measures = 0;
  std::vector<RuleStats> rules;  ///< L1 .. L6

  std::size_t total_countermodels() const;
};

/// Checks every rule instance over every grid measure. `workers` splits the
/// instance list; counts do not depend on it.
SoundnessReport check_soundness_grid(const LatticePtr& lattice, int k,
                                     unsigned workers = 1);

/// A finitely presented filter: (i/k, a) ∈ F iff member[a][i].
struct FilterPresentation {
  LatticePtr lattice;
  int k = 1;
  std::vector<std::vector<bool>> member;  ///< |D| rows of k+1 entries
};

/// nullopt when F is closed downward in q (L1) and upward in a (L3).
std::optional<std::string> check_presentation(const FilterPresentation& f);

/// a ↦ max{q° | (q, a) ∈ F}, 0° for an empty row. Not validated.
std::vector<GammaValue> filter_to_values(const FilterPresentation& f);

/// filter_to_values as a validated measure. Throws PresentationError when
/// the presentation breaks L1/L3 closure or the values are not a measure.
Measure filter_to_measure(const FilterPresentation& f);

/// {(q, a) | q ∈ Q_k, q° <= μ(a)}.
FilterPresentation presentation_of(const Measure& mu, int k);

/// a ↦ max{q° | q ∈ Q_k, q° <= μ(a)}.
std::vector<GammaValue> grid_rounding(const Measure& mu, int k);

}  // namespace glim
