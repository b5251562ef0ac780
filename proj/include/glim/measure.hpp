// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glim/gamma.hpp"
#include "glim/lattice.hpp"
#include "glim/rational.hpp"

namespace glim {

/// An assignment of Γ values to the elements of a finite lattice. Not
/// necessarily a measure; see validate_measure.
struct Measure {
  LatticePtr lattice;
  std::vector<GammaValue> values;  ///< indexed by Element

  const GammaValue& operator()(Element e) const { return values.at(e); }
  friend bool operator==(const Measure& a, const Measure& b) {
    return a.values == b.values;
  }
};

struct MeasureViolation {
  enum class Kind {
    Size,             ///< value count differs from the lattice size
    Range,            ///< classical value outside [0,1]
    Monotone,         ///< a <= b but μ(a) > μ(b)
    Bottom,           ///< μ(0) != 0°
    Top,              ///< μ(1) != 1°
    AdditivityLeft,   ///< μ(a) ∼ μ(a∧b) <= μ(a∨b) ∸ μ(b) fails
    AdditivityRight,  ///< μ(a) ∸ μ(a∧b) >= μ(a∨b) ∼ μ(b) fails
    Additivity,       ///< classical m(a)+m(b) = m(a∨b)+m(a∧b) fails
  };
  Kind kind;
  Element a = 0;
  Element b = 0;

  /// e.g. `additivity-left a=x b=y` or `top`.
  std::string describe(const FiniteLattice& lattice) const;
  friend bool operator==(const MeasureViolation&,
                         const MeasureViolation&) = default;
};

const char* kind_name(MeasureViolation::Kind kind);

/// All failures, ordered by kind group (size, bottom, top) and then
/// lexicographically by (a, b), monotone before additivity for each pair.
/// The additivity inequalities are only tested where both sides are defined,
/// which monotonicity guarantees.
std::vector<MeasureViolation> validate_measure(const Measure& mu);
bool is_measure(const Measure& mu);

/// Re-evaluates the inequality a violation names; true iff it still fails.
bool reproduces(const Measure& mu, const MeasureViolation& v);

struct ClassicalMeasure {
  LatticePtr lattice;
  std::vector<Rational> values;

  const Rational& operator()(Element e) const { return values.at(e); }
  friend bool operator==(const ClassicalMeasure& a, const ClassicalMeasure& b) {
    return a.values == b.values;
  }
};

std::vector<MeasureViolation> validate_classical(const ClassicalMeasure& m);

/// μ·h on the source of h. Throws DomainError when μ does not live on the
/// target of h and InternalError if the result is not a measure.
Measure pushforward(const Measure& mu, const LatticeHom& h);

/// γ·μ. Throws InternalError if the result is not a classical measure.
ClassicalMeasure collapse_measure(const Measure& mu);
/// ι°·m. Throws InternalError if the result is not a measure.
Measure lift_measure(const ClassicalMeasure& m);

/// True when both pointers name lattices with the same labels and order.
bool same_lattice(const LatticePtr& a, const LatticePtr& b);

/// A Γ-valued weighting of the points {0, ..., size-1} whose total is 1°.
class FinSuppFn {
 public:
  /// Throws DomainError unless the weights sum to exactly 1°.
  explicit FinSuppFn(std::vector<GammaValue> weights);

  std::size_t carrier_size() const { return weights_.size(); }
  const std::vector<GammaValue>& weights() const { return weights_; }
  /// Points with non-zero weight, ascending.
  std::vector<std::size_t> support() const;

 private:
  std::vector<GammaValue> weights_;
};

/// ∫_M f, the sum of f over M ∩ supp(f). `subset[i]` marks membership.
/// Throws DomainError if the subset has the wrong length.
GammaValue integrate(const FinSuppFn& f, const std::vector<bool>& subset);

/// A bounded sublattice of the powerset of {0, ..., carrier-1}.
struct SubsetAlgebra {
  std::size_t carrier = 0;
  LatticePtr lattice;
  std::vector<std::vector<bool>> subsets;  ///< indexed by Element
};

/// Orders the subsets by inclusion. Throws DomainError if they are not
/// distinct, miss ∅ or the whole carrier, or are not closed under ∩ and ∪.
SubsetAlgebra make_subset_algebra(std::size_t carrier,
                                  std::vector<std::vector<bool>> subsets);
/// The full powerset; element index is the membership bitmask.
SubsetAlgebra powerset_algebra(std::size_t carrier);

/// M ↦ ∫_M f. Throws DomainError if the carriers differ and InternalError if
/// the result fails validation.
Measure integration_measure(const FinSuppFn& f, const SubsetAlgebra& algebra);

// Measure text format:
//   lattice: boolean4.lat      # resolved relative to the measure file
//   value(0) = 0^o
//   value(a) = 1/2^o
// Every element needs exactly one value. The axioms are not checked here.

struct MeasureFile {
  std::string lattice_path;  ///< as written in the file
  Measure measure;
};

/// Parses against an already loaded lattice; the `lattice:` line is recorded
/// but not followed.
MeasureFile parse_measure(std::string_view text, const LatticePtr& lattice);
/// Reads the file and the lattice it names.
MeasureFile load_measure(const std::string& path);
std::string format_measure(const Measure& mu, const std::string& lattice_path);

}  // namespace glim
