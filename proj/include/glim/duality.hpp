// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glim/gamma.hpp"
#include "glim/lattice.hpp"

namespace glim {

/// An element of the chain L_n = 0 < 1/n < ... < 1 < ⊤.
struct ChainElement {
  std::size_t n = 1;
  std::size_t a = 0;  ///< numerator; ignored when top
  bool top = false;

  /// Throws DomainError unless n >= 1 and a <= n.
  static ChainElement fraction(std::size_t n, std::size_t a);
  static ChainElement top_of(std::size_t n);

  /// Position in the chain: a, or n+1 for ⊤.
  std::size_t rank() const { return top ? n + 1 : a; }
  /// `a/n` without reduction, or `top`.
  std::string str() const;

  friend bool operator==(const ChainElement&, const ChainElement&) = default;
};

/// Throws DomainError when u and v live on different chains.
bool chain_leq(const ChainElement& u, const ChainElement& v);

/// All n+2 elements in ascending order.
std::vector<ChainElement> chain_elements(std::size_t n);

/// Truncated addition: ⊤ absorbs, overflow past 1 gives ⊤.
ChainElement oplus(const ChainElement& u, const ChainElement& v);
/// ⊤ ⊖ 0 = ⊤, ⊤ ⊖ b/n = (n-b+1)/n for b >= 1, a/n ⊖ b/n = 0 when b > a
/// and (a-b)/n otherwise, u ⊖ ⊤ = 0.
ChainElement ominus(const ChainElement& u, const ChainElement& v);

/// L_n as a FiniteLattice: index i is i/n for i <= n, index n+1 is ⊤.
FiniteLattice chain_as_lattice(std::size_t n);

struct CheckResult {
  std::size_t checked = 0;
  std::optional<std::string> violation;  ///< the first failure

  bool ok() const { return !violation; }
};

/// u ⊖ v <= w iff u <= v ⊕ w, over all triples of L_n.
CheckResult check_adjunction(std::size_t n);

/// i_{n,nm}: a/n ↦ am/(nm), ⊤ ↦ ⊤.
ChainElement embed(std::size_t m, const ChainElement& u);

/// i_{n,nm} is an order embedding and preserves ⊕ on all pairs.
CheckResult check_oplus_preserved(std::size_t n, std::size_t m);

struct OminusWitness {
  std::size_t n = 0;
  std::size_t m = 0;
  ChainElement u, v;
  ChainElement embedded_result;  ///< i(u ⊖ v)
  ChainElement result_of_embedded;  ///< i(u) ⊖ i(v)
};

/// The lexicographically first (u, v) with i(u ⊖ v) != i(u) ⊖ i(v).
/// Throws DomainError for m < 2 and InternalError when none exists.
OminusWitness find_ominus_counterexample(std::size_t n, std::size_t m);

/// A point a/n of the finite chain Λ_n.
struct ChainPoint {
  std::size_t n = 1;
  std::size_t a = 0;

  std::string str() const;
  friend bool operator==(const ChainPoint&, const ChainPoint&) = default;
};

/// b/(nm) ↦ ⌊b/m⌋/n. Throws DomainError when x does not live on Λ_{nm}.
ChainPoint floor_map(std::size_t n, std::size_t m, const ChainPoint& x);
/// b/(nm) ↦ ⌈b/m⌉/n.
ChainPoint ceiling_map(std::size_t n, std::size_t m, const ChainPoint& x);
/// The inclusion ε: a/n ↦ am/(nm).
ChainPoint inclusion_map(std::size_t m, const ChainPoint& y);

/// ⌈x⌉ <= y iff x <= ε(y), and ε(y) <= x iff y <= ⌊x⌋, for all x, y.
CheckResult check_floor_ceiling(std::size_t n, std::size_t m);

/// cells[z][x] = z - x on Λ_n (numerators), nullopt off the domain.
struct PartialTable {
  std::size_t n = 0;
  std::vector<std::vector<std::optional<std::size_t>>> cells;

  friend bool operator==(const PartialTable&, const PartialTable&) = default;
};

/// z - x := κ(κ⁻¹(z) ⊖ x), with κ taken from the chain lattice; defined
/// when the ⊖ result is join-irreducible. Throws InternalError if the table
/// differs from direct subtraction on b <= a.
PartialTable derive_partial_minus(std::size_t n);
/// x + z := x ⊕ z, defined when it is not ⊤. Throws InternalError if the
/// table differs from direct addition on a+b <= n.
PartialTable derive_partial_plus(std::size_t n);

/// Recovers v ⊖ u as ⋁{j ∈ J | ∃x ∈ M, u <= x, x + κ(j) defined and
/// κ⁻¹(x + κ(j)) <= v}, for all u, v in L_n.
CheckResult check_ominus_from_plus(std::size_t n);

/// π_n(x) = max{a/n | (a/n)° <= x}: q° ↦ ⌊qn⌋/n, r⁻ ↦ (⌈rn⌉-1)/n.
ChainPoint project_gamma(const GammaValue& x, std::size_t n);

/// floor_map(n, m; π_{nm}(x)) = π_n(x) for x in gamma_grid(k), n, m <= the
/// bounds; also monotone in x and (π_n(x))° <= x.
CheckResult check_projection_cone(int k, std::size_t max_n, std::size_t max_m);

struct DualityBounds {
  std::size_t adjunction_n = 24;
  std::size_t oplus_n = 8;
  std::size_t oplus_m = 8;
  std::size_t ominus_n = 8;
  std::size_t ominus_m = 4;  ///< m ranges over 2..ominus_m
  std::size_t derived_n = 12;
  std::size_t floor_n = 8;
  std::size_t floor_m = 8;
  int cone_k = 10;
  std::size_t cone_n = 10;
  std::size_t cone_m = 10;
};

struct DualityLine {
  std::string name;
  std::string scope;  ///< e.g. `n<=24`
  std::size_t checked = 0;
  std::optional<std::string> failure;
};

struct DualityReport {
  std::vector<DualityLine> lines;
  /// The (2,2) witness when in range, else the first one found.
  std::optional<OminusWitness> witness;

  bool all_pass() const;
};

DualityReport run_duality_suite(const DualityBounds& bounds);

/// `PASS name scope checked=N` or `FAIL name scope: detail`, one per line,
/// then the witness line.
std::string format_duality_report(const DualityReport& report);

}  // namespace glim
