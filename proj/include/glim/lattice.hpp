// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glim {

using Element = std::size_t;

/// An order given extensionally: labels plus a leq matrix. Not yet known to
/// be a lattice; see validate_lattice.
struct OrderSpec {
  std::vector<std::string> labels;
  /// leq[a][b] holds iff a <= b.
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return labels.size(); }
};

/// Builds the reflexive-transitive closure of the given `a <= b` pairs.
/// Throws DomainError on an out-of-range index or duplicate label.
OrderSpec make_order(std::vector<std::string> labels,
                     const std::vector<std::pair<Element, Element>>& pairs);

struct LatticeViolation {
  enum class Kind {
    Empty,
    Antisymmetry,    ///< a <= b and b <= a with a != b
    NoBottom,
    NoTop,
    NoMeet,          ///< a, b have no greatest lower bound
    NoJoin,          ///< a, b have no least upper bound
    Distributivity,  ///< a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)
  };
  Kind kind;
  Element a = 0;
  Element b = 0;
  Element c = 0;

  std::string describe(const std::vector<std::string>& labels) const;
};

/// Every failure of the bounded-distributive-lattice axioms, in a fixed
/// order. Distributivity is checked only once meets and joins exist.
std::vector<LatticeViolation> validate_lattice(const OrderSpec& order);

/// A finite bounded distributive lattice with cached meet/join tables.
/// Immutable after construction.
class FiniteLattice {
 public:
  /// Throws DomainError listing the violations when `order` is not a
  /// bounded distributive lattice.
  static FiniteLattice from_order(OrderSpec order);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Throws DomainError for an unknown label.
  Element index_of(std::string_view label) const;

  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  std::vector<Element> lower_covers(Element e) const;
  std::vector<Element> upper_covers(Element e) const;

  OrderSpec order() const;

 private:
  FiniteLattice() = default;

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

LatticePtr share(FiniteLattice lattice);

/// The chain labels[0] < labels[1] < ... .
FiniteLattice chain_lattice(std::vector<std::string> labels);
/// The chain with `count` elements labelled 0, 1, ..., count-1.
FiniteLattice chain_lattice(std::size_t count);
/// Powerset of {0..atoms-1}; element index is the subset bitmask and the
/// label is e.g. `{0,2}`.
FiniteLattice boolean_lattice(std::size_t atoms);
/// The four-element Boolean algebra 0 < a, !a < 1 (indices 0, 1, 2, 3).
FiniteLattice boolean4(const std::string& atom = "a");
/// Componentwise product; labels are `(x,y)`.
FiniteLattice product_lattice(const FiniteLattice& left,
                              const FiniteLattice& right);

struct LatticeHom {
  LatticePtr source;
  LatticePtr target;
  std::vector<Element> map;  ///< source element -> target element

  Element operator()(Element e) const { return map.at(e); }
};

LatticeHom identity_hom(const LatticePtr& lattice);
/// g ∘ f: first f, then g. Throws DomainError when the lattices do not chain.
LatticeHom compose(const LatticeHom& f, const LatticeHom& g);

/// nullopt when h preserves 0, 1, ∧ and ∨; otherwise the first failure.
std::optional<std::string> check_hom(const LatticeHom& h);

std::vector<Element> join_irreducibles(const FiniteLattice& lattice);
std::vector<Element> meet_irreducibles(const FiniteLattice& lattice);

/// κ(j) = ⋁{a | j ≰ a}. Throws DomainError if j is not join-irreducible.
Element kappa(const FiniteLattice& lattice, Element j);
/// Inverse of κ on meet-irreducibles. Throws DomainError otherwise.
Element kappa_inverse(const FiniteLattice& lattice, Element m);

struct PrimeFilter {
  LatticePtr lattice;
  std::vector<Element> members;  ///< ascending
  Element generator;             ///< the least member

  bool contains(Element e) const;
};

/// All prime filters, ordered by generator index. Complete without assuming
/// distributivity: on a finite lattice every filter is principal.
std::vector<PrimeFilter> prime_filters(const LatticePtr& lattice);

// Text format:
//   elements: a, b, c
//   order: a<=b, b<=c
// Lines starting with '#' are comments; several `order:` lines accumulate.

/// Parses to an order without validating it.
OrderSpec parse_order(std::string_view text);
/// parse_order followed by FiniteLattice::from_order.
FiniteLattice parse_lattice(std::string_view text);
FiniteLattice load_lattice(const std::string& path);
/// Emits the cover relation only; parse_lattice(format_lattice(L)) == L.
std::string format_lattice(const FiniteLattice& lattice);

}  // namespace glim
