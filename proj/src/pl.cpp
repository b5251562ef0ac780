// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/pl.hpp"

#include <optional>

#include "glim/error.hpp"
#include "glim/pairing.hpp"

namespace glim {

struct PLFormula::Node {
  explicit Node(PLKind k) : kind(k) {}

  PLKind kind;
  Rational threshold;
  std::optional<PLAtom> atom;
  std::optional<PLFormula> lhs;
  std::optional<PLFormula> rhs;
};

PLFormula PLFormula::truth() {
  static const PLFormula f(std::make_shared<const Node>(PLKind::True));
  return f;
}

PLFormula PLFormula::falsity() {
  static const PLFormula f(std::make_shared<const Node>(PLKind::False));
  return f;
}

namespace {

void check_threshold(const Rational& q) {
  if (q < Rational(0) || q > Rational(1)) {
    throw DomainError("threshold " + q.str() + " is outside [0,1]");
  }
}

}  // namespace

PLFormula PLFormula::ge(Rational q, PLAtom atom) {
  check_threshold(q);
  Node n(PLKind::GE);
  n.threshold = std::move(q);
  n.atom = std::move(atom);
  return PLFormula(std::make_shared<const Node>(std::move(n)));
}

PLFormula PLFormula::lt(Rational q, PLAtom atom) {
  check_threshold(q);
  Node n(PLKind::LT);
  n.threshold = std::move(q);
  n.atom = std::move(atom);
  return PLFormula(std::make_shared<const Node>(std::move(n)));
}

PLFormula PLFormula::conjunction(PLFormula lhs, PLFormula rhs) {
  Node n(PLKind::And);
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return PLFormula(std::make_shared<const Node>(std::move(n)));
}

PLFormula PLFormula::disjunction(PLFormula lhs, PLFormula rhs) {
  Node n(PLKind::Or);
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return PLFormula(std::make_shared<const Node>(std::move(n)));
}

PLFormula PLFormula::negation(PLFormula f) {
  Node n(PLKind::Not);
  n.lhs = std::move(f);
  return PLFormula(std::make_shared<const Node>(std::move(n)));
}

PLKind PLFormula::kind() const { return node_->kind; }

const Rational& PLFormula::threshold() const {
  if (!node_->atom) throw DomainError("formula has no threshold");
  return node_->threshold;
}

const PLAtom& PLFormula::atom() const {
  if (!node_->atom) throw DomainError("formula has no atom");
  return *node_->atom;
}

const PLFormula& PLFormula::lhs() const {
  if (!node_->lhs) throw DomainError("formula has no operand");
  return *node_->lhs;
}

const PLFormula& PLFormula::rhs() const {
  if (!node_->rhs) throw DomainError("formula has no right operand");
  return *node_->rhs;
}

namespace {

template <typename AtomValue>
bool eval_with(const PLFormula& phi, const AtomValue& value) {
  switch (phi.kind()) {
    case PLKind::True:
      return true;
    case PLKind::False:
      return false;
    case PLKind::GE:
      return value(phi.atom()) >= iota_exact(phi.threshold());
    case PLKind::LT:
      return value(phi.atom()) < iota_exact(phi.threshold());
    case PLKind::And:
      return eval_with(phi.lhs(), value) && eval_with(phi.rhs(), value);
    case PLKind::Or:
      return eval_with(phi.lhs(), value) || eval_with(phi.rhs(), value);
    case PLKind::Not:
      return !eval_with(phi.lhs(), value);
  }
  throw InternalError("unknown PL formula kind");
}

}  // namespace

bool eval_pl_measure(const Measure& mu, const PLFormula& phi) {
  return eval_with(phi, [&](const PLAtom& atom) -> const GammaValue& {
    const Element* e = std::get_if<Element>(&atom);
    if (!e) throw DomainError("formula atom evaluated in a lattice measure");
    if (*e >= mu.values.size()) {
      throw DomainError("element " + std::to_string(*e) +
                        " is not in the measure's lattice");
    }
    return mu(*e);
  });
}

bool eval_pl_structure(const FiniteStructure& structure, const PLFormula& phi) {
  return eval_with(phi, [&](const PLAtom& atom) {
    const Formula* f = std::get_if<Formula>(&atom);
    if (!f) throw DomainError("lattice atom evaluated in a structure");
    return stone_pairing(structure, *f).gamma;
  });
}

bool is_monotone_fragment(const PLFormula& phi) {
  switch (phi.kind()) {
    case PLKind::True:
    case PLKind::False:
    case PLKind::GE:
      return true;
    case PLKind::LT:
    case PLKind::Not:
      return false;
    case PLKind::And:
    case PLKind::Or:
      return is_monotone_fragment(phi.lhs()) && is_monotone_fragment(phi.rhs());
  }
  return false;
}

namespace {

std::string format_atom(const PLAtom& atom, const FiniteLattice* lattice) {
  if (const Formula* f = std::get_if<Formula>(&atom)) return format_formula(*f);
  const Element e = std::get<Element>(atom);
  if (!lattice) throw DomainError("a lattice is needed to print element atoms");
  return lattice->label(e);
}

}  // namespace

std::string format_pl(const PLFormula& phi, const FiniteLattice* lattice) {
  switch (phi.kind()) {
    case PLKind::True:
      return "true";
    case PLKind::False:
      return "false";
    case PLKind::GE:
      return "[>= " + phi.threshold().str() + "]{" +
             format_atom(phi.atom(), lattice) + "}";
    case PLKind::LT:
      return "[< " + phi.threshold().str() + "]{" +
             format_atom(phi.atom(), lattice) + "}";
    case PLKind::And:
      return "(" + format_pl(phi.lhs(), lattice) + " & " +
             format_pl(phi.rhs(), lattice) + ")";
    case PLKind::Or:
      return "(" + format_pl(phi.lhs(), lattice) + " | " +
             format_pl(phi.rhs(), lattice) + ")";
    case PLKind::Not:
      return "!" + format_pl(phi.lhs(), lattice);
  }
  throw InternalError("unknown PL formula kind");
}

std::vector<Measure> grid_measures(const LatticePtr& lattice, int k) {
  const auto& L = *lattice;
  if (L.size() > 6) {
    throw SizeError("grid enumeration is limited to lattices of 6 elements");
  }
  if (k < 1 || k > 6) throw SizeError("grid resolution must be in 1..6");
  const auto grid = gamma_grid(k).points;
  const std::size_t n = L.size();
  std::vector<Measure> out;
  std::vector<std::size_t> choice(n, 0);
  std::vector<GammaValue> values(n);

  // Depth-first over elements in index order; pruning keeps only monotone
  // partial assignments, so the output stays in lexicographic order.
  auto consistent = [&](std::size_t e) {
    if (e == L.bottom() && values[e] != GammaValue::zero()) return false;
    if (e == L.top() && values[e] != GammaValue::one()) return false;
    for (std::size_t f = 0; f < e; ++f) {
      if (L.leq(f, e) && values[f] > values[e]) return false;
      if (L.leq(e, f) && values[e] > values[f]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == n) {
      Measure mu{lattice, values};
      if (is_measure(mu)) out.push_back(std::move(mu));
      return;
    }
    for (const auto& g : grid) {
      values[e] = g;
      if (consistent(e)) self(self, e + 1);
    }
  };
  rec(rec, 0);
  return out;
}

EntailmentResult entails_on(const PLFormula& lhs, const PLFormula& rhs,
                            const std::vector<Measure>& measures) {
  EntailmentResult r;
  for (const auto& mu : measures) {
    ++r.measures_checked;
    if (eval_pl_measure(mu, lhs) && !eval_pl_measure(mu, rhs)) {
      r.holds = false;
      r.countermodel = mu;
      return r;
    }
  }
  return r;
}

EntailmentResult entails_grid(const PLFormula& lhs, const PLFormula& rhs,
                              const LatticePtr& lattice, int k) {
  return entails_on(lhs, rhs, grid_measures(lattice, k));
}

std::optional<std::string> check_presentation(const FilterPresentation& f) {
  const auto& L = *f.lattice;
  if (f.k < 1) return "grid resolution must be positive";
  if (f.member.size() != L.size()) return "presentation needs one row per element";
  const std::size_t width = static_cast<std::size_t>(f.k) + 1;
  for (const auto& row : f.member) {
    if (row.size() != width) return "presentation rows need k+1 entries";
  }
  auto q = [&](std::size_t i) {
    return Rational(static_cast<std::int64_t>(i), f.k).str();
  };
  for (Element a = 0; a < L.size(); ++a) {
    for (std::size_t i = 1; i < width; ++i) {
      if (f.member[a][i] && !f.member[a][i - 1]) {
        return "L1: contains (" + q(i) + "," + L.label(a) + ") but not (" +
               q(i - 1) + "," + L.label(a) + ")";
      }
    }
  }
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      if (!L.leq(a, b)) continue;
      for (std::size_t i = 0; i < width; ++i) {
        if (f.member[a][i] && !f.member[b][i]) {
          return "L3: contains (" + q(i) + "," + L.label(a) + ") but not (" +
                 q(i) + "," + L.label(b) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<GammaValue> filter_to_values(const FilterPresentation& f) {
  std::vector<GammaValue> out;
  for (const auto& row : f.member) {
    GammaValue best;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) {
        best = GammaValue::exact(Rational(static_cast<std::int64_t>(i), f.k));
      }
    }
    out.push_back(best);
  }
  return out;
}

Measure filter_to_measure(const FilterPresentation& f) {
  if (auto bad = check_presentation(f)) throw PresentationError(*bad);
  Measure mu{f.lattice, filter_to_values(f)};
  if (auto v = validate_measure(mu); !v.empty()) {
    throw PresentationError("presentation does not define a measure: " +
                            v.front().describe(*f.lattice));
  }
  return mu;
}

FilterPresentation presentation_of(const Measure& mu, int k) {
  if (k < 1) throw DomainError("grid resolution must be positive");
  FilterPresentation f{mu.lattice, k, {}};
  for (const auto& v : mu.values) {
    std::vector<bool> row;
    for (int i = 0; i <= k; ++i) {
      row.push_back(GammaValue::exact(Rational(i, k)) <= v);
    }
    f.member.push_back(std::move(row));
  }
  return f;
}

std::vector<GammaValue> grid_rounding(const Measure& mu, int k) {
  if (k < 1) throw DomainError("grid resolution must be positive");
  std::vector<GammaValue> out;
  for (const auto& v : mu.values) {
    GammaValue best;
    for (int i = 0; i <= k; ++i) {
      const GammaValue g = GammaValue::exact(Rational(i, k));
      if (g <= v) best = g;
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace glim
