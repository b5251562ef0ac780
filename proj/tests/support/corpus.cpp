// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpus.hpp"

#include <string>

namespace corpus {

using glim::Formula;

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

const char* pick_var(Rng& rng) {
  static const char* const kVars[] = {"x", "y", "z"};
  return kVars[uniform(rng, 0, 2)];
}

// z is only used under a binder for it, keeping free variables in {x, y}.
std::string pick_in_scope(Rng& rng, bool z_bound) {
  for (;;) {
    const std::string v = pick_var(rng);
    if (v != "z" || z_bound) return v;
  }
}

Formula atom(Rng& rng, bool z_bound) {
  const std::string a = pick_in_scope(rng, z_bound);
  const std::string b = pick_in_scope(rng, z_bound);
  switch (uniform(rng, 0, 5)) {
    case 0: return Formula::equals(a, b);
    case 1: return uniform(rng, 0, 1) ? Formula::truth() : Formula::falsity();
    default: return Formula::atom("R", {a, b});
  }
}

Formula formula(Rng& rng, std::size_t budget, bool z_bound) {
  if (budget == 0 || uniform(rng, 0, 5) == 0) return atom(rng, z_bound);
  switch (uniform(rng, 0, 6)) {
    case 0: return Formula::negation(formula(rng, budget - 1, z_bound));
    case 1:
      return Formula::conjunction(formula(rng, budget - 1, z_bound),
                                  formula(rng, budget - 1, z_bound));
    case 2:
      return Formula::disjunction(formula(rng, budget - 1, z_bound),
                                  formula(rng, budget - 1, z_bound));
    case 3:
      return Formula::implication(formula(rng, budget - 1, z_bound),
                                  formula(rng, budget - 1, z_bound));
    case 4:
    case 5: {
      const std::string v = pick_var(rng);
      const bool bound = z_bound || v == "z";
      return Formula::exists(v, formula(rng, budget - 1, bound));
    }
    default: {
      const std::string v = pick_var(rng);
      const bool bound = z_bound || v == "z";
      return Formula::forall(v, formula(rng, budget - 1, bound));
    }
  }
}

}  // namespace

glim::Signature binary_signature() { return glim::Signature({{"R", 2}}); }

glim::FiniteStructure random_structure(Rng& rng, std::size_t max_universe) {
  const std::size_t n = uniform(rng, 1, max_universe);
  const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<glim::Tuple> tuples;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (edge(rng)) tuples.push_back({a, b});
    }
  }
  return glim::FiniteStructure(binary_signature(), n, {tuples});
}

Formula random_formula(Rng& rng, std::size_t max_depth) {
  return formula(rng, max_depth, false);
}

FormulaCorpus make_corpus(std::size_t structures, std::size_t pairs,
                          std::uint64_t seed) {
  Rng rng(seed);
  FormulaCorpus c;
  for (std::size_t i = 0; i < structures; ++i) c.structures.push_back(random_structure(rng));
  for (std::size_t i = 0; i < pairs; ++i) {
    Formula a = random_formula(rng);
    Formula b = random_formula(rng);
    c.pairs.emplace_back(std::move(a), std::move(b));
  }
  return c;
}

std::vector<glim::LatticePtr> small_lattices() {
  using namespace glim;
  std::vector<LatticePtr> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(share(chain_lattice(n)));
  out.push_back(share(boolean4()));
  out.push_back(share(boolean_lattice(3)));
  out.push_back(share(product_lattice(chain_lattice(2), chain_lattice(3))));
  out.push_back(share(product_lattice(chain_lattice(2), chain_lattice(4))));
  // Down-sets of the poset a < c, b < c, b < d.
  out.push_back(share(parse_lattice(
      "elements: e, a, b, ab, bd, abd, abc, abcd\n"
      "order: e<=a, e<=b, a<=ab, b<=ab, b<=bd, ab<=abd, bd<=abd, ab<=abc,"
      " abd<=abcd, abc<=abcd\n")));
  // Down-sets of the poset a < b plus an isolated c.
  out.push_back(share(parse_lattice(
      "elements: e, a, c, ab, ac, abc\n"
      "order: e<=a, e<=c, a<=ab, a<=ac, c<=ac, ab<=abc, ac<=abc\n")));
  return out;
}

glim::ClassicalMeasure random_classical(Rng& rng, const glim::LatticePtr& lattice) {
  const auto filters = glim::prime_filters(lattice);
  std::vector<std::int64_t> w(filters.size());
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) total += (x = static_cast<std::int64_t>(uniform(rng, 0, 6)));
  }
  glim::ClassicalMeasure m;
  m.lattice = lattice;
  m.values.assign(lattice->size(), glim::Rational(0));
  for (std::size_t i = 0; i < filters.size(); ++i) {
    for (const auto e : filters[i].members) m.values[e] += glim::Rational(w[i], total);
  }
  return m;
}

std::vector<glim::GammaValue> random_weights(Rng& rng, std::size_t carrier) {
  std::vector<std::int64_t> w(carrier);
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) {
      x = uniform(rng, 0, 2) == 0 ? 0 : static_cast<std::int64_t>(uniform(rng, 1, 9));
      total += x;
    }
  }
  std::vector<glim::GammaValue> out;
  for (const auto x : w) out.push_back(glim::GammaValue::exact(glim::Rational(x, total)));
  return out;
}

}  // namespace corpus
