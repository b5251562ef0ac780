// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <thread>

#include "glim/error.hpp"
#include "glim/pl.hpp"

namespace glim {

std::vector<RuleInstance> rule_instances(const LatticePtr& lattice, int k) {
  if (k < 1) throw DomainError("grid resolution must be positive");
  const auto& L = *lattice;
  std::vector<Rational> qs;
  for (int i = 0; i <= k; ++i) qs.emplace_back(i, k);
  const Rational zero(0);
  const Rational one(1);
  const Element bot = L.bottom();
  const Element top = L.top();
  using F = PLFormula;
  std::vector<RuleInstance> out;
  auto add = [&](const char* rule, Rational p, Rational q, Rational r,
                 Element a, Element b, F premise, F conclusion) {
    out.push_back({rule, std::move(p), std::move(q), std::move(r), a, b,
                   std::move(premise), std::move(conclusion)});
  };

  // L1: P≥q a ⊢ P≥p a for p <= q.
  for (Element a = 0; a < L.size(); ++a) {
    for (const auto& q : qs) {
      for (const auto& p : qs) {
        if (p <= q) add("L1", p, q, zero, a, a, F::ge(q, a), F::ge(p, a));
      }
    }
  }
  // L2: ⊤ ⊢ P≥0 ⊥*, ⊤ ⊢ P≥q ⊤*, P≥p ⊥* ⊢ ⊥ for p > 0.
  add("L2", zero, zero, zero, bot, bot, F::truth(), F::ge(zero, bot));
  for (const auto& q : qs) {
    add("L2", zero, q, zero, top, top, F::truth(), F::ge(q, top));
  }
  for (const auto& p : qs) {
    if (p > zero) add("L2", p, zero, zero, bot, bot, F::ge(p, bot), F::falsity());
  }
  // L3: P≥q a ⊢ P≥q b for a <= b.
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      if (!L.leq(a, b)) continue;
      for (const auto& q : qs) add("L3", zero, q, zero, a, b, F::ge(q, a), F::ge(q, b));
    }
  }
  // L4 and L5, with 0 <= p+q-r <= 1.
  for (const char* rule : {"L4", "L5"}) {
    const bool four = rule[1] == '4';
    for (Element a = 0; a < L.size(); ++a) {
      for (Element b = 0; b < L.size(); ++b) {
        const Element j = L.join(a, b);
        const Element m = L.meet(a, b);
        for (const auto& p : qs) {
          for (const auto& q : qs) {
            for (const auto& r : qs) {
              const Rational s = p + q - r;
              if (s < zero || s > one) continue;
              F left = F::conjunction(F::ge(p, a), F::ge(q, b));
              F right = F::disjunction(F::ge(s, j), F::ge(r, m));
              if (four) {
                add(rule, p, q, r, a, b, left, right);
              } else {
                add(rule, p, q, r, a, b,
                    F::conjunction(F::ge(s, j), F::ge(r, m)),
                    F::disjunction(F::ge(p, a), F::ge(q, b)));
              }
            }
          }
        }
      }
    }
  }
  // L6: P<q a ∧ P≥q a ⊢ ⊥ and ⊤ ⊢ P<q a ∨ P≥q a.
  for (Element a = 0; a < L.size(); ++a) {
    for (const auto& q : qs) {
      add("L6", zero, q, zero, a, a,
          F::conjunction(F::lt(q, a), F::ge(q, a)), F::falsity());
      add("L6", zero, q, zero, a, a, F::truth(),
          F::disjunction(F::lt(q, a), F::ge(q, a)));
    }
  }
  return out;
}

std::size_t SoundnessReport::total_countermodels() const {
  std::size_t n = 0;
  for (const auto& r : rules) n += r.countermodels;
  return n;
}

SoundnessReport check_soundness_grid(const LatticePtr& lattice, int k,
                                     unsigned workers) {
  const auto measures = grid_measures(lattice, k);
  const auto instances = rule_instances(lattice, k);

  // Per instance: the index of the first countermodel, or -1.
  std::vector<long> failure(instances.size(), -1);
  auto check = [&](std::size_t i) {
    const auto& inst = instances[i];
    for (std::size_t m = 0; m < measures.size(); ++m) {
      if (eval_pl_measure(measures[m], inst.premise) &&
          !eval_pl_measure(measures[m], inst.conclusion)) {
        failure[i] = static_cast<long>(m);
        return;
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) check(i);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < instances.size(); i += workers) check(i);
      });
    }
    for (auto& t : threads) t.join();
  }

  SoundnessReport report;
  report.measures = measures.size();
  for (const char* rule : {"L1", "L2", "L3", "L4", "L5", "L6"}) {
    RuleStats stats;
    stats.rule = rule;
    report.rules.push_back(std::move(stats));
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto& stats = report.rules[static_cast<std::size_t>(instances[i].rule[1] - '1')];
    ++stats.instances;
    if (failure[i] >= 0) {
      ++stats.countermodels;
      if (!stats.first_failure) {
        stats.first_failure.emplace(instances[i],
                                    measures[static_cast<std::size_t>(failure[i])]);
      }
    }
  }
  return report;
}

}  // namespace glim
