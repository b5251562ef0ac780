// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "corpus.hpp"
#include "doctest.h"
#include "glim/error.hpp"
#include "glim/pl.hpp"
#include "oracles.hpp"

using namespace glim;

namespace {

GammaValue g(const char* text) { return parse_gamma(text); }

Measure on_b4(const char* a, const char* not_a) {
  return Measure{share(boolean4()), {g("0^o"), g(a), g(not_a), g("1^o")}};
}

}  // namespace

TEST_CASE("parse and evaluate on a measure") {
  const auto L = share(boolean4());
  const auto half = on_b4("1/2^o", "1/2^-");
  auto parse = [&](const char* t) { return parse_pl_lattice(t, *L); };

  CHECK(eval_pl_measure(half, parse("[>= 1/2]{a}")));
  CHECK_FALSE(eval_pl_measure(half, parse("[>= 1/2]{!a}")));
  CHECK(eval_pl_measure(half, parse("[< 1/2]{ !a }")));
  CHECK(eval_pl_measure(half, parse("[>= 1/2]{!a} | [>= 1]{1} & true")));
  CHECK_FALSE(eval_pl_measure(half, parse("!([>= 0]{0})")));
  CHECK(eval_pl_measure(half, parse("!(false & [>= 1]{a})")));

  const auto f = parse("[>= 1/2]{a} & ![< 1/4]{!a} | false");
  CHECK(f.kind() == PLKind::Or);
  CHECK(f.lhs().kind() == PLKind::And);
  CHECK(f.lhs().rhs().kind() == PLKind::Not);
  CHECK(format_pl(f, L.get()) == "(([>= 1/2]{a} & ![< 1/4]{!a}) | false)");
  const auto text = format_pl(f, L.get());
  CHECK(format_pl(parse_pl_lattice(text, *L), L.get()) == text);
  CHECK_THROWS_AS(format_pl(f), DomainError);
  CHECK(is_monotone_fragment(parse("[>= 1/2]{a} & ([>= 1]{1} | true)")));
  CHECK_FALSE(is_monotone_fragment(f));

  CHECK_THROWS_AS(parse("[>= 1/2]{b}"), ParseError);
  CHECK_THROWS_AS(parse("[>= 3/2]{a}"), ParseError);
  CHECK_THROWS_AS(PLFormula::ge(Rational(3, 2), Element{1}), DomainError);
  CHECK_THROWS_AS(parse("[> 1/2]{a}"), ParseError);
  CHECK_THROWS_AS(parse("[>= 1/2]{a"), ParseError);
  CHECK_THROWS_AS(parse("[>= 1/2]{a} &"), ParseError);

  const auto other = Measure{share(chain_lattice(2)), {g("0^o"), g("1^o")}};
  CHECK_THROWS_AS(eval_pl_measure(other, PLFormula::ge(Rational(1), Element{3})),
                  DomainError);
}

TEST_CASE("evaluation agrees with the cut reading") {
  const auto L = share(boolean4());
  const auto measures = grid_measures(L, 4);
  std::vector<PLFormula> fs;
  for (int i = 0; i <= 4; ++i) {
    for (Element a = 0; a < 4; ++a) {
      fs.push_back(PLFormula::ge(Rational(i, 4), a));
      fs.push_back(PLFormula::lt(Rational(i, 4), a));
    }
  }
  for (const auto& mu : measures) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& f = fs[i];
      const auto& h = fs[(i * 7 + 3) % fs.size()];
      CHECK(eval_pl_measure(mu, f) == oracle::satisfies(mu, f));
      const auto c = PLFormula::conjunction(f, PLFormula::negation(h));
      CHECK(eval_pl_measure(mu, c) == oracle::satisfies(mu, c));
    }
  }
}

TEST_CASE("grid measures") {
  const auto B = share(boolean4());
  const auto C = share(chain_lattice(3));
  const auto b = grid_measures(B, 4);
  CHECK(b.size() == 13);
  CHECK(b == oracle::grid_measures(B, 4));
  CHECK(grid_measures(C, 4).size() == 9);
  CHECK(grid_measures(C, 4) == oracle::grid_measures(C, 4));
  for (int k = 1; k <= 3; ++k) {
    const auto two_by_three = share(product_lattice(chain_lattice(2), chain_lattice(3)));
    CHECK(grid_measures(two_by_three, k) == oracle::grid_measures(two_by_three, k));
  }
  CHECK_THROWS_AS(grid_measures(share(chain_lattice(7)), 2), SizeError);
  CHECK_THROWS_AS(grid_measures(B, 7), SizeError);
  CHECK_THROWS_AS(grid_measures(B, 0), SizeError);
}

TEST_CASE("entailment spot checks") {
  const auto L = share(boolean4());
  auto parse = [&](const char* t) { return parse_pl_lattice(t, *L); };

  auto r = entails_grid(parse("[>= 3/4]{a}"), parse("[>= 1/2]{a}"), L, 4);
  CHECK(r.holds);
  CHECK(r.measures_checked == 13);
  CHECK_FALSE(r.countermodel.has_value());

  CHECK(entails_grid(parse("[>= 1/2]{a}"), parse("![>= 3/4]{!a}"), L, 4).holds);

  r = entails_grid(parse("[>= 1/2]{a}"), parse("[>= 1/2]{!a}"), L, 4);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.countermodel.has_value());
  CHECK(*r.countermodel == on_b4("1/2^o", "1/2^-"));
  // The point mass on a is a countermodel too.
  const auto point = on_b4("1^o", "0^o");
  CHECK(is_measure(point));
  const std::vector<Measure> only{point};
  CHECK_FALSE(entails_on(parse("[>= 1/2]{a}"), parse("[>= 1/2]{!a}"), only).holds);

  // Brute force over the oracle list.
  const auto all = oracle::grid_measures(L, 4);
  for (const char* lhs : {"[>= 1/2]{a}", "[< 1/4]{!a}", "true"}) {
    for (const char* rhs : {"[>= 3/4]{a} | [>= 1/2]{!a}", "[< 1]{a}", "[>= 1]{1}"}) {
      bool holds = true;
      for (const auto& mu : all) {
        if (oracle::satisfies(mu, parse(lhs)) && !oracle::satisfies(mu, parse(rhs))) holds = false;
      }
      CHECK(entails_grid(parse(lhs), parse(rhs), L, 4).holds == holds);
    }
  }
}

TEST_CASE("rule instances are sound on the grid") {
  const std::map<std::string, std::size_t> b4{{"L1", 60}, {"L2", 10}, {"L3", 45},
                                              {"L4", 1360}, {"L5", 1360}, {"L6", 40}};
  const std::map<std::string, std::size_t> c3{{"L1", 45}, {"L2", 10}, {"L3", 30},
                                              {"L4", 765}, {"L5", 765}, {"L6", 30}};
  for (const auto& [L, want] : {std::pair{share(boolean4()), b4},
                                std::pair{share(chain_lattice(3)), c3}}) {
    std::map<std::string, std::size_t> counts;
    for (const auto& inst : rule_instances(L, 4)) ++counts[inst.rule];
    CHECK(counts == want);

    const auto report = check_soundness_grid(L, 4);
    CHECK(report.total_countermodels() == 0);
    REQUIRE(report.rules.size() == 6);
    for (const auto& r : report.rules) {
      CHECK(r.instances == want.at(r.rule));
      CHECK_FALSE(r.first_failure.has_value());
    }
    const auto threaded = check_soundness_grid(L, 4, 3);
    CHECK(threaded.measures == report.measures);
    CHECK(threaded.total_countermodels() == 0);
  }
  CHECK_THROWS_AS(rule_instances(share(boolean4()), 0), DomainError);
}

TEST_CASE("finite presentations") {
  const auto L = share(boolean4());
  for (const auto& mu : grid_measures(L, 4)) {
    const auto f = presentation_of(mu, 4);
    CHECK_FALSE(check_presentation(f).has_value());
    CHECK(filter_to_values(f) == grid_rounding(mu, 4));
    bool exact = true;
    for (const auto& v : mu.values) exact &= v.is_exact();
    if (exact) CHECK(filter_to_measure(f) == mu);
  }
  // Rounding 1/2⁻ down to 1/4° leaves no measure behind.
  const auto half = on_b4("1/2^o", "1/2^-");
  CHECK(grid_rounding(half, 4)[2] == g("1/4^o"));
  CHECK_THROWS_AS(filter_to_measure(presentation_of(half, 4)), PresentationError);

  FilterPresentation gap = presentation_of(on_b4("1/2^o", "1/2^o"), 4);
  gap.member[1][1] = false;
  const auto why = check_presentation(gap);
  REQUIRE(why.has_value());
  CHECK(why->rfind("L1: ", 0) == 0);
  CHECK_THROWS_AS(filter_to_measure(gap), PresentationError);

  FilterPresentation up = presentation_of(on_b4("1/2^o", "1/2^o"), 4);
  for (int i = 2; i <= 4; ++i) up.member[3][i] = false;
  const auto why_up = check_presentation(up);
  REQUIRE(why_up.has_value());
  CHECK(why_up->rfind("L3: ", 0) == 0);
}

TEST_CASE("evaluation on structures") {
  const auto A = fence_structure(2);
  const auto& sig = order_signature();
  const char* psi = "(forall y. !lt(x, y)) & exists z. !lt(z, x) & !(z = x)";
  auto parse = [&](const std::string& t) { return parse_pl_fo(t, sig); };
  CHECK(eval_pl_structure(A, parse(std::string("[>= 2/3]{") + psi + "}")));
  CHECK_FALSE(eval_pl_structure(A, parse(std::string("[>= 3/4]{") + psi + "}")));
  CHECK(eval_pl_structure(A, parse(std::string("[< 3/4]{") + psi + "} & [>= 1]{x = x}")));
  CHECK(eval_pl_structure(A, parse("[>= 1]{exists x. forall y. !lt(x, y)}")));
  CHECK_THROWS_AS(eval_pl_structure(A, PLFormula::ge(Rational(1), Element{0})),
                  DomainError);
  CHECK_THROWS_AS(eval_pl_measure(on_b4("1/2^o", "1/2^o"), parse("[>= 1]{x = x}")),
                  DomainError);
  CHECK_THROWS_AS(parse("[>= 1]{R(x)}"), ParseError);
}
