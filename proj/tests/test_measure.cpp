// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpus.hpp"
#include "doctest.h"
#include "glim/error.hpp"
#include "glim/measure.hpp"
#include "oracles.hpp"

using namespace glim;

namespace {

GammaValue g(const char* text) { return parse_gamma(text); }

Measure on_b4(const char* a, const char* not_a) {
  return Measure{share(boolean4()), {g("0^o"), g(a), g(not_a), g("1^o")}};
}

}  // namespace

TEST_CASE("validation") {
  using K = MeasureViolation::Kind;
  CHECK(validate_measure(on_b4("1/2^o", "1/2^o")).empty());
  CHECK(validate_measure(on_b4("1/2^o", "1/2^-")).empty());
  CHECK(validate_measure(on_b4("1/3^-", "2/3^o")).empty());

  const auto both_low = on_b4("1/2^-", "1/2^-");
  auto v = validate_measure(both_low);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == K::AdditivityRight);

  const auto over = on_b4("1/2^o", "3/4^o");
  v = validate_measure(over);
  REQUIRE(v.size() == 2);
  CHECK(v[0].describe(*over.lattice) == "additivity-left a=a b=!a");
  CHECK(v[1].describe(*over.lattice) == "additivity-left a=!a b=a");
  for (const auto& x : v) CHECK(reproduces(over, x));

  Measure top_off = on_b4("1/2^o", "1/2^o");
  top_off.values[3] = g("1^-");
  v = validate_measure(top_off);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == K::Top);
  CHECK(v.front().describe(*top_off.lattice) == "top");

  Measure bottom_off = on_b4("1/2^o", "1/2^o");
  bottom_off.values[0] = g("1/4^o");
  CHECK(validate_measure(bottom_off).front().kind == K::Bottom);

  Measure short_one = on_b4("1/2^o", "1/2^o");
  short_one.values.pop_back();
  v = validate_measure(short_one);
  REQUIRE(v.size() == 1);
  CHECK(v.front().kind == K::Size);

  const Measure dip{share(chain_lattice(3)), {g("0^o"), g("1^o"), g("1/2^o")}};
  CHECK_FALSE(is_measure(dip));
  bool monotone = false;
  for (const auto& x : validate_measure(dip)) monotone |= x.kind == K::Monotone;
  CHECK(monotone);
}

TEST_CASE("is_measure agrees with the oracle axioms on grid candidates") {
  const auto grid = gamma_grid(4).points;
  const auto B = share(boolean4());
  std::size_t b_count = 0;
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      const Measure mu{B, {g("0^o"), x, y, g("1^o")}};
      const bool ok = is_measure(mu);
      CHECK(ok == oracle::is_measure(mu, grid));
      b_count += ok;
    }
  }
  // Five exact splits plus four of each mixed kind.
  CHECK(b_count == 13);

  const auto C = share(chain_lattice(3));
  std::size_t c_count = 0;
  for (const auto& x : grid) {
    const Measure mu{C, {g("0^o"), x, g("1^o")}};
    CHECK(is_measure(mu) == oracle::is_measure(mu, grid));
    c_count += is_measure(mu);
  }
  CHECK(c_count == grid.size());
}

TEST_CASE("classical measures, collapse and lift") {
  corpus::Rng rng(corpus::kSeed);
  for (const auto& L : corpus::small_lattices()) {
    for (int i = 0; i < 10; ++i) {
      const auto m = corpus::random_classical(rng, L);
      REQUIRE(validate_classical(m).empty());
      const auto lifted = lift_measure(m);
      CHECK(is_measure(lifted));
      CHECK(collapse_measure(lifted) == m);
    }
  }
  // Collapse loses the tags, so the other composite is not the identity.
  const auto mu = on_b4("1/2^o", "1/2^-");
  CHECK(collapse_measure(mu).values[2] == Rational(1, 2));
  CHECK_FALSE(lift_measure(collapse_measure(mu)) == mu);

  ClassicalMeasure bad{share(boolean4()),
                       {Rational(0), Rational(1, 2), Rational(1, 3), Rational(1)}};
  CHECK(validate_classical(bad).front().kind == MeasureViolation::Kind::Additivity);
  CHECK_THROWS_AS(lift_measure(bad), DomainError);
}

TEST_CASE("pushforward along a homomorphism") {
  const auto B = share(boolean4());
  const auto two = share(chain_lattice(2));
  const LatticeHom h{B, two, {0, 1, 0, 1}};
  const Measure point{two, {g("0^o"), g("1^o")}};
  const auto mu = pushforward(point, h);
  CHECK(mu.values == std::vector<GammaValue>{g("0^o"), g("1^o"), g("0^o"), g("1^o")});
  CHECK_THROWS_AS(pushforward(mu, h), DomainError);
  const LatticeHom bad{B, two, {0, 1, 1, 1}};
  CHECK_THROWS_AS(pushforward(point, bad), DomainError);
  // Pushing forward along the identity changes nothing.
  const auto half = on_b4("1/2^o", "1/2^-");
  CHECK(pushforward(half, identity_hom(half.lattice)) == half);
}

TEST_CASE("finitely supported functions and integration") {
  const FinSuppFn f({g("1/2^o"), g("0^o"), g("1/3^o"), g("1/6^o")});
  CHECK(f.support() == std::vector<std::size_t>{0, 2, 3});
  CHECK(integrate(f, {true, true, false, false}) == g("1/2^o"));
  CHECK(integrate(f, {false, false, false, false}) == g("0^o"));
  CHECK(integrate(f, {true, true, true, true}) == g("1^o"));
  CHECK_THROWS_AS(integrate(f, {true}), DomainError);
  CHECK_THROWS_AS(FinSuppFn({g("1/2^o"), g("1/2^-")}), DomainError);
  CHECK_THROWS_AS(FinSuppFn({g("1/2^o")}), DomainError);
}

TEST_CASE("subset algebras") {
  const auto P = powerset_algebra(3);
  CHECK(P.lattice->size() == 8);
  CHECK(P.subsets[5] == std::vector<bool>{true, false, true});
  CHECK_THROWS_AS(powerset_algebra(9), SizeError);

  const auto A = make_subset_algebra(
      3, {{false, false, false}, {true, true, true}, {true, false, false}, {false, true, true}});
  CHECK(A.lattice->size() == 4);
  CHECK(A.lattice->label(A.lattice->top()) == "{0,1,2}");
  CHECK_THROWS_AS(make_subset_algebra(2, {{true, true}}), DomainError);
  CHECK_THROWS_AS(make_subset_algebra(2, {{false, false}, {true, true}, {true, false},
                                          {false, true}, {true, false}}),
                  DomainError);
  CHECK_THROWS_AS(make_subset_algebra(3, {{false, false, false}, {true, true, true},
                                          {true, true, false}, {false, true, true}}),
                  DomainError);

  corpus::Rng rng(corpus::kSeed + 7);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto alg = powerset_algebra(n);
    for (int i = 0; i < 5; ++i) {
      const FinSuppFn w(corpus::random_weights(rng, n));
      const auto mu = integration_measure(w, alg);
      CHECK(is_measure(mu));
      for (Element s = 0; s < alg.lattice->size(); ++s) {
        Rational want(0);
        for (std::size_t p = 0; p < n; ++p) {
          if (alg.subsets[s][p]) want += w.weights()[p].value();
        }
        CHECK(mu(s) == GammaValue::exact(want));
      }
    }
  }
  CHECK_THROWS_AS(integration_measure(FinSuppFn({g("1^o")}), powerset_algebra(2)),
                  DomainError);
}

TEST_CASE("measure files") {
  const auto file = load_measure(GLIM_TEST_DATA "/half.measure");
  CHECK(file.lattice_path == "boolean4.lat");
  CHECK(file.measure == on_b4("1/2^o", "1/2^-"));
  const auto text = format_measure(file.measure, file.lattice_path);
  CHECK(text ==
        "lattice: boolean4.lat\n"
        "value(0) = 0^o\n"
        "value(a) = 1/2^o\n"
        "value(!a) = 1/2^-\n"
        "value(1) = 1^o\n");
  CHECK(parse_measure(text, file.measure.lattice).measure == file.measure);
  CHECK_FALSE(is_measure(load_measure(GLIM_TEST_DATA "/overfull.measure").measure));

  const auto L = share(boolean4());
  auto pos = [&](const std::string& body) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_measure("lattice: x.lat\n" + body, L);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  const std::string rest = "value(a) = 1/2^o\nvalue(!a) = 1/2^o\nvalue(1) = 1^o\n";
  CHECK(pos("value(0) = 0^o\n" + rest) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(pos("value(b) = 0^o\n" + rest) == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK(pos("value(0) = 0^x\n" + rest).first == 2);
  CHECK(pos("value(0) = 0^x\n" + rest).second >= 12);
  CHECK(pos("value(0) = 0^o\nvalue(0) = 0^o\n" + rest).first == 3);
  CHECK_THROWS_AS(parse_measure("lattice: x.lat\n" + rest, L), ParseError);
  CHECK_THROWS_AS(parse_measure(rest, L), ParseError);
  CHECK_THROWS_AS(load_measure(GLIM_TEST_DATA "/none.measure"), IoError);

  // Labels with commas and brackets survive the round trip.
  const auto P = share(product_lattice(chain_lattice(2), chain_lattice(2)));
  const Measure pm{P, {g("0^o"), g("1/2^o"), g("1/2^o"), g("1^o")}};
  CHECK(parse_measure(format_measure(pm, "p.lat"), P).measure == pm);
}
