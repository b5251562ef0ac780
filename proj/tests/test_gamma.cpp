// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "glim/error.hpp"
#include "glim/gamma.hpp"
#include "oracles.hpp"

using glim::GammaValue;
using glim::Rational;

namespace {

GammaValue g(const char* text) { return glim::parse_gamma(text); }

const std::vector<GammaValue>& grid12() {
  static const auto points = glim::gamma_grid(12).points;
  return points;
}

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(GammaValue::exact(Rational(-1, 2)), glim::DomainError);
  CHECK_THROWS_AS(GammaValue::exact(Rational(3, 2)), glim::DomainError);
  CHECK_THROWS_AS(GammaValue::approx(Rational(0)), glim::DomainError);
  CHECK_NOTHROW(GammaValue::approx(Rational(1)));
  CHECK(GammaValue() == GammaValue::zero());
}

TEST_CASE("text form") {
  CHECK(glim::format_gamma(g("2/4^o")) == "1/2^o");
  CHECK(glim::format_gamma(g(" 1^- ")) == "1^-");
  CHECK(glim::format_gamma(GammaValue::zero()) == "0^o");
  CHECK_THROWS_AS(g("1/2"), glim::ParseError);
  CHECK_THROWS_AS(g("0^-"), glim::ParseError);
  CHECK_THROWS_AS(g("x^o"), glim::ParseError);
  try {
    g("1/2^x");
    FAIL("expected a parse error");
  } catch (const glim::ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 4);
  }
}

TEST_CASE("order: a tie goes to the exact copy") {
  CHECK(g("1/2^-") < g("1/2^o"));
  CHECK(g("1/2^o") < g("2/3^-"));
  CHECK(g("0^o") < g("1/12^-"));
  CHECK(glim::compare(g("1/3^o"), g("2/6^o")) == glim::Ordering::Equal);
  CHECK(glim::compare(g("1^-"), g("1^o")) == glim::Ordering::Less);
}

TEST_CASE("mip table") {
  CHECK(glim::mip(g("3/4^o"), g("1/4^o")) == g("1/2^o"));
  CHECK(glim::mip(g("3/4^-"), g("1/4^o")) == g("1/2^-"));
  CHECK(glim::mip(g("3/4^o"), g("1/4^-")) == g("1/2^o"));
  CHECK(glim::mip(g("3/4^-"), g("1/4^-")) == g("1/2^o"));
  CHECK(glim::mip(g("1/2^-"), g("1/2^-")) == g("0^o"));
  CHECK_THROWS_AS(glim::mip(g("1/4^o"), g("1/2^o")), glim::DomainError);
  CHECK_THROWS_AS(glim::mip(g("1/2^-"), g("1/2^o")), glim::DomainError);
}

TEST_CASE("miss table") {
  CHECK(glim::miss(g("3/4^o"), g("1/4^o")) == g("1/2^-"));
  CHECK(glim::miss(g("3/4^-"), g("1/4^-")) == g("1/2^-"));
  CHECK(glim::miss(g("3/4^-"), g("1/4^o")) == g("1/2^-"));
  CHECK(glim::miss(g("3/4^o"), g("1/4^-")) == g("1/2^o"));
  CHECK(glim::miss(g("1/2^o"), g("1/2^-")) == g("0^o"));
  CHECK(glim::miss(g("1/2^o"), g("1/2^o")) == g("0^o"));
  CHECK(glim::miss(g("1/2^-"), g("1/2^-")) == g("0^o"));
  CHECK_THROWS_AS(glim::miss(g("1/4^o"), g("1/2^o")), glim::DomainError);
}

TEST_CASE("plus table and domain") {
  CHECK(glim::plus(g("1/4^o"), g("1/2^o")) == g("3/4^o"));
  CHECK(glim::plus(g("1/4^-"), g("1/2^o")) == g("3/4^-"));
  CHECK(glim::plus(g("1/4^-"), g("1/2^-")) == g("3/4^-"));
  CHECK(glim::plus(g("1/2^o"), g("1/2^-")) == g("1^-"));
  CHECK(glim::plus(g("0^o"), g("1^-")) == g("1^-"));
  CHECK(glim::plus_defined(g("1/2^o"), g("1/2^o")));
  CHECK_FALSE(glim::plus_defined(g("1/2^o"), g("2/3^-")));
  CHECK_THROWS_AS(glim::plus(g("1/2^o"), g("2/3^-")), glim::DomainError);
  const std::vector<GammaValue> xs = {g("1/4^o"), g("1/4^-"), g("1/2^o")};
  CHECK(glim::sum(xs) == g("1^-"));
  const std::vector<GammaValue> over = {g("1/2^o"), g("2/3^o")};
  CHECK_THROWS_AS(glim::sum(over), glim::DomainError);
}

TEST_CASE("grid") {
  const auto grid = glim::gamma_grid(12);
  CHECK(grid.points.size() == 25);
  for (std::size_t i = 1; i < grid.points.size(); ++i) {
    CHECK(grid.points[i - 1] < grid.points[i]);
  }
  CHECK(grid.points.front() == GammaValue::zero());
  CHECK(grid.points.back() == GammaValue::one());
  CHECK_THROWS_AS(glim::gamma_grid(0), glim::DomainError);
}

TEST_CASE("order agrees with cut inclusion") {
  for (const auto& x : grid12()) {
    for (const auto& y : grid12()) {
      CHECK((x <= y) == oracle::cut_leq(oracle::to_cut(x), oracle::to_cut(y)));
    }
  }
}

TEST_CASE("plus agrees with the Minkowski sum of cuts") {
  for (const auto& x : grid12()) {
    for (const auto& y : grid12()) {
      const auto want = oracle::plus(x, y);
      REQUIRE(glim::plus_defined(x, y) == want.has_value());
      if (want) CHECK(glim::plus(x, y) == *want);
      // The domain is x <= 1° ∸ y.
      CHECK(glim::plus_defined(x, y) == (x <= glim::mip(GammaValue::one(), y)));
    }
  }
}

TEST_CASE("mip is the adjoint of plus; miss is its supremum formula") {
  for (const auto& x : grid12()) {
    for (const auto& y : grid12()) {
      if (!(y <= x)) continue;
      CHECK(glim::mip(x, y) == oracle::mip(x, y, grid12()));
      CHECK(glim::miss(x, y) == oracle::miss(x, y, grid12()));
    }
  }
}

TEST_CASE("collapse and sections") {
  for (const auto& x : grid12()) {
    const Rational r = glim::gamma_collapse(x);
    CHECK(glim::iota_approx(r) <= x);
    CHECK(x <= glim::iota_exact(r));
    CHECK(glim::gamma_collapse(glim::iota_exact(r)) == r);
    CHECK(glim::gamma_collapse(glim::iota_approx(r)) == r);
  }
  CHECK(glim::iota_approx(Rational(0)) == GammaValue::zero());
  CHECK(glim::iota_approx(Rational(1, 3)) == g("1/3^-"));
  CHECK_THROWS_AS(glim::iota_exact(Rational(2)), glim::DomainError);
}
