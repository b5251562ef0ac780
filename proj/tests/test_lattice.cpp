// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "glim/error.hpp"
#include "glim/lattice.hpp"

using namespace glim;

namespace {

// Lattice laws checked from the leq matrix alone.
void check_laws(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a) {
    CHECK(L.leq(L.bottom(), a));
    CHECK(L.leq(a, L.top()));
    for (Element b = 0; b < L.size(); ++b) {
      const Element m = L.meet(a, b);
      const Element j = L.join(a, b);
      CHECK(L.leq(m, a));
      CHECK(L.leq(m, b));
      CHECK(L.leq(a, j));
      CHECK(L.leq(b, j));
      for (Element c = 0; c < L.size(); ++c) {
        if (L.leq(c, a) && L.leq(c, b)) CHECK(L.leq(c, m));
        if (L.leq(a, c) && L.leq(b, c)) CHECK(L.leq(j, c));
        CHECK(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("built-in lattices satisfy the laws") {
  for (const auto& L : corpus::small_lattices()) check_laws(*L);
}

TEST_CASE("validate_lattice reports what is wrong") {
  using Kind = LatticeViolation::Kind;
  // The pentagon N5 is a lattice but not distributive.
  const auto n5 = make_order({"0", "a", "b", "c", "1"},
                             {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}});
  auto v = validate_lattice(n5);
  REQUIRE_FALSE(v.empty());
  CHECK(std::all_of(v.begin(), v.end(),
                    [](const auto& x) { return x.kind == Kind::Distributivity; }));
  CHECK_THROWS_AS(FiniteLattice::from_order(n5), DomainError);

  const auto two_tops = make_order({"0", "a", "b"}, {{0, 1}, {0, 2}});
  v = validate_lattice(two_tops);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == Kind::NoTop);

  const auto cycle = make_order({"a", "b"}, {{0, 1}, {1, 0}});
  v = validate_lattice(cycle);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == Kind::Antisymmetry);
  CHECK(v.front().describe(cycle.labels) == "antisymmetry a b");

  CHECK(validate_lattice(OrderSpec{}).front().kind == Kind::Empty);
  CHECK_THROWS_AS(make_order({"a", "a"}, {}), DomainError);
  CHECK_THROWS_AS(make_order({"a"}, {{0, 3}}), DomainError);
}

TEST_CASE("boolean lattices index by bitmask") {
  const auto B = boolean_lattice(3);
  CHECK(B.size() == 8);
  CHECK(B.label(0b101) == "{0,2}");
  CHECK(B.label(0) == "{}");
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      CHECK(B.meet(a, b) == (a & b));
      CHECK(B.join(a, b) == (a | b));
    }
  }
  CHECK_THROWS_AS(boolean_lattice(7), SizeError);
}

TEST_CASE("irreducibles and kappa") {
  const auto C = chain_lattice(5);
  CHECK(join_irreducibles(C) == std::vector<Element>{1, 2, 3, 4});
  CHECK(meet_irreducibles(C) == std::vector<Element>{0, 1, 2, 3});
  for (Element j = 1; j <= 4; ++j) {
    CHECK(kappa(C, j) == j - 1);
    CHECK(kappa_inverse(C, j - 1) == j);
  }
  CHECK_THROWS_AS(kappa(C, 0), DomainError);
  CHECK_THROWS_AS(kappa_inverse(C, 4), DomainError);

  // In a Boolean algebra κ(atom) is its complement.
  const auto B = boolean_lattice(3);
  CHECK(join_irreducibles(B) == std::vector<Element>{1, 2, 4});
  CHECK(kappa(B, 1) == 6);
  CHECK(kappa(B, 4) == 3);

  // Birkhoff: |J(L)| = |M(L)| and κ is an order isomorphism J → M.
  for (const auto& L : corpus::small_lattices()) {
    const auto js = join_irreducibles(*L);
    CHECK(js.size() == meet_irreducibles(*L).size());
    for (Element a : js) {
      for (Element b : js) {
        CHECK(L->leq(a, b) == L->leq(kappa(*L, a), kappa(*L, b)));
      }
    }
  }
}

TEST_CASE("prime filters are generated by join-irreducibles") {
  for (const auto& L : corpus::small_lattices()) {
    const auto filters = prime_filters(L);
    std::vector<Element> gens;
    for (const auto& f : filters) {
      gens.push_back(f.generator);
      for (Element e = 0; e < L->size(); ++e) {
        CHECK(f.contains(e) == L->leq(f.generator, e));
      }
    }
    CHECK(gens == join_irreducibles(*L));
  }
}

TEST_CASE("homomorphisms") {
  const auto B = share(boolean4());
  const auto two = share(chain_lattice(2));
  // a ↦ 1, !a ↦ 0 is a homomorphism onto the two-element chain.
  const LatticeHom h{B, two, {0, 1, 0, 1}};
  CHECK_FALSE(check_hom(h).has_value());
  const LatticeHom bad{B, two, {0, 1, 1, 1}};
  CHECK(check_hom(bad).has_value());
  const auto id = identity_hom(B);
  CHECK(compose(id, h).map == h.map);
  CHECK_THROWS_AS(compose(h, id), DomainError);
}

TEST_CASE("text format round trip") {
  for (const auto& L : corpus::small_lattices()) {
    const auto back = parse_lattice(format_lattice(*L));
    REQUIRE(back.size() == L->size());
    CHECK(back.labels() == L->labels());
    for (Element a = 0; a < L->size(); ++a) {
      for (Element b = 0; b < L->size(); ++b) CHECK(back.leq(a, b) == L->leq(a, b));
    }
  }
  const auto L = load_lattice(GLIM_TEST_DATA "/boolean4.lat");
  CHECK(L.labels() == std::vector<std::string>{"0", "a", "!a", "1"});
  CHECK(L.index_of("!a") == 2);
  CHECK_THROWS_AS(L.index_of("b"), DomainError);
  CHECK_THROWS_AS(load_lattice(GLIM_TEST_DATA "/missing.lat"), IoError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_lattice("elements: a, b\norder: a<=c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_lattice("order: a<=b\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("elements: a, a\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("elements: a,\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("colors: red\n"), ParseError);
  // Parses, but two maximal elements make it no lattice.
  CHECK_THROWS_AS(parse_lattice("elements: 0, a, b\norder: 0<=a, 0<=b\n"),
                  DomainError);
}
