// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "glim/glim.h"

namespace {

// Takes ownership of a text handle and returns its contents.
std::string take(glim_text* t) {
  REQUIRE(t != nullptr);
  std::string s(glim_text_data(t), glim_text_size(t));
  glim_text_free(t);
  return s;
}

std::string data(const char* name) { return std::string(GLIM_TEST_DATA "/") + name; }

}  // namespace

TEST_CASE("status codes and messages") {
  CHECK(std::string(glim_version()) == "0.1.0");
  glim_text* out = nullptr;
  CHECK(glim_gamma_normalize("2/4^o", &out) == GLIM_OK);
  CHECK(take(out) == "1/2^o");
  CHECK(std::string(glim_last_error_message()).empty());

  CHECK(glim_gamma_normalize("1/2^x", &out) == GLIM_ERR_PARSE);
  CHECK_FALSE(std::string(glim_last_error_message()).empty());
  CHECK(glim_gamma_apply("mip", "1/4^o", "1/2^o", &out) == GLIM_ERR_DOMAIN);
  CHECK(glim_gamma_apply("divide", "1/4^o", "1/2^o", &out) == GLIM_ERR_INVALID_ARGUMENT);
  CHECK(glim_gamma_normalize(nullptr, &out) == GLIM_ERR_INVALID_ARGUMENT);
  CHECK(glim_gamma_normalize("1^o", nullptr) == GLIM_ERR_INVALID_ARGUMENT);

  glim_structure* s = nullptr;
  CHECK(glim_structure_load(data("missing.struct").c_str(), &s) == GLIM_ERR_IO);
  CHECK(s == nullptr);
  glim_lattice* l = nullptr;
  CHECK(glim_lattice_parse("elements: 0, a, b\norder: 0<=a, 0<=b\n", &l) == GLIM_ERR_DOMAIN);
  CHECK(l == nullptr);
  // Freeing null handles is a no-op.
  glim_text_free(nullptr);
  glim_structure_free(nullptr);
  glim_lattice_free(nullptr);
}

TEST_CASE("Γ operations") {
  glim_text* out = nullptr;
  REQUIRE(glim_gamma_apply("mip", "3/4^o", "1/4^-", &out) == GLIM_OK);
  CHECK(take(out) == "1/2^o");
  REQUIRE(glim_gamma_apply("miss", "3/4^o", "1/4^o", &out) == GLIM_OK);
  CHECK(take(out) == "1/2^-");
  REQUIRE(glim_gamma_apply("plus", "1/4^-", "1/2^o", &out) == GLIM_OK);
  CHECK(take(out) == "3/4^-");
  int c = 7;
  REQUIRE(glim_gamma_compare("1/2^-", "1/2^o", &c) == GLIM_OK);
  CHECK(c == -1);
  REQUIRE(glim_gamma_compare("2/4^o", "1/2^o", &c) == GLIM_OK);
  CHECK(c == 0);
  REQUIRE(glim_gamma_compare("2/3^-", "1/2^o", &c) == GLIM_OK);
  CHECK(c == 1);
}

TEST_CASE("structures, formulas and pairings") {
  glim_structure* s = nullptr;
  REQUIRE(glim_structure_load(data("small.struct").c_str(), &s) == GLIM_OK);
  glim_text* text = nullptr;
  REQUIRE(glim_structure_format(s, &text) == GLIM_OK);
  glim_structure* again = nullptr;
  CHECK(glim_structure_parse(take(text).c_str(), &again) == GLIM_OK);
  glim_structure_free(again);

  glim_formula* f = nullptr;
  REQUIRE(glim_formula_parse("R(x,y) & P(x)", s, &f) == GLIM_OK);
  REQUIRE(glim_formula_free_vars(f, &text) == GLIM_OK);
  CHECK(take(text) == "x,y");
  glim_pairing p{};
  REQUIRE(glim_pair(s, f, nullptr, &p) == GLIM_OK);
  CHECK(p.count == 2);
  CHECK(p.total == 16);
  CHECK(take(p.classical) == "1/8");
  CHECK(take(p.gamma) == "1/8^o");
  REQUIRE(glim_integrate(s, f, "x,y", &text) == GLIM_OK);
  CHECK(take(text) == "1/8^o");
  REQUIRE(glim_pair(s, f, "x,y,z", &p) == GLIM_OK);
  CHECK(p.total == 64);
  glim_text_free(p.classical);
  glim_text_free(p.gamma);
  CHECK(glim_pair(s, f, "y", &p) == GLIM_ERR_DOMAIN);

  int r = -1;
  REQUIRE(glim_pl_eval_structure(s, "[>= 1/8]{R(x,y) & P(x)}", &r) == GLIM_OK);
  CHECK(r == 1);
  REQUIRE(glim_pl_eval_structure(s, "[>= 1/4]{R(x,y) & P(x)}", &r) == GLIM_OK);
  CHECK(r == 0);

  glim_formula* bad = nullptr;
  CHECK(glim_formula_parse("Q(x)", s, &bad) == GLIM_ERR_PARSE);
  CHECK(bad == nullptr);
  glim_formula_free(f);
  glim_structure_free(s);
}

TEST_CASE("families and convergence") {
  glim_family* fam = nullptr;
  REQUIRE(glim_family_open("fence", &fam) == GLIM_OK);
  glim_formula* psi = nullptr;
  REQUIRE(glim_formula_builtin("<ψ>", &psi) == GLIM_OK);
  glim_structure* two = nullptr;
  REQUIRE(glim_family_member(fam, 2, &two) == GLIM_OK);
  glim_pairing p{};
  REQUIRE(glim_pair(two, psi, "x", &p) == GLIM_OK);
  CHECK(p.count == 2);
  CHECK(p.total == 3);
  CHECK(take(p.classical) == "2/3");
  CHECK(take(p.gamma) == "2/3^o");
  CHECK(glim_family_member(fam, 0, &two) != GLIM_OK);

  glim_formula* not_psi = nullptr;
  REQUIRE(glim_formula_builtin("!psi", &not_psi) == GLIM_OK);
  glim_text* csv = nullptr;
  glim_text* verdict = nullptr;
  REQUIRE(glim_converge(fam, not_psi, "x", 12, &csv, &verdict) == GLIM_OK);
  const auto table = take(csv);
  CHECK(table.rfind("index,count,total,classical,gamma\n1,2,2,1,\"1^o\"\n", 0) == 0);
  CHECK(take(verdict) == "DIVERGENT odd->1^o even->1^-");
  CHECK(glim_formula_builtin("phi", &psi) == GLIM_ERR_DOMAIN);

  glim_family* dir = nullptr;
  REQUIRE(glim_family_open(data("family").c_str(), &dir) == GLIM_OK);
  CHECK(glim_converge(dir, psi, "x", 7, &csv, &verdict) == GLIM_ERR_IO);
  CHECK(std::string(glim_last_error_message()).rfind("index 7: ", 0) == 0);
  CHECK(glim_family_open(data("nowhere").c_str(), &dir) == GLIM_ERR_IO);

  glim_structure_free(two);
  glim_formula_free(psi);
  glim_formula_free(not_psi);
  glim_family_free(dir);
  glim_family_free(fam);
}

TEST_CASE("measures, entailment and soundness") {
  glim_measure* m = nullptr;
  REQUIRE(glim_measure_load(data("half.measure").c_str(), &m) == GLIM_OK);
  int valid = -1;
  glim_text* report = nullptr;
  REQUIRE(glim_measure_check(m, &valid, &report) == GLIM_OK);
  CHECK(valid == 1);
  CHECK(take(report) == "OK\n");
  int r = -1;
  REQUIRE(glim_pl_eval_measure(m, "[>= 1/2]{a} & [< 1/2]{!a}", &r) == GLIM_OK);
  CHECK(r == 1);
  glim_measure_free(m);

  REQUIRE(glim_measure_load(data("overfull.measure").c_str(), &m) == GLIM_OK);
  REQUIRE(glim_measure_check(m, &valid, &report) == GLIM_OK);
  CHECK(valid == 0);
  CHECK(take(report) ==
        "FAIL additivity-left a=a b=!a\nFAIL additivity-left a=!a b=a\n");
  glim_measure_free(m);

  glim_lattice* l = nullptr;
  REQUIRE(glim_lattice_load(data("boolean4.lat").c_str(), &l) == GLIM_OK);
  CHECK(glim_lattice_size(l) == 4);
  int holds = -1;
  REQUIRE(glim_entail(l, 4, "[>= 1/2]{a}", "![>= 3/4]{!a}", &holds, &report) == GLIM_OK);
  CHECK(holds == 1);
  CHECK(take(report) == "HOLDS\n");
  REQUIRE(glim_entail(l, 4, "[>= 1/2]{a}", "[>= 1/2]{!a}", &holds, &report) == GLIM_OK);
  CHECK(holds == 0);
  CHECK(take(report).rfind("# countermodel\nlattice: ", 0) == 0);
  CHECK(glim_entail(l, 4, "[>= 1/2]{b}", "true", &holds, &report) == GLIM_ERR_PARSE);

  int sound = -1;
  REQUIRE(glim_soundness(l, 4, 2, &sound, &report) == GLIM_OK);
  CHECK(sound == 1);
  const auto s = take(report);
  CHECK(s.find("L4 instances=1360 countermodels=0\n") != std::string::npos);
  CHECK(s.find("0 countermodels") != std::string::npos);
  CHECK(glim_soundness(l, 9, 1, &sound, &report) == GLIM_ERR_SIZE);
  glim_lattice_free(l);
}

TEST_CASE("duality") {
  int pass = -1;
  glim_text* report = nullptr;
  REQUIRE(glim_duality_verify(4, 2, &pass, &report) == GLIM_OK);
  CHECK(pass == 1);
  const auto text = take(report);
  CHECK(text.rfind("PASS oplus-ominus-adjunction n<=4 ", 0) == 0);
  CHECK(text.find("WITNESS n=2 m=2 u=top v=1/2 i(u-v)=4/4 i(u)-i(v)=3/4") !=
        std::string::npos);
  CHECK(glim_duality_verify(4, 1, &pass, &report) == GLIM_ERR_DOMAIN);
}
