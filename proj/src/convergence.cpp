// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>

#include "glim/error.hpp"
#include "glim/pairing.hpp"

namespace glim {

Verdict classify(const MobiusForm& f) {
  const Rational zero(0);
  Verdict v;
  v.exact = true;
  if (f.c == zero) {
    if (f.a != zero || f.d == zero) return v;  // unbounded or undefined
    v.kind = VerdictKind::ConvergesExact;
    v.limit = iota_exact(f.b / f.d);
    return v;
  }
  const Rational limit = f.a / f.c;
  if (limit < zero || limit > Rational(1)) return v;
  // x_j - L = (bc - ad) / (c (c j + d)); for large j the denominator has
  // the sign of c², so the tail sits on the side given by bc - ad.
  const Rational side = f.b * f.c - f.a * f.d;
  if (side >= zero) {
    v.kind = VerdictKind::ConvergesExact;
    v.limit = iota_exact(limit);
  } else if (limit > zero) {
    v.kind = VerdictKind::ConvergesApprox;
    v.limit = GammaValue::approx(limit);
  }
  return v;
}

namespace {

// One-dimensional null space of the rows [j, 1, -t j, -t], if it is that.
std::optional<MobiusForm> fit_mobius(std::span<const Rational> terms) {
  using Row = std::array<Rational, 4>;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Rational j(static_cast<std::int64_t>(i + 1));
    rows.push_back({j, Rational(1), -(terms[i] * j), -terms[i]});
  }
  // Reduced row echelon form.
  std::array<int, 4> pivot_row{-1, -1, -1, -1};
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == Rational(0)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][col];
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][col] == Rational(0)) continue;
      const Rational factor = rows[k][col];
      for (std::size_t c = 0; c < 4; ++c) {
        rows[k][c] = rows[k][c] - factor * rows[r][c];
      }
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  if (r != 3) return std::nullopt;
  std::size_t free_col = 0;
  while (pivot_row[free_col] != -1) ++free_col;
  std::array<Rational, 4> x{};
  x[free_col] = Rational(1);
  for (std::size_t col = 0; col < 4; ++col) {
    if (pivot_row[col] >= 0) {
      x[col] = -rows[static_cast<std::size_t>(pivot_row[col])][free_col];
    }
  }
  MobiusForm f{x[0], x[1], x[2], x[3]};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Rational j(static_cast<std::int64_t>(i + 1));
    if (f.c * j + f.d == Rational(0) || f.at(i + 1) != terms[i]) {
      return std::nullopt;
    }
  }
  return f;
}

}  // namespace

Verdict analyze_prefix(std::span<const Rational> terms) {
  Verdict v;
  if (terms.empty()) return v;
  const std::size_t tail = (terms.size() + 1) / 2;
  const auto tail_begin = terms.end() - static_cast<std::ptrdiff_t>(tail);
  if (std::all_of(tail_begin, terms.end(),
                  [&](const Rational& t) { return t == terms.back(); })) {
    v.kind = VerdictKind::ConvergesExact;
    v.limit = iota_exact(terms.back());
    return v;
  }
  if (terms.size() >= 5) {
    if (auto f = fit_mobius(terms)) {
      v = classify(*f);
      v.exact = false;
      return v;
    }
  }
  return v;
}

Verdict combine(const Verdict& odd, const Verdict& even) {
  Verdict v;
  v.exact = odd.exact && even.exact;
  if (!odd.limit || !even.limit) return v;
  if (*odd.limit == *even.limit) {
    v.kind = odd.kind;
    v.limit = odd.limit;
  } else {
    v.kind = VerdictKind::DivergentAtHorizon;
  }
  return v;
}

}  // namespace glim
