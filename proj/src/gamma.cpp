// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/gamma.hpp"

#include <cctype>

#include "glim/error.hpp"

namespace glim {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::string describe(const GammaValue& x) { return format_gamma(x); }

}  // namespace

GammaValue GammaValue::exact(Rational value) {
  if (value < kZero || value > kOne) {
    throw DomainError("exact point out of [0,1]: " + value.str());
  }
  return GammaValue(GammaKind::Exact, std::move(value));
}

GammaValue GammaValue::approx(Rational value) {
  if (value <= kZero || value > kOne) {
    throw DomainError("approximation point out of (0,1]: " + value.str());
  }
  return GammaValue(GammaKind::Approx, std::move(value));
}

std::strong_ordering operator<=>(const GammaValue& a, const GammaValue& b) {
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  // q⁻ < q° on equal underlying rationals.
  const int ka = a.kind_ == GammaKind::Exact ? 1 : 0;
  const int kb = b.kind_ == GammaKind::Exact ? 1 : 0;
  return ka <=> kb;
}

Ordering compare(const GammaValue& x, const GammaValue& y) {
  const auto c = x <=> y;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

GammaValue mip(const GammaValue& x, const GammaValue& y) {
  if (y > x) {
    throw DomainError("mip: " + describe(y) + " exceeds " + describe(x));
  }
  Rational d = x.value() - y.value();
  if (y.is_exact() && !x.is_exact()) return GammaValue::approx(std::move(d));
  return GammaValue::exact(std::move(d));
}

GammaValue miss(const GammaValue& x, const GammaValue& y) {
  if (y > x) {
    throw DomainError("miss: " + describe(y) + " exceeds " + describe(x));
  }
  if (x == y) return GammaValue::zero();
  Rational d = x.value() - y.value();
  if (x.is_exact() && !y.is_exact()) return GammaValue::exact(std::move(d));
  return GammaValue::approx(std::move(d));
}

bool plus_defined(const GammaValue& x, const GammaValue& y) {
  return x <= mip(GammaValue::one(), y);
}

GammaValue plus(const GammaValue& x, const GammaValue& y) {
  if (!plus_defined(x, y)) {
    throw DomainError("plus: " + describe(x) + " + " + describe(y) +
                      " exceeds 1^o");
  }
  Rational s = x.value() + y.value();
  if (x.is_exact() && y.is_exact()) return GammaValue::exact(std::move(s));
  return GammaValue::approx(std::move(s));
}

GammaValue sum(std::span<const GammaValue> xs) {
  GammaValue acc;
  for (const auto& x : xs) acc = plus(acc, x);
  return acc;
}

Rational gamma_collapse(const GammaValue& x) { return x.value(); }

GammaValue iota_exact(const Rational& r) { return GammaValue::exact(r); }

GammaValue iota_approx(const Rational& r) {
  if (r < kZero || r > kOne) {
    throw DomainError("iota_approx: out of [0,1]: " + r.str());
  }
  if (r == kZero) return GammaValue::zero();
  return GammaValue::approx(r);
}

std::string format_gamma(const GammaValue& x) {
  return x.value().str() + (x.is_exact() ? "^o" : "^-");
}

GammaValue parse_gamma(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  const std::string_view body = text.substr(begin, end - begin);
  const auto caret = body.rfind('^');
  if (caret == std::string_view::npos) {
    throw ParseError("missing '^o' or '^-' tag in '" + std::string(body) + "'",
                     1, begin + body.size() + 1);
  }
  const std::string_view tag = body.substr(caret + 1);
  if (tag != "o" && tag != "-") {
    throw ParseError("unknown tag '^" + std::string(tag) + "'", 1,
                     begin + caret + 1);
  }
  Rational r;
  try {
    r = Rational::parse(body.substr(0, caret));
  } catch (const ParseError&) {
    throw ParseError("malformed rational in '" + std::string(body) + "'", 1,
                     begin + 1);
  }
  try {
    return tag == "o" ? GammaValue::exact(std::move(r))
                      : GammaValue::approx(std::move(r));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, begin + 1);
  }
}

GammaGrid gamma_grid(int k) {
  if (k < 1) throw DomainError("gamma_grid: k must be positive");
  GammaGrid grid;
  grid.k = k;
  grid.points.reserve(2 * static_cast<std::size_t>(k) + 1);
  grid.points.push_back(GammaValue::zero());
  for (int a = 1; a <= k; ++a) {
    grid.points.push_back(GammaValue::approx(Rational(a, k)));
    grid.points.push_back(GammaValue::exact(Rational(a, k)));
  }
  return grid;
}

}  // namespace glim
