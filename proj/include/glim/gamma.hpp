// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glim/rational.hpp"

namespace glim {

/// Which copy of a rational a point of the doubled interval is.
enum class GammaKind {
  Approx,  ///< r⁻, the lower approximation of r; requires 0 < r <= 1.
  Exact,   ///< q°, the exact value q; requires 0 <= q <= 1.
};

enum class Ordering { Less, Equal, Greater };

/// A rational point of the doubled unit interval.
///
/// The carrier is {q° : q ∈ [0,1]} ∪ {r⁻ : r ∈ (0,1]} with q⁻ covered by q°.
/// Values are immutable; every operation returns a fresh value.
class GammaValue {
 public:
  /// 0°.
  GammaValue() = default;

  /// Throws DomainError unless 0 <= value <= 1.
  static GammaValue exact(Rational value);
  /// Throws DomainError unless 0 < value <= 1.
  static GammaValue approx(Rational value);

  static GammaValue zero() { return GammaValue(); }
  static GammaValue one() { return exact(Rational(1)); }

  GammaKind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == GammaKind::Exact; }
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const GammaValue& a, const GammaValue& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const GammaValue& a,
                                          const GammaValue& b);

 private:
  GammaValue(GammaKind kind, Rational value)
      : kind_(kind), value_(std::move(value)) {}

  GammaKind kind_ = GammaKind::Exact;
  Rational value_{0};
};

Ordering compare(const GammaValue& x, const GammaValue& y);

/// x ∸ y, defined when y <= x.
GammaValue mip(const GammaValue& x, const GammaValue& y);

/// x ∼ y = ⋁{x ∸ q° | y < q° <= x}, defined when y <= x; x ∼ x = 0°.
GammaValue miss(const GammaValue& x, const GammaValue& y);

/// Partial addition, defined when x <= 1° ∸ y.
GammaValue plus(const GammaValue& x, const GammaValue& y);

/// True iff plus(x, y) is defined.
bool plus_defined(const GammaValue& x, const GammaValue& y);

/// Left fold of plus starting from 0°. Throws DomainError as soon as a
/// partial sum leaves the domain.
GammaValue sum(std::span<const GammaValue> xs);

/// γ: forgets the tag.
Rational gamma_collapse(const GammaValue& x);

/// ι°: r ↦ r°, right adjoint of γ. Throws DomainError outside [0,1].
GammaValue iota_exact(const Rational& r);

/// ι⁻: 0 ↦ 0°, r ↦ r⁻ otherwise; left adjoint of γ.
GammaValue iota_approx(const Rational& r);

/// Canonical text: `p/q^o` for exact, `p/q^-` for approx, `/1` omitted.
std::string format_gamma(const GammaValue& x);

/// Accepts any rational spelling (e.g. `2/4^o`) and normalizes. Surrounding
/// whitespace is ignored. Throws ParseError with the offending column.
GammaValue parse_gamma(std::string_view text);

/// The finite test universe {0°} ∪ {(a/k)⁻, (a/k)° : 1 <= a <= k}, ascending.
struct GammaGrid {
  int k = 1;
  std::vector<GammaValue> points;
};

/// Throws DomainError when k < 1.
GammaGrid gamma_grid(int k);

}  // namespace glim
