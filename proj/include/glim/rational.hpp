// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace glim {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// so two equal rationals always have identical numerator and denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `denominator` is zero.
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  /// Accepts `p`, `p/q` and a leading `-`; throws ParseError otherwise.
  /// Non-canonical input such as `2/4` is normalized.
  static Rational parse(std::string_view text);

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// The denominator as an integer, provided it fits.
  std::uint64_t denominator_u64() const;

  const mpq_class& raw() const noexcept { return value_; }

  /// Canonical form: `p` when the denominator is one, else `p/q`.
  std::string str() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

/// floor(r) and ceil(r) as integers; throw DomainError if out of int64 range.
std::int64_t floor_to_int(const Rational& r);
std::int64_t ceil_to_int(const Rational& r);

}  // namespace glim

template <>
struct std::hash<glim::Rational> {
  std::size_t operator()(const glim::Rational& r) const { return r.hash(); }
};
