// Copyright 2026 The ksctx developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ksctx/rational.hpp"

namespace ksctx {

/// Exact real number of the form sum_d q_d * sqrt(d), with q_d rational and
/// every d a distinct square-free positive integer.
///
/// The representation is canonical: radicands are square-free, coefficients
/// are nonzero, and an empty term map is the number 0. Since the square roots
/// of distinct square-free integers are linearly independent over Q, equality
/// of values coincides with equality of term maps, and is_zero() is an exact
/// test with no epsilon anywhere.
class RadScalar {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  /// Radicands are kept below this bound; operations that would exceed it
  /// throw RadicandTooLarge instead of silently degrading (the square-free
  /// reduction runs trial division, which is only acceptable up to ~10^12).
  static constexpr std::uint64_t kMaxRadicand = 1'000'000'000'000ULL;

  RadScalar() = default;
  RadScalar(int value) : RadScalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  explicit RadScalar(const Rational& value);

  /// coeff * sqrt(radicand), reduced to canonical form. radicand >= 1.
  RadScalar(const Rational& coeff, std::uint64_t radicand);

  /// sqrt(n) as a RadScalar, i.e. g * sqrt(d) where n = g^2 * d.
  static RadScalar sqrt_of(std::uint64_t n);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Zero or exactly one stored term.
  bool is_single_term() const { return terms_.size() <= 1; }

  /// Radicand of the unique term; requires a nonzero single-term value.
  std::uint64_t radicand() const;
  /// Coefficient of the unique term; requires a nonzero single-term value.
  const Rational& coefficient() const;

  /// Exact sign of the real value (-1, 0, +1), decided by is_zero() first and
  /// otherwise by interval refinement of each sqrt(d) with rational endpoints,
  /// widened until the sign of the sum is determined.
  int sign() const;

  double to_double() const;

  const TermMap& terms() const { return terms_; }

  RadScalar operator-() const;
  RadScalar& operator+=(const RadScalar& rhs);
  RadScalar& operator-=(const RadScalar& rhs);
  RadScalar& operator*=(const RadScalar& rhs);

  friend RadScalar operator+(RadScalar lhs, const RadScalar& rhs) { return lhs += rhs; }
  friend RadScalar operator-(RadScalar lhs, const RadScalar& rhs) { return lhs -= rhs; }
  friend RadScalar operator*(RadScalar lhs, const RadScalar& rhs) { return lhs *= rhs; }

  /// Division by a nonzero single-term value c*sqrt(d), computed as
  /// multiplication by sqrt(d)/(c*d). General division is not provided;
  /// multi-term divisors throw NotSupported.
  RadScalar operator/(const RadScalar& divisor) const;

  /// Canonical-form identity; equivalent to (*this - rhs).is_zero().
  bool operator==(const RadScalar& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const RadScalar& rhs) const { return !(*this == rhs); }

  /// Text form, e.g. "1/2 r6 + 1" for sqrt(6)/2 + 1; "r d" is omitted for
  /// d = 1 and terms are listed by descending radicand. "0" for zero.
  std::string to_string() const;

  /// Parses the grammar `[+|-] num[/den] [r d]` with terms joined by +/- and
  /// arbitrary whitespace between tokens. Throws ParseError on bad input.
  static RadScalar parse(std::string_view text);

 private:
  void add_term(std::uint64_t radicand, const Rational& coeff);

  TermMap terms_;
};

/// n = g^2 * d with d square-free; returns {g, d}. Trial division, n >= 1,
/// throws RadicandTooLarge above RadScalar::kMaxRadicand.
std::pair<std::uint64_t, std::uint64_t> square_free_decompose(std::uint64_t n);

}  // namespace ksctx
