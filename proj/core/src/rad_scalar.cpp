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

#include "ksctx/rad_scalar.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

#include "ksctx/errors.hpp"

namespace ksctx {

std::pair<std::uint64_t, std::uint64_t> square_free_decompose(std::uint64_t n) {
  if (n == 0) throw Error("square_free_decompose: zero radicand");
  if (n > RadScalar::kMaxRadicand)
    throw RadicandTooLarge("radicand " + std::to_string(n) + " exceeds 10^12");
  std::uint64_t outside = 1;
  std::uint64_t inside = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned exp = 0;
    while (n % p == 0) {
      n /= p;
      ++exp;
    }
    for (unsigned i = 0; i < exp / 2; ++i) outside *= p;
    if (exp % 2 != 0) inside *= p;
  }
  inside *= n;  // leftover prime factor, if any
  return {outside, inside};
}

RadScalar::RadScalar(const Rational& value) {
  if (value != 0) terms_.emplace(1, value);
}

RadScalar::RadScalar(const Rational& coeff, std::uint64_t radicand) {
  if (coeff == 0) return;
  auto [outside, inside] = square_free_decompose(radicand);
  terms_.emplace(inside, coeff * outside);
}

RadScalar RadScalar::sqrt_of(std::uint64_t n) { return RadScalar(Rational(1), n); }

bool RadScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::uint64_t RadScalar::radicand() const {
  if (terms_.size() != 1) throw Error("radicand(): not a nonzero single-term value");
  return terms_.begin()->first;
}

const Rational& RadScalar::coefficient() const {
  if (terms_.size() != 1) throw Error("coefficient(): not a nonzero single-term value");
  return terms_.begin()->second;
}

void RadScalar::add_term(std::uint64_t radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RadScalar RadScalar::operator-() const {
  RadScalar out;
  for (const auto& [d, q] : terms_) out.terms_.emplace(d, -q);
  return out;
}

RadScalar& RadScalar::operator+=(const RadScalar& rhs) {
  for (const auto& [d, q] : rhs.terms_) add_term(d, q);
  return *this;
}

RadScalar& RadScalar::operator-=(const RadScalar& rhs) {
  for (const auto& [d, q] : rhs.terms_) add_term(d, -q);
  return *this;
}

RadScalar& RadScalar::operator*=(const RadScalar& rhs) {
  RadScalar out;
  for (const auto& [d1, q1] : terms_) {
    for (const auto& [d2, q2] : rhs.terms_) {
      // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd(d1,d2);
      // the product of the coprime square-free cofactors is square-free.
      std::uint64_t g = std::gcd(d1, d2);
      std::uint64_t a = d1 / g;
      std::uint64_t b = d2 / g;
      if (b != 0 && a > kMaxRadicand / b)
        throw RadicandTooLarge("radical product exceeds 10^12");
      out.add_term(a * b, q1 * q2 * g);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RadScalar RadScalar::operator/(const RadScalar& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero");
  if (!divisor.is_single_term())
    throw NotSupported("division only supported for single-term divisors");
  std::uint64_t d = divisor.radicand();
  const Rational& c = divisor.coefficient();
  // 1/(c*sqrt(d)) = sqrt(d)/(c*d)
  return *this * RadScalar(Rational(1) / (c * d), d);
}

int RadScalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sign_of(terms_.begin()->second);
  // Interval refinement: bracket each sqrt(d) by s/2^k <= sqrt(d) <= (s+1)/2^k
  // with s = floor(sqrt(d * 4^k)), and widen k until the enclosure of the sum
  // excludes zero. Terminates because the value is nonzero here.
  for (unsigned k = 16;; k *= 2) {
    Rational lo = 0;
    Rational hi = 0;
    BigInt scale = BigInt(1) << k;
    for (const auto& [d, q] : terms_) {
      Rational root_lo;
      Rational root_hi;
      if (d == 1) {
        root_lo = root_hi = 1;
      } else {
        BigInt s = boost::multiprecision::sqrt(BigInt(d) << (2 * k));
        root_lo = Rational(s, scale);
        root_hi = Rational(s + 1, scale);
      }
      if (q > 0) {
        lo += q * root_lo;
        hi += q * root_hi;
      } else {
        lo += q * root_hi;
        hi += q * root_lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double RadScalar::to_double() const {
  double acc = 0.0;
  for (const auto& [d, q] : terms_)
    acc += ksctx::to_double(q) * std::sqrt(static_cast<double>(d));
  return acc;
}

std::string RadScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending radicand, so "1/2 r6 + 1" reads radical part first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, q] = *it;
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    out += ksctx::to_string(static_cast<Rational>(boost::multiprecision::abs(q)));
    if (d != 1) out += " r" + std::to_string(d);
  }
  return out;
}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw ParseError("expected integer", 1, pos + 1);
    return BigInt(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

RadScalar RadScalar::parse(std::string_view text) {
  Lexer lex{text};
  if (lex.eof()) throw ParseError("empty radical expression", 1, 1);
  RadScalar result;
  bool first = true;
  while (!lex.eof()) {
    int sgn = 1;
    if (lex.accept('+')) {
      // explicit leading plus or term separator
    } else if (lex.accept('-')) {
      sgn = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", 1, lex.pos + 1);
    }
    BigInt num = lex.integer();
    BigInt den = 1;
    if (lex.accept('/')) {
      den = lex.integer();
      if (den == 0) throw ParseError("zero denominator", 1, lex.pos);
    }
    std::uint64_t rad = 1;
    if (lex.accept('r')) {
      BigInt d = lex.integer();
      if (d < 1 || d > BigInt(kMaxRadicand))
        throw ParseError("radicand out of range", 1, lex.pos);
      rad = d.convert_to<std::uint64_t>();
    }
    result += RadScalar(Rational(sgn * num, den), rad);
    first = false;
  }
  return result;
}

}  // namespace ksctx
