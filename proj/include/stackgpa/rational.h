// Copyright 2026 The stackgpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STACKGPA_RATIONAL_H_
#define STACKGPA_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace stackgpa {

using BigInt = mpz_class;

// Exact arbitrary-precision fraction, always kept in lowest terms with a
// positive denominator. This is the only number type used by the solvers.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT: implicit by design of the arithmetic
  Rational(int64_t numerator, int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const mpq_class& value);

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace; q > 0.
  static Rational Parse(std::string_view text);

  // Exact conversion; every finite double is a dyadic rational.
  static Rational FromDouble(double value);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  bool IsInteger() const { return value_.get_den() == 1; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Abs(const Rational& r);
Rational Pow(const Rational& base, unsigned exponent);

BigInt Lcm(const BigInt& a, const BigInt& b);
// LCM of all denominators; 1 for an empty span.
BigInt DenominatorLcm(std::span<const Rational> values);

}  // namespace stackgpa

#endif  // STACKGPA_RATIONAL_H_
