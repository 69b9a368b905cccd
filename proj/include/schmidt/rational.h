// Copyright 2026 The schmidt-games Authors. All rights reserved.
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

#ifndef SCHMIDT_RATIONAL_H_
#define SCHMIDT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace schmidt {

// Arbitrary precision rational in canonical form (den > 0, gcd(num,den)=1).
// Every radius, coordinate and parameter in the library is a Rat; nothing is
// ever rounded unless a function says so in its name (SqrtLower etc.).
class Rat {
 public:
  Rat() = default;
  Rat(int n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rat(long n) : q_(n) {}                    // NOLINT
  Rat(long long n) : q_(static_cast<long>(n)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(mpq_class q);
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p" or "p/q" with an optional leading sign. Decimal notation is
  // rejected: all numeric input is exact.
  static Rat Parse(std::string_view text);

  // 2^e for any integer e.
  static Rat PowerOfTwo(long e);

  // "p/q", or "p" when q == 1.
  std::string ToString() const;

  const mpq_class& mpq() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int Sign() const { return sgn(q_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsPositive() const { return Sign() > 0; }
  bool IsNegative() const { return Sign() < 0; }
  bool IsInteger() const { return q_.get_den() == 1; }

  Rat Abs() const;
  Rat Pow(long e) const;  // e may be negative for nonzero values
  mpz_class Floor() const;
  mpz_class Ceil() const;
  double ToDouble() const { return q_.get_d(); }

  // Exact square root when this is the square of a rational.
  std::optional<Rat> Sqrt() const;
  // Rational bounds on sqrt(this) accurate to within 2^-bits (relative to the
  // scale of the value); requires this >= 0.
  Rat SqrtLower(unsigned bits = 64) const;
  Rat SqrtUpper(unsigned bits = 64) const;

  // If this == 2^e exactly, returns e.
  std::optional<long> Log2Exact() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline Rat Min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat Max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace schmidt

#endif  // SCHMIDT_RATIONAL_H_
