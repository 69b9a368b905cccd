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

#include "schmidt/rational.h"

#include <cctype>
#include <string>

#include "schmidt/error.h"

namespace schmidt {

const char* StrategyFailureKindName(StrategyFailureKind kind) {
  switch (kind) {
    case StrategyFailureKind::kNoCell: return "NoCell";
    case StrategyFailureKind::kOverlapDetected: return "OverlapDetected";
    case StrategyFailureKind::kSnapFailure: return "SnapFailure";
    case StrategyFailureKind::kPrecondition: return "Precondition";
    case StrategyFailureKind::kInternal: return "Internal";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw InvalidArgumentError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgumentError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool IsSignedInteger(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool IsUnsignedInteger(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rat Rat::Parse(std::string_view text) {
  const std::string original(text);
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!IsSignedInteger(text)) {
      throw ParseError(original, "expected an exact rational \"p\" or \"p/q\"");
    }
    return Rat(ParseInteger(text), mpz_class(1));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!IsSignedInteger(num) || !IsUnsignedInteger(den)) {
    throw ParseError(original, "expected an exact rational \"p\" or \"p/q\"");
  }
  mpz_class d = ParseInteger(den);
  if (d == 0) throw ParseError(original, "zero denominator");
  return Rat(ParseInteger(num), d);
}

Rat Rat::PowerOfTwo(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rat(mpz_class(1), p) : Rat(p, mpz_class(1));
}

std::string Rat::ToString() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::Abs() const { return Rat(mpq_class(abs(q_))); }

Rat Rat::Pow(long e) const {
  if (e < 0) {
    if (IsZero()) throw InvalidArgumentError("0 raised to a negative power");
    return Rat(1) / Pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

mpz_class Rat::Floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::Ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::optional<Rat> Rat::Sqrt() const {
  if (IsNegative()) return std::nullopt;
  // Canonical form means num and den are both perfect squares iff the
  // value is a rational square.
  if (mpz_perfect_square_p(q_.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q_.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Rat(n, d);
}

namespace {

// floor(sqrt(num * den * 4^bits)) / (den * 2^bits) and its ceiling variant.
Rat SqrtBound(const mpq_class& q, unsigned bits, bool upper) {
  if (sgn(q) < 0) throw InvalidArgumentError("square root of a negative");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  mpz_class radicand = q.get_num() * q.get_den() * scale * scale;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  if (upper && root * root != radicand) root += 1;
  return Rat(root, q.get_den() * scale);
}

}  // namespace

Rat Rat::SqrtLower(unsigned bits) const {
  if (auto exact = Sqrt()) return *exact;
  return SqrtBound(q_, bits, /*upper=*/false);
}

Rat Rat::SqrtUpper(unsigned bits) const {
  if (auto exact = Sqrt()) return *exact;
  return SqrtBound(q_, bits, /*upper=*/true);
}

std::optional<long> Rat::Log2Exact() const {
  if (!IsPositive()) return std::nullopt;
  const mpz_class& n = q_.get_num();
  const mpz_class& d = q_.get_den();
  if (n == 1 && mpz_popcount(d.get_mpz_t()) == 1) {
    return -static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
  }
  if (d == 1 && mpz_popcount(n.get_mpz_t()) == 1) {
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
  }
  return std::nullopt;
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.IsZero()) throw InvalidArgumentError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

}  // namespace schmidt
