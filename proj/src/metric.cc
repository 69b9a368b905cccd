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

#include "schmidt/metric.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "schmidt/error.h"
#include "schmidt/text.h"

namespace schmidt {

Space Space::Euclid(int n) {
  if (n < 2) throw InvalidArgumentError("Euclidean dimension must be >= 2");
  return {SpaceKind::kEuclid, n};
}

Space Space::Parse(std::string_view text) {
  if (text == "line") return Line();
  if (text == "baire") return Baire();
  if (text.substr(0, 7) == "euclid:") {
    const std::string n(text.substr(7));
    try {
      size_t used = 0;
      const int dim = std::stoi(n, &used);
      if (used != n.size() || dim < 2) throw std::invalid_argument(n);
      return Euclid(dim);
    } catch (const std::exception&) {
      throw ParseError("space", "bad dimension in \"" + std::string(text) +
                                    "\"");
    }
  }
  throw ParseError("space", "expected line | euclid:<n> | baire, got \"" +
                                std::string(text) + "\"");
}

std::string Space::ToString() const {
  switch (kind) {
    case SpaceKind::kLine: return "line";
    case SpaceKind::kEuclid: return "euclid:" + std::to_string(dimension);
    case SpaceKind::kBaire: return "baire";
  }
  return "?";
}

BaireSequence::BaireSequence(std::vector<int64_t> stem, int64_t tail)
    : stem_(std::move(stem)), tail_(tail) {
  while (!stem_.empty() && stem_.back() == tail_) stem_.pop_back();
}

std::optional<size_t> BaireSequence::FirstDifference(
    const BaireSequence& other) const {
  const size_t n = std::max(stem_.size(), other.stem_.size());
  for (size_t i = 0; i < n; ++i) {
    if (At(i) != other.At(i)) return i;
  }
  if (tail_ != other.tail_) return n;
  return std::nullopt;
}

Point Point::Line(Rat x) {
  Point p;
  p.coords_[0] = std::move(x);
  return p;
}

Point Point::Euclid(Vec coordinates) {
  if (coordinates.size() < 2) {
    throw InvalidArgumentError("Euclidean points need dimension >= 2");
  }
  Point p;
  p.kind_ = SpaceKind::kEuclid;
  p.coords_ = std::move(coordinates);
  return p;
}

Point Point::Baire(std::vector<int64_t> stem, int64_t tail) {
  return Baire(BaireSequence(std::move(stem), tail));
}

Point Point::Baire(BaireSequence seq) {
  Point p;
  p.kind_ = SpaceKind::kBaire;
  p.coords_.clear();
  p.seq_ = std::move(seq);
  return p;
}

Space Point::space() const {
  switch (kind_) {
    case SpaceKind::kLine: return Space::Line();
    case SpaceKind::kEuclid: return Space::Euclid(static_cast<int>(coords_.size()));
    case SpaceKind::kBaire: return Space::Baire();
  }
  return Space::Line();
}

const Vec& Point::coords() const {
  if (kind_ == SpaceKind::kBaire) {
    throw SpaceMismatchError("Baire points have no rational coordinates");
  }
  return coords_;
}

const Rat& Point::x() const { return coords().front(); }

const BaireSequence& Point::sequence() const {
  if (kind_ != SpaceKind::kBaire) {
    throw SpaceMismatchError("not a Baire point");
  }
  return seq_;
}

std::string Point::ToString() const {
  std::ostringstream os;
  os << '[';
  if (kind_ == SpaceKind::kBaire) {
    for (size_t i = 0; i < seq_.stem().size(); ++i) {
      if (i > 0) os << ',';
      os << seq_.stem()[i];
    }
    os << ';' << seq_.tail();
  } else {
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0) os << ',';
      os << coords_[i];
    }
  }
  os << ']';
  return os.str();
}

Point Point::Parse(std::string_view text) {
  const std::string original(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError(original, "points are bracketed coordinate lists");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  const size_t semi = body.find(';');
  if (semi != std::string_view::npos) {
    std::vector<int64_t> stem;
    std::string_view stem_text = body.substr(0, semi);
    if (!stem_text.empty()) {
      for (const std::string& part : Split(stem_text, ',')) {
        stem.push_back(ParseInt64(part, original));
      }
    }
    const int64_t tail = ParseInt64(body.substr(semi + 1), original);
    return Baire(std::move(stem), tail);
  }
  Vec coords;
  for (const std::string& part : Split(body, ',')) {
    coords.push_back(Rat::Parse(part));
  }
  if (coords.empty()) throw ParseError(original, "empty point");
  if (coords.size() == 1) return Line(std::move(coords[0]));
  return Euclid(std::move(coords));
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << p.ToString();
}

Ball::Ball(Point c, Rat r) : center(std::move(c)), radius(std::move(r)) {
  if (!radius.IsPositive()) {
    throw InvalidArgumentError("ball radius must be positive, got " +
                               radius.ToString());
  }
}

std::string Ball::ToString() const {
  return center.ToString() + " " + radius.ToString();
}

std::ostream& operator<<(std::ostream& os, const Ball& b) {
  return os << b.ToString();
}

void RequireSameSpace(const Point& p, const Point& q) {
  if (p.kind() != q.kind() ||
      (p.kind() != SpaceKind::kBaire &&
       p.coords().size() != q.coords().size())) {
    throw SpaceMismatchError("points " + p.ToString() + " and " +
                             q.ToString() + " live in different spaces");
  }
}

Rat BaireDistance(const BaireSequence& x, const BaireSequence& y) {
  const auto n = x.FirstDifference(y);
  if (!n) return Rat(0);
  return Rat::PowerOfTwo(-static_cast<long>(*n) - 1);
}

size_t BaireCylinderLength(const Rat& radius) {
  if (!radius.IsPositive()) throw InvalidArgumentError("radius must be > 0");
  size_t m = 0;
  Rat d(1, 2);
  while (d > radius) {
    d /= Rat(2);
    ++m;
  }
  return m;
}

size_t BaireStrictCylinderLength(const Rat& radius) {
  if (!radius.IsPositive()) throw InvalidArgumentError("radius must be > 0");
  size_t m = 0;
  Rat d(1, 2);
  while (d >= radius) {
    d /= Rat(2);
    ++m;
  }
  return m;
}

Rat DistSquared(const Point& p, const Point& q) {
  RequireSameSpace(p, q);
  if (p.kind() == SpaceKind::kBaire) {
    const Rat d = BaireDistance(p.sequence(), q.sequence());
    return d * d;
  }
  Rat sum(0);
  for (size_t i = 0; i < p.coords().size(); ++i) {
    const Rat diff = p.coords()[i] - q.coords()[i];
    sum += diff * diff;
  }
  return sum;
}

std::strong_ordering DistCmp(const Point& p, const Point& q, const Rat& t) {
  RequireSameSpace(p, q);
  if (t.IsNegative()) {
    throw InvalidArgumentError("distance threshold must be >= 0");
  }
  switch (p.kind()) {
    case SpaceKind::kLine:
      return (p.x() - q.x()).Abs() <=> t;
    case SpaceKind::kBaire:
      return BaireDistance(p.sequence(), q.sequence()) <=> t;
    case SpaceKind::kEuclid:
      return DistSquared(p, q) <=> t * t;
  }
  return std::strong_ordering::equal;
}

std::optional<Rat> ExactDistance(const Point& p, const Point& q) {
  RequireSameSpace(p, q);
  switch (p.kind()) {
    case SpaceKind::kLine: return (p.x() - q.x()).Abs();
    case SpaceKind::kBaire: return BaireDistance(p.sequence(), q.sequence());
    case SpaceKind::kEuclid: return DistSquared(p, q).Sqrt();
  }
  return std::nullopt;
}

Rat DistanceLowerBound(const Point& p, const Point& q) {
  if (auto d = ExactDistance(p, q)) return *d;
  return DistSquared(p, q).SqrtLower();
}

Rat DistanceUpperBound(const Point& p, const Point& q) {
  if (auto d = ExactDistance(p, q)) return *d;
  return DistSquared(p, q).SqrtUpper();
}

const char* NestingName(Nesting n) {
  switch (n) {
    case Nesting::kNested: return "Nested";
    case Nesting::kTangent: return "Tangent";
    case Nesting::kNotNested: return "NotNested";
  }
  return "?";
}

Nesting BallNested(const Ball& outer, const Ball& inner) {
  RequireSameSpace(outer.center, inner.center);
  if (outer.radius < inner.radius) return Nesting::kNotNested;
  const auto c = DistCmp(outer.center, inner.center,
                         outer.radius - inner.radius);
  if (c < 0) return Nesting::kNested;
  if (c == 0) return Nesting::kTangent;
  return Nesting::kNotNested;
}

Vec Displacement(const Point& from, const Point& to) {
  RequireSameSpace(from, to);
  Vec v;
  v.reserve(from.coords().size());
  for (size_t i = 0; i < from.coords().size(); ++i) {
    v.push_back(to.coords()[i] - from.coords()[i]);
  }
  return v;
}

Point Translate(const Point& p, const Vec& v) {
  if (p.kind() == SpaceKind::kBaire || v.size() != p.coords().size()) {
    throw SpaceMismatchError("cannot translate " + p.ToString());
  }
  Vec c = p.coords();
  for (size_t i = 0; i < c.size(); ++i) c[i] += v[i];
  return c.size() == 1 ? Point::Line(c[0]) : Point::Euclid(std::move(c));
}

Vec Scale(const Vec& v, const Rat& s) {
  Vec out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(x * s);
  return out;
}

Rat Dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw SpaceMismatchError("dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat NormSquared(const Vec& v) { return Dot(v, v); }

Vec RationalUnitApprox(const Vec& v, unsigned bits) {
  const Rat n2 = NormSquared(v);
  if (n2.IsZero()) throw InvalidArgumentError("direction of the zero vector");
  if (v.size() == 1) return {Rat(v[0].Sign())};
  if (auto norm = n2.Sqrt()) return Scale(v, Rat(1) / *norm);
  // Project from the pole opposite the dominant axis k: t_j = v_j/(|v|+|v_k|),
  // then map t back onto the sphere exactly.
  size_t k = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i].Abs() > v[k].Abs()) k = i;
  }
  const Rat denom = n2.SqrtLower(bits) + v[k].Abs();
  Vec t(v.size(), Rat(0));
  Rat t2(0);
  for (size_t j = 0; j < v.size(); ++j) {
    if (j == k) continue;
    t[j] = v[j] / denom;
    t2 += t[j] * t[j];
  }
  Vec u(v.size(), Rat(0));
  const Rat inv = Rat(1) / (Rat(1) + t2);
  for (size_t j = 0; j < v.size(); ++j) {
    if (j == k) {
      u[j] = (Rat(1) - t2) * inv * Rat(v[k].Sign());
    } else {
      u[j] = Rat(2) * t[j] * inv;
    }
  }
  return u;
}

}  // namespace schmidt
