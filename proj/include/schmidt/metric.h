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

#ifndef SCHMIDT_METRIC_H_
#define SCHMIDT_METRIC_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/rational.h"

namespace schmidt {

enum class SpaceKind { kLine, kEuclid, kBaire };

// A space instance. Euclidean dimension is fixed per instance.
struct Space {
  SpaceKind kind = SpaceKind::kLine;
  int dimension = 1;  // 1 for the line, n >= 2 for R^n, 0 for Baire space

  static Space Line() { return {SpaceKind::kLine, 1}; }
  static Space Euclid(int n);
  static Space Baire() { return {SpaceKind::kBaire, 0}; }

  // "line", "euclid:<n>", "baire".
  static Space Parse(std::string_view text);
  std::string ToString() const;

  friend bool operator==(const Space&, const Space&) = default;
};

// An eventually constant integer sequence: stem followed by tail repeated
// forever. Stored canonically (the stem never ends with the tail value), so
// structural equality is sequence equality.
class BaireSequence {
 public:
  BaireSequence() = default;
  BaireSequence(std::vector<int64_t> stem, int64_t tail);

  int64_t At(size_t i) const { return i < stem_.size() ? stem_[i] : tail_; }
  const std::vector<int64_t>& stem() const { return stem_; }
  int64_t tail() const { return tail_; }

  // Least index where the two sequences differ; nullopt if equal.
  std::optional<size_t> FirstDifference(const BaireSequence& other) const;

  friend bool operator==(const BaireSequence&, const BaireSequence&) = default;

 private:
  std::vector<int64_t> stem_;
  int64_t tail_ = 0;
};

using Vec = std::vector<Rat>;

// A point of the line, of R^n (n >= 2), or of Baire space.
class Point {
 public:
  Point() : coords_{Rat(0)} {}
  static Point Line(Rat x);
  static Point Euclid(Vec coordinates);
  static Point Baire(std::vector<int64_t> stem, int64_t tail = 0);
  static Point Baire(BaireSequence seq);

  SpaceKind kind() const { return kind_; }
  Space space() const;

  // Coordinates for the line (size 1) and R^n.
  const Vec& coords() const;
  const Rat& x() const;  // line coordinate, or first coordinate in R^n
  const BaireSequence& sequence() const;

  // Bracketed form: "[3/4]", "[0,3/10,2/5]", Baire "[1,2;0]" (stem;tail).
  std::string ToString() const;
  static Point Parse(std::string_view text);

  friend bool operator==(const Point&, const Point&) = default;

 private:
  SpaceKind kind_ = SpaceKind::kLine;
  Vec coords_;
  BaireSequence seq_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

// Closed ball B(center, radius), radius > 0.
struct Ball {
  Point center;
  Rat radius;

  Ball() : radius(1) {}
  Ball(Point c, Rat r);

  std::string ToString() const;  // "<center> <radius>"
  friend bool operator==(const Ball&, const Ball&) = default;
};

std::ostream& operator<<(std::ostream& os, const Ball& b);

// Throws SpaceMismatchError unless p and q live in the same space instance.
void RequireSameSpace(const Point& p, const Point& q);

// Exact ordering of d(p, q) against t >= 0. Euclidean distances are never
// materialised: d^2 is compared with t^2.
std::strong_ordering DistCmp(const Point& p, const Point& q, const Rat& t);

// Squared distance; exact in every space.
Rat DistSquared(const Point& p, const Point& q);

// d(p, q) when it is rational (always on the line and in Baire space).
std::optional<Rat> ExactDistance(const Point& p, const Point& q);

// Rational enclosures of d(p, q); equal to the exact distance when rational.
Rat DistanceLowerBound(const Point& p, const Point& q);
Rat DistanceUpperBound(const Point& p, const Point& q);

// Baire metric 2^-(n+1) at first difference n.
Rat BaireDistance(const BaireSequence& x, const BaireSequence& y);

// A closed Baire ball of radius r is the cylinder of its center's first m
// coordinates, m = min{n >= 0 : 2^-(n+1) <= r}. Returns m.
size_t BaireCylinderLength(const Rat& radius);
// The open-ball analogue: least m with 2^-(m+1) < r.
size_t BaireStrictCylinderLength(const Rat& radius);

enum class Nesting { kNested, kTangent, kNotNested };
const char* NestingName(Nesting n);

// Nested iff d(centers) < r_outer - r_inner, Tangent on equality.
Nesting BallNested(const Ball& outer, const Ball& inner);

// Vector arithmetic on line/Euclidean points.
Vec Displacement(const Point& from, const Point& to);  // to - from
Point Translate(const Point& p, const Vec& v);
Vec Scale(const Vec& v, const Rat& s);
Rat Dot(const Vec& a, const Vec& b);
Rat NormSquared(const Vec& v);

// A rational unit vector close to v / |v| (exact when |v| is rational),
// built by inverse stereographic projection so that its squared norm is
// exactly 1. Requires v != 0.
Vec RationalUnitApprox(const Vec& v, unsigned bits = 64);

}  // namespace schmidt

#endif  // SCHMIDT_METRIC_H_
