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

// Constructive regions used as cells of simple strategies: exact interval
// sets on the line, half-open boxes in R^n, metric balls, and Baire stems.

#ifndef SCHMIDT_REGION_H_
#define SCHMIDT_REGION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/metric.h"

namespace schmidt {

// An interval of the line. A missing bound is infinite (and then open).
struct Interval {
  std::optional<Rat> lo;
  bool lo_closed = true;
  std::optional<Rat> hi;
  bool hi_closed = false;

  static Interval HalfOpen(Rat a, Rat b) { return {a, true, b, false}; }
  static Interval Closed(Rat a, Rat b) { return {a, true, b, true}; }
  static Interval Open(Rat a, Rat b) { return {a, false, b, false}; }
  static Interval All() { return {std::nullopt, false, std::nullopt, false}; }

  bool IsEmpty() const;
  bool Contains(const Rat& x) const;
  // Some member: a closed endpoint when there is one, else an interior point.
  Rat AnyPoint() const;

  // "[a,b)", "(-inf,b]", ...
  std::string ToString() const;
  static Interval Parse(std::string_view text);

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of disjoint intervals, kept sorted and merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval i);
  static IntervalSet FromIntervals(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool IsEmpty() const { return parts_.empty(); }
  bool Contains(const Rat& x) const;
  std::optional<Rat> AnyPoint() const;

  IntervalSet Intersect(const IntervalSet& o) const;
  IntervalSet Unite(const IntervalSet& o) const;
  IntervalSet Complement() const;
  IntervalSet Subtract(const IntervalSet& o) const;

  std::string ToString() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

// One constructive piece of a cell.
struct Atom {
  enum class Kind {
    kInterval,  // line
    kBox,       // R^n, half-open [lo_i, hi_i) in every axis
    kBall,      // any space: d(x, center) < radius, or <= when closed
    kStem,      // Baire space: sequences extending the stem
  };
  Kind kind = Kind::kInterval;
  Interval interval;
  Vec box_lo, box_hi;
  Point center;
  Rat radius{1};
  bool closed = false;
  std::vector<int64_t> stem;

  static Atom MakeInterval(Interval i);
  static Atom MakeBox(Vec lo, Vec hi);
  static Atom MakeBall(Point center, Rat radius, bool closed);
  static Atom MakeStem(std::vector<int64_t> stem);

  bool Contains(const Point& p) const;
  // Exact interval form of a line atom; nullopt for other spaces.
  std::optional<IntervalSet> OnLine() const;

  // "interval [0,1)", "box [0,0] [1,1]", "ball open [0,0] 1/2", "stem 1.2"
  std::string ToString() const;
  // Consumes the tokens of one atom starting at tokens[*pos].
  static Atom Parse(const std::vector<std::string>& tokens, size_t* pos);

  friend bool operator==(const Atom&, const Atom&) = default;
};

// A base atom minus finitely many excluded atoms.
struct Cell {
  Atom base;
  std::vector<Atom> excluded;

  Cell() = default;
  explicit Cell(Atom b, std::vector<Atom> ex = {})
      : base(std::move(b)), excluded(std::move(ex)) {}

  bool Contains(const Point& p) const;
  std::optional<IntervalSet> OnLine() const;

  // "<atom> [minus <atom>]..."
  std::string ToString() const;
  static Cell Parse(const std::vector<std::string>& tokens, size_t* pos);

  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Disjointness { kDisjoint, kOverlap, kUncertified };

// Exact for line cells, boxes and stems; first-fit differences are handled
// structurally; other combinations may be uncertified.
Disjointness CellsDisjoint(const Cell& a, const Cell& b);

}  // namespace schmidt

#endif  // SCHMIDT_REGION_H_
