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

// Built-in strategies. Each one answers for whichever player is to move; a
// strategy that may open the game takes the opening ball at construction.

#ifndef SCHMIDT_BUILTINS_H_
#define SCHMIDT_BUILTINS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/game.h"
#include "schmidt/strategy.h"

namespace schmidt {

// The radius the mover must use next; throws StrategyFailure(kPrecondition)
// on an empty position.
Rat ScheduledRadius(const GameParams& params, const Position& pos);

// Keeps the center and shrinks the radius.
StrategyPtr Concentric(GameParams params, std::optional<Ball> opening = {});

// Moves the center by (r_prev - r_new) * direction. `direction` must be an
// exact unit vector (a sign on the line).
StrategyPtr TangentToward(GameParams params, Vec direction,
                          std::optional<Ball> opening = {});

// Anchor of a radial strategy: a point, or the first coordinate axis of R^n.
struct Anchor {
  std::optional<Point> point;  // nullopt: the x-axis
  static Anchor At(Point p) { return {std::move(p)}; }
  static Anchor Axis() { return {std::nullopt}; }
};

// Moves radially away from the anchor by the full slack. When the center sits
// on the anchor the direction defaults to +1 on the line and to the second
// unit vector in R^n. Irrational radial directions are replaced by a nearby
// exact unit vector.
StrategyPtr MaximizeDistanceFrom(GameParams params, Anchor anchor,
                                 std::optional<Ball> opening = {});
// Moves radially toward the anchor by the full slack, stopping on it.
StrategyPtr MinimizeDistanceFrom(GameParams params, Anchor anchor,
                                 std::optional<Ball> opening = {});

// The first `count` rationals of the open interval (lo, hi), by increasing
// denominator, then increasing numerator.
std::vector<Rat> RationalsInInterval(const Rat& lo, const Rat& hi,
                                     size_t count);

// One avoidance step: from B(c, r) pick B(c + (r - beta r), beta r) unless it
// contains q, else B(c - (r - beta r), beta r).
Ball AvoidStep(const Ball& current, const Rat& beta, const Rat& q);

// Player I on the line: opens with `opening`, then at its k-th later turn
// avoids enumeration[k]. Requires beta < 1/2 (throws InvalidArgumentError).
StrategyPtr AvoidEnumeration(GameParams params, Ball opening,
                             std::vector<Rat> enumeration);

// Which enumeration entry I's move at `turn` avoids (turn >= 2, even).
inline size_t AvoidanceStage(size_t turn) { return turn / 2 - 1; }

// Seeded rule-following play for either player in any space. The move at a
// given turn depends only on (seed, turn, position). Tangent moves are made
// now and then unless the variant forbids them.
struct RandomOptions {
  uint64_t seed = 0;
  int tangent_one_in = 8;       // 0 disables tangent moves
  int max_denominator = 64;     // fraction of the slack used
  std::optional<Rat> opening_radius;  // default: params.rho, else 1
  // Opening centers: line in [-span, span], R^n per coordinate, Baire stems
  // of length <= 3 with entries in [0, span].
  Rat span{2};
  int dimension = 1;            // R^n dimension when space is Euclid
  SpaceKind space = SpaceKind::kLine;
};
StrategyPtr RandomPlayer(GameParams params, RandomOptions options);

// A strategy from a plain function of the position.
StrategyPtr FromFunction(std::function<Ball(const Position&)> next,
                         std::string name);
// Opens with `opening`, then defers to `rest`.
StrategyPtr WithOpening(Ball opening, StrategyPtr rest);

}  // namespace schmidt

#endif  // SCHMIDT_BUILTINS_H_
