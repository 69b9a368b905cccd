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

// Coding a relation R between reals and directions into a target set in R^3.
//
// With r the critical radius, T holds the coded points (x, r cos t, r sin t)
// for (x, t) in R together with everything strictly outside the closed
// cylinder y^2 + z^2 <= r^2. II answers an opening B((x,0,0), rho) by always
// moving tangent toward (0, cos t, sin t); the first answer of any strategy
// for II that wins from such openings therefore names a direction for x.

#ifndef SCHMIDT_CYLINDER_H_
#define SCHMIDT_CYLINDER_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/error.h"
#include "schmidt/game.h"
#include "schmidt/strategy.h"
#include "schmidt/target.h"

namespace schmidt {

// A rational point on the unit circle.
struct RationalAngle {
  Rat cos{1};
  Rat sin{0};

  // Throws InvalidArgumentError unless cos^2 + sin^2 = 1.
  static RationalAngle Make(Rat c, Rat s);
  // ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)).
  static RationalAngle FromSlope(const Rat& t);

  std::string ToString() const;  // "(cos,sin)"
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend auto operator<=>(const RationalAngle& a, const RationalAngle& b) {
    if (auto c = a.cos <=> b.cos; c != 0) return c;
    return a.sin <=> b.sin;
  }
};

struct RelationRow {
  Rat x;
  RationalAngle angle;
  friend bool operator==(const RelationRow&, const RelationRow&) = default;
};

struct RelationTable {
  std::vector<RelationRow> rows;

  bool Contains(const Rat& x, const RationalAngle& a) const;
  // Rows for x, in file order.
  std::vector<RationalAngle> AnglesAt(const Rat& x) const;
  // Distinct x values, in file order.
  std::vector<Rat> Domain() const;

  // "x cos sin" per line, '#' comments.
  static RelationTable Parse(std::string_view text);
  std::string ToString() const;
};

// rho (1 - 2 alpha + alpha beta) / (1 - alpha beta).
Rat CriticalRadius(const Rat& alpha, const Rat& beta, const Rat& rho);

// Throws InvalidArgumentError when the critical radius is not positive.
TargetPtr CylinderTarget(RelationTable rel, const Rat& alpha, const Rat& beta,
                         const Rat& rho);

// II's strategy: tangent toward the row's direction from an on-axis opening
// at a tabled x (first row for x); otherwise maximize the distance from the
// x-axis.
StrategyPtr Responder(RelationTable rel, const Rat& alpha, const Rat& beta,
                      const Rat& rho);

struct DuelRun {
  std::vector<Ball> balls;
  // Distance of each center from the x-axis, starting with the opening.
  std::vector<Rat> distances;
};

// II tangent out along the angle, I tangent back toward the axis, N rounds
// from B((x,0,0), rho).
DuelRun GreedyDuel(const Rat& alpha, const Rat& beta, const Rat& rho,
                   const Rat& x, const RationalAngle& angle, size_t rounds);

// tau's first answer does not have the coded shape.
class NonConformingError : public Error {
 public:
  NonConformingError(Rat x, Ball ball, const std::string& why)
      : Error("non-conforming answer at x=" + x.ToString() + ": " +
              ball.ToString() + " (" + why + ")"),
        x_(std::move(x)),
        ball_(std::move(ball)) {}
  const Rat& x() const { return x_; }
  const Ball& ball() const { return ball_; }

 private:
  Rat x_;
  Ball ball_;
};

// Reads the direction of tau's answer to B((x,0,0), rho) for each x. The
// answer must be B((x, (rho - alpha rho) cos, (rho - alpha rho) sin),
// alpha rho).
std::map<Rat, RationalAngle> ExtractUniformization(const Strategy& tau,
                                                   const std::vector<Rat>& domain,
                                                   const Rat& alpha,
                                                   const Rat& rho);

}  // namespace schmidt

#endif  // SCHMIDT_CYLINDER_H_
