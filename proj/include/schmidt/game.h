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

// Rules, positions, runs and adjudication for Schmidt's game, its
// non-tangent variant and the Banach-Mazur game.
//
// Player I moves at even turns, player II at odd turns. In the Schmidt
// variants the radius at turn 2n is (alpha*beta)^n * rho0 and at turn 2n+1 is
// alpha*(alpha*beta)^n * rho0, where rho0 is the radius of I's opening ball
// (fixed in advance when GameParams::rho is set). A move B(x', r') after
// B(x, r) must satisfy r' + d(x, x') <= r; the non-tangent variant demands
// strict inequality. II wins iff the point of intersection lies in the
// target set.

#ifndef SCHMIDT_GAME_H_
#define SCHMIDT_GAME_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/metric.h"
#include "schmidt/target.h"

namespace schmidt {

enum class Variant { kSchmidt, kNonTangentSchmidt, kBanachMazur };

const char* VariantName(Variant v);
Variant ParseVariant(std::string_view text);  // schmidt | non-tangent | bm

struct GameParams {
  Rat alpha{1, 2};
  Rat beta{1, 2};
  std::optional<Rat> rho;  // fixed opening radius: the (alpha,beta,rho) game
  Variant variant = Variant::kSchmidt;

  bool schmidt_like() const { return variant != Variant::kBanachMazur; }
  // Throws InvalidArgumentError unless 0 < alpha, beta < 1 and rho > 0.
  void Validate() const;
};

enum class Player { kI, kII };

inline Player MoverAt(size_t turn) {
  return turn % 2 == 0 ? Player::kI : Player::kII;
}
inline Player Opponent(Player p) {
  return p == Player::kI ? Player::kII : Player::kI;
}
const char* PlayerName(Player p);

// The move history. turn() is the index of the next move.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<Ball> balls) : balls_(std::move(balls)) {}

  size_t turn() const { return balls_.size(); }
  Player mover() const { return MoverAt(turn()); }
  bool empty() const { return balls_.empty(); }
  const Ball& last() const { return balls_.back(); }
  const Ball& operator[](size_t i) const { return balls_[i]; }
  const std::vector<Ball>& balls() const { return balls_; }

  void Push(Ball b) { balls_.push_back(std::move(b)); }
  Position Prefix(size_t n) const;
  Position Then(Ball b) const;

  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Ball> balls_;
};

// (alpha*beta)^n rho0 at turn 2n, alpha*(alpha*beta)^n rho0 at turn 2n+1.
// Throws InvalidArgumentError for the Banach-Mazur variant.
Rat RequiredRadius(const GameParams& params, size_t turn, const Rat& rho0);

// The radius the next mover must use. For an empty position this is the fixed
// rho (nullopt when the opening radius is free). Banach-Mazur positions use
// the alpha/beta schedule as a default shrink law for built-in strategies.
std::optional<Rat> NextRadius(const GameParams& params, const Position& pos);

enum class MoveVerdict {
  kLegal,
  kIllegalRadius,
  kIllegalNesting,
  kIllegalTangent,
};
const char* MoveVerdictName(MoveVerdict v);
MoveVerdict ParseMoveVerdict(std::string_view text);

// Legality of `move` as the next move after `pos`. Depends only on the turn
// index, the last ball and the opening radius.
MoveVerdict LegalMove(const GameParams& params, const Position& pos,
                      const Ball& move);

class Strategy;

enum class Verdict { kWinI, kWinII, kUndecided };
const char* VerdictName(Verdict v);

enum class OutcomeReason {
  kBallInside,    // certificate ball inside T: II wins
  kBallDisjoint,  // certificate ball disjoint from T: I wins
  kLimitPoint,    // a strategy-supplied limit point was queried
  kViolation,     // the loser broke the rules
  kResignation,   // the loser's strategy failed internally
  kDepthExhausted,
};
const char* OutcomeReasonName(OutcomeReason r);

struct Outcome {
  Verdict verdict = Verdict::kUndecided;
  OutcomeReason reason = OutcomeReason::kDepthExhausted;
  // Turn index of the deciding move, or the number of moves played when
  // undecided.
  size_t depth = 0;
  // Certificate ball (or offending ball for violations, or the enclosing
  // ball when undecided).
  std::optional<Ball> ball;
  std::optional<Point> point;  // certified limit point
  std::string note;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct TraceEntry {
  size_t turn = 0;
  Player player = Player::kI;
  Ball ball;
  MoveVerdict verdict = MoveVerdict::kLegal;
  std::optional<int> cell;  // which cell of a simple strategy fired

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Trace {
  std::vector<TraceEntry> moves;
  std::optional<Outcome> outcome;

  // Legal moves only, as a position.
  Position ToPosition() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// Line-delimited records:
//   move <turn> <I|II> <center> <radius> <verdict> [cell=<n>]
//   outcome <verdict> depth=<d> reason=<r> [ball=<center> radius=<r>]
//           [point=<p>] [note=<free text to end of line>]
std::string SerializeTrace(const Trace& trace);
Trace ParseTrace(std::string_view text);

// Alternates moves from the two strategies for at most `max_moves` turns.
// After every legal move the target is asked for a ball certificate; a rule
// violation or a strategy failure ends play with a win for the opponent. If
// no certificate appears, strategy-supplied limit certificates are consulted;
// otherwise the result is Undecided with the enclosing ball.
Trace Play(const GameParams& params, const Strategy& player_i,
           const Strategy& player_ii, const TargetSet& target,
           size_t max_moves);

// The last ball of a non-empty, rule-compliant trace. The intersection point
// of every compliant continuation lies in it.
Ball EnclosingBall(const Trace& trace);

}  // namespace schmidt

#endif  // SCHMIDT_GAME_H_
