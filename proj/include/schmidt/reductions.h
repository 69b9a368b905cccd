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

// Strategy simplification, the half-real game G* in which I plays
// (ball, one-round strategy) pairs and II plays cell indices, and the
// Baire-space reduction to stems.

#ifndef SCHMIDT_REDUCTIONS_H_
#define SCHMIDT_REDUCTIONS_H_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schmidt/error.h"
#include "schmidt/game.h"
#include "schmidt/simple.h"
#include "schmidt/strategy.h"

namespace schmidt {

// A simplification that cannot be built: zero slack, an oversized probe
// ball, or a Strategy failure at a probe point.
class SimplifyError : public Error {
 public:
  SimplifyError(const std::string& what, std::optional<Point> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::optional<Point>& witness() const { return witness_; }

 private:
  std::optional<Point> witness_;
};

// (r_prev - r_resp) - d(prev, resp) for a legal response to pos. Exact when
// the distance is rational; otherwise a rational lower bound. Throws
// InvalidArgumentError when the response is not legal.
Rat StabilityRadiusFromSlack(const GameParams& params, const Position& pos,
                             const Ball& response);

// The slack of sigma's response to `incoming` after prefix, using the
// strategy's own StabilityRadius when it offers one.
Rat ResponseSlack(const Strategy& sigma, const GameParams& params,
                  const Position& prefix, const Ball& incoming);

struct LineSimplification {
  SimpleOneRound round;
  std::vector<Rat> representatives;  // z_n, the left end of cell n
  Rat cursor;                        // cells partition [a, cursor)
  bool complete = false;             // false when the budget ran out
};

// Greedy sweep of [a, b]: at cursor z, sigma answers B(z, r) (r the radius
// scheduled after prefix), cell [z, z + eps(z)) gets that answer, and the
// cursor advances by eps(z). Throws SimplifyError on zero slack.
LineSimplification SimplifyOnLine(const Strategy& sigma,
                                  const GameParams& params,
                                  const Position& prefix, const Rat& a,
                                  const Rat& b, size_t budget = 100000);

// First-fit disjointification of a cover by open balls U_n: cell n is
// U_n minus the earlier balls, with sigma's answer at the center of U_n.
// Each U_n's radius must not exceed the slack at its center.
SimpleOneRound SimplifyNonTangent(const Strategy& sigma,
                                  const GameParams& params,
                                  const Position& prefix,
                                  const std::vector<Ball>& cover);

// Plays the simplified form of sigma on the line round by round: the
// opponent's center is located in the swept cell partition of its
// admissible interval (of the unit block [k, k+1) for an opening move), and
// sigma's answer at the cell's left end is played. Sigma is consulted along
// the matched run, in which every opponent center is replaced by its cell's
// representative.
class SimplifiedStrategy : public Strategy {
 public:
  SimplifiedStrategy(StrategyPtr sigma, GameParams params,
                     Player player = Player::kII, size_t budget = 100000);

  Ball Next(const Position& pos) const override;
  std::optional<int> CellIndex(const Position& pos) const override;
  std::string Describe() const override;

  // The matched run for pos, of the same length: opponent centers replaced
  // by representatives, own moves recomputed from sigma.
  Position MatchedRun(const Position& pos) const;

 private:
  struct Located {
    Rat z;
    int index = 0;
    Ball response;
  };
  Located Locate(const Position& matched, const Ball& incoming) const;
  // Walks pos; returns the matched run and the last located cell.
  std::pair<Position, std::optional<Located>> Walk(const Position& pos) const;

  StrategyPtr sigma_;
  GameParams params_;
  Player player_;
  size_t budget_;

  // The last walk, resumed when a later position extends it.
  struct WalkState {
    Position source;
    Position matched;
    std::optional<Located> last;
  };
  mutable std::mutex mu_;
  mutable WalkState cache_;
};

// --- The half-real game G* -------------------------------------------------

struct GStarIMove {
  Ball ball;
  SimpleOneRound round;
  friend bool operator==(const GStarIMove&, const GStarIMove&) = default;
};

struct GStarPosition {
  std::vector<GStarIMove> i_moves;
  std::vector<int> indices;  // II's integers
  bool i_to_move() const { return i_moves.size() == indices.size(); }
  friend bool operator==(const GStarPosition&, const GStarPosition&) = default;
};

struct GStarCheck {
  bool legal = true;
  std::string reason;
  std::optional<Point> witness;  // a legal real move for II, or a bad point
};

// The rule checker of G* built over a Schmidt game.
class GStarGame {
 public:
  explicit GStarGame(GameParams params);

  // I's pair: the ball must be the previous round's answer at II's index
  // (or a legal opening), and the round must follow the rules at the ball.
  // Only absolute response templates are accepted, since II's real move is
  // not part of a G* position.
  GStarCheck CheckIMove(const GStarPosition& pos, const GStarIMove& move) const;
  // II's integer must name a cell containing a legal real move.
  GStarCheck CheckIIMove(const GStarPosition& pos, int n) const;

  // The real radius of II's move after I's k-th ball.
  Rat IIRadius(const GStarPosition& pos) const;
  const GameParams& params() const { return params_; }

 private:
  GameParams params_;
};

class GStarStrategy {
 public:
  virtual ~GStarStrategy() = default;
  virtual GStarIMove Next(const GStarPosition& pos) const = 0;
  virtual std::string Describe() const = 0;
};
using GStarStrategyPtr = std::shared_ptr<const GStarStrategy>;
using GStarIndexPlayer = std::function<int(const GStarPosition&)>;

// On the line: from I's ball B(c, s) the round has cells [c - s, c) and
// [c, c + s], answered by the centers of the two halves of II's admissible
// interval. Legal when (1 - alpha)/2 <= alpha (1 - beta).
GStarStrategyPtr BisectionGStar(GameParams params, Ball opening);
// On the line: one cell [c - s, c + s] answered concentrically. Legal when
// 1 - alpha <= alpha (1 - beta).
GStarStrategyPtr SingleCellGStar(GameParams params, Ball opening);

struct GStarTrace {
  GStarPosition pos;
  Outcome outcome;
};

// Alternates sigma_star and the index player for `rounds` I-moves, checking
// the G* rules; adjudicates on I's balls.
GStarTrace PlayGStar(const GStarGame& game, const GStarStrategy& sigma_star,
                     const GStarIndexPlayer& player_ii,
                     const TargetSet& target, size_t rounds);

std::string SerializeGStarTrace(const GStarTrace& trace);
GStarTrace ParseGStarTrace(std::string_view text);

// The real-game strategy for I obtained from sigma_star: play sigma_star's
// ball and locate II's real moves in the current round to produce indices.
class GStarRealI : public Strategy {
 public:
  explicit GStarRealI(GStarStrategyPtr sigma_star);
  Ball Next(const Position& pos) const override;
  std::optional<int> CellIndex(const Position& pos) const override;
  std::string Describe() const override;

  // The G* run aligned with a real position.
  GStarPosition Align(const Position& pos) const;

 private:
  GStarStrategyPtr sigma_star_;
};

// Audit of a real run against its aligned G* run: every II center lies in
// the named cell and every later I ball is the named cell's answer.
struct AlignmentAudit {
  GStarPosition aligned;
  bool cells_ok = true;
  bool responses_ok = true;
  std::string detail;
};
AlignmentAudit AuditAlignment(const GStarRealI& sigma, const Position& pos);

// --- Baire space at alpha = beta = rho = 1/2 -----------------------------

// B(x, 2^-k), k >= 1, is the cylinder of x's first k - 1 coordinates.
std::vector<int64_t> BaireReduce(const Ball& ball);
Ball BaireUnreduce(const std::vector<int64_t>& stem);
// True when `longer` extends `shorter`.
bool StemExtends(const std::vector<int64_t>& longer,
                 const std::vector<int64_t>& shorter);

}  // namespace schmidt

#endif  // SCHMIDT_REDUCTIONS_H_
