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

// Simple one-round strategies: finitely many disjoint cells, each with a
// single response ball, and strategies built from a family of such rounds
// indexed by the cells fired so far.

#ifndef SCHMIDT_SIMPLE_H_
#define SCHMIDT_SIMPLE_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schmidt/game.h"
#include "schmidt/region.h"
#include "schmidt/strategy.h"

namespace schmidt {

// A response ball, possibly relative to the incoming ball B(x, r).
struct ResponseTemplate {
  enum class CenterMode {
    kAbsolute,  // center = point
    kOffset,    // center = x + offset
    kScaled,    // center = x + r * offset
  };
  CenterMode center_mode = CenterMode::kAbsolute;
  Point point;
  Vec offset;
  bool radius_is_factor = false;  // radius = factor * r
  Rat radius{1};

  static ResponseTemplate Absolute(Ball b);
  static ResponseTemplate Offset(Vec offset, Rat radius, bool factor = false);
  static ResponseTemplate Scaled(Vec offset, Rat radius, bool factor = false);

  Ball Instantiate(const Ball& incoming) const;

  // "center <p> radius <r>", "offset <v> factor <f>", ...
  std::string ToString() const;
  static ResponseTemplate Parse(const std::vector<std::string>& tokens,
                                size_t* pos);

  friend bool operator==(const ResponseTemplate&,
                         const ResponseTemplate&) = default;
};

struct SimpleCell {
  Cell cell;
  ResponseTemplate response;
  friend bool operator==(const SimpleCell&, const SimpleCell&) = default;
};

struct SimpleOneRound {
  std::vector<SimpleCell> cells;
  friend bool operator==(const SimpleOneRound&, const SimpleOneRound&) = default;
};

// The unique cell containing incoming.center and its instantiated response.
// Throws StrategyFailure(kNoCell) or StrategyFailure(kOverlapDetected).
std::pair<int, Ball> SimpleRespond(const SimpleOneRound& s,
                                   const Ball& incoming);

// The class of positions a round is used at. By positionality the turn, the
// radius of the incoming ball and the ball before it are enough.
struct RoundContext {
  size_t turn = 1;  // turn index of the response
  Rat incoming_radius{1};
  std::optional<Ball> before;  // ball preceding the incoming move, if any

  // Context for the response at pos.turn(), pos non-empty.
  static RoundContext At(const Position& pos);
};

struct CellFailure {
  int cell = -1;   // -1 for round-level failures
  int other = -1;  // second cell for disjointness failures
  std::string what;
  std::optional<Point> witness;
};

struct ValidationReport {
  std::vector<CellFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string ToString() const;
};

// Checks pairwise disjointness and, for every cell, legality of the response
// for every admissible incoming center in the cell. Interval cells are decided
// exactly; boxes by their corners; balls by their far points; stems exactly.
ValidationReport ValidateSimple(const SimpleOneRound& s,
                                const GameParams& params,
                                const RoundContext& context);

// Index sequences u name the rounds s_u.
using IndexSeq = std::vector<int>;
using RoundGenerator = std::function<SimpleOneRound(const IndexSeq&)>;

struct SimpleStrategy {
  Player player = Player::kII;
  std::optional<Ball> first_move;  // player I only
  std::map<IndexSeq, SimpleOneRound> rounds;
  std::optional<SimpleOneRound> default_round;  // used for any unlisted u
  RoundGenerator generator;                     // consulted before default
  bool claims_rule_following = false;

  // The round s_u, or nullopt when the code does not define it.
  std::optional<SimpleOneRound> Round(const IndexSeq& u) const;
};

// "<i.j.k>" or "." for the empty sequence.
std::string IndexSeqToString(const IndexSeq& u);
IndexSeq ParseIndexSeq(std::string_view text);

// Document format, one directive per line ('#' comments allowed):
//   simple-strategy
//   player I|II
//   claims rule-following
//   first <center> <radius>
//   round <u>|*
//   cell <cell> -> <response>
// Generators are not serialised.
std::string SerializeSimple(const SimpleStrategy& s);
SimpleStrategy ParseSimple(std::string_view text);

// The coded strategy as a Strategy. CellIndex reports the cell that fired.
StrategyPtr AsStrategy(std::shared_ptr<const SimpleStrategy> code);
// Index sequence of the cells fired by the coded player in pos.
IndexSeq ReplayIndices(const SimpleStrategy& code, const Position& pos);

// Plays two coded strategies against each other.
Trace Arena(std::shared_ptr<const SimpleStrategy> code_i,
            std::shared_ptr<const SimpleStrategy> code_ii,
            const GameParams& params, const TargetSet& target, size_t depth);

}  // namespace schmidt

#endif  // SCHMIDT_SIMPLE_H_
