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

#ifndef SCHMIDT_STRATEGY_H_
#define SCHMIDT_STRATEGY_H_

#include <memory>
#include <optional>
#include <string>

#include "schmidt/game.h"

namespace schmidt {

// A deterministic strategy: the next ball is a function of the position
// only. Implementations must be pure so that independent matches may share
// them; any per-match bookkeeping is recomputed from the position.
class Strategy {
 public:
  virtual ~Strategy() = default;

  // The mover's next ball. May throw StrategyFailure, which the engine
  // records as a resignation.
  virtual Ball Next(const Position& pos) const = 0;

  // Largest slack e such that Next(pos) stays legal when the opponent's last
  // center is moved by less than e. nullopt when not provided.
  virtual std::optional<Rat> StabilityRadius(const Position&) const {
    return std::nullopt;
  }

  // Closed-form limit point of continued play from `pos`, when the strategy
  // can certify one.
  virtual std::optional<Point> LimitCertificate(const Position&) const {
    return std::nullopt;
  }

  // Index of the cell that produced Next(pos), for simple strategies.
  virtual std::optional<int> CellIndex(const Position&) const {
    return std::nullopt;
  }

  virtual std::string Describe() const = 0;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

}  // namespace schmidt

#endif  // SCHMIDT_STRATEGY_H_
