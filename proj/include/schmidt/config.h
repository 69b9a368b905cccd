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

// Experiment configuration for the command line: game parameters, space,
// target and strategy descriptors.
//
// Strategy descriptors:
//   concentric | tangent:<v> | maxdist:<anchor> | mindist:<anchor> | avoid
//   random:<seed> | responder:<file> | simple:<file>
// where <v> is a comma list of rationals ("-1", "3/5,4/5") and <anchor> is
// "axis", "0" (the origin) or a bracketed point.

#ifndef SCHMIDT_CONFIG_H_
#define SCHMIDT_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "schmidt/game.h"
#include "schmidt/strategy.h"
#include "schmidt/target.h"

namespace schmidt {

struct ExperimentConfig {
  GameParams params;
  Space space = Space::Line();
  std::string target = "all";
  std::string player_i = "random:1";
  std::string player_ii = "random:2";
  size_t depth = 16;
  uint64_t seed = 7;
  std::optional<Point> opening_center;  // default: the origin

  // I's opening ball for strategies that open: the opening center (or the
  // origin) with radius rho, or 1 when rho is free.
  Ball Opening() const;
  Point Origin() const;
};

// Rational field parsing; failures name `field`.
Rat ParseRatField(std::string_view text, const std::string& field);
Vec ParseVecField(std::string_view text, const std::string& field);

// Throws ParseError naming "I" or "II" for bad descriptors.
StrategyPtr MakeStrategy(std::string_view descriptor,
                         const ExperimentConfig& config, Player who);
// Throws ParseError naming "target".
TargetPtr MakeTarget(const ExperimentConfig& config);

// "key = value" lines ('#' comments). Keys are returned without dashes.
std::map<std::string, std::string> ParseKeyValues(std::string_view text);

// 0 for a certified winner, 3 for Undecided.
int ExitCodeFor(Verdict v);

std::string ReadFile(const std::string& path);

}  // namespace schmidt

#endif  // SCHMIDT_CONFIG_H_
