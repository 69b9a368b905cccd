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

#include "schmidt/config.h"

#include <fstream>
#include <sstream>

#include "schmidt/builtins.h"
#include "schmidt/cylinder.h"
#include "schmidt/simple.h"
#include "schmidt/text.h"

namespace schmidt {

Point ExperimentConfig::Origin() const {
  switch (space.kind) {
    case SpaceKind::kLine:
      return Point::Line(0);
    case SpaceKind::kEuclid:
      return Point::Euclid(Vec(space.dimension, Rat(0)));
    case SpaceKind::kBaire:
      return Point::Baire({}, 0);
  }
  return Point();
}

Ball ExperimentConfig::Opening() const {
  return Ball(opening_center ? *opening_center : Origin(),
              params.rho.value_or(Rat(1)));
}

Rat ParseRatField(std::string_view text, const std::string& field) {
  try {
    return Rat::Parse(text);
  } catch (const Error& e) {
    throw ParseError(field, e.what());
  }
}

Vec ParseVecField(std::string_view text, const std::string& field) {
  Vec v;
  for (const std::string& part : Split(text, ',')) {
    v.push_back(ParseRatField(Trim(part), field));
  }
  return v;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

Anchor ParseAnchor(std::string_view text, const ExperimentConfig& cfg,
                   const std::string& field) {
  if (text == "axis") return Anchor::Axis();
  if (text == "0" || text == "origin") return Anchor::At(cfg.Origin());
  try {
    return Anchor::At(Point::Parse(text));
  } catch (const Error& e) {
    throw ParseError(field, e.what());
  }
}

}  // namespace

StrategyPtr MakeStrategy(std::string_view descriptor,
                         const ExperimentConfig& cfg, Player who) {
  const std::string field = PlayerName(who);
  const std::string d(Trim(descriptor));
  const size_t colon = d.find(':');
  const std::string kind = d.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : d.substr(colon + 1);
  std::optional<Ball> opening;
  if (who == Player::kI) opening = cfg.Opening();
  const GameParams& p = cfg.params;
  if (kind == "concentric") return Concentric(p, opening);
  if (kind == "tangent") {
    if (arg.empty()) throw ParseError(field, "tangent needs a direction");
    return TangentToward(p, ParseVecField(arg, field), opening);
  }
  if (kind == "maxdist" || kind == "mindist") {
    const Anchor a = ParseAnchor(arg.empty() ? "0" : arg, cfg, field);
    return kind == "maxdist" ? MaximizeDistanceFrom(p, a, opening)
                             : MinimizeDistanceFrom(p, a, opening);
  }
  if (kind == "avoid") {
    if (who != Player::kI) throw ParseError(field, "avoid plays I");
    return AvoidEnumeration(p, cfg.Opening(),
                            RationalsInInterval(-1, 1, cfg.depth / 2 + 1));
  }
  if (kind == "random") {
    RandomOptions o;
    try {
      o.seed = arg.empty() ? cfg.seed
                           : static_cast<uint64_t>(ParseInt64(arg, field));
    } catch (const ParseError& e) {
      throw ParseError(field, e.what());
    }
    o.space = cfg.space.kind;
    o.dimension = cfg.space.dimension;
    if (cfg.opening_center) {
      return WithOpening(cfg.Opening(), RandomPlayer(p, o));
    }
    return RandomPlayer(p, o);
  }
  if (kind == "responder") {
    if (!p.rho) throw ParseError("rho", "the responder needs a fixed rho");
    RelationTable rel;
    try {
      rel = RelationTable::Parse(ReadFile(arg));
    } catch (const ParseError& e) {
      throw ParseError(field, e.what());
    }
    return Responder(std::move(rel), p.alpha, p.beta, *p.rho);
  }
  if (kind == "simple") {
    SimpleStrategy code;
    try {
      code = ParseSimple(ReadFile(arg));
    } catch (const ParseError& e) {
      throw ParseError(field, e.what());
    }
    return AsStrategy(std::make_shared<const SimpleStrategy>(std::move(code)));
  }
  throw ParseError(field, "unknown strategy descriptor \"" + d + "\"");
}

TargetPtr MakeTarget(const ExperimentConfig& cfg) {
  const GameParams p = cfg.params;
  auto factory = [p](const std::string& path) {
    if (!p.rho) throw ParseError("rho", "cylinder targets need a fixed rho");
    return CylinderTarget(RelationTable::Parse(ReadFile(path)), p.alpha,
                          p.beta, *p.rho);
  };
  try {
    return ParseTarget(cfg.target, factory);
  } catch (const ParseError& e) {
    throw ParseError("target", e.what());
  }
}

std::map<std::string, std::string> ParseKeyValues(std::string_view text) {
  std::map<std::string, std::string> out;
  int line = 0;
  for (const std::string& l : ContentLines(text)) {
    ++line;
    const size_t eq = l.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line),
                       "expected key = value");
    }
    std::string key(Trim(std::string_view(l).substr(0, eq)));
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    if (key.empty()) {
      throw ParseError("config line " + std::to_string(line), "empty key");
    }
    out[key] = std::string(Trim(std::string_view(l).substr(eq + 1)));
  }
  return out;
}

int ExitCodeFor(Verdict v) { return v == Verdict::kUndecided ? 3 : 0; }

}  // namespace schmidt
