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

#include "schmidt/simple.h"

#include <sstream>

#include "schmidt/error.h"
#include "schmidt/text.h"

namespace schmidt {

ResponseTemplate ResponseTemplate::Absolute(Ball b) {
  ResponseTemplate t;
  t.center_mode = CenterMode::kAbsolute;
  t.point = std::move(b.center);
  t.radius = std::move(b.radius);
  return t;
}

ResponseTemplate ResponseTemplate::Offset(Vec offset, Rat radius,
                                          bool factor) {
  ResponseTemplate t;
  t.center_mode = CenterMode::kOffset;
  t.offset = std::move(offset);
  t.radius = std::move(radius);
  t.radius_is_factor = factor;
  return t;
}

ResponseTemplate ResponseTemplate::Scaled(Vec offset, Rat radius,
                                          bool factor) {
  ResponseTemplate t = Offset(std::move(offset), std::move(radius), factor);
  t.center_mode = CenterMode::kScaled;
  return t;
}

Ball ResponseTemplate::Instantiate(const Ball& incoming) const {
  const Rat r = radius_is_factor ? radius * incoming.radius : radius;
  switch (center_mode) {
    case CenterMode::kAbsolute:
      return Ball(point, r);
    case CenterMode::kOffset:
      return Ball(Translate(incoming.center, offset), r);
    case CenterMode::kScaled:
      return Ball(Translate(incoming.center, Scale(offset, incoming.radius)),
                  r);
  }
  throw StrategyFailure(StrategyFailureKind::kInternal, "bad template");
}

std::string ResponseTemplate::ToString() const {
  std::ostringstream os;
  auto vec = [](const Vec& v) {
    return v.size() == 1 ? Point::Line(v[0]) : Point::Euclid(v);
  };
  switch (center_mode) {
    case CenterMode::kAbsolute: os << "center " << point; break;
    case CenterMode::kOffset: os << "offset " << vec(offset); break;
    case CenterMode::kScaled: os << "scaled " << vec(offset); break;
  }
  os << (radius_is_factor ? " factor " : " radius ") << radius;
  return os.str();
}

ResponseTemplate ResponseTemplate::Parse(
    const std::vector<std::string>& tokens, size_t* pos) {
  if (*pos + 4 > tokens.size()) {
    throw ParseError("response", "expected <mode> <point> radius|factor <r>");
  }
  ResponseTemplate t;
  const std::string mode = tokens[(*pos)++];
  const Point p = Point::Parse(tokens[(*pos)++]);
  if (mode == "center") {
    t.center_mode = CenterMode::kAbsolute;
    t.point = p;
  } else if (mode == "offset" || mode == "scaled") {
    if (p.kind() == SpaceKind::kBaire) {
      throw ParseError("response", "offsets need a line or R^n vector");
    }
    t.center_mode = mode == "offset" ? CenterMode::kOffset : CenterMode::kScaled;
    t.offset = p.coords();
  } else {
    throw ParseError("response", "unknown center mode \"" + mode + "\"");
  }
  const std::string rk = tokens[(*pos)++];
  if (rk != "radius" && rk != "factor") {
    throw ParseError("response", "expected radius or factor, got " + rk);
  }
  t.radius_is_factor = rk == "factor";
  t.radius = Rat::Parse(tokens[(*pos)++]);
  if (!t.radius.IsPositive()) {
    throw ParseError("response", "radius must be positive");
  }
  return t;
}

std::pair<int, Ball> SimpleRespond(const SimpleOneRound& s,
                                   const Ball& incoming) {
  int found = -1;
  for (size_t i = 0; i < s.cells.size(); ++i) {
    if (!s.cells[i].cell.Contains(incoming.center)) continue;
    if (found >= 0) {
      throw StrategyFailure(
          StrategyFailureKind::kOverlapDetected,
          incoming.center.ToString() + " lies in cells " +
              std::to_string(found) + " and " + std::to_string(i));
    }
    found = static_cast<int>(i);
  }
  if (found < 0) {
    throw StrategyFailure(StrategyFailureKind::kNoCell,
                          incoming.center.ToString() + " lies in no cell");
  }
  return {found, s.cells[found].response.Instantiate(incoming)};
}

RoundContext RoundContext::At(const Position& pos) {
  if (pos.empty()) {
    throw InvalidArgumentError("a round context needs an incoming ball");
  }
  RoundContext c;
  c.turn = pos.turn();
  c.incoming_radius = pos.last().radius;
  if (pos.turn() >= 2) c.before = pos[pos.turn() - 2];
  return c;
}

std::string ValidationReport::ToString() const {
  if (ok()) return "ok\n";
  std::ostringstream os;
  for (const CellFailure& f : failures) {
    if (f.cell >= 0) os << "cell " << f.cell;
    if (f.other >= 0) os << " and cell " << f.other;
    if (f.cell < 0) os << "round";
    os << ": " << f.what;
    if (f.witness) os << " (witness " << *f.witness << ")";
    os << '\n';
  }
  return os.str();
}

namespace {

// Admissible incoming centers on the line as an interval.
IntervalSet LineAdmissible(const GameParams& params, const RoundContext& ctx) {
  if (!ctx.before) return IntervalSet(Interval::All());
  const Rat w = ctx.before->radius - ctx.incoming_radius;
  const Rat c = ctx.before->center.x();
  const bool strict = params.variant == Variant::kNonTangentSchmidt;
  return IntervalSet(Interval{c - w, !strict, c + w, !strict});
}

// Stem of the admissible incoming centers in Baire space.
std::vector<int64_t> BaireAdmissible(const GameParams& params,
                                     const RoundContext& ctx) {
  if (!ctx.before) return {};
  const Rat w = ctx.before->radius - ctx.incoming_radius;
  const bool strict = params.variant == Variant::kNonTangentSchmidt;
  const size_t m = strict ? BaireStrictCylinderLength(w)
                          : BaireCylinderLength(w);
  std::vector<int64_t> stem(m);
  for (size_t i = 0; i < m; ++i) stem[i] = ctx.before->center.sequence().At(i);
  return stem;
}

std::optional<std::vector<int64_t>> AtomStem(const Atom& a) {
  if (a.kind == Atom::Kind::kStem) return a.stem;
  if (a.kind == Atom::Kind::kBall && a.center.kind() == SpaceKind::kBaire) {
    const size_t m = a.closed ? BaireCylinderLength(a.radius)
                              : BaireStrictCylinderLength(a.radius);
    std::vector<int64_t> stem(m);
    for (size_t i = 0; i < m; ++i) stem[i] = a.center.sequence().At(i);
    return stem;
  }
  return std::nullopt;
}

// The longer of two compatible stems, or nullopt if they conflict.
std::optional<std::vector<int64_t>> MeetStems(const std::vector<int64_t>& a,
                                              const std::vector<int64_t>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return std::nullopt;
  }
  return a.size() >= b.size() ? a : b;
}

void CheckCellLegality(const SimpleCell& sc, int index,
                       const GameParams& params, const RoundContext& ctx,
                       std::vector<CellFailure>* out) {
  const bool strict = params.variant == Variant::kNonTangentSchmidt;
  const ResponseTemplate& t = sc.response;
  const Rat s = t.radius_is_factor ? t.radius * ctx.incoming_radius : t.radius;
  if (params.schmidt_like()) {
    const Rat& f = ctx.turn % 2 == 1 ? params.alpha : params.beta;
    if (s != f * ctx.incoming_radius) {
      out->push_back({index, -1,
                      "response radius " + s.ToString() +
                          " off the schedule " +
                          (f * ctx.incoming_radius).ToString(),
                      std::nullopt});
      return;
    }
  } else if (s > ctx.incoming_radius) {
    out->push_back({index, -1, "response radius exceeds incoming radius",
                    std::nullopt});
    return;
  }
  const Rat bound = ctx.incoming_radius - s;
  const std::optional<IntervalSet> line = sc.cell.base.OnLine();

  if (t.center_mode != ResponseTemplate::CenterMode::kAbsolute) {
    const Vec v = t.center_mode == ResponseTemplate::CenterMode::kScaled
                      ? Scale(t.offset, ctx.incoming_radius)
                      : t.offset;
    const Rat d2 = NormSquared(v);
    const Rat b2 = bound * bound;
    if (d2 > b2 || (strict && d2 == b2)) {
      std::optional<Point> w;
      if (line) {
        if (auto p = line->Intersect(LineAdmissible(params, ctx)).AnyPoint()) {
          w = Point::Line(*p);
        } else {
          return;  // no admissible incoming center
        }
      }
      out->push_back({index, -1,
                      d2 > b2 ? "offset response not nested"
                              : "offset response tangent",
                      w});
    }
    return;
  }

  const Point& y = t.point;
  if (line) {
    if (y.kind() != SpaceKind::kLine) {
      out->push_back({index, -1, "response outside the line", std::nullopt});
      return;
    }
    const IntervalSet cell = line->Intersect(LineAdmissible(params, ctx));
    const Rat c = y.x();
    const IntervalSet bad = IntervalSet::FromIntervals(
        {Interval{std::nullopt, false, c - bound, strict},
         Interval{c + bound, strict, std::nullopt, false}});
    if (auto w = cell.Intersect(bad).AnyPoint()) {
      const bool tangent = DistCmp(Point::Line(*w), y, bound) == 0;
      out->push_back({index, -1,
                      tangent ? "response tangent for an admissible center"
                              : "response not nested for an admissible center",
                      Point::Line(*w)});
    }
    return;
  }

  if (auto stem = AtomStem(sc.cell.base)) {
    auto met = MeetStems(*stem, BaireAdmissible(params, ctx));
    if (!met) return;
    const std::vector<int64_t>& p = *met;
    const size_t m = strict ? BaireStrictCylinderLength(bound)
                            : BaireCylinderLength(bound);
    const BaireSequence& ys = y.sequence();
    for (size_t i = 0; i < std::min(p.size(), m); ++i) {
      if (p[i] != ys.At(i)) {
        out->push_back({index, -1, "stem disagrees with the response center",
                        Point::Baire(p, 0)});
        return;
      }
    }
    if (p.size() < m) {
      std::vector<int64_t> w = p;
      w.push_back(ys.At(p.size()) + 1);
      out->push_back({index, -1, "stem too short for the response",
                      Point::Baire(w, 0)});
    }
    return;
  }

  const Atom& base = sc.cell.base;
  if (base.kind == Atom::Kind::kBox) {
    const size_t n = base.box_lo.size();
    const Rat b2 = bound * bound;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      Vec corner(n);
      bool attained = true;
      for (size_t i = 0; i < n; ++i) {
        const bool hi = (mask >> i) & 1;
        corner[i] = hi ? base.box_hi[i] : base.box_lo[i];
        attained = attained && !hi;
      }
      const Point cp = Point::Euclid(corner);
      const Rat d2 = DistSquared(cp, y);
      if (d2 > b2 || (strict && attained && d2 == b2)) {
        out->push_back({index, -1,
                        attained ? "response fails at a box corner"
                                 : "response fails near a box corner",
                        cp});
        return;
      }
    }
    return;
  }
  if (base.kind == Atom::Kind::kBall) {
    const Rat room = bound - base.radius;
    const auto c = room.IsNegative() ? std::strong_ordering::greater
                                     : DistCmp(base.center, y, room);
    if (c > 0 || (c == 0 && strict && base.closed)) {
      out->push_back({index, -1, "response fails at the far side of the ball",
                      base.center});
    }
    return;
  }
  out->push_back({index, -1, "cell cannot be analysed", std::nullopt});
}

}  // namespace

ValidationReport ValidateSimple(const SimpleOneRound& s,
                                const GameParams& params,
                                const RoundContext& context) {
  ValidationReport report;
  for (size_t i = 0; i < s.cells.size(); ++i) {
    for (size_t j = i + 1; j < s.cells.size(); ++j) {
      const Disjointness d = CellsDisjoint(s.cells[i].cell, s.cells[j].cell);
      if (d == Disjointness::kDisjoint) continue;
      std::optional<Point> w;
      if (d == Disjointness::kOverlap) {
        auto a = s.cells[i].cell.OnLine();
        auto b = s.cells[j].cell.OnLine();
        if (a && b) {
          if (auto p = a->Intersect(*b).AnyPoint()) w = Point::Line(*p);
        }
      }
      report.failures.push_back(
          {static_cast<int>(i), static_cast<int>(j),
           d == Disjointness::kOverlap ? "cells overlap"
                                       : "disjointness not certified",
           w});
    }
  }
  for (size_t i = 0; i < s.cells.size(); ++i) {
    CheckCellLegality(s.cells[i], static_cast<int>(i), params, context,
                      &report.failures);
  }
  return report;
}

std::optional<SimpleOneRound> SimpleStrategy::Round(const IndexSeq& u) const {
  if (auto it = rounds.find(u); it != rounds.end()) return it->second;
  if (generator) return generator(u);
  return default_round;
}

std::string IndexSeqToString(const IndexSeq& u) {
  if (u.empty()) return ".";
  std::string s;
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(u[i]);
  }
  return s;
}

IndexSeq ParseIndexSeq(std::string_view text) {
  IndexSeq u;
  if (text == "." || text.empty()) return u;
  for (const std::string& part : Split(text, '.')) {
    const int64_t v = ParseInt64(part, "round");
    if (v < 0) throw ParseError("round", "cell indices are non-negative");
    u.push_back(static_cast<int>(v));
  }
  return u;
}

std::string SerializeSimple(const SimpleStrategy& s) {
  std::ostringstream os;
  os << "simple-strategy\n";
  os << "player " << PlayerName(s.player) << '\n';
  if (s.claims_rule_following) os << "claims rule-following\n";
  if (s.first_move) os << "first " << *s.first_move << '\n';
  auto emit = [&](const std::string& key, const SimpleOneRound& r) {
    os << "round " << key << '\n';
    for (const SimpleCell& c : r.cells) {
      os << "cell " << c.cell.ToString() << " -> " << c.response.ToString()
         << '\n';
    }
  };
  for (const auto& [u, r] : s.rounds) emit(IndexSeqToString(u), r);
  if (s.default_round) emit("*", *s.default_round);
  return os.str();
}

SimpleStrategy ParseSimple(std::string_view text) {
  SimpleStrategy s;
  const std::vector<std::string> lines = ContentLines(text);
  if (lines.empty() || Trim(lines[0]) != "simple-strategy") {
    throw ParseError("simple", "document must start with simple-strategy");
  }
  SimpleOneRound* current = nullptr;
  for (size_t li = 1; li < lines.size(); ++li) {
    const std::vector<std::string> tok = Tokenize(lines[li]);
    const std::string& head = tok[0];
    if (head == "player" && tok.size() == 2) {
      if (tok[1] == "I") {
        s.player = Player::kI;
      } else if (tok[1] == "II") {
        s.player = Player::kII;
      } else {
        throw ParseError("player", "expected I or II");
      }
    } else if (head == "claims" && tok.size() == 2 &&
               tok[1] == "rule-following") {
      s.claims_rule_following = true;
    } else if (head == "first" && tok.size() == 3) {
      s.first_move = Ball(Point::Parse(tok[1]), Rat::Parse(tok[2]));
    } else if (head == "round" && tok.size() == 2) {
      if (tok[1] == "*") {
        s.default_round = SimpleOneRound{};
        current = &*s.default_round;
      } else {
        current = &s.rounds[ParseIndexSeq(tok[1])];
      }
    } else if (head == "cell") {
      if (!current) throw ParseError("cell", "cell before any round");
      size_t pos = 1;
      SimpleCell sc;
      sc.cell = Cell::Parse(tok, &pos);
      if (pos >= tok.size() || tok[pos] != "->") {
        throw ParseError("cell", "expected -> after the cell descriptor");
      }
      ++pos;
      sc.response = ResponseTemplate::Parse(tok, &pos);
      if (pos != tok.size()) {
        throw ParseError("cell", "trailing tokens after the response");
      }
      current->cells.push_back(std::move(sc));
    } else {
      throw ParseError("simple", "unrecognised line: " + lines[li]);
    }
  }
  if (s.player == Player::kII && s.first_move) {
    throw ParseError("first", "only player I has a first move");
  }
  return s;
}

IndexSeq ReplayIndices(const SimpleStrategy& code, const Position& pos) {
  IndexSeq u;
  const size_t start = code.player == Player::kI ? 2 : 1;
  for (size_t t = start; t < pos.turn(); t += 2) {
    const std::optional<SimpleOneRound> round = code.Round(u);
    if (!round) {
      throw StrategyFailure(StrategyFailureKind::kNoCell,
                            "no round coded for u=" + IndexSeqToString(u));
    }
    u.push_back(SimpleRespond(*round, pos[t - 1]).first);
  }
  return u;
}

namespace {

class CodedStrategy : public Strategy {
 public:
  explicit CodedStrategy(std::shared_ptr<const SimpleStrategy> code)
      : code_(std::move(code)) {}

  Ball Next(const Position& pos) const override {
    return Respond(pos).second;
  }

  std::optional<int> CellIndex(const Position& pos) const override {
    if (pos.empty()) return std::nullopt;
    return Respond(pos).first;
  }

  std::string Describe() const override {
    return std::string("simple strategy for ") + PlayerName(code_->player);
  }

 private:
  std::pair<int, Ball> Respond(const Position& pos) const {
    if (pos.mover() != code_->player) {
      throw StrategyFailure(StrategyFailureKind::kPrecondition,
                            "asked to move for the other player");
    }
    if (pos.empty()) {
      if (!code_->first_move) {
        throw StrategyFailure(StrategyFailureKind::kPrecondition,
                              "no first move coded");
      }
      return {-1, *code_->first_move};
    }
    const IndexSeq u = ReplayIndices(*code_, pos);
    const std::optional<SimpleOneRound> round = code_->Round(u);
    if (!round) {
      throw StrategyFailure(StrategyFailureKind::kNoCell,
                            "no round coded for u=" + IndexSeqToString(u));
    }
    return SimpleRespond(*round, pos.last());
  }

  std::shared_ptr<const SimpleStrategy> code_;
};

}  // namespace

StrategyPtr AsStrategy(std::shared_ptr<const SimpleStrategy> code) {
  return std::make_shared<CodedStrategy>(std::move(code));
}

Trace Arena(std::shared_ptr<const SimpleStrategy> code_i,
            std::shared_ptr<const SimpleStrategy> code_ii,
            const GameParams& params, const TargetSet& target, size_t depth) {
  if (code_i->player != Player::kI || code_ii->player != Player::kII) {
    throw InvalidArgumentError("arena needs a code for I and a code for II");
  }
  const StrategyPtr si = AsStrategy(std::move(code_i));
  const StrategyPtr sii = AsStrategy(std::move(code_ii));
  return Play(params, *si, *sii, target, depth);
}

}  // namespace schmidt
