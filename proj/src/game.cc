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

#include "schmidt/game.h"

#include <sstream>

#include "schmidt/error.h"
#include "schmidt/strategy.h"
#include "schmidt/text.h"

namespace schmidt {

const char* VariantName(Variant v) {
  switch (v) {
    case Variant::kSchmidt: return "schmidt";
    case Variant::kNonTangentSchmidt: return "non-tangent";
    case Variant::kBanachMazur: return "bm";
  }
  return "?";
}

Variant ParseVariant(std::string_view text) {
  if (text == "schmidt") return Variant::kSchmidt;
  if (text == "non-tangent" || text == "nontangent") {
    return Variant::kNonTangentSchmidt;
  }
  if (text == "bm" || text == "banach-mazur") return Variant::kBanachMazur;
  throw ParseError("variant", "expected schmidt | non-tangent | bm, got \"" +
                                  std::string(text) + "\"");
}

void GameParams::Validate() const {
  auto in_unit = [](const Rat& x) { return x > Rat(0) && x < Rat(1); };
  if (variant != Variant::kBanachMazur) {
    if (!in_unit(alpha)) {
      throw InvalidArgumentError("alpha must lie in (0,1), got " +
                                 alpha.ToString());
    }
    if (!in_unit(beta)) {
      throw InvalidArgumentError("beta must lie in (0,1), got " +
                                 beta.ToString());
    }
  }
  if (rho && !rho->IsPositive()) {
    throw InvalidArgumentError("rho must be positive, got " + rho->ToString());
  }
}

const char* PlayerName(Player p) { return p == Player::kI ? "I" : "II"; }

Position Position::Prefix(size_t n) const {
  return Position(std::vector<Ball>(balls_.begin(),
                                    balls_.begin() + std::min(n, turn())));
}

Position Position::Then(Ball b) const {
  Position p = *this;
  p.Push(std::move(b));
  return p;
}

Rat RequiredRadius(const GameParams& params, size_t turn, const Rat& rho0) {
  if (!params.schmidt_like()) {
    throw InvalidArgumentError("the Banach-Mazur game has no radius schedule");
  }
  const Rat r = (params.alpha * params.beta).Pow(static_cast<long>(turn / 2)) *
                rho0;
  return turn % 2 == 0 ? r : params.alpha * r;
}

std::optional<Rat> NextRadius(const GameParams& params, const Position& pos) {
  if (pos.empty()) return params.rho;
  if (params.schmidt_like()) {
    return RequiredRadius(params, pos.turn(), pos[0].radius);
  }
  const Rat& factor = pos.mover() == Player::kI ? params.beta : params.alpha;
  return pos.last().radius * factor;
}

const char* MoveVerdictName(MoveVerdict v) {
  switch (v) {
    case MoveVerdict::kLegal: return "Legal";
    case MoveVerdict::kIllegalRadius: return "IllegalRadius";
    case MoveVerdict::kIllegalNesting: return "IllegalNesting";
    case MoveVerdict::kIllegalTangent: return "IllegalTangent";
  }
  return "?";
}

MoveVerdict ParseMoveVerdict(std::string_view text) {
  for (MoveVerdict v :
       {MoveVerdict::kLegal, MoveVerdict::kIllegalRadius,
        MoveVerdict::kIllegalNesting, MoveVerdict::kIllegalTangent}) {
    if (text == MoveVerdictName(v)) return v;
  }
  throw ParseError("verdict", "unknown move verdict \"" + std::string(text) +
                                  "\"");
}

MoveVerdict LegalMove(const GameParams& params, const Position& pos,
                      const Ball& move) {
  if (pos.empty()) {
    if (params.rho && move.radius != *params.rho) {
      return MoveVerdict::kIllegalRadius;
    }
    return MoveVerdict::kLegal;
  }
  const Ball& prev = pos.last();
  if (params.schmidt_like()) {
    if (move.radius != RequiredRadius(params, pos.turn(), pos[0].radius)) {
      return MoveVerdict::kIllegalRadius;
    }
  } else if (move.radius > prev.radius) {
    return MoveVerdict::kIllegalRadius;
  }
  switch (BallNested(prev, move)) {
    case Nesting::kNotNested:
      return MoveVerdict::kIllegalNesting;
    case Nesting::kTangent:
      return params.variant == Variant::kNonTangentSchmidt
                 ? MoveVerdict::kIllegalTangent
                 : MoveVerdict::kLegal;
    case Nesting::kNested:
      return MoveVerdict::kLegal;
  }
  return MoveVerdict::kLegal;
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kWinI: return "WinI";
    case Verdict::kWinII: return "WinII";
    case Verdict::kUndecided: return "Undecided";
  }
  return "?";
}

const char* OutcomeReasonName(OutcomeReason r) {
  switch (r) {
    case OutcomeReason::kBallInside: return "ball-inside";
    case OutcomeReason::kBallDisjoint: return "ball-disjoint";
    case OutcomeReason::kLimitPoint: return "limit-point";
    case OutcomeReason::kViolation: return "violation";
    case OutcomeReason::kResignation: return "resignation";
    case OutcomeReason::kDepthExhausted: return "depth-exhausted";
  }
  return "?";
}

Position Trace::ToPosition() const {
  Position pos;
  for (const TraceEntry& e : moves) {
    if (e.verdict == MoveVerdict::kLegal) pos.Push(e.ball);
  }
  return pos;
}

namespace {

Verdict WinFor(Player p) {
  return p == Player::kI ? Verdict::kWinI : Verdict::kWinII;
}

Verdict ParseVerdict(std::string_view s) {
  for (Verdict v : {Verdict::kWinI, Verdict::kWinII, Verdict::kUndecided}) {
    if (s == VerdictName(v)) return v;
  }
  throw ParseError("outcome", "unknown verdict \"" + std::string(s) + "\"");
}

OutcomeReason ParseReason(std::string_view s) {
  for (OutcomeReason r :
       {OutcomeReason::kBallInside, OutcomeReason::kBallDisjoint,
        OutcomeReason::kLimitPoint, OutcomeReason::kViolation,
        OutcomeReason::kResignation, OutcomeReason::kDepthExhausted}) {
    if (s == OutcomeReasonName(r)) return r;
  }
  throw ParseError("outcome", "unknown reason \"" + std::string(s) + "\"");
}

Player ParsePlayer(std::string_view s) {
  if (s == "I") return Player::kI;
  if (s == "II") return Player::kII;
  throw ParseError("player", "expected I or II, got \"" + std::string(s) + "\"");
}

size_t ParseSize(std::string_view s, const std::string& field) {
  const int64_t v = ParseInt64(s, field);
  if (v < 0) throw ParseError(field, "must be non-negative");
  return static_cast<size_t>(v);
}

}  // namespace

std::string SerializeTrace(const Trace& trace) {
  std::ostringstream os;
  for (const TraceEntry& e : trace.moves) {
    os << "move " << e.turn << ' ' << PlayerName(e.player) << ' '
       << e.ball.center << ' ' << e.ball.radius << ' '
       << MoveVerdictName(e.verdict);
    if (e.cell) os << " cell=" << *e.cell;
    os << '\n';
  }
  if (trace.outcome) {
    const Outcome& o = *trace.outcome;
    os << "outcome " << VerdictName(o.verdict) << " depth=" << o.depth
       << " reason=" << OutcomeReasonName(o.reason);
    if (o.ball) os << " ball=" << o.ball->center << " radius=" << o.ball->radius;
    if (o.point) os << " point=" << *o.point;
    if (!o.note.empty()) os << " note=" << o.note;
    os << '\n';
  }
  return os.str();
}

Trace ParseTrace(std::string_view text) {
  Trace trace;
  for (const std::string& line : ContentLines(text)) {
    if (StartsWith(line, "move ")) {
      const auto tok = Tokenize(line);
      if (tok.size() < 6 || tok.size() > 7) {
        throw ParseError("trace", "malformed move record: " + line);
      }
      TraceEntry e;
      e.turn = ParseSize(tok[1], "turn");
      e.player = ParsePlayer(tok[2]);
      e.ball = Ball(Point::Parse(tok[3]), Rat::Parse(tok[4]));
      e.verdict = ParseMoveVerdict(tok[5]);
      if (tok.size() == 7) {
        if (!StartsWith(tok[6], "cell=")) {
          throw ParseError("trace", "unexpected token " + tok[6]);
        }
        e.cell = static_cast<int>(ParseInt64(tok[6].substr(5), "cell"));
      }
      trace.moves.push_back(std::move(e));
    } else if (StartsWith(line, "outcome ")) {
      Outcome o;
      std::string head = line;
      const size_t note_at = line.find(" note=");
      if (note_at != std::string::npos) {
        o.note = line.substr(note_at + 6);
        head = line.substr(0, note_at);
      }
      const auto tok = Tokenize(head);
      if (tok.size() < 4) throw ParseError("trace", "malformed outcome: " + line);
      o.verdict = ParseVerdict(tok[1]);
      std::optional<Point> ball_center;
      std::optional<Rat> ball_radius;
      for (size_t i = 2; i < tok.size(); ++i) {
        const std::string& t = tok[i];
        if (StartsWith(t, "depth=")) {
          o.depth = ParseSize(t.substr(6), "depth");
        } else if (StartsWith(t, "reason=")) {
          o.reason = ParseReason(t.substr(7));
        } else if (StartsWith(t, "ball=")) {
          ball_center = Point::Parse(t.substr(5));
        } else if (StartsWith(t, "radius=")) {
          ball_radius = Rat::Parse(t.substr(7));
        } else if (StartsWith(t, "point=")) {
          o.point = Point::Parse(t.substr(6));
        } else {
          throw ParseError("trace", "unexpected token " + t);
        }
      }
      if (ball_center.has_value() != ball_radius.has_value()) {
        throw ParseError("trace", "ball= and radius= must appear together");
      }
      if (ball_center) o.ball = Ball(*ball_center, *ball_radius);
      trace.outcome = std::move(o);
    } else {
      throw ParseError("trace", "unrecognised record: " + line);
    }
  }
  return trace;
}

Trace Play(const GameParams& params, const Strategy& player_i,
           const Strategy& player_ii, const TargetSet& target,
           size_t max_moves) {
  params.Validate();
  Trace trace;
  Position pos;
  auto finish = [&](Verdict v, OutcomeReason reason, size_t depth,
                    std::optional<Ball> ball, std::string note) {
    Outcome o;
    o.verdict = v;
    o.reason = reason;
    o.depth = depth;
    o.ball = std::move(ball);
    o.note = std::move(note);
    trace.outcome = std::move(o);
    return trace;
  };

  for (size_t turn = 0; turn < max_moves; ++turn) {
    const Player mover = MoverAt(turn);
    const Strategy& strategy = mover == Player::kI ? player_i : player_ii;
    Ball move;
    std::optional<int> cell;
    try {
      move = strategy.Next(pos);
      cell = strategy.CellIndex(pos);
    } catch (const StrategyFailure& e) {
      // A malformed strategy code breaks the rules; anything else resigns.
      const bool malformed =
          e.kind() == StrategyFailureKind::kNoCell ||
          e.kind() == StrategyFailureKind::kOverlapDetected;
      return finish(WinFor(Opponent(mover)),
                    malformed ? OutcomeReason::kViolation
                              : OutcomeReason::kResignation,
                    turn, std::nullopt, e.what());
    } catch (const std::exception& e) {
      return finish(WinFor(Opponent(mover)), OutcomeReason::kResignation, turn,
                    std::nullopt, e.what());
    }
    MoveVerdict verdict;
    try {
      verdict = LegalMove(params, pos, move);
    } catch (const SpaceMismatchError&) {
      verdict = MoveVerdict::kIllegalNesting;
    }
    trace.moves.push_back({turn, mover, move, verdict, cell});
    if (verdict != MoveVerdict::kLegal) {
      return finish(WinFor(Opponent(mover)), OutcomeReason::kViolation, turn,
                    move, MoveVerdictName(verdict));
    }
    pos.Push(move);
    if (target.BallInside(move) == Truth::kYes) {
      return finish(Verdict::kWinII, OutcomeReason::kBallInside, turn, move,
                    "");
    }
    if (target.BallDisjoint(move) == Truth::kYes) {
      return finish(Verdict::kWinI, OutcomeReason::kBallDisjoint, turn, move,
                    "");
    }
  }

  const std::optional<Ball> enclosing =
      pos.empty() ? std::nullopt : std::optional<Ball>(pos.last());
  std::optional<Point> limit;
  std::string note;
  try {
    std::optional<Point> from_ii = player_ii.LimitCertificate(pos);
    std::optional<Point> from_i = player_i.LimitCertificate(pos);
    if (from_ii && from_i && !(*from_ii == *from_i)) {
      note = "conflicting limit certificates";
    } else {
      limit = from_ii ? from_ii : from_i;
    }
  } catch (const std::exception& e) {
    note = std::string("limit certificate failed: ") + e.what();
  }
  if (limit && enclosing &&
      DistCmp(enclosing->center, *limit, enclosing->radius) > 0) {
    note = "limit certificate outside the enclosing ball";
    limit.reset();
  }
  if (limit) {
    const Membership m = target.PointQuery(*limit);
    if (m != Membership::kUnknown) {
      finish(m == Membership::kIn ? Verdict::kWinII : Verdict::kWinI,
             OutcomeReason::kLimitPoint, pos.turn(), enclosing, "");
      trace.outcome->point = limit;
      return trace;
    }
    note = "limit point membership unknown";
  }
  finish(Verdict::kUndecided, OutcomeReason::kDepthExhausted, pos.turn(),
         enclosing, note);
  if (limit) trace.outcome->point = limit;
  return trace;
}

Ball EnclosingBall(const Trace& trace) {
  const Position pos = trace.ToPosition();
  if (pos.empty()) throw InvalidArgumentError("empty trace has no ball");
  return pos.last();
}

}  // namespace schmidt
