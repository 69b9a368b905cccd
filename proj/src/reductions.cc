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

#include "schmidt/reductions.h"

#include <sstream>

#include "schmidt/text.h"
#include "schmidt/transfer.h"

namespace schmidt {

Rat StabilityRadiusFromSlack(const GameParams& params, const Position& pos,
                             const Ball& response) {
  if (pos.empty()) {
    throw InvalidArgumentError("slack needs an incoming ball");
  }
  const MoveVerdict v = LegalMove(params, pos, response);
  if (v != MoveVerdict::kLegal) {
    throw InvalidArgumentError(std::string("response is ") +
                               MoveVerdictName(v) + ": " + response.ToString());
  }
  const Ball& prev = pos.last();
  const Rat slack = prev.radius - response.radius -
                    DistanceUpperBound(prev.center, response.center);
  return slack.IsNegative() ? Rat(0) : slack;
}

namespace {

struct Answer {
  Ball response;
  Rat slack;
};

// sigma's answer to `incoming` after prefix and its slack. Failures become
// SimplifyError with the incoming center as witness.
Answer AnswerAt(const Strategy& sigma, const GameParams& params,
                const Position& prefix, const Ball& incoming) {
  const Position pos = prefix.Then(incoming);
  try {
    Answer a{sigma.Next(pos), Rat(0)};
    const std::optional<Rat> own = sigma.StabilityRadius(pos);
    a.slack = own ? *own : StabilityRadiusFromSlack(params, pos, a.response);
    return a;
  } catch (const Error& e) {
    throw SimplifyError(std::string("strategy failed at probe: ") + e.what(),
                        incoming.center);
  }
}

Rat IncomingRadius(const GameParams& params, const Position& prefix) {
  const std::optional<Rat> r = NextRadius(params, prefix);
  if (!r) {
    throw InvalidArgumentError(
        "simplifying the opening round needs a fixed opening radius");
  }
  return *r;
}

}  // namespace

Rat ResponseSlack(const Strategy& sigma, const GameParams& params,
                  const Position& prefix, const Ball& incoming) {
  return AnswerAt(sigma, params, prefix, incoming).slack;
}

LineSimplification SimplifyOnLine(const Strategy& sigma,
                                  const GameParams& params,
                                  const Position& prefix, const Rat& a,
                                  const Rat& b, size_t budget) {
  const Rat r_in = IncomingRadius(params, prefix);
  LineSimplification out;
  out.cursor = a;
  while (out.cursor < b) {
    if (out.round.cells.size() >= budget) return out;
    const Ball incoming(Point::Line(out.cursor), r_in);
    const Answer ans = AnswerAt(sigma, params, prefix, incoming);
    if (!ans.slack.IsPositive()) {
      throw SimplifyError("zero slack at " + out.cursor.ToString(),
                          incoming.center);
    }
    const Rat next = out.cursor + ans.slack;
    out.round.cells.push_back(
        {Cell(Atom::MakeInterval(Interval::HalfOpen(out.cursor, next))),
         ResponseTemplate::Absolute(ans.response)});
    out.representatives.push_back(out.cursor);
    out.cursor = next;
  }
  out.complete = true;
  return out;
}

SimpleOneRound SimplifyNonTangent(const Strategy& sigma,
                                  const GameParams& params,
                                  const Position& prefix,
                                  const std::vector<Ball>& cover) {
  const Rat r_in = IncomingRadius(params, prefix);
  SimpleOneRound round;
  std::vector<Atom> earlier;
  for (const Ball& u : cover) {
    const Answer ans =
        AnswerAt(sigma, params, prefix, Ball(u.center, r_in));
    if (u.radius > ans.slack) {
      throw SimplifyError("probe ball " + u.ToString() +
                              " is larger than the slack " +
                              ans.slack.ToString(),
                          u.center);
    }
    Atom base = Atom::MakeBall(u.center, u.radius, /*closed=*/false);
    round.cells.push_back(
        {Cell(base, earlier), ResponseTemplate::Absolute(ans.response)});
    earlier.push_back(std::move(base));
  }
  return round;
}

// --- SimplifiedStrategy ---------------------------------------------------

SimplifiedStrategy::SimplifiedStrategy(StrategyPtr sigma, GameParams params,
                                       Player player, size_t budget)
    : sigma_(std::move(sigma)),
      params_(std::move(params)),
      player_(player),
      budget_(budget) {}

SimplifiedStrategy::Located SimplifiedStrategy::Locate(
    const Position& matched, const Ball& incoming) const {
  if (incoming.center.kind() != SpaceKind::kLine) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "simplified play is implemented on the line");
  }
  const Rat& x = incoming.center.x();
  Rat cursor;
  std::optional<Rat> end;  // block end for opening moves
  if (matched.empty()) {
    cursor = Rat(mpq_class(x.Floor()));
    end = cursor + 1;
  } else {
    const Ball& before = matched.last();
    cursor = before.center.x() - (before.radius - incoming.radius);
  }
  if (x < cursor) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "incoming center " + x.ToString() +
                              " is not admissible");
  }
  for (int index = 0; static_cast<size_t>(index) < budget_; ++index) {
    Answer ans;
    try {
      ans = AnswerAt(*sigma_, params_, matched,
                     Ball(Point::Line(cursor), incoming.radius));
    } catch (const SimplifyError& e) {
      throw StrategyFailure(StrategyFailureKind::kInternal, e.what());
    }
    if (!ans.slack.IsPositive()) {
      throw StrategyFailure(StrategyFailureKind::kInternal,
                            "zero slack at " + cursor.ToString());
    }
    Rat next = cursor + ans.slack;
    if (end && next > *end) next = *end;
    if (x < next) return {cursor, index, ans.response};
    cursor = next;
  }
  throw StrategyFailure(StrategyFailureKind::kInternal,
                        "cell budget exhausted before reaching " +
                            x.ToString());
}

std::pair<Position, std::optional<SimplifiedStrategy::Located>>
SimplifiedStrategy::Walk(const Position& pos) const {
  WalkState w;
  {
    std::lock_guard<std::mutex> lock(mu_);
    const size_t n = cache_.source.turn();
    if (n <= pos.turn() && pos.Prefix(n) == cache_.source) w = cache_;
  }
  for (size_t t = w.source.turn(); t < pos.turn(); ++t) {
    if (MoverAt(t) == player_) {
      w.matched.Push(w.last ? w.last->response : sigma_->Next(w.matched));
    } else {
      w.last = Locate(w.matched, pos[t]);
      w.matched.Push(Ball(Point::Line(w.last->z), pos[t].radius));
    }
    w.source.Push(pos[t]);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    cache_ = w;
  }
  return {std::move(w.matched), std::move(w.last)};
}

Ball SimplifiedStrategy::Next(const Position& pos) const {
  if (pos.mover() != player_) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "asked to move for the other player");
  }
  if (pos.empty()) return sigma_->Next(pos);
  return Walk(pos).second->response;
}

std::optional<int> SimplifiedStrategy::CellIndex(const Position& pos) const {
  if (pos.empty() || pos.mover() != player_) return std::nullopt;
  return Walk(pos).second->index;
}

std::string SimplifiedStrategy::Describe() const {
  return "simplified(" + sigma_->Describe() + ")";
}

Position SimplifiedStrategy::MatchedRun(const Position& pos) const {
  return Walk(pos).first;
}

// --- G* --------------------------------------------------------------------

GStarGame::GStarGame(GameParams params) : params_(std::move(params)) {
  params_.Validate();
  if (!params_.schmidt_like()) {
    throw InvalidArgumentError("G* is defined over a Schmidt game");
  }
}

Rat GStarGame::IIRadius(const GStarPosition& pos) const {
  if (pos.i_moves.empty()) {
    throw InvalidArgumentError("II has no ball to answer");
  }
  return params_.alpha * pos.i_moves.back().ball.radius;
}

namespace {

bool AllAbsolute(const SimpleOneRound& round) {
  for (const SimpleCell& c : round.cells) {
    if (c.response.center_mode != ResponseTemplate::CenterMode::kAbsolute ||
        c.response.radius_is_factor) {
      return false;
    }
  }
  return true;
}

bool Admissible(const GameParams& params, const Ball& before, const Rat& r,
                const Point& x) {
  const std::strong_ordering c = DistCmp(before.center, x, before.radius - r);
  if (params.variant == Variant::kNonTangentSchmidt) return c < 0;
  return c <= 0;
}

// Points worth trying as a legal center inside `cell`.
std::vector<Point> Candidates(const Atom& base, const Ball& before) {
  std::vector<Point> out{before.center};
  const Point& c = before.center;
  std::vector<Point> anchors;
  switch (base.kind) {
    case Atom::Kind::kBall:
      anchors.push_back(base.center);
      break;
    case Atom::Kind::kBox: {
      Vec mid, clamp;
      for (size_t i = 0; i < base.box_lo.size(); ++i) {
        mid.push_back((base.box_lo[i] + base.box_hi[i]) / 2);
        Rat v = c.coords()[i];
        if (v < base.box_lo[i]) v = base.box_lo[i];
        if (v >= base.box_hi[i]) {
          v = base.box_hi[i] - (base.box_hi[i] - base.box_lo[i]) / 1024;
        }
        clamp.push_back(v);
      }
      anchors.push_back(Point::Euclid(base.box_lo));
      anchors.push_back(Point::Euclid(mid));
      anchors.push_back(Point::Euclid(clamp));
      break;
    }
    case Atom::Kind::kStem: {
      if (c.kind() == SpaceKind::kBaire) {
        std::vector<int64_t> s = base.stem;
        const size_t n = base.stem.size() + c.sequence().stem().size() + 1;
        for (size_t i = s.size(); i < n; ++i) s.push_back(c.sequence().At(i));
        out.push_back(Point::Baire(s, c.sequence().tail()));
        out.push_back(Point::Baire(base.stem, 0));
      }
      return out;
    }
    case Atom::Kind::kInterval:
      break;
  }
  for (const Point& a : anchors) {
    out.push_back(a);
    if (a.kind() == SpaceKind::kBaire) continue;
    const Vec v = Displacement(a, c);
    for (int j = 1; j <= 10; ++j) {
      const Rat t = Rat::PowerOfTwo(-j);
      out.push_back(Translate(a, Scale(v, Rat(1) - t)));
      out.push_back(Translate(a, Scale(v, t)));
    }
  }
  return out;
}

}  // namespace

GStarCheck GStarGame::CheckIMove(const GStarPosition& pos,
                                 const GStarIMove& move) const {
  GStarCheck out;
  auto fail = [&out](std::string why) {
    out.legal = false;
    out.reason = std::move(why);
    return out;
  };
  if (!pos.i_to_move()) return fail("II is to move");
  if (pos.i_moves.empty()) {
    const MoveVerdict v = LegalMove(params_, Position(), move.ball);
    if (v != MoveVerdict::kLegal) {
      return fail(std::string("opening ball is ") + MoveVerdictName(v));
    }
  } else {
    const GStarIMove& prev = pos.i_moves.back();
    const int n = pos.indices.back();
    const Ball expected =
        prev.round.cells[n].response.Instantiate(prev.ball);
    if (!(move.ball == expected)) {
      return fail("ball " + move.ball.ToString() + " is not the answer " +
                  expected.ToString() + " of cell " + std::to_string(n));
    }
  }
  if (!AllAbsolute(move.round)) {
    return fail("round uses relative responses");
  }
  if (move.round.cells.empty()) return fail("round has no cells");
  RoundContext ctx;
  ctx.turn = 2 * pos.i_moves.size() + 2;
  ctx.incoming_radius = params_.alpha * move.ball.radius;
  ctx.before = move.ball;
  const ValidationReport report = ValidateSimple(move.round, params_, ctx);
  if (!report.ok()) {
    out.witness = report.failures.front().witness;
    return fail("round breaks the rules: " + report.failures.front().what);
  }
  return out;
}

GStarCheck GStarGame::CheckIIMove(const GStarPosition& pos, int n) const {
  GStarCheck out;
  auto fail = [&out](std::string why) {
    out.legal = false;
    out.reason = std::move(why);
    return out;
  };
  if (pos.i_to_move()) return fail("I is to move");
  const GStarIMove& last = pos.i_moves.back();
  if (n < 0 || static_cast<size_t>(n) >= last.round.cells.size()) {
    return fail("index " + std::to_string(n) + " names no cell");
  }
  const Cell& cell = last.round.cells[n].cell;
  const Rat r = IIRadius(pos);
  if (const std::optional<IntervalSet> line = cell.OnLine()) {
    const Rat w = last.ball.radius - r;
    const Rat c = last.ball.center.x();
    const bool closed = params_.variant != Variant::kNonTangentSchmidt;
    const IntervalSet meet =
        line->Intersect(IntervalSet(Interval{c - w, closed, c + w, closed}));
    if (const std::optional<Rat> x = meet.AnyPoint()) {
      out.witness = Point::Line(*x);
      return out;
    }
    return fail("cell " + std::to_string(n) +
                " holds no legal move: it meets the admissible interval in " +
                (meet.IsEmpty() ? std::string("nothing") : meet.ToString()));
  }
  for (const Point& x : Candidates(cell.base, last.ball)) {
    if (x.space() == last.ball.center.space() && cell.Contains(x) &&
        Admissible(params_, last.ball, r, x)) {
      out.witness = x;
      return out;
    }
  }
  return fail("no legal move found in cell " + std::to_string(n) +
              " (uncertified)");
}

namespace {

class BisectionStar : public GStarStrategy {
 public:
  BisectionStar(GameParams params, Ball opening, bool single)
      : params_(std::move(params)), opening_(std::move(opening)),
        single_(single) {
    if (opening_.center.kind() != SpaceKind::kLine) {
      throw InvalidArgumentError("this G* strategy plays on the line");
    }
    const Rat one(1);
    const Rat need = single_ ? one - params_.alpha
                             : (one - params_.alpha) / 2;
    if (need > params_.alpha * (one - params_.beta)) {
      throw InvalidArgumentError("parameters too small for this G* strategy");
    }
  }

  GStarIMove Next(const GStarPosition& pos) const override {
    GStarIMove m;
    if (pos.i_moves.empty()) {
      m.ball = opening_;
    } else {
      const GStarIMove& prev = pos.i_moves.back();
      m.ball = prev.round.cells[pos.indices.back()].response.Instantiate(
          prev.ball);
    }
    const Rat& c = m.ball.center.x();
    const Rat& s = m.ball.radius;
    const Rat r = params_.alpha * params_.beta * s;
    if (single_) {
      m.round.cells.push_back(
          {Cell(Atom::MakeInterval(Interval::Closed(c - s, c + s))),
           ResponseTemplate::Absolute(Ball(Point::Line(c), r))});
      return m;
    }
    const Rat h = (Rat(1) - params_.alpha) * s / 2;
    m.round.cells.push_back(
        {Cell(Atom::MakeInterval(Interval::HalfOpen(c - s, c))),
         ResponseTemplate::Absolute(Ball(Point::Line(c - h), r))});
    m.round.cells.push_back(
        {Cell(Atom::MakeInterval(Interval::Closed(c, c + s))),
         ResponseTemplate::Absolute(Ball(Point::Line(c + h), r))});
    return m;
  }

  std::string Describe() const override {
    return single_ ? "single-cell" : "bisection";
  }

 private:
  GameParams params_;
  Ball opening_;
  bool single_;
};

}  // namespace

GStarStrategyPtr BisectionGStar(GameParams params, Ball opening) {
  return std::make_shared<BisectionStar>(std::move(params),
                                         std::move(opening), false);
}

GStarStrategyPtr SingleCellGStar(GameParams params, Ball opening) {
  return std::make_shared<BisectionStar>(std::move(params),
                                         std::move(opening), true);
}

GStarTrace PlayGStar(const GStarGame& game, const GStarStrategy& sigma_star,
                     const GStarIndexPlayer& player_ii,
                     const TargetSet& target, size_t rounds) {
  GStarTrace trace;
  GStarPosition& pos = trace.pos;
  auto end = [&trace](Verdict v, OutcomeReason why, size_t depth,
                      std::optional<Ball> ball, std::string note) {
    trace.outcome.verdict = v;
    trace.outcome.reason = why;
    trace.outcome.depth = depth;
    trace.outcome.ball = std::move(ball);
    trace.outcome.note = std::move(note);
    return trace;
  };
  for (size_t k = 0; k < rounds; ++k) {
    GStarIMove m;
    try {
      m = sigma_star.Next(pos);
    } catch (const Error& e) {
      return end(Verdict::kWinII, OutcomeReason::kResignation, 2 * k,
                 std::nullopt, e.what());
    }
    const GStarCheck ci = game.CheckIMove(pos, m);
    if (!ci.legal) {
      return end(Verdict::kWinII, OutcomeReason::kViolation, 2 * k, m.ball,
                 ci.reason);
    }
    pos.i_moves.push_back(std::move(m));
    int n = -1;
    try {
      n = player_ii(pos);
    } catch (const Error& e) {
      return end(Verdict::kWinI, OutcomeReason::kResignation, 2 * k + 1,
                 std::nullopt, e.what());
    }
    const GStarCheck cii = game.CheckIIMove(pos, n);
    if (!cii.legal) {
      return end(Verdict::kWinI, OutcomeReason::kViolation, 2 * k + 1,
                 std::nullopt, cii.reason);
    }
    pos.indices.push_back(n);
  }
  std::vector<Ball> balls;
  for (const GStarIMove& m : pos.i_moves) balls.push_back(m.ball);
  trace.outcome = AdjudicateBalls(balls, target);
  trace.outcome.depth *= 2;
  return trace;
}

std::string SerializeGStarTrace(const GStarTrace& trace) {
  std::ostringstream os;
  os << "gstar\n";
  const GStarPosition& p = trace.pos;
  for (size_t k = 0; k < p.i_moves.size(); ++k) {
    const GStarIMove& m = p.i_moves[k];
    os << "I " << 2 * k << ' ' << m.ball << " cells "
       << m.round.cells.size() << '\n';
    for (const SimpleCell& c : m.round.cells) {
      os << "cell " << c.cell.ToString() << " -> " << c.response.ToString()
         << '\n';
    }
    if (k < p.indices.size()) {
      os << "II " << 2 * k + 1 << ' ' << p.indices[k] << '\n';
    }
  }
  Trace t;
  t.outcome = trace.outcome;
  os << SerializeTrace(t);
  return os.str();
}

GStarTrace ParseGStarTrace(std::string_view text) {
  const std::vector<std::string> lines = ContentLines(text);
  if (lines.empty() || Trim(lines[0]) != "gstar") {
    throw ParseError("header", "expected 'gstar'");
  }
  GStarTrace trace;
  size_t pending = 0;  // cell lines still owed to the last I move
  bool saw_outcome = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> tok = Tokenize(lines[i]);
    if (tok.empty()) continue;
    if (pending > 0) {
      if (tok[0] != "cell") throw ParseError("cell", "expected a cell line");
      size_t at = 1;
      SimpleCell sc;
      sc.cell = Cell::Parse(tok, &at);
      if (at >= tok.size() || tok[at] != "->") {
        throw ParseError("cell", "expected '->'");
      }
      ++at;
      sc.response = ResponseTemplate::Parse(tok, &at);
      trace.pos.i_moves.back().round.cells.push_back(std::move(sc));
      --pending;
      continue;
    }
    if (tok[0] == "I") {
      if (tok.size() != 6 || tok[4] != "cells") {
        throw ParseError("I", "expected 'I <turn> <center> <radius> cells <n>'");
      }
      GStarIMove m;
      m.ball = Ball(Point::Parse(tok[2]), Rat::Parse(tok[3]));
      pending = static_cast<size_t>(ParseInt64(tok[5], "cells"));
      trace.pos.i_moves.push_back(std::move(m));
    } else if (tok[0] == "II") {
      if (tok.size() != 3) throw ParseError("II", "expected 'II <turn> <n>'");
      trace.pos.indices.push_back(
          static_cast<int>(ParseInt64(tok[2], "index")));
    } else if (tok[0] == "outcome") {
      const Trace t = ParseTrace(lines[i]);
      trace.outcome = *t.outcome;
      saw_outcome = true;
    } else {
      throw ParseError(tok[0], "unknown record");
    }
  }
  if (pending > 0) throw ParseError("cell", "missing cell lines");
  if (!saw_outcome) throw ParseError("outcome", "missing outcome record");
  return trace;
}

GStarRealI::GStarRealI(GStarStrategyPtr sigma_star)
    : sigma_star_(std::move(sigma_star)) {}

GStarPosition GStarRealI::Align(const Position& pos) const {
  GStarPosition g;
  for (size_t t = 0; t < pos.turn(); ++t) {
    if (t % 2 == 0) {
      g.i_moves.push_back(sigma_star_->Next(g));
    } else {
      g.indices.push_back(SimpleRespond(g.i_moves.back().round, pos[t]).first);
    }
  }
  return g;
}

Ball GStarRealI::Next(const Position& pos) const {
  if (pos.mover() != Player::kI) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "asked to move for II");
  }
  if (pos.empty()) return sigma_star_->Next(GStarPosition()).ball;
  const GStarPosition g = Align(pos);
  const GStarIMove& m = g.i_moves.back();
  return m.round.cells[g.indices.back()].response.Instantiate(pos.last());
}

std::optional<int> GStarRealI::CellIndex(const Position& pos) const {
  if (pos.empty() || pos.mover() != Player::kI) return std::nullopt;
  return Align(pos).indices.back();
}

std::string GStarRealI::Describe() const {
  return "real I from G* " + sigma_star_->Describe();
}

AlignmentAudit AuditAlignment(const GStarRealI& sigma, const Position& pos) {
  AlignmentAudit audit;
  try {
    audit.aligned = sigma.Align(pos);
  } catch (const StrategyFailure& e) {
    audit.cells_ok = false;
    audit.detail = e.what();
    return audit;
  }
  const GStarPosition& g = audit.aligned;
  for (size_t t = 1; t < pos.turn(); t += 2) {
    const size_t k = t / 2;
    const Cell& cell = g.i_moves[k].round.cells[g.indices[k]].cell;
    if (!cell.Contains(pos[t].center)) {
      audit.cells_ok = false;
      audit.detail = "turn " + std::to_string(t) + " outside its cell";
    }
    if (t + 1 < pos.turn()) {
      const Ball answer =
          g.i_moves[k].round.cells[g.indices[k]].response.Instantiate(pos[t]);
      if (!(pos[t + 1] == answer) || !(g.i_moves[k + 1].ball == answer)) {
        audit.responses_ok = false;
        audit.detail = "turn " + std::to_string(t + 1) +
                       " is not the named cell's answer";
      }
    }
  }
  return audit;
}

// --- Baire ---------------------------------------------------------------

std::vector<int64_t> BaireReduce(const Ball& ball) {
  if (ball.center.kind() != SpaceKind::kBaire) {
    throw SpaceMismatchError("stem reduction needs a Baire ball");
  }
  const std::optional<long> e = ball.radius.Log2Exact();
  if (!e || *e > -1) {
    throw InvalidArgumentError("radius " + ball.radius.ToString() +
                               " is not 2^-k with k >= 1");
  }
  const size_t len = static_cast<size_t>(-*e - 1);
  std::vector<int64_t> stem(len);
  for (size_t i = 0; i < len; ++i) stem[i] = ball.center.sequence().At(i);
  return stem;
}

Ball BaireUnreduce(const std::vector<int64_t>& stem) {
  return Ball(Point::Baire(stem, 0),
              Rat::PowerOfTwo(-static_cast<long>(stem.size()) - 1));
}

bool StemExtends(const std::vector<int64_t>& longer,
                 const std::vector<int64_t>& shorter) {
  if (longer.size() < shorter.size()) return false;
  for (size_t i = 0; i < shorter.size(); ++i) {
    if (longer[i] != shorter[i]) return false;
  }
  return true;
}

}  // namespace schmidt
