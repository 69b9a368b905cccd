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

#include "doctest.h"
#include "schmidt/builtins.h"
#include "schmidt/error.h"
#include "schmidt/game.h"
#include "schmidt/target.h"
#include "schmidt/verify.h"
#include "test_util.h"

namespace schmidt {
namespace {

using testing::L;
using testing::LB;
using testing::Params;
using testing::R;

TEST_CASE("radius schedule") {
  CHECK(RequiredRadius(Params(R("1/2"), R("1/2")), 3, 1) == R("1/8"));
  CHECK(RequiredRadius(Params(R("1/3"), R("3/7")), 0, R("5/2")) == R("5/2"));
  CHECK(RequiredRadius(Params(R("1/4"), R("1/2")), 2, 2) == R("1/4"));
  CHECK(RequiredRadius(Params(R("1/4"), R("1/2")), 1, 2) == R("1/2"));
  GameParams bm = Params(R("1/2"), R("1/2"));
  bm.variant = Variant::kBanachMazur;
  CHECK_THROWS_AS(RequiredRadius(bm, 1, 1), InvalidArgumentError);
}

TEST_CASE("legal moves") {
  const Position pos({LB(0, 1)});
  const GameParams s = Params(R("1/4"), R("1/2"));
  GameParams nt = s;
  nt.variant = Variant::kNonTangentSchmidt;
  CHECK(LegalMove(s, pos, LB(R("3/4"), R("1/4"))) == MoveVerdict::kLegal);
  CHECK(LegalMove(nt, pos, LB(R("3/4"), R("1/4"))) ==
        MoveVerdict::kIllegalTangent);
  CHECK(LegalMove(s, pos, LB(R("1/2"), R("1/8"))) ==
        MoveVerdict::kIllegalRadius);
  CHECK(LegalMove(s, pos, LB(R("4/5"), R("1/4"))) ==
        MoveVerdict::kIllegalNesting);
  CHECK(LegalMove(nt, pos, LB(R("1/2"), R("1/4"))) == MoveVerdict::kLegal);
  // The fixed opening radius.
  CHECK(LegalMove(Params(R("1/4"), R("1/2"), Rat(2)), Position(), LB(0, 1)) ==
        MoveVerdict::kIllegalRadius);
  CHECK(LegalMove(s, Position(), LB(0, 7)) == MoveVerdict::kLegal);
}

TEST_CASE("Banach-Mazur only shrinks") {
  GameParams bm = Params(R("1/2"), R("1/2"));
  bm.variant = Variant::kBanachMazur;
  const Position pos({LB(0, 1)});
  CHECK(LegalMove(bm, pos, LB(R("9/10"), R("1/10"))) == MoveVerdict::kLegal);
  CHECK(LegalMove(bm, pos, LB(0, R("3/2"))) == MoveVerdict::kIllegalRadius);
  CHECK(LegalMove(bm, pos, LB(1, R("1/10"))) == MoveVerdict::kIllegalNesting);
  CHECK(NextRadius(bm, pos.Then(LB(0, R("1/2")))) == R("1/4"));
}

TEST_CASE("maximising the distance from the origin wins at once") {
  const GameParams p = Params(R("1/4"), R("1/2"), Rat(2));
  const TargetPtr t = RayUnionQ();
  const StrategyPtr ii = MaximizeDistanceFrom(p, Anchor::At(L(0)));
  for (const char* c : {"0", "1/3", "-7/5", "9/10"}) {
    const StrategyPtr i = Concentric(p, LB(R(c), 2));
    const Trace tr = Play(p, *i, *ii, *t, 10);
    REQUIRE(tr.outcome);
    CHECK(tr.outcome->verdict == Verdict::kWinII);
    CHECK(tr.outcome->reason == OutcomeReason::kBallInside);
    CHECK(tr.outcome->depth == 1);
    const Ball& b = *tr.outcome->ball;
    CHECK(b.radius == R("1/2"));
    CHECK((b.center.x().Abs() - b.radius) >= 1);
  }
  const Trace tr = Play(p, *Concentric(p, LB(0, 2)), *ii, *t, 10);
  CHECK((tr.outcome->ball->center.x().Abs() - R("1/2")) == 1);
}

TEST_CASE("opposite tangent strategies converge to -1/3") {
  const GameParams p = Params(R("1/2"), R("1/2"), Rat(1));
  const StrategyPtr i = TangentToward(p, {Rat(1)}, LB(0, 1));
  const StrategyPtr ii = TangentToward(p, {Rat(-1)});
  const Trace tr = Play(p, *i, *ii, *Rationals(), 42);
  REQUIRE(tr.outcome);
  CHECK(tr.outcome->verdict == Verdict::kUndecided);
  CHECK(tr.moves[1].ball == LB(R("-1/2"), R("1/2")));
  CHECK(tr.moves[2].ball == LB(R("-1/4"), R("1/4")));
  const Ball e = EnclosingBall(tr);
  CHECK(e.radius == R("1/4").Pow(20) * R("1/2"));
  CHECK(DistCmp(e.center, L(R("-1/3")), e.radius) != std::strong_ordering::greater);
}

TEST_CASE("a rule violation loses") {
  const GameParams p = Params(R("1/2"), R("1/2"), Rat(1));
  const StrategyPtr ii = Concentric(p);
  const StrategyPtr i = FromFunction(
      [](const Position& pos) {
        return pos.empty() ? LB(0, 1) : LB(5, pos.last().radius / 2);
      },
      "wanderer");
  const Trace tr = Play(p, *i, *ii, *Rationals(), 10);
  REQUIRE(tr.outcome);
  CHECK(tr.outcome->verdict == Verdict::kWinII);
  CHECK(tr.outcome->reason == OutcomeReason::kViolation);
  CHECK(tr.outcome->depth == 2);
  CHECK(tr.moves.back().verdict == MoveVerdict::kIllegalNesting);
  CHECK(tr.ToPosition().turn() == 2);
}

TEST_CASE("a throwing strategy resigns") {
  const GameParams p = Params(R("1/2"), R("1/2"), Rat(1));
  const StrategyPtr ii = FromFunction(
      [](const Position&) -> Ball { throw std::runtime_error("boom"); },
      "broken");
  const Trace tr = Play(p, *Concentric(p, LB(0, 1)), *ii, *Rationals(), 10);
  CHECK(tr.outcome->verdict == Verdict::kWinI);
  CHECK(tr.outcome->reason == OutcomeReason::kResignation);
}

TEST_CASE("enclosing ball of one move") {
  Trace tr;
  tr.moves.push_back({0, Player::kI, LB(0, 2), MoveVerdict::kLegal, {}});
  CHECK(EnclosingBall(tr) == LB(0, 2));
  CHECK_THROWS(EnclosingBall(Trace()));
}

TEST_CASE("traces round trip") {
  const GameParams p = Params(R("1/3"), R("2/5"), Rat(1));
  RandomOptions a, b;
  a.seed = 1;
  b.seed = 2;
  const Trace tr =
      Play(p, *RandomPlayer(p, a), *RandomPlayer(p, b), *Rationals(), 12);
  CHECK(ParseTrace(SerializeTrace(tr)) == tr);
  CHECK_THROWS_AS(ParseTrace("move 0 I [0]"), ParseError);
}

// Random rule-following play in several variants.
std::vector<Trace> RandomTraces(int n) {
  std::vector<Trace> out;
  RatSampler s(21);
  for (int i = 0; i < n; ++i) {
    const Variant v =
        i % 3 == 0 ? Variant::kNonTangentSchmidt : Variant::kSchmidt;
    const GameParams p =
        Params(s.Open(0, 1, 8), s.Open(0, 1, 8), s.Uniform(R("1/2"), 3, 4), v);
    RandomOptions a, b;
    a.seed = s.Bits();
    b.seed = s.Bits();
    if (v == Variant::kNonTangentSchmidt) a.tangent_one_in = b.tangent_one_in = 0;
    out.push_back(Play(p, *RandomPlayer(p, a), *RandomPlayer(p, b),
                       *ClosedInterval(Rat(-1), Rat(1)), 14));
  }
  return out;
}

TEST_CASE("radii follow the schedule and enclosing balls shrink") {
  for (const Trace& tr : RandomTraces(200)) {
    const Position pos = tr.ToPosition();
    REQUIRE_FALSE(pos.empty());
    for (size_t k = 1; k < pos.turn(); ++k) {
      const Rat ab = pos[k].radius / pos[0].radius;
      const Rat want = k % 2 == 0
                           ? (pos[2].radius / pos[0].radius).Pow(long(k / 2))
                           : pos[1].radius / pos[0].radius *
                                 (k >= 2 ? (pos[2].radius / pos[0].radius)
                                               .Pow(long(k / 2))
                                         : Rat(1));
      CHECK(ab == want);
      CHECK(BallNested(pos[k - 1], pos[k]) != Nesting::kNotNested);
    }
  }
}

TEST_CASE("certificates are sound") {
  const TargetPtr t = ClosedInterval(Rat(-1), Rat(1));
  for (const Trace& tr : RandomTraces(200)) {
    const Outcome& o = *tr.outcome;
    if (o.reason == OutcomeReason::kBallInside) {
      CHECK(o.verdict == Verdict::kWinII);
      CHECK(t->BallInside(*o.ball) == Truth::kYes);
      CHECK(t->PointQuery(o.ball->center) == Membership::kIn);
    }
    if (o.reason == OutcomeReason::kBallDisjoint) {
      CHECK(o.verdict == Verdict::kWinI);
      CHECK(t->BallDisjoint(*o.ball) == Truth::kYes);
      CHECK(t->PointQuery(o.ball->center) == Membership::kOut);
    }
    CHECK(o.reason != OutcomeReason::kViolation);
  }
}

TEST_CASE("legality depends only on the last ball and the turn") {
  RatSampler s(22);
  const GameParams p = Params(R("1/3"), R("1/2"), Rat(1));
  for (int i = 0; i < 300; ++i) {
    RandomOptions a, b;
    a.seed = s.Bits();
    b.seed = s.Bits();
    const StrategyPtr sa = RandomPlayer(p, a), sb = RandomPlayer(p, b);
    Position pos;
    const size_t len = static_cast<size_t>(s.Int(2, 7));
    for (size_t k = 0; k < len; ++k) pos.Push((k % 2 ? sb : sa)->Next(pos));
    // Same length, same last ball, different history.
    std::vector<Ball> other = pos.balls();
    for (size_t k = 0; k + 1 < other.size(); ++k) {
      other[k].center = L(other[k].center.x() + s.Uniform(-5, 5));
    }
    const Position alt(other);
    const Ball move = (len % 2 ? sb : sa)->Next(pos);
    const Ball wild = LB(s.Uniform(-2, 2), NextRadius(p, pos).value());
    CHECK(LegalMove(p, pos, move) == LegalMove(p, alt, move));
    CHECK(LegalMove(p, pos, wild) == LegalMove(p, alt, wild));
  }
}

}  // namespace
}  // namespace schmidt
