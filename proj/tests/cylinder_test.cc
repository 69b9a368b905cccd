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
#include "schmidt/cylinder.h"
#include "schmidt/error.h"
#include "schmidt/verify.h"
#include "test_util.h"

namespace schmidt {
namespace {

using testing::EB;
using testing::Params;
using testing::R;

RationalAngle Ang(const char* c, const char* s) {
  return RationalAngle::Make(R(c), R(s));
}

RelationTable OneRow(const Rat& x, const RationalAngle& a) {
  RelationTable rel;
  rel.rows.push_back({x, a});
  return rel;
}

RelationTable ThreeRows() {
  return RelationTable::Parse(
      "# x cos sin\n"
      "0 3/5 4/5\n"
      "1 3/5 4/5\n"
      "1 4/5 3/5\n");
}

TEST_CASE("rational angles") {
  CHECK(Ang("3/5", "4/5").ToString() == "(3/5,4/5)");
  CHECK_THROWS_AS(Ang("1/2", "1/2"), InvalidArgumentError);
  RatSampler s(60);
  for (int i = 0; i < 100; ++i) {
    const RationalAngle a = RationalAngle::FromSlope(s.Uniform(-9, 9, 30));
    CHECK(a.cos * a.cos + a.sin * a.sin == 1);
  }
  CHECK(RationalAngle::FromSlope(R("1/2")) == Ang("3/5", "4/5"));
}

TEST_CASE("relation tables") {
  const RelationTable rel = ThreeRows();
  CHECK(rel.rows.size() == 3);
  CHECK(rel.Domain() == std::vector<Rat>{0, 1});
  CHECK(rel.AnglesAt(1) == std::vector<RationalAngle>{Ang("3/5", "4/5"), Ang("4/5", "3/5")});
  CHECK(rel.Contains(0, Ang("3/5", "4/5")));
  CHECK_FALSE(rel.Contains(0, Ang("4/5", "3/5")));
  CHECK(RelationTable::Parse(rel.ToString()).rows == rel.rows);
  CHECK_THROWS_AS(RelationTable::Parse("0 1/2 1/2\n"), ParseError);
  CHECK_THROWS_AS(RelationTable::Parse("0 1\n"), ParseError);
}

TEST_CASE("critical radius") {
  CHECK(CriticalRadius(R("1/2"), R("1/2"), 1) == R("1/3"));
  CHECK(CriticalRadius(R("1/4"), R("1/2"), 7) == 5);
  CHECK(CriticalRadius(R("2/3"), R("1/2"), 1) == 0);
  CHECK_THROWS_AS(CylinderTarget(ThreeRows(), R("2/3"), R("1/2"), 1),
                  InvalidArgumentError);
}

TEST_CASE("the coded target") {
  const TargetPtr t = CylinderTarget(OneRow(0, Ang("3/5", "4/5")), R("1/2"), R("1/2"), 1);
  CHECK(t->PointQuery(Point::Euclid({0, R("1/5"), R("4/15")})) == Membership::kIn);
  CHECK(t->PointQuery(Point::Euclid({1, R("1/5"), R("4/15")})) == Membership::kOut);
  CHECK(t->PointQuery(Point::Euclid({0, 0, 0})) == Membership::kOut);
  CHECK(t->PointQuery(Point::Euclid({0, R("1/3"), 0})) == Membership::kOut);
  CHECK(t->PointQuery(Point::Euclid({0, R("1/3"), R("1/100")})) == Membership::kIn);
  CHECK(t->BallInside(EB({0, 0, 1}, R("1/4"))) == Truth::kYes);
  CHECK(t->BallInside(EB({0, 0, 1}, R("2/3"))) == Truth::kNo);
  CHECK(t->BallDisjoint(EB({5, 0, 0}, R("1/4"))) == Truth::kYes);
  // Holds the coded point.
  CHECK(t->BallDisjoint(EB({0, 0, 0}, R("1/3"))) == Truth::kNo);
  CHECK(t->BallDisjoint(EB({0, 0, 1}, R("1/4"))) == Truth::kNo);
  CHECK_THROWS_AS(t->PointQuery(Point::Line(0)), SpaceMismatchError);
}

TEST_CASE("the coded target is sound on random balls") {
  const RelationTable rel = ThreeRows();
  const TargetPtr t = CylinderTarget(rel, R("1/2"), R("1/2"), 1);
  const Rat r2 = R("1/9");
  RatSampler s(61);
  for (int i = 0; i < 2000; ++i) {
    const Ball b = EB({s.Uniform(-1, 2, 4), s.Uniform(-1, 1, 16), s.Uniform(-1, 1, 16)},
                      s.Uniform(R("1/64"), R("1/2"), 16));
    // Sample points of the ball along the radial direction and axes.
    for (int j = 0; j < 4; ++j) {
      Vec d = {s.Uniform(-1, 1, 8), s.Uniform(-1, 1, 8), s.Uniform(-1, 1, 8)};
      const Rat n2 = NormSquared(d);
      if (n2 > 1 || n2.IsZero()) continue;
      const Point p = Translate(b.center, Scale(d, b.radius));
      const Vec& q = p.coords();
      const bool outside = q[1] * q[1] + q[2] * q[2] > r2;
      if (t->BallInside(b) == Truth::kYes) CHECK(t->PointQuery(p) == Membership::kIn);
      if (t->BallDisjoint(b) == Truth::kYes) {
        CHECK(t->PointQuery(p) == Membership::kOut);
        CHECK_FALSE(outside);
      }
    }
  }
}

TEST_CASE("the responder") {
  const Rat a = R("1/2"), b = R("1/2"), rho = 1;
  const StrategyPtr ii = Responder(OneRow(5, Ang("3/5", "4/5")), a, b, rho);
  CHECK(ii->Next(Position({EB({5, 0, 0}, 1)})) == EB({5, R("3/10"), R("2/5")}, R("1/2")));
  // Off the axis: radially outward by the slack.
  CHECK(ii->Next(Position({EB({5, R("1/10"), 0}, 1)})) ==
        EB({5, R("6/10"), 0}, R("1/2")));
  // Not in the table.
  CHECK(ii->Next(Position({EB({4, R("1/10"), 0}, 1)})) ==
        EB({4, R("6/10"), 0}, R("1/2")));
  const Ball absent = ii->Next(Position({EB({4, 0, 0}, 1)}));
  CHECK(absent.radius == R("1/2"));
  CHECK(absent.center.coords()[0] == 4);
  const Vec& v = absent.center.coords();
  CHECK(v[1] * v[1] + v[2] * v[2] == R("1/4"));
}

TEST_CASE("greedy duel") {
  const DuelRun two = GreedyDuel(R("1/2"), R("1/2"), 1, 0, Ang("3/5", "4/5"), 2);
  CHECK(two.distances == std::vector<Rat>{0, R("1/2"), R("1/4"), R("3/8"), R("5/16")});
  CHECK(two.distances[4] == R("1/3") * (1 - R("1/16")));
  CHECK(GreedyDuel(R("1/2"), R("1/2"), 1, 0, Ang("3/5", "4/5"), 0).distances ==
        std::vector<Rat>{0});
  const DuelRun one = GreedyDuel(R("1/4"), R("1/2"), 7, 3, Ang("4/5", "-3/5"), 1);
  CHECK(one.distances.back() == R("35/8"));
  CHECK(one.distances[1] == R("21/4"));
}

TEST_CASE("the duel sums the critical series") {
  RatSampler s(62);
  for (int i = 0; i < 15; ++i) {
    const Rat a = s.Open(0, 1, 12), b = s.Open(0, 1, 12);
    if (!CriticalRadius(a, b, 1).IsPositive()) {
      --i;
      continue;
    }
    const Rat rho = s.Uniform(R("1/2"), 5, 6), x = s.Uniform(-3, 3, 6);
    const RationalAngle ang = RationalAngle::FromSlope(s.Uniform(-3, 3, 6));
    const DuelRun run = GreedyDuel(a, b, rho, x, ang, 20);
    REQUIRE(run.distances.size() == 41);
    for (long k = 0; k <= 20; ++k) {
      CHECK(run.distances[2 * k] == CriticalRadius(a, b, rho) * (1 - (a * b).Pow(k)));
    }
    for (const Ball& ball : run.balls) CHECK(ball.center.coords()[0] == x);
  }
}

TEST_CASE("responder moves are legal") {
  const Rat a = R("1/2"), b = R("1/2"), rho = 1;
  const GameParams p = Params(a, b, rho);
  RatSampler s(63);
  size_t moves = 0;
  for (int i = 0; i < 500; ++i) {
    RelationTable rel;
    for (int k = 0; k < 3; ++k) {
      rel.rows.push_back({Rat(s.Int(-2, 2)), RationalAngle::FromSlope(s.Uniform(-4, 4, 8))});
    }
    RandomOptions o;
    o.seed = s.Bits();
    o.space = SpaceKind::kEuclid;
    o.dimension = 3;
    StrategyPtr si = RandomPlayer(p, o);
    if (i % 2 == 0) si = WithOpening(EB({rel.rows[0].x, 0, 0}, rho), si);
    const Trace tr = Play(p, *si, *Responder(rel, a, b, rho),
                          *CylinderTarget(rel, a, b, rho), 40);
    for (const TraceEntry& m : tr.moves) {
      if (m.player == Player::kII) {
        CHECK(m.verdict == MoveVerdict::kLegal);
        ++moves;
      }
    }
    CHECK(tr.outcome->reason != OutcomeReason::kViolation);
  }
  // Without adjudication, so no game stops early.
  for (int i = 0; i < 500; ++i) {
    RelationTable rel = OneRow(Rat(s.Int(-2, 2)), RationalAngle::FromSlope(s.Uniform(-4, 4, 8)));
    RandomOptions o;
    o.seed = s.Bits();
    o.space = SpaceKind::kEuclid;
    o.dimension = 3;
    o.span = R("1/2");
    const StrategyPtr si = WithOpening(EB({rel.rows[0].x, 0, 0}, rho), RandomPlayer(p, o));
    const StrategyPtr ii = Responder(rel, a, b, rho);
    Position pos;
    for (int k = 0; k < 20; ++k) {
      const Ball m = (k % 2 ? ii : si)->Next(pos);
      const MoveVerdict v = LegalMove(p, pos, m);
      CHECK(v == MoveVerdict::kLegal);
      if (k % 2) ++moves;
      pos.Push(m);
    }
  }
  CHECK(moves >= 5000);
}

TEST_CASE("extraction") {
  const Rat a = R("1/2"), rho = 1;
  const RelationTable rel = ThreeRows();
  const std::map<Rat, RationalAngle> f =
      ExtractUniformization(*Responder(rel, a, R("1/2"), rho), rel.Domain(), a, rho);
  REQUIRE(f.size() == 2);
  CHECK(f.at(0) == Ang("3/5", "4/5"));
  CHECK(rel.Contains(1, f.at(1)));
  try {
    ExtractUniformization(*Concentric(Params(a, R("1/2"), rho)), {Rat(0), Rat(1)}, a, rho);
    FAIL("expected a non-conforming answer");
  } catch (const NonConformingError& e) {
    CHECK(e.x() == 0);
    CHECK(e.ball() == EB({0, 0, 0}, R("1/2")));
  }
}

TEST_CASE("extraction is sound for random tables") {
  RatSampler s(64);
  for (int i = 0; i < 50; ++i) {
    RelationTable rel;
    for (int k = 0; k < 5; ++k) {
      rel.rows.push_back({Rat(s.Int(-3, 3)), RationalAngle::FromSlope(s.Uniform(-5, 5, 9))});
    }
    const Rat a = s.Open(0, R("1/2"), 8), b = s.Open(0, 1, 8), rho = s.Uniform(1, 3, 4);
    const auto f = ExtractUniformization(*Responder(rel, a, b, rho), rel.Domain(), a, rho);
    for (const Rat& x : rel.Domain()) CHECK(rel.Contains(x, f.at(x)));
  }
}

TEST_CASE("one deviation from tangent-in play loses") {
  const Rat a = R("1/2"), b = R("1/2"), rho = 1;
  const GameParams p = Params(a, b, rho);
  RatSampler s(65);
  for (int i = 0; i < 100; ++i) {
    const Rat x(s.Int(-2, 2));
    const RationalAngle ang = RationalAngle::FromSlope(s.Uniform(-3, 3, 8));
    const RelationTable rel = OneRow(x, ang);
    const size_t round = static_cast<size_t>(s.Int(1, 5));
    const Rat keep = s.Uniform(0, 1, 32) * R("31/32");
    const Vec in{0, -ang.cos, -ang.sin};
    const StrategyPtr si = FromFunction(
        [=](const Position& pos) {
          if (pos.empty()) return EB({x, 0, 0}, rho);
          const Rat r = ScheduledRadius(p, pos);
          Rat step = pos.last().radius - r;
          if (pos.turn() / 2 == round) step *= keep;
          return Ball(Translate(pos.last().center, Scale(in, step)), r);
        },
        "deviating");
    const Trace tr = Play(p, *si, *Responder(rel, a, b, rho),
                          *CylinderTarget(rel, a, b, rho), 400);
    CHECK(tr.outcome->verdict == Verdict::kWinII);
    CHECK(tr.outcome->reason == OutcomeReason::kBallInside);
  }
}

}  // namespace
}  // namespace schmidt
