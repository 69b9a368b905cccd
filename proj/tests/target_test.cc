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
#include "schmidt/error.h"
#include "schmidt/target.h"
#include "schmidt/verify.h"
#include "test_util.h"

namespace schmidt {
namespace {

using testing::L;
using testing::LB;
using testing::R;

TEST_CASE("rays union Q") {
  const TargetPtr t = RayUnionQ();
  CHECK(t->PointQuery(L(R("3/2"))) == Membership::kIn);
  CHECK(t->BallInside(LB(R("3/2"), R("1/2"))) == Truth::kYes);
  CHECK(t->BallInside(LB(R("-3/2"), R("1/2"))) == Truth::kYes);
  CHECK(t->BallInside(LB(R("3/2"), R("3/5"))) == Truth::kNo);
  CHECK(t->BallDisjoint(LB(0, R("1/4"))) == Truth::kNo);
  CHECK_THROWS_AS(t->PointQuery(Point::Euclid({0, 0})), SpaceMismatchError);
}

TEST_CASE("rationals") {
  CHECK(Rationals()->PointQuery(L(R("22/7"))) == Membership::kIn);
  CHECK(CoRationals()->PointQuery(L(R("22/7"))) == Membership::kOut);
  CHECK(Rationals()->BallInside(LB(0, R("1/1000"))) == Truth::kNo);
  CHECK(Rationals()->BallDisjoint(LB(0, R("1/1000"))) == Truth::kNo);
}

TEST_CASE("closed intervals") {
  const TargetPtr t = ClosedInterval(Rat(0), Rat(1));
  CHECK(t->PointQuery(L(1)) == Membership::kIn);
  CHECK(t->PointQuery(L(R("-1/9"))) == Membership::kOut);
  CHECK(t->BallInside(LB(R("1/2"), R("1/2"))) == Truth::kYes);
  CHECK(t->BallInside(LB(R("1/2"), R("3/5"))) == Truth::kNo);
  CHECK(t->BallDisjoint(LB(3, 1)) == Truth::kYes);
  CHECK(t->BallDisjoint(LB(2, 1)) == Truth::kNo);
  const TargetPtr ray = ClosedInterval(std::nullopt, Rat(-1));
  CHECK(ray->BallInside(LB(-100, 99)) == Truth::kYes);
}

TEST_CASE("stem cylinders") {
  const TargetPtr t = StemCylinder({2, 7});
  CHECK(t->PointQuery(Point::Baire({2, 7, 1})) == Membership::kIn);
  CHECK(t->PointQuery(Point::Baire({2, 6})) == Membership::kOut);
  // Radius 1/8 balls fix the first two coordinates.
  CHECK(t->BallInside(Ball(Point::Baire({2, 7, 5}), R("1/8"))) == Truth::kYes);
  CHECK(t->BallDisjoint(Ball(Point::Baire({2, 6}), R("1/8"))) == Truth::kYes);
  CHECK(t->BallInside(Ball(Point::Baire({2, 7}), R("1/2"))) == Truth::kNo);
}

TEST_CASE("complement swaps the ball queries") {
  const TargetPtr t = ClosedInterval(Rat(0), Rat(1));
  const TargetPtr c = Complement(t);
  RatSampler s(3);
  for (int i = 0; i < 300; ++i) {
    const Ball b = LB(s.Uniform(-3, 3), s.Uniform(R("1/64"), 2));
    CHECK(c->BallInside(b) == t->BallDisjoint(b));
    CHECK(c->BallDisjoint(b) == t->BallInside(b));
    CHECK(Complement(c)->BallInside(b) == t->BallInside(b));
    const Point p = L(s.Uniform(-3, 3));
    CHECK(Complement(c)->PointQuery(p) == t->PointQuery(p));
  }
}

TEST_CASE("a union of rays and Q is sound against the direct target") {
  const TargetPtr u = ParseTarget("union(interval:-inf,-1,union(interval:1,inf,Q))");
  const TargetPtr direct = RayUnionQ();
  CHECK(u->BallInside(LB(R("3/2"), R("1/2"))) == Truth::kYes);
  CHECK(u->BallInside(LB(0, R("1/4"))) == Truth::kNo);
  CHECK(direct->BallInside(LB(0, R("1/4"))) == Truth::kNo);
  // A joint cover by both halves is invisible to the union.
  const TargetPtr halves = ParseTarget("union(interval:-inf,0,interval:0,inf)");
  CHECK(halves->BallInside(LB(0, 1)) == Truth::kUnknown);
  CHECK(halves->BallInside(LB(2, 1)) == Truth::kYes);
  RatSampler s(4);
  for (int i = 0; i < 500; ++i) {
    const Ball b = LB(s.Uniform(-4, 4), s.Uniform(R("1/32"), 2));
    const Truth ti = u->BallInside(b);
    if (ti != Truth::kUnknown) CHECK(ti == direct->BallInside(b));
    const Truth td = u->BallDisjoint(b);
    if (td != Truth::kUnknown) CHECK(td == direct->BallDisjoint(b));
  }
}

TEST_CASE("ball queries are monotone under shrinking") {
  const std::vector<TargetPtr> targets = {
      RayUnionQ(), ClosedInterval(Rat(-1), Rat(2)),
      Complement(ClosedInterval(Rat(0), std::nullopt)), Everything(), Nothing()};
  RatSampler s(5);
  for (const TargetPtr& t : targets) {
    for (int i = 0; i < 300; ++i) {
      const Ball big = LB(s.Uniform(-3, 3), s.Uniform(R("1/16"), 2));
      const Rat r = big.radius * s.Open(0, 1, 16);
      const Rat off = (big.radius - r) * s.Uniform(-1, 1, 16);
      const Ball small = LB(big.center.x() + off, r);
      REQUIRE(BallNested(big, small) != Nesting::kNotNested);
      if (t->BallInside(big) == Truth::kYes) {
        CHECK(t->BallInside(small) == Truth::kYes);
      }
      if (t->BallDisjoint(big) == Truth::kYes) {
        CHECK(t->BallDisjoint(small) == Truth::kYes);
      }
      // Sound: never both inside and disjoint.
      CHECK_FALSE((t->BallInside(big) == Truth::kYes &&
                   t->BallDisjoint(big) == Truth::kYes));
    }
  }
}

TEST_CASE("target expressions") {
  CHECK(ParseTarget("compl(Q)")->PointQuery(L(1)) == Membership::kOut);
  CHECK(ParseTarget("stem:1.2")->PointQuery(Point::Baire({1, 2})) ==
        Membership::kIn);
  CHECK_THROWS_AS(ParseTarget("union(Q"), ParseError);
  CHECK_THROWS_AS(ParseTarget("reals"), ParseError);
  CHECK_THROWS_AS(ParseTarget("cylinder:x.txt"), ParseError);
}

}  // namespace
}  // namespace schmidt
