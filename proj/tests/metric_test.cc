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

#include <cmath>

#include "doctest.h"
#include "schmidt/error.h"
#include "schmidt/metric.h"
#include "schmidt/verify.h"
#include "test_util.h"

namespace schmidt {
namespace {

using testing::EB;
using testing::L;
using testing::LB;
using testing::R;

TEST_CASE("Rat parsing is exact") {
  CHECK(R("6/8") == Rat(3, 4));
  CHECK(R("-2") == Rat(-2));
  CHECK(R("+1/3").ToString() == "1/3");
  CHECK_THROWS_AS(R("0.5"), ParseError);
  CHECK_THROWS_AS(R("1/0"), ParseError);
  CHECK_THROWS_AS(R(""), ParseError);
}

TEST_CASE("Rat square roots") {
  CHECK(R("9/16").Sqrt() == R("3/4"));
  CHECK_FALSE(Rat(2).Sqrt().has_value());
  const Rat lo = Rat(2).SqrtLower(), hi = Rat(2).SqrtUpper();
  CHECK(lo * lo < 2);
  CHECK(hi * hi > 2);
  CHECK(hi - lo < Rat::PowerOfTwo(-60));
  CHECK(Rat::PowerOfTwo(-3) == R("1/8"));
  CHECK(R("1/8").Log2Exact() == -3L);
  CHECK_FALSE(R("3/8").Log2Exact().has_value());
}

TEST_CASE("distance comparison on the line") {
  CHECK(DistCmp(L(0), L(R("3/4")), R("3/4")) == std::strong_ordering::equal);
  CHECK(DistCmp(L(0), L(R("3/4")), R("1/2")) == std::strong_ordering::greater);
  CHECK(DistCmp(L(0), L(R("3/4")), 1) == std::strong_ordering::less);
}

TEST_CASE("distance comparison in R^3 uses squares") {
  const Point p = Point::Euclid({0, 0, 0});
  const Point q = Point::Euclid({0, R("3/10"), R("2/5")});
  CHECK(DistCmp(p, q, R("1/2")) == std::strong_ordering::equal);
  CHECK(ExactDistance(p, q) == R("1/2"));
  const Point s = Point::Euclid({1, 1, 0});
  CHECK_FALSE(ExactDistance(p, s).has_value());
  CHECK(DistanceLowerBound(p, s) * DistanceLowerBound(p, s) <= 2);
  CHECK(DistanceUpperBound(p, s) * DistanceUpperBound(p, s) >= 2);
}

TEST_CASE("Baire distance is 2^-(n+1) at the first difference") {
  const Point x = Point::Baire({1, 2, 3}, 0);
  const Point y = Point::Baire({1, 2, 4}, 0);
  CHECK(x.sequence().FirstDifference(y.sequence()) == size_t{2});
  CHECK(DistCmp(x, y, R("1/8")) == std::strong_ordering::equal);
  CHECK(BaireDistance(x.sequence(), x.sequence()) == 0);
  // A tail is a stem of any length.
  CHECK(Point::Baire({5, 0, 0}, 0).sequence().FirstDifference(
            Point::Baire({5}, 0).sequence()) == std::nullopt);
}

TEST_CASE("mixing spaces throws") {
  CHECK_THROWS_AS(DistCmp(L(0), Point::Euclid({0, 0}), 1), SpaceMismatchError);
  CHECK_THROWS_AS(DistCmp(L(0), Point::Baire(std::vector<int64_t>{}), 1), SpaceMismatchError);
}

TEST_CASE("ball nesting") {
  const Ball outer = LB(0, 1);
  CHECK(BallNested(outer, LB(R("3/4"), R("1/4"))) == Nesting::kTangent);
  CHECK(BallNested(outer, LB(R("4/5"), R("1/4"))) == Nesting::kNotNested);
  CHECK(BallNested(outer, LB(R("1/4"), R("1/2"))) == Nesting::kNested);
  CHECK(BallNested(EB({0, 0}, 1), EB({R("3/10"), R("2/5")}, R("1/2"))) ==
        Nesting::kTangent);
}

TEST_CASE("points print and parse") {
  for (const char* s : {"[3/4]", "[0,3/10,2/5]", "[1,2;0]", "[;7]"}) {
    CHECK(Point::Parse(s).ToString() == s);
  }
  CHECK_THROWS_AS(Point::Parse("3/4"), ParseError);
  CHECK_THROWS_AS(Point::Parse("[0.5]"), ParseError);
  CHECK(Space::Parse("euclid:3") == Space::Euclid(3));
  CHECK_THROWS_AS(Space::Parse("euclid:x"), ParseError);
}

TEST_CASE("comparison is transitive and agrees with floating point") {
  RatSampler s(11);
  for (int i = 0; i < 500; ++i) {
    const Point p = Point::Euclid({s.Uniform(-3, 3), s.Uniform(-3, 3)});
    const Point q = Point::Euclid({s.Uniform(-3, 3), s.Uniform(-3, 3)});
    const Rat t1 = s.Uniform(0, 5), t2 = t1 + s.Uniform(0, 1);
    if (DistCmp(p, q, t1) == std::strong_ordering::less) {
      CHECK(DistCmp(p, q, t2) == std::strong_ordering::less);
    }
    const double d = std::sqrt(DistSquared(p, q).ToDouble());
    const auto c = DistCmp(p, q, t1);
    if (std::abs(d - t1.ToDouble()) > 1e-9) {
      CHECK((c == std::strong_ordering::less) == (d < t1.ToDouble()));
    }
    CHECK(DistanceLowerBound(p, q) <= DistanceUpperBound(p, q));
  }
}

TEST_CASE("Baire distance is an ultrametric") {
  RatSampler s(12);
  auto seq = [&s] {
    std::vector<int64_t> stem(static_cast<size_t>(s.Int(0, 6)));
    for (int64_t& e : stem) e = s.Int(0, 2);
    return BaireSequence(stem, s.Int(0, 1));
  };
  for (int i = 0; i < 1000; ++i) {
    const BaireSequence x = seq(), y = seq(), z = seq();
    CHECK(BaireDistance(x, z) <=
          Max(BaireDistance(x, y), BaireDistance(y, z)));
    CHECK(BaireDistance(x, y) == BaireDistance(y, x));
  }
}

}  // namespace
}  // namespace schmidt
