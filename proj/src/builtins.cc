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

#include "schmidt/builtins.h"

#include <random>
#include <sstream>

#include "schmidt/error.h"

namespace schmidt {

Rat ScheduledRadius(const GameParams& params, const Position& pos) {
  if (pos.empty()) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "no scheduled radius before the opening move");
  }
  return *NextRadius(params, pos);
}

namespace {

// Shared plumbing: opening ball handling and the slack of the next move.
class BuiltinStrategy : public Strategy {
 public:
  BuiltinStrategy(GameParams params, std::optional<Ball> opening)
      : params_(std::move(params)), opening_(std::move(opening)) {}

  Ball Next(const Position& pos) const final {
    if (pos.empty()) {
      if (!opening_) {
        throw StrategyFailure(StrategyFailureKind::kPrecondition,
                              Describe() + " has no opening move");
      }
      return *opening_;
    }
    const Rat r = ScheduledRadius(params_, pos);
    return Ball(Move(pos.last(), r), r);
  }

 protected:
  // The next center, given the last ball and the new radius.
  virtual Point Move(const Ball& last, const Rat& r) const = 0;

  GameParams params_;
  std::optional<Ball> opening_;
};

class ConcentricStrategy : public BuiltinStrategy {
 public:
  using BuiltinStrategy::BuiltinStrategy;
  std::string Describe() const override { return "concentric"; }

 protected:
  Point Move(const Ball& last, const Rat&) const override {
    return last.center;
  }
};

void RequireVectorSpace(const Point& p, const std::string& who) {
  if (p.kind() == SpaceKind::kBaire) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          who + " needs the line or R^n");
  }
}

class TangentStrategy : public BuiltinStrategy {
 public:
  TangentStrategy(GameParams params, Vec dir, std::optional<Ball> opening)
      : BuiltinStrategy(std::move(params), std::move(opening)),
        dir_(std::move(dir)) {
    if (NormSquared(dir_) != Rat(1)) {
      throw InvalidArgumentError("tangent direction must be an exact unit "
                                 "vector");
    }
  }

  std::string Describe() const override {
    std::ostringstream os;
    os << "tangent toward ("
       << (dir_.size() == 1 ? Point::Line(dir_[0]) : Point::Euclid(dir_))
       << ")";
    return os.str();
  }

 protected:
  Point Move(const Ball& last, const Rat& r) const override {
    RequireVectorSpace(last.center, "tangent");
    if (last.center.coords().size() != dir_.size()) {
      throw StrategyFailure(StrategyFailureKind::kPrecondition,
                            "tangent direction has the wrong dimension");
    }
    return Translate(last.center, Scale(dir_, last.radius - r));
  }

 private:
  Vec dir_;
};

// Foot of the anchor nearest to p.
Point AnchorFoot(const Anchor& a, const Point& p) {
  if (a.point) return *a.point;
  if (p.kind() != SpaceKind::kEuclid) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "an axis anchor needs R^n");
  }
  Vec foot(p.coords().size(), Rat(0));
  foot[0] = p.coords()[0];
  return Point::Euclid(foot);
}

class RadialStrategy : public BuiltinStrategy {
 public:
  RadialStrategy(GameParams params, Anchor anchor, bool outward,
                 std::optional<Ball> opening)
      : BuiltinStrategy(std::move(params), std::move(opening)),
        anchor_(std::move(anchor)),
        outward_(outward) {}

  std::string Describe() const override {
    return std::string(outward_ ? "maximize" : "minimize") +
           " distance from " +
           (anchor_.point ? anchor_.point->ToString() : std::string("axis"));
  }

 protected:
  Point Move(const Ball& last, const Rat& r) const override {
    RequireVectorSpace(last.center, "radial play");
    const Point foot = AnchorFoot(anchor_, last.center);
    const Vec v = Displacement(foot, last.center);
    const Rat slack = last.radius - r;
    const Rat n2 = NormSquared(v);
    if (!outward_ && n2 <= slack * slack) return foot;
    Vec u;
    if (n2.IsZero()) {
      u.assign(v.size(), Rat(0));
      u[v.size() == 1 ? 0 : 1] = Rat(1);
    } else {
      u = RationalUnitApprox(v);
    }
    return Translate(last.center, Scale(u, outward_ ? slack : -slack));
  }

 private:
  Anchor anchor_;
  bool outward_;
};

class AvoidStrategy : public Strategy {
 public:
  AvoidStrategy(GameParams params, Ball opening, std::vector<Rat> enumeration)
      : params_(std::move(params)),
        opening_(std::move(opening)),
        enumeration_(std::move(enumeration)) {
    if (params_.beta >= Rat(1, 2)) {
      throw InvalidArgumentError("avoid_enumeration needs beta < 1/2, got " +
                                 params_.beta.ToString());
    }
    if (opening_.center.kind() != SpaceKind::kLine) {
      throw InvalidArgumentError("avoid_enumeration is line-only");
    }
  }

  Ball Next(const Position& pos) const override {
    if (pos.empty()) return opening_;
    if (pos.mover() != Player::kI) {
      throw StrategyFailure(StrategyFailureKind::kPrecondition,
                            "avoid_enumeration plays for I");
    }
    const size_t stage = AvoidanceStage(pos.turn());
    if (stage >= enumeration_.size()) {
      throw StrategyFailure(StrategyFailureKind::kPrecondition,
                            "enumeration exhausted at stage " +
                                std::to_string(stage));
    }
    return AvoidStep(pos.last(), params_.beta, enumeration_[stage]);
  }

  std::string Describe() const override { return "avoid enumeration"; }

 private:
  GameParams params_;
  Ball opening_;
  std::vector<Rat> enumeration_;
};

class RandomStrategy : public Strategy {
 public:
  RandomStrategy(GameParams params, RandomOptions o)
      : params_(std::move(params)), o_(std::move(o)) {}

  Ball Next(const Position& pos) const override {
    std::seed_seq seq{static_cast<uint32_t>(o_.seed),
                      static_cast<uint32_t>(o_.seed >> 32),
                      static_cast<uint32_t>(pos.turn())};
    std::mt19937_64 rng(seq);
    if (pos.empty()) return Opening(rng);
    const Rat r = ScheduledRadius(params_, pos);
    const Ball& last = pos.last();
    const Rat slack = last.radius - r;
    const bool strict = params_.variant == Variant::kNonTangentSchmidt;
    if (last.center.kind() == SpaceKind::kBaire) {
      return Ball(BaireMove(last.center, slack, strict, rng), r);
    }
    // Fraction t of the slack: tangent now and then, else p/q < 1.
    Rat t(0);
    if (!strict && o_.tangent_one_in > 0 &&
        std::uniform_int_distribution<int>(0, o_.tangent_one_in - 1)(rng) == 0) {
      t = Rat(1);
    } else {
      const long q = std::uniform_int_distribution<long>(
          1, std::max(1, o_.max_denominator))(rng);
      const long p = std::uniform_int_distribution<long>(0, q - 1)(rng);
      t = Rat(p, q);
    }
    return Ball(Translate(last.center,
                          Scale(Direction(last.center.coords().size(), rng),
                                slack * t)),
                r);
  }

  std::string Describe() const override {
    return "random(seed=" + std::to_string(o_.seed) + ")";
  }

 private:
  Vec Direction(size_t n, std::mt19937_64& rng) const {
    if (n == 1) {
      return {Rat(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1)};
    }
    std::uniform_int_distribution<long> coord(-8, 8);
    Vec v(n);
    do {
      for (Rat& x : v) x = Rat(coord(rng));
    } while (NormSquared(v).IsZero());
    return RationalUnitApprox(v, 24);
  }

  Rat RandomRat(const Rat& span, std::mt19937_64& rng) const {
    const long q = std::uniform_int_distribution<long>(1, 16)(rng);
    const long p = std::uniform_int_distribution<long>(-q * 64, q * 64)(rng);
    return span * Rat(p, q * 64);
  }

  Point BaireMove(const Point& c, const Rat& slack, bool strict,
                  std::mt19937_64& rng) const {
    const size_t m = strict ? BaireStrictCylinderLength(slack)
                            : BaireCylinderLength(slack);
    std::uniform_int_distribution<int64_t> entry(0, SpanInt());
    std::vector<int64_t> stem(m);
    for (size_t i = 0; i < m; ++i) stem[i] = c.sequence().At(i);
    const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < extra; ++i) stem.push_back(entry(rng));
    return Point::Baire(std::move(stem), entry(rng));
  }

  int64_t SpanInt() const {
    const mpz_class f = o_.span.Floor();
    return std::max<int64_t>(1, f.get_si());
  }

  Ball Opening(std::mt19937_64& rng) const {
    const Rat r = o_.opening_radius ? *o_.opening_radius
                                    : params_.rho.value_or(Rat(1));
    switch (o_.space) {
      case SpaceKind::kLine:
        return Ball(Point::Line(RandomRat(o_.span, rng)), r);
      case SpaceKind::kEuclid: {
        Vec v(std::max(2, o_.dimension));
        for (Rat& x : v) x = RandomRat(o_.span, rng);
        return Ball(Point::Euclid(std::move(v)), r);
      }
      case SpaceKind::kBaire: {
        std::uniform_int_distribution<int64_t> entry(0, SpanInt());
        std::vector<int64_t> stem(
            std::uniform_int_distribution<int>(0, 3)(rng));
        for (int64_t& e : stem) e = entry(rng);
        return Ball(Point::Baire(std::move(stem), entry(rng)), r);
      }
    }
    throw StrategyFailure(StrategyFailureKind::kInternal, "bad space");
  }

  GameParams params_;
  RandomOptions o_;
};

}  // namespace

StrategyPtr Concentric(GameParams params, std::optional<Ball> opening) {
  return std::make_shared<ConcentricStrategy>(std::move(params),
                                              std::move(opening));
}

StrategyPtr TangentToward(GameParams params, Vec direction,
                          std::optional<Ball> opening) {
  return std::make_shared<TangentStrategy>(
      std::move(params), std::move(direction), std::move(opening));
}

StrategyPtr MaximizeDistanceFrom(GameParams params, Anchor anchor,
                                 std::optional<Ball> opening) {
  return std::make_shared<RadialStrategy>(std::move(params), std::move(anchor),
                                          true, std::move(opening));
}

StrategyPtr MinimizeDistanceFrom(GameParams params, Anchor anchor,
                                 std::optional<Ball> opening) {
  return std::make_shared<RadialStrategy>(std::move(params), std::move(anchor),
                                          false, std::move(opening));
}

std::vector<Rat> RationalsInInterval(const Rat& lo, const Rat& hi,
                                     size_t count) {
  if (lo >= hi) throw InvalidArgumentError("empty interval");
  std::vector<Rat> out;
  for (long q = 1; out.size() < count; ++q) {
    const mpz_class first = (lo * Rat(q)).Floor() + 1;
    const mpz_class last = (hi * Rat(q)).Ceil() - 1;
    for (mpz_class p = first; p <= last && out.size() < count; ++p) {
      mpz_class g;
      mpz_class qq(q);
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qq.get_mpz_t());
      if (g == 1) out.push_back(Rat(p, qq));
    }
  }
  return out;
}

Ball AvoidStep(const Ball& current, const Rat& beta, const Rat& q) {
  const Rat r = beta * current.radius;
  const Rat shift = current.radius - r;
  const Rat c = current.center.x();
  const Ball plus(Point::Line(c + shift), r);
  if (DistCmp(plus.center, Point::Line(q), r) > 0) return plus;
  return Ball(Point::Line(c - shift), r);
}

StrategyPtr AvoidEnumeration(GameParams params, Ball opening,
                             std::vector<Rat> enumeration) {
  return std::make_shared<AvoidStrategy>(std::move(params), std::move(opening),
                                         std::move(enumeration));
}

StrategyPtr RandomPlayer(GameParams params, RandomOptions options) {
  return std::make_shared<RandomStrategy>(std::move(params),
                                          std::move(options));
}

namespace {

class FunctionStrategy : public Strategy {
 public:
  FunctionStrategy(std::function<Ball(const Position&)> next, std::string name)
      : next_(std::move(next)), name_(std::move(name)) {}
  Ball Next(const Position& pos) const override { return next_(pos); }
  std::string Describe() const override { return name_; }

 private:
  std::function<Ball(const Position&)> next_;
  std::string name_;
};

}  // namespace

StrategyPtr FromFunction(std::function<Ball(const Position&)> next,
                         std::string name) {
  return std::make_shared<FunctionStrategy>(std::move(next), std::move(name));
}

StrategyPtr WithOpening(Ball opening, StrategyPtr rest) {
  const std::string name = rest->Describe() + " opening " + opening.ToString();
  return FromFunction(
      [opening = std::move(opening), rest = std::move(rest)](
          const Position& pos) {
        return pos.empty() ? opening : rest->Next(pos);
      },
      name);
}

}  // namespace schmidt
