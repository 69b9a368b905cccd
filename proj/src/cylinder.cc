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

#include "schmidt/cylinder.h"

#include <sstream>

#include "schmidt/builtins.h"
#include "schmidt/text.h"

namespace schmidt {

RationalAngle RationalAngle::Make(Rat c, Rat s) {
  if (c * c + s * s != Rat(1)) {
    throw InvalidArgumentError("(" + c.ToString() + "," + s.ToString() +
                               ") is not on the unit circle");
  }
  return {std::move(c), std::move(s)};
}

RationalAngle RationalAngle::FromSlope(const Rat& t) {
  const Rat d = Rat(1) + t * t;
  return {(Rat(1) - t * t) / d, Rat(2) * t / d};
}

std::string RationalAngle::ToString() const {
  return "(" + cos.ToString() + "," + sin.ToString() + ")";
}

bool RelationTable::Contains(const Rat& x, const RationalAngle& a) const {
  for (const RelationRow& r : rows) {
    if (r.x == x && r.angle == a) return true;
  }
  return false;
}

std::vector<RationalAngle> RelationTable::AnglesAt(const Rat& x) const {
  std::vector<RationalAngle> out;
  for (const RelationRow& r : rows) {
    if (r.x == x) out.push_back(r.angle);
  }
  return out;
}

std::vector<Rat> RelationTable::Domain() const {
  std::vector<Rat> out;
  for (const RelationRow& r : rows) {
    bool seen = false;
    for (const Rat& x : out) seen = seen || x == r.x;
    if (!seen) out.push_back(r.x);
  }
  return out;
}

RelationTable RelationTable::Parse(std::string_view text) {
  RelationTable t;
  int line = 0;
  for (const std::string& l : ContentLines(text)) {
    ++line;
    const std::vector<std::string> tok = Tokenize(l);
    const std::string field = "row " + std::to_string(line);
    if (tok.size() != 3) throw ParseError(field, "expected 'x cos sin'");
    try {
      t.rows.push_back({Rat::Parse(tok[0]),
                        RationalAngle::Make(Rat::Parse(tok[1]),
                                            Rat::Parse(tok[2]))});
    } catch (const ParseError& e) {
      throw ParseError(field, e.what());
    } catch (const InvalidArgumentError& e) {
      throw ParseError(field, e.what());
    }
  }
  if (t.rows.empty()) throw ParseError("rows", "empty relation table");
  return t;
}

std::string RelationTable::ToString() const {
  std::ostringstream os;
  for (const RelationRow& r : rows) {
    os << r.x << ' ' << r.angle.cos << ' ' << r.angle.sin << '\n';
  }
  return os.str();
}

Rat CriticalRadius(const Rat& alpha, const Rat& beta, const Rat& rho) {
  const Rat ab = alpha * beta;
  return rho * (Rat(1) - Rat(2) * alpha + ab) / (Rat(1) - ab);
}

namespace {

void RequireR3(const Point& p) {
  if (p.kind() != SpaceKind::kEuclid || p.coords().size() != 3) {
    throw SpaceMismatchError("cylinder targets live in R^3, got " +
                             p.ToString());
  }
}

Rat AxisDistSquared(const Point& p) {
  const Vec& c = p.coords();
  return c[1] * c[1] + c[2] * c[2];
}

class Cylinder : public TargetSet {
 public:
  Cylinder(RelationTable rel, Rat r) : rel_(std::move(rel)), r_(std::move(r)) {
    for (const RelationRow& row : rel_.rows) {
      coded_.push_back(Point::Euclid(
          {row.x, r_ * row.angle.cos, r_ * row.angle.sin}));
    }
  }

  Membership PointQuery(const Point& p) const override {
    RequireR3(p);
    if (AxisDistSquared(p) > r_ * r_) return Membership::kIn;
    for (const Point& q : coded_) {
      if (q == p) return Membership::kIn;
    }
    return Membership::kOut;
  }

  Truth BallInside(const Ball& b) const override {
    RequireR3(b.center);
    const Rat reach = r_ + b.radius;
    const Rat d2 = AxisDistSquared(b.center);
    if (d2 > reach * reach) return Truth::kYes;
    if (d2 < reach * reach) return Truth::kNo;
    // Externally tangent: the ball meets the closed cylinder in one point.
    const Rat d = reach;
    const Vec& c = b.center.coords();
    const Point touch = Point::Euclid(
        {c[0], r_ * c[1] / d, r_ * c[2] / d});
    for (const Point& q : coded_) {
      if (q == touch) return Truth::kYes;
    }
    return Truth::kNo;
  }

  Truth BallDisjoint(const Ball& b) const override {
    RequireR3(b.center);
    if (b.radius > r_) return Truth::kNo;
    const Rat room = r_ - b.radius;
    if (AxisDistSquared(b.center) > room * room) return Truth::kNo;
    for (const Point& q : coded_) {
      if (DistCmp(b.center, q, b.radius) <= 0) return Truth::kNo;
    }
    return Truth::kYes;
  }

  std::string Describe() const override {
    return "cylinder(r=" + r_.ToString() + ", rows=" +
           std::to_string(rel_.rows.size()) + ")";
  }

 private:
  RelationTable rel_;
  Rat r_;
  std::vector<Point> coded_;
};

GameParams CylinderParams(const Rat& alpha, const Rat& beta, const Rat& rho) {
  GameParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.rho = rho;
  p.Validate();
  return p;
}

class CodedResponder : public Strategy {
 public:
  CodedResponder(RelationTable rel, GameParams params)
      : rel_(std::move(rel)),
        params_(params),
        fallback_(MaximizeDistanceFrom(params, Anchor::Axis())) {}

  Ball Next(const Position& pos) const override {
    if (pos.mover() != Player::kII) {
      throw StrategyFailure(StrategyFailureKind::kPrecondition,
                            "the responder plays II");
    }
    RequireR3(pos[0].center);
    const std::optional<RationalAngle> a = Direction(pos[0]);
    if (!a) return fallback_->Next(pos);
    const Rat r = ScheduledRadius(params_, pos);
    const Rat step = pos.last().radius - r;
    const Vec u{Rat(0), a->cos, a->sin};
    return Ball(Translate(pos.last().center, Scale(u, step)), r);
  }

  std::string Describe() const override { return "cylinder responder"; }

 private:
  std::optional<RationalAngle> Direction(const Ball& opening) const {
    const Vec& c = opening.center.coords();
    if (!c[1].IsZero() || !c[2].IsZero()) return std::nullopt;
    if (opening.radius != *params_.rho) return std::nullopt;
    const std::vector<RationalAngle> angles = rel_.AnglesAt(c[0]);
    if (angles.empty()) return std::nullopt;
    return angles.front();
  }

  RelationTable rel_;
  GameParams params_;
  StrategyPtr fallback_;
};

}  // namespace

TargetPtr CylinderTarget(RelationTable rel, const Rat& alpha, const Rat& beta,
                         const Rat& rho) {
  const Rat r = CriticalRadius(alpha, beta, rho);
  if (!r.IsPositive()) {
    throw InvalidArgumentError("critical radius " + r.ToString() +
                               " is not positive");
  }
  return std::make_shared<Cylinder>(std::move(rel), r);
}

StrategyPtr Responder(RelationTable rel, const Rat& alpha, const Rat& beta,
                      const Rat& rho) {
  return std::make_shared<CodedResponder>(std::move(rel),
                                          CylinderParams(alpha, beta, rho));
}

DuelRun GreedyDuel(const Rat& alpha, const Rat& beta, const Rat& rho,
                   const Rat& x, const RationalAngle& angle, size_t rounds) {
  const GameParams params = CylinderParams(alpha, beta, rho);
  RelationTable rel;
  rel.rows.push_back({x, angle});
  const StrategyPtr ii = Responder(rel, alpha, beta, rho);
  const StrategyPtr i = TangentToward(
      params, {Rat(0), -angle.cos, -angle.sin},
      Ball(Point::Euclid({x, Rat(0), Rat(0)}), rho));
  DuelRun run;
  Position pos;
  for (size_t t = 0; t <= 2 * rounds; ++t) {
    const Ball b = (pos.mover() == Player::kI ? i : ii)->Next(pos);
    if (LegalMove(params, pos, b) != MoveVerdict::kLegal) {
      throw Error("duel produced an illegal move at turn " +
                  std::to_string(t));
    }
    pos.Push(b);
    run.balls.push_back(b);
    // Centers stay on the ray through the angle, so the distance is rational.
    run.distances.push_back(*AxisDistSquared(b.center).Sqrt());
  }
  return run;
}

std::map<Rat, RationalAngle> ExtractUniformization(
    const Strategy& tau, const std::vector<Rat>& domain, const Rat& alpha,
    const Rat& rho) {
  std::map<Rat, RationalAngle> f;
  const Rat step = rho - alpha * rho;
  for (const Rat& x : domain) {
    Position pos;
    pos.Push(Ball(Point::Euclid({x, Rat(0), Rat(0)}), rho));
    const Ball b = tau.Next(pos);
    if (b.center.kind() != SpaceKind::kEuclid ||
        b.center.coords().size() != 3) {
      throw NonConformingError(x, b, "not a ball of R^3");
    }
    if (b.radius != alpha * rho) {
      throw NonConformingError(x, b, "radius is not alpha rho");
    }
    const Vec& c = b.center.coords();
    if (c[0] != x) throw NonConformingError(x, b, "x-coordinate moved");
    const Rat cs = c[1] / step, sn = c[2] / step;
    if (cs * cs + sn * sn != Rat(1)) {
      throw NonConformingError(x, b, "displacement is off the circle");
    }
    f.emplace(x, RationalAngle{cs, sn});
  }
  return f;
}

}  // namespace schmidt
