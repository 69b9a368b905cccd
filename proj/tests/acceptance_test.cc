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

// End-to-end acceptance checks. Each criterion prints one line:
//   PASS|FAIL <n> <name> (<ms> ms, limit <ms>)
// and the binary exits nonzero when any criterion fails or runs over time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schmidt/builtins.h"
#include "schmidt/cylinder.h"
#include "schmidt/game.h"
#include "schmidt/reductions.h"
#include "schmidt/simple.h"
#include "schmidt/target.h"
#include "schmidt/transfer.h"
#include "schmidt/verify.h"

namespace schmidt {
namespace {

Rat R(const char* s) { return Rat::Parse(s); }
Ball LB(const Rat& c, const Rat& r) { return Ball(Point::Line(c), r); }

GameParams Params(Rat a, Rat b, std::optional<Rat> rho = {},
                  Variant v = Variant::kSchmidt) {
  GameParams p;
  p.alpha = std::move(a);
  p.beta = std::move(b);
  p.rho = std::move(rho);
  p.variant = v;
  return p;
}

// Collects the first failure of a criterion.
class Checker {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

// Never certifies, so play runs to full depth.
class Opaque : public TargetSet {
 public:
  Membership PointQuery(const Point&) const override {
    return Membership::kUnknown;
  }
  Truth BallInside(const Ball&) const override { return Truth::kUnknown; }
  Truth BallDisjoint(const Ball&) const override { return Truth::kUnknown; }
  std::string Describe() const override { return "opaque"; }
};

struct Criterion {
  int number;
  std::string name;
  long limit_ms;
  std::function<void(Checker&)> run;
};

void MaxDistanceEscapesToTheRay(Checker& c) {
  const GameParams p = Params(R("1/4"), R("1/2"), Rat(2));
  const Trace t = Play(p, *Concentric(p, LB(0, 2)),
                       *MaximizeDistanceFrom(p, Anchor::At(Point::Line(0))),
                       *RayUnionQ(), 8);
  c(t.outcome->verdict == Verdict::kWinII, "verdict");
  c(t.outcome->reason == OutcomeReason::kBallInside, "reason");
  c(t.outcome->depth == 1, "depth");
  c(t.outcome->ball && t.outcome->ball->radius == R("1/2"), "radius");
  if (t.outcome->ball) {
    c(t.outcome->ball->center.x().Abs() - R("1/2") == 1, "near edge");
  }
}

void AvoidanceExcludesTheEnumeration(Checker& c) {
  const GameParams p = Params(R("1/2"), R("1/3"), R("1/2"));
  const std::vector<Rat> q = RationalsInInterval(-1, 1, 64);
  c(q.size() == 64, "enumeration size");
  RandomOptions o;
  o.seed = 2026;
  const Trace t = Play(p, *AvoidEnumeration(p, LB(0, R("1/2")), q),
                       *RandomPlayer(p, o), *Rationals(), 130);
  c(t.outcome->reason == OutcomeReason::kDepthExhausted, "play ended early");
  c(t.moves.size() == 130, "move count");
  for (size_t k = 0; k < q.size(); ++k) {
    for (size_t turn = 2 * k + 2; turn < t.moves.size(); ++turn) {
      const Ball& b = t.moves[turn].ball;
      if (DistCmp(Point::Line(q[k]), b.center, b.radius) !=
          std::strong_ordering::greater) {
        c(false, "q_" + std::to_string(k) + " in ball " + std::to_string(turn));
        return;
      }
    }
  }
  const Ball e = EnclosingBall(t);
  c(e.center.x().Abs() + e.radius < 1, "enclosing ball leaves (-1,1)");
}

void DuelDistancesFollowTheSeries(Checker& c) {
  c(CriticalRadius(R("1/2"), R("1/2"), 1) == R("1/3"), "critical radius");
  RatSampler s(5);
  int draws = 0;
  while (draws < 25) {
    const Rat a = s.Open(0, 1, 16), b = s.Open(0, 1, 16);
    const Rat rho = s.Uniform(R("1/4"), 4, 8);
    const Rat r = CriticalRadius(a, b, rho);
    if (!r.IsPositive()) continue;
    ++draws;
    const RationalAngle ang = RationalAngle::FromSlope(s.Uniform(-3, 3, 8));
    const DuelRun d = GreedyDuel(a, b, rho, s.Uniform(-2, 2, 8), ang, 20);
    c(d.distances.size() == 41, "distance count");
    if (d.distances.size() != 41) return;
    Rat pow(1);
    for (size_t n = 0; n <= 20; ++n) {
      c(d.distances[2 * n] == r * (Rat(1) - pow), "series at " + std::to_string(n));
      pow *= a * b;
    }
  }
}

void ExtractionRecoversTheTable(Checker& c) {
  const RelationTable rel =
      RelationTable::Parse("0 3/5 4/5\n1 3/5 4/5\n1 4/5 3/5\n");
  const Rat a = R("1/2"), b = R("1/2"), rho = 1;
  const std::map<Rat, RationalAngle> f = ExtractUniformization(
      *Responder(rel, a, b, rho), rel.Domain(), a, rho);
  c(f.size() == 2, "domain");
  for (const auto& [x, ang] : f) c(rel.Contains(x, ang), "not in the table");
  c(f.count(Rat(0)) && f.at(Rat(0)) == RationalAngle::Make(R("3/5"), R("4/5")),
    "f(0)");
}

void TransferTracksItsShadow(Checker& c) {
  const TransferParams tp;
  const auto [lo, hi] =
      RhoPrimeBounds(tp.alpha, tp.beta, tp.alpha_p, tp.beta_p, 1);
  c(lo == R("1/3") && hi == R("3/2"), "bounds");
  const Rat rp = PickRhoPrime(lo, hi, tp.alpha, tp.beta);
  c(rp == 1, "pick");
  c(TransferEpsilon(0, tp.alpha, tp.beta, tp.alpha_p, tp.beta_p, 1, rp) ==
        R("1/4"),
    "eps_0");
  c(TransferEpsilon(1, tp.alpha, tp.beta, tp.alpha_p, tp.beta_p, 1, rp) ==
        R("1/32"),
    "eps_1");
  const TransferredII ii(TangentToward(tp.High(), {Rat(-1)}), tp);
  GameParams low = tp.Low();
  low.rho = 1;
  size_t snaps = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    RandomOptions o;
    o.seed = seed;
    const Trace t = Play(low, *RandomPlayer(low, o), ii, *Rationals(), 30);
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    if (t.outcome->reason != OutcomeReason::kDepthExhausted) {
      c(false, std::string("ended by ") +
                   OutcomeReasonName(t.outcome->reason) + tag);
      return;
    }
    const DualRun run = ii.ComputeShadow(t.ToPosition());
    for (const DualStep& d : run.steps) {
      if (d.turn % 2 == 1) c(d.real.center == d.shadow.center, "II center" + tag);
      if (d.snapped) {
        ++snaps;
        c(d.snap_within, "snap outside eps" + tag);
        c(d.snap_distance && *d.snap_distance < d.eps, "snap distance" + tag);
      }
    }
    if (!c.ok()) return;
  }
  c(snaps >= 1000 * 15, "snapped steps: " + std::to_string(snaps));
}

void MatchedRuns(Checker& c, const GameParams& q, const StrategyPtr& sigma);

void SimplificationMatchesSigma(Checker& c) {
  const GameParams p = Params(R("1/2"), R("1/2"), Rat(1));
  const LineSimplification line =
      SimplifyOnLine(*Concentric(p), p, Position(), 0, 1);
  c(line.complete && line.cursor == 1, "sweep incomplete");
  c(line.round.cells.size() == 2, "cell count");
  if (line.round.cells.size() != 2) return;
  c(line.round.cells[0].cell ==
        Cell(Atom::MakeInterval(Interval::HalfOpen(0, R("1/2")))),
    "cell 0");
  c(line.round.cells[1].cell ==
        Cell(Atom::MakeInterval(Interval::HalfOpen(R("1/2"), 1))),
    "cell 1");
  RoundContext ctx;
  ctx.turn = 1;
  ctx.incoming_radius = 1;
  c(ValidateSimple(line.round, p, ctx).ok(), "validation");

  MatchedRuns(c, p, Concentric(p));
  const GameParams q = Params(R("1/2"), R("1/3"), Rat(1));
  RandomOptions os;
  os.seed = 52;
  os.tangent_one_in = 0;
  MatchedRuns(c, q, RandomPlayer(q, os));
}

void MatchedRuns(Checker& c, const GameParams& q, const StrategyPtr& sigma) {
  const SimplifiedStrategy simp(sigma, q);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    RandomOptions oi;
    oi.seed = 1000 + seed;
    const Trace t = Play(q, *RandomPlayer(q, oi), simp, *Rationals(), 40);
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    c(t.outcome->reason == OutcomeReason::kDepthExhausted, "ended early" + tag);
    const Position pos = t.ToPosition();
    const Position matched = simp.MatchedRun(pos);
    c(matched.turn() == pos.turn() && pos.turn() == 40, "length" + tag);
    if (!c.ok()) return;
    for (size_t k = 1; k < pos.turn(); k += 2) {
      c(pos[k] == matched[k], "real move differs" + tag);
      c(matched[k] == sigma->Next(matched.Prefix(k)), "not sigma" + tag);
    }
  }
}

void SlackIsExact(Checker& c) {
  RatSampler s(7);
  int tangent = 0;
  for (int i = 0; i < 1000; ++i) {
    const bool strict = i % 2 == 1;
    const GameParams p =
        Params(s.Open(0, 1, 16), s.Open(0, 1, 16), Rat(1),
               strict ? Variant::kNonTangentSchmidt : Variant::kSchmidt);
    // A random rule-following prefix of 1 to 8 moves.
    RandomOptions oi, oii;
    oi.seed = s.Bits();
    oii.seed = s.Bits();
    const Trace t = Play(p, *RandomPlayer(p, oi), *RandomPlayer(p, oii),
                         Opaque(), static_cast<size_t>(s.Int(1, 8)));
    const Position pos = t.ToPosition();
    const Ball& prev = pos.last();
    const Rat r = *NextRadius(p, pos);
    const Rat room = prev.radius - r;
    const bool tan = !strict && i % 4 == 0;
    const Rat off = tan ? room : s.Open(0, room, 32);
    const Rat sign = s.Int(0, 1) ? Rat(1) : Rat(-1);
    const Ball resp = LB(prev.center.x() + sign * off, r);
    const Rat slack = StabilityRadiusFromSlack(p, pos, resp);
    c(slack == prev.radius - r - off, "slack at draw " + std::to_string(i));
    if (tan) {
      c(slack == 0, "tangent slack");
      ++tangent;
    }
  }
  c(tangent == 250, "tangent draws");

  // Probe balls larger than the slack at their centers are rejected.
  const GameParams nt =
      Params(R("1/2"), R("1/2"), Rat(1), Variant::kNonTangentSchmidt);
  const StrategyPtr sigma = Concentric(nt);
  for (int i = 0; i < 200; ++i) {
    const Rat x = s.Uniform(-2, 2, 16);
    const Rat slack = ResponseSlack(*sigma, nt, Position(), LB(x, 1));
    const bool over = i % 2 == 0;
    const Rat radius = over ? slack + s.Open(0, 1, 16) : slack / 2;
    try {
      SimplifyNonTangent(*sigma, nt, Position(), {LB(x, radius)});
      c(!over, "oversize probe accepted at " + x.ToString());
    } catch (const SimplifyError& e) {
      c(over, "probe within the slack rejected at " + x.ToString());
      c(e.witness() && *e.witness() == Point::Line(x), "witness");
    }
  }
}

void GStarBisectionAligns(Checker& c) {
  const GameParams p = Params(R("1/2"), R("1/2"));
  const GStarStrategyPtr star = BisectionGStar(p, LB(0, 1));
  const GStarRealI real(star);
  const GStarGame game(p);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    RandomOptions o;
    o.seed = seed;
    const Trace t = Play(p, real, *RandomPlayer(p, o), *Rationals(), 12);
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    c(t.outcome->reason == OutcomeReason::kDepthExhausted, "ended early" + tag);
    c(t.moves.size() == 12, "move count" + tag);
    const AlignmentAudit audit = AuditAlignment(real, t.ToPosition());
    c(audit.cells_ok && audit.responses_ok, "audit" + tag + ": " + audit.detail);
    c(audit.aligned.i_moves.size() == 6 && audit.aligned.indices.size() == 6,
      "depth" + tag);
    GStarPosition g;
    for (size_t k = 0; k < audit.aligned.indices.size(); ++k) {
      c(game.CheckIMove(g, audit.aligned.i_moves[k]).legal, "I move" + tag);
      g.i_moves.push_back(audit.aligned.i_moves[k]);
      c(game.CheckIIMove(g, audit.aligned.indices[k]).legal, "II index" + tag);
      g.indices.push_back(audit.aligned.indices[k]);
    }
    if (!c.ok()) return;
  }
}

void BaireStemsExtend(Checker& c) {
  RatSampler s(9);
  for (int i = 0; i < 1000; ++i) {
    std::vector<int64_t> stem(static_cast<size_t>(s.Int(0, 20)));
    for (int64_t& e : stem) e = s.Int(0, 9);
    c(BaireReduce(BaireUnreduce(stem)) == stem, "round trip");
  }
  const GameParams p = Params(R("1/2"), R("1/2"), R("1/2"));
  for (uint64_t seed = 0; seed < 50; ++seed) {
    RandomOptions oi, oii;
    oi.seed = 2 * seed;
    oii.seed = 2 * seed + 1;
    oi.space = oii.space = SpaceKind::kBaire;
    const Trace t = Play(p, *RandomPlayer(p, oi), *RandomPlayer(p, oii),
                         Opaque(), 20);
    c(t.outcome->reason == OutcomeReason::kDepthExhausted, "ended early");
    c(t.moves.size() == 20, "move count");
    if (!c.ok()) return;
    std::vector<int64_t> prev = BaireReduce(t.moves.at(0).ball);
    for (size_t k = 1; k < t.moves.size(); ++k) {
      const std::vector<int64_t> st = BaireReduce(t.moves[k].ball);
      c(st.size() == prev.size() + 1 && StemExtends(st, prev),
        "move " + std::to_string(k) + " does not extend by one");
      prev = st;
    }
  }
}

void TangencySeparatesTheVariants(Checker& c) {
  const Position pos({LB(0, 1)});
  const Ball move = LB(R("3/4"), R("1/4"));
  c(LegalMove(Params(R("1/4"), R("1/2"), Rat(1)), pos, move) ==
        MoveVerdict::kLegal,
    "schmidt");
  c(LegalMove(Params(R("1/4"), R("1/2"), Rat(1), Variant::kNonTangentSchmidt),
              pos, move) == MoveVerdict::kIllegalTangent,
    "non-tangent");
}

}  // namespace
}  // namespace schmidt

int main() {
  using namespace schmidt;
  const std::vector<Criterion> criteria = {
      {1, "maxdist escapes to the ray", 1000, MaxDistanceEscapesToTheRay},
      {2, "avoidance excludes the enumeration", 5000,
       AvoidanceExcludesTheEnumeration},
      {3, "duel distances follow the series", 5000,
       DuelDistancesFollowTheSeries},
      {4, "extraction recovers the table", 1000, ExtractionRecoversTheTable},
      {5, "transfer tracks its shadow", 30000, TransferTracksItsShadow},
      {6, "simplification matches sigma", 10000, SimplificationMatchesSigma},
      {7, "slack is exact", 10000, SlackIsExact},
      {8, "G* bisection aligns", 10000, GStarBisectionAligns},
      {9, "Baire stems extend", 5000, BaireStemsExtend},
      {10, "tangency separates the variants", 1000,
       TangencySeparatesTheVariants},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    const long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    if (c.ok() && ms > cr.limit_ms) c(false, "over time");
    std::printf("%s %d %s (%ld ms, limit %ld ms)%s%s\n",
                c.ok() ? "PASS" : "FAIL", cr.number, cr.name.c_str(), ms,
                cr.limit_ms, c.ok() ? "" : ": ", c.failure().c_str());
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
