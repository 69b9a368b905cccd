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

#include "schmidt/verify.h"

#include <iomanip>
#include <sstream>

#include "schmidt/builtins.h"
#include "schmidt/cylinder.h"
#include "schmidt/reductions.h"
#include "schmidt/simple.h"
#include "schmidt/transfer.h"

namespace schmidt {

RatSampler::RatSampler(uint64_t seed) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32), 0x5eedu};
  rng_.seed(seq);
}

int64_t RatSampler::Int(int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng_);
}

uint64_t RatSampler::Bits() { return rng_(); }

Rat RatSampler::Uniform(const Rat& lo, const Rat& hi, long max_den) {
  const long d = Int(1, max_den);
  return lo + (hi - lo) * Rat(Int(0, d), d);
}

Rat RatSampler::Open(const Rat& lo, const Rat& hi, long max_den) {
  const long d = Int(2, std::max(2L, max_den));
  return lo + (hi - lo) * Rat(Int(1, d - 1), d);
}

namespace {

struct Checker {
  SuiteResult r;
  explicit Checker(std::string name) { r.name = std::move(name); }
  bool Check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = what;
    }
    return ok;
  }
};

int Count(const SuiteOptions& o, int base) { return base * std::max(1, o.scale); }

bool RuleBroken(const Trace& t) {
  return t.outcome && (t.outcome->reason == OutcomeReason::kViolation ||
                       t.outcome->reason == OutcomeReason::kResignation);
}

std::string Why(const Trace& t) {
  return t.outcome ? std::string(OutcomeReasonName(t.outcome->reason)) + ": " +
                         t.outcome->note
                   : "no outcome";
}

GameParams Params(Rat a, Rat b, std::optional<Rat> rho = {},
                  Variant v = Variant::kSchmidt) {
  GameParams p;
  p.alpha = std::move(a);
  p.beta = std::move(b);
  p.rho = std::move(rho);
  p.variant = v;
  return p;
}

SuiteResult RadiusSchedule(const SuiteOptions& o) {
  Checker c("radius-schedule");
  RatSampler s(o.seed);
  for (int i = 0; i < Count(o, 50); ++i) {
    const GameParams p = Params(s.Open(0, 1, 16), s.Open(0, 1, 16));
    const Rat rho0 = s.Uniform(Rat(1, 4), 4, 16);
    Rat r = rho0;
    for (size_t t = 0; t <= 20; ++t) {
      if (t > 0) r *= (t % 2 == 1) ? p.alpha : p.beta;
      c.Check(RequiredRadius(p, t, rho0) == r,
              "turn " + std::to_string(t) + " radius");
    }
  }
  return c.r;
}

SuiteResult Tangency(const SuiteOptions& o) {
  Checker c("tangency");
  RatSampler s(o.seed + 1);
  for (int i = 0; i < Count(o, 200); ++i) {
    const Rat r = s.Uniform(Rat(1, 8), 4, 32);
    const Rat a = s.Open(0, 1, 16);
    Position pos;
    Vec dir;
    if (i % 2 == 0) {
      pos.Push(Ball(Point::Line(s.Uniform(-4, 4)), r));
      dir = {Rat(s.Int(0, 1) ? 1 : -1)};
    } else {
      pos.Push(Ball(Point::Euclid({s.Uniform(-4, 4), s.Uniform(-4, 4)}), r));
      const RationalAngle ang = RationalAngle::FromSlope(s.Uniform(-3, 3));
      dir = {ang.cos, ang.sin};
    }
    const Rat r1 = a * r;
    const Ball tangent(Translate(pos[0].center, Scale(dir, r - r1)), r1);
    const Ball inner(Translate(pos[0].center, Scale(dir, (r - r1) / 2)), r1);
    const Ball outside(Translate(pos[0].center, Scale(dir, (r - r1) * 2)), r1);
    for (Variant v : {Variant::kSchmidt, Variant::kNonTangentSchmidt}) {
      const GameParams p = Params(a, Rat(1, 2), std::nullopt, v);
      const MoveVerdict want = v == Variant::kSchmidt
                                   ? MoveVerdict::kLegal
                                   : MoveVerdict::kIllegalTangent;
      c.Check(LegalMove(p, pos, tangent) == want,
              "tangent move " + tangent.ToString());
      c.Check(LegalMove(p, pos, inner) == MoveVerdict::kLegal,
              "interior move " + inner.ToString());
      c.Check(LegalMove(p, pos, outside) == MoveVerdict::kIllegalNesting,
              "outside move " + outside.ToString());
    }
  }
  return c.r;
}

SuiteResult TraceRoundTrip(const SuiteOptions& o) {
  Checker c("trace-roundtrip");
  RatSampler s(o.seed + 2);
  for (int i = 0; i < Count(o, 30); ++i) {
    RandomOptions oi, oii;
    oi.seed = s.Bits();
    oii.seed = s.Bits();
    GameParams p;
    TargetPtr target;
    switch (i % 3) {
      case 0:
        p = Params(s.Open(0, 1, 8), s.Open(0, 1, 8));
        target = RayUnionQ();
        break;
      case 1:
        p = Params(Rat(1, 2), Rat(1, 2), Rat(1));
        oi.space = oii.space = SpaceKind::kEuclid;
        oi.dimension = oii.dimension = 3;
        target = CylinderTarget({{{0, RationalAngle{}}}}, p.alpha, p.beta, 1);
        break;
      default:
        p = Params(Rat(1, 2), Rat(1, 2), Rat(1, 2));
        oi.space = oii.space = SpaceKind::kBaire;
        target = StemCylinder({1, 2});
        break;
    }
    const StrategyPtr si = RandomPlayer(p, oi), sii = RandomPlayer(p, oii);
    const Trace t = Play(p, *si, *sii, *target, 12);
    c.Check(!RuleBroken(t), "random play broke a rule: " + Why(t));
    c.Check(ParseTrace(SerializeTrace(t)) == t,
            "trace did not round-trip:\n" + SerializeTrace(t));
  }
  return c.r;
}

SuiteResult TransferII(const SuiteOptions& o) {
  Checker c("transfer-ii");
  RatSampler s(o.seed + 3);
  const TransferParams tp;
  const StrategyPtr tau = TangentToward(tp.High(), {Rat(-1)});
  const TransferredII ii(tau, tp);
  const TargetPtr target = Rationals();
  for (int i = 0; i < Count(o, 20); ++i) {
    RandomOptions oi;
    oi.seed = s.Bits();
    oi.opening_radius = s.Uniform(Rat(1, 2), 2, 8);
    const StrategyPtr si = RandomPlayer(tp.Low(), oi);
    const Trace t = Play(tp.Low(), *si, ii, *target, 16);
    if (!c.Check(!RuleBroken(t), "transferred play broke a rule: " + Why(t))) {
      continue;
    }
    const DualRun run = ii.ComputeShadow(t.ToPosition());
    const auto [lo, hi] = RhoPrimeBounds(tp.alpha, tp.beta, tp.alpha_p,
                                         tp.beta_p, run.rho);
    c.Check(lo < run.rho_p && run.rho_p < hi, "rho' outside its bounds");
    Position shadow;
    for (const DualStep& d : run.steps) {
      if (d.turn % 2 == 1) {
        c.Check(d.real.center == d.shadow.center,
                "II centers differ at turn " + std::to_string(d.turn));
      } else {
        c.Check(d.snap_within, "snap not within eps at turn " +
                                   std::to_string(d.turn));
      }
      c.Check(LegalMove(tp.High(), shadow, d.shadow) == MoveVerdict::kLegal,
              "shadow move illegal at turn " + std::to_string(d.turn));
      shadow.Push(d.shadow);
    }
  }
  return c.r;
}

SuiteResult TransferI(const SuiteOptions& o) {
  Checker c("transfer-i");
  RatSampler s(o.seed + 4);
  const TransferParams tp;
  const StrategyPtr sigma =
      TangentToward(tp.Low(), {Rat(1)}, Ball(Point::Line(0), 1));
  const TransferredI ti(sigma, tp);
  const TargetPtr target = Rationals();
  for (int i = 0; i < Count(o, 20); ++i) {
    RandomOptions oii;
    oii.seed = s.Bits();
    const StrategyPtr sii = RandomPlayer(tp.High(), oii);
    const Trace t = Play(tp.High(), ti, *sii, *target, 16);
    if (!c.Check(!RuleBroken(t), "transferred play broke a rule: " + Why(t))) {
      continue;
    }
    const DualRun run = ti.ComputeShadow(t.ToPosition());
    Position shadow;
    for (const DualStep& d : run.steps) {
      if (d.turn % 2 == 0) {
        c.Check(d.real.center == d.shadow.center,
                "I centers differ at turn " + std::to_string(d.turn));
      } else {
        c.Check(d.snap_within, "snap not within eps at turn " +
                                   std::to_string(d.turn));
      }
      c.Check(LegalMove(tp.Low(), shadow, d.shadow) == MoveVerdict::kLegal,
              "shadow move illegal at turn " + std::to_string(d.turn));
      shadow.Push(d.shadow);
    }
  }
  return c.r;
}

SuiteResult Simplify(const SuiteOptions& o) {
  Checker c("simplify");
  RatSampler s(o.seed + 5);
  const GameParams p = Params(Rat(1, 2), Rat(1, 2), Rat(1));
  const TargetPtr target = Rationals();
  for (int i = 0; i < Count(o, 10); ++i) {
    RandomOptions os, oi;
    os.seed = s.Bits();
    os.tangent_one_in = 0;
    oi.seed = s.Bits();
    const StrategyPtr sigma = RandomPlayer(p, os);
    // One swept round is a valid simple strategy.
    const LineSimplification line =
        SimplifyOnLine(*sigma, p, Position(), -1, 1, 1000);
    c.Check(line.complete, "sweep ran out of budget");
    RoundContext ctx;
    ctx.turn = 1;
    ctx.incoming_radius = 1;
    const ValidationReport rep = ValidateSimple(line.round, p, ctx);
    c.Check(rep.ok(), "swept round failed validation: " + rep.ToString());
    // Matched run.
    const SimplifiedStrategy simp(sigma, p);
    const StrategyPtr si = RandomPlayer(p, oi);
    const Trace t = Play(p, *si, simp, *target, 20);
    if (!c.Check(!RuleBroken(t), "simplified play broke a rule: " + Why(t))) {
      continue;
    }
    const Position pos = t.ToPosition();
    const Position matched = simp.MatchedRun(pos);
    for (size_t k = 1; k < pos.turn(); k += 2) {
      c.Check(pos[k] == matched[k], "II move differs from matched run");
      c.Check(matched[k] == sigma->Next(matched.Prefix(k)),
              "matched run is not sigma's run");
    }
  }
  return c.r;
}

SuiteResult Slack(const SuiteOptions& o) {
  Checker c("slack");
  RatSampler s(o.seed + 6);
  for (int i = 0; i < Count(o, 200); ++i) {
    const GameParams p = Params(s.Open(0, 1, 8), s.Open(0, 1, 8), Rat(1));
    RandomOptions oa, ob;
    oa.seed = s.Bits();
    ob.seed = s.Bits();
    const StrategyPtr a = RandomPlayer(p, oa), b = RandomPlayer(p, ob);
    Position pos;
    const int len = static_cast<int>(s.Int(1, 6));
    for (int k = 0; k < len; ++k) pos.Push((k % 2 ? b : a)->Next(pos));
    const Ball resp = (len % 2 ? b : a)->Next(pos);
    const Rat d = (pos.last().center.x() - resp.center.x()).Abs();
    const Rat want = pos.last().radius - resp.radius - d;
    const Rat got = StabilityRadiusFromSlack(p, pos, resp);
    c.Check(got == want, "slack " + got.ToString() + " != " + want.ToString());
    if (BallNested(pos.last(), resp) == Nesting::kTangent) {
      c.Check(got.IsZero(), "tangent response with nonzero slack");
    }
    const Ball bad(resp.center, resp.radius * 2);
    bool threw = false;
    try {
      StabilityRadiusFromSlack(p, pos, bad);
    } catch (const InvalidArgumentError&) {
      threw = true;
    }
    c.Check(threw, "illegal response accepted");
  }
  return c.r;
}

SuiteResult NonTangentCover(const SuiteOptions& o) {
  Checker c("non-tangent-cover");
  RatSampler s(o.seed + 7);
  const GameParams p =
      Params(Rat(1, 2), Rat(1, 2), Rat(1), Variant::kNonTangentSchmidt);
  RoundContext ctx;
  ctx.turn = 1;
  ctx.incoming_radius = 1;
  for (int i = 0; i < Count(o, 20); ++i) {
    RandomOptions os;
    os.seed = s.Bits();
    const StrategyPtr sigma = RandomPlayer(p, os);
    std::vector<Ball> cover;
    for (int k = 0; k < 6; ++k) {
      const Point z = Point::Line(s.Uniform(-2, 2));
      const Rat eps =
          ResponseSlack(*sigma, p, Position(), Ball(z, Rat(1)));
      cover.emplace_back(z, eps * s.Open(0, 1, 8));
    }
    const SimpleOneRound round = SimplifyNonTangent(*sigma, p, Position(), cover);
    const ValidationReport rep = ValidateSimple(round, p, ctx);
    c.Check(rep.ok(), "cover round failed validation: " + rep.ToString());
    // Inflate one ball past its slack.
    const size_t j = static_cast<size_t>(s.Int(0, 5));
    const Rat eps = ResponseSlack(*sigma, p, Position(),
                                  Ball(cover[j].center, Rat(1)));
    cover[j].radius = eps * (Rat(1) + s.Open(0, 1, 8));
    bool rejected = false;
    try {
      SimplifyNonTangent(*sigma, p, Position(), cover);
    } catch (const SimplifyError& e) {
      rejected = e.witness() && *e.witness() == cover[j].center;
    }
    c.Check(rejected, "oversized probe ball accepted");
  }
  return c.r;
}

SuiteResult GStar(const SuiteOptions& o) {
  Checker c("gstar");
  RatSampler s(o.seed + 8);
  const GameParams p = Params(Rat(1, 2), Rat(1, 2));
  const GStarStrategyPtr star = BisectionGStar(p, Ball(Point::Line(0), 1));
  const GStarRealI real(star);
  const GStarGame game(p);
  const TargetPtr target = Rationals();
  for (int i = 0; i < Count(o, 20); ++i) {
    RandomOptions oii;
    oii.seed = s.Bits();
    const StrategyPtr sii = RandomPlayer(p, oii);
    const Trace t = Play(p, real, *sii, *target, 12);
    if (!c.Check(!RuleBroken(t), "G* play broke a rule: " + Why(t))) continue;
    const AlignmentAudit audit = AuditAlignment(real, t.ToPosition());
    c.Check(audit.cells_ok && audit.responses_ok, audit.detail);
    GStarPosition g;
    for (size_t k = 0; k < audit.aligned.i_moves.size(); ++k) {
      const GStarCheck ci = game.CheckIMove(g, audit.aligned.i_moves[k]);
      c.Check(ci.legal, "I pair illegal: " + ci.reason);
      g.i_moves.push_back(audit.aligned.i_moves[k]);
      if (k < audit.aligned.indices.size()) {
        const GStarCheck cii = game.CheckIIMove(g, audit.aligned.indices[k]);
        c.Check(cii.legal, "II index illegal: " + cii.reason);
        g.indices.push_back(audit.aligned.indices[k]);
      }
    }
    const uint64_t bits = s.Bits();
    const GStarTrace gt = PlayGStar(
        game, *star,
        [bits](const GStarPosition& pos) {
          return static_cast<int>((bits >> pos.indices.size()) & 1);
        },
        *target, 6);
    c.Check(gt.outcome.reason == OutcomeReason::kDepthExhausted,
            "G* index play ended early: " + gt.outcome.note);
    c.Check(ParseGStarTrace(SerializeGStarTrace(gt)).pos == gt.pos,
            "G* trace did not round-trip");
  }
  return c.r;
}

SuiteResult Baire(const SuiteOptions& o) {
  Checker c("baire");
  RatSampler s(o.seed + 9);
  for (int i = 0; i < Count(o, 200); ++i) {
    std::vector<int64_t> stem(static_cast<size_t>(s.Int(0, 20)));
    for (int64_t& e : stem) e = s.Int(0, 9);
    c.Check(BaireReduce(BaireUnreduce(stem)) == stem, "stem round trip");
  }
  const GameParams p = Params(Rat(1, 2), Rat(1, 2), Rat(1, 2));
  for (int i = 0; i < Count(o, 20); ++i) {
    RandomOptions oi, oii;
    oi.seed = s.Bits();
    oii.seed = s.Bits();
    oi.space = oii.space = SpaceKind::kBaire;
    const StrategyPtr si = RandomPlayer(p, oi), sii = RandomPlayer(p, oii);
    Position pos;
    for (size_t k = 0; k < 16; ++k) {
      const Ball b = (k % 2 ? sii : si)->Next(pos);
      if (!c.Check(LegalMove(p, pos, b) == MoveVerdict::kLegal,
                   "random Baire move illegal")) {
        break;
      }
      const std::vector<int64_t> st = BaireReduce(b);
      if (!pos.empty()) {
        const std::vector<int64_t> prev = BaireReduce(pos.last());
        c.Check(st.size() == prev.size() + 1 && StemExtends(st, prev),
                "legal move did not extend the stem by one");
      } else {
        c.Check(st.empty(), "opening stem not empty");
      }
      c.Check(BaireReduce(BaireUnreduce(st)) == st, "ball round trip");
      pos.Push(b);
    }
  }
  return c.r;
}

RelationTable RandomTable(RatSampler& s, int rows) {
  RelationTable rel;
  for (int k = 0; k < rows; ++k) {
    rel.rows.push_back({Rat(s.Int(-3, 3)),
                        RationalAngle::FromSlope(s.Uniform(-4, 4, 8))});
  }
  return rel;
}

SuiteResult CylinderSeries(const SuiteOptions& o) {
  Checker c("cylinder-series");
  RatSampler s(o.seed + 10);
  for (int i = 0; i < Count(o, 10); ++i) {
    const Rat a = s.Open(0, Rat(1, 2), 16), b = s.Open(0, 1, 16);
    const Rat rho = s.Uniform(Rat(1, 4), 8, 8);
    const Rat x = s.Uniform(-4, 4, 8);
    const Rat r = CriticalRadius(a, b, rho);
    const DuelRun run = GreedyDuel(a, b, rho, x, RationalAngle::FromSlope(
                                                     s.Uniform(-2, 2, 8)),
                                   20);
    for (size_t k = 0; k <= 20; ++k) {
      c.Check(run.distances[2 * k] == r * (Rat(1) - (a * b).Pow(k)),
              "series identity at round " + std::to_string(k));
    }
    for (const Ball& ball : run.balls) {
      c.Check(ball.center.coords()[0] == x, "duel center left the x slice");
    }
  }
  return c.r;
}

SuiteResult CylinderResponder(const SuiteOptions& o) {
  Checker c("cylinder-responder");
  RatSampler s(o.seed + 11);
  const Rat a(1, 2), b(1, 2), rho(1);
  const GameParams p = Params(a, b, rho);
  for (int i = 0; i < Count(o, 20); ++i) {
    const RelationTable rel = RandomTable(s, 3);
    const TargetPtr target = CylinderTarget(rel, a, b, rho);
    const StrategyPtr ii = Responder(rel, a, b, rho);
    RandomOptions oi;
    oi.seed = s.Bits();
    oi.space = SpaceKind::kEuclid;
    oi.dimension = 3;
    StrategyPtr si = RandomPlayer(p, oi);
    if (i % 2 == 0) {
      si = WithOpening(
          Ball(Point::Euclid({rel.rows[0].x, Rat(0), Rat(0)}), rho), si);
    }
    const Trace t = Play(p, *si, *ii, *target, 20);
    c.Check(!RuleBroken(t), "responder play broke a rule: " + Why(t));
  }
  return c.r;
}

SuiteResult CylinderExtraction(const SuiteOptions& o) {
  Checker c("cylinder-extraction");
  RatSampler s(o.seed + 12);
  const Rat a(1, 2), b(1, 2), rho(1);
  for (int i = 0; i < Count(o, 20); ++i) {
    const RelationTable rel = RandomTable(s, 4);
    const StrategyPtr tau = Responder(rel, a, b, rho);
    const std::map<Rat, RationalAngle> f =
        ExtractUniformization(*tau, rel.Domain(), a, rho);
    for (const Rat& x : rel.Domain()) {
      c.Check(f.count(x) && rel.Contains(x, f.at(x)),
              "extracted angle not in the table at x=" + x.ToString());
    }
  }
  bool threw = false;
  try {
    ExtractUniformization(*Concentric(Params(a, b, rho)), {Rat(0)}, a, rho);
  } catch (const NonConformingError&) {
    threw = true;
  }
  c.Check(threw, "concentric strategy was not rejected");
  return c.r;
}

SuiteResult CylinderDeviation(const SuiteOptions& o) {
  Checker c("cylinder-deviation");
  RatSampler s(o.seed + 13);
  const Rat a(1, 2), b(1, 2), rho(1);
  const GameParams p = Params(a, b, rho);
  for (int i = 0; i < Count(o, 20); ++i) {
    const Rat x(s.Int(-2, 2));
    const RationalAngle ang = RationalAngle::FromSlope(s.Uniform(-3, 3, 8));
    RelationTable rel;
    rel.rows.push_back({x, ang});
    const size_t round = static_cast<size_t>(s.Int(1, 4));
    const Rat keep = s.Open(0, 1, 32);  // fraction of the pull still made
    const Vec in{Rat(0), -ang.cos, -ang.sin};
    const StrategyPtr si = FromFunction(
        [=](const Position& pos) {
          if (pos.empty()) return Ball(Point::Euclid({x, Rat(0), Rat(0)}), rho);
          const Rat r = ScheduledRadius(p, pos);
          Rat step = pos.last().radius - r;
          if (pos.turn() / 2 == round) step *= keep;
          return Ball(Translate(pos.last().center, Scale(in, step)), r);
        },
        "tangent-in with one deviation");
    const Trace t =
        Play(p, *si, *Responder(rel, a, b, rho),
             *CylinderTarget(rel, a, b, rho), 400);
    c.Check(t.outcome->verdict == Verdict::kWinII &&
                t.outcome->reason == OutcomeReason::kBallInside,
            "deviation at round " + std::to_string(round) +
                " was not punished: " + Why(t));
  }
  return c.r;
}

SuiteResult Hyperbola(const SuiteOptions& o) {
  Checker c("hyperbola");
  std::vector<uint64_t> seeds;
  for (int i = 0; i < Count(o, 4); ++i) seeds.push_back(o.seed * 131 + i);
  const ProbeReport rep = HyperbolaProbe(
      *RayUnionQ(), Rat(1, 8),
      {{Rat(1, 6), Rat(3, 4)}, {Rat(1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(1, 4)}},
      12, seeds,
      [](const GameParams& g) {
        return MaximizeDistanceFrom(g, Anchor::At(Point::Line(0)));
      },
      Rat(2));
  c.Check(rep.violations == 0, "probe violations:\n" + rep.ToString());
  c.r.checks = rep.rows.size();
  return c.r;
}

}  // namespace

const std::vector<Suite>& InvariantSuites() {
  static const std::vector<Suite>* suites = new std::vector<Suite>{
      {"radius-schedule", RadiusSchedule},
      {"tangency", Tangency},
      {"trace-roundtrip", TraceRoundTrip},
      {"transfer-ii", TransferII},
      {"transfer-i", TransferI},
      {"simplify", Simplify},
      {"slack", Slack},
      {"non-tangent-cover", NonTangentCover},
      {"gstar", GStar},
      {"baire", Baire},
      {"cylinder-series", CylinderSeries},
      {"cylinder-responder", CylinderResponder},
      {"cylinder-extraction", CylinderExtraction},
      {"cylinder-deviation", CylinderDeviation},
      {"hyperbola", Hyperbola},
  };
  return *suites;
}

std::vector<SuiteResult> RunInvariantSuites(const SuiteOptions& options,
                                            const std::string& filter) {
  std::vector<SuiteResult> out;
  for (const Suite& s : InvariantSuites()) {
    if (!filter.empty() && s.name.find(filter) == std::string::npos) continue;
    try {
      out.push_back(s.run(options));
    } catch (const std::exception& e) {
      SuiteResult r;
      r.name = s.name;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string FormatSuiteTable(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  size_t failed = 0;
  os << std::left << std::setw(22) << "suite" << std::setw(9) << "checks"
     << "result\n";
  for (const SuiteResult& r : results) {
    os << std::left << std::setw(22) << r.name << std::setw(9) << r.checks
       << (r.passed ? "pass" : "FAIL");
    if (!r.passed) {
      ++failed;
      os << "  " << r.detail;
    }
    os << '\n';
  }
  os << results.size() - failed << "/" << results.size() << " suites passed\n";
  return os.str();
}

}  // namespace schmidt
