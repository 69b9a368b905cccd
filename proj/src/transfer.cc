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

#include "schmidt/transfer.h"

#include <algorithm>
#include <sstream>

#include "schmidt/builtins.h"
#include "schmidt/error.h"

namespace schmidt {
namespace {

bool IsDyadic(const Rat& x) { return x.den() == (x.den() & -x.den()); }

// Smallest p/q with q in `dens` order and |p/q - x| < e; dens yields the
// candidate denominators in order, returning 0 when exhausted.
template <typename NextDen>
std::optional<Rat> SnapCoordinate(const Rat& x, const Rat& e, NextDen next) {
  for (mpz_class q = next(); q != 0; q = next()) {
    const Rat qq(q, mpz_class(1));
    const Rat p(((x - e) * qq).Floor() + 1, mpz_class(1));
    const Rat y = p / qq;
    if (y < x + e) return y;
  }
  return std::nullopt;
}

// Shared per-coordinate snapping for the line and R^n.
class CoordinateDenseSet : public DenseSet {
 public:
  std::optional<Point> Snap(const Point& x, const Rat& eps) const override {
    if (!eps.IsPositive()) return std::nullopt;
    if (Contains(x)) return x;
    if (x.kind() == SpaceKind::kBaire) return std::nullopt;
    const Vec& c = x.coords();
    const Rat e = eps / Rat(static_cast<long>(c.size()));
    Vec out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
      if (InD(c[i])) {
        out[i] = c[i];
        continue;
      }
      std::optional<Rat> y = SnapOne(c[i], e);
      if (!y) return std::nullopt;
      out[i] = *y;
    }
    return c.size() == 1 ? Point::Line(out[0]) : Point::Euclid(out);
  }

  bool Contains(const Point& x) const override {
    if (x.kind() == SpaceKind::kBaire) return true;
    return std::all_of(x.coords().begin(), x.coords().end(),
                       [&](const Rat& r) { return InD(r); });
  }

 protected:
  virtual bool InD(const Rat& r) const = 0;
  virtual std::optional<Rat> SnapOne(const Rat& x, const Rat& e) const = 0;
};

class AllRationalsSet : public CoordinateDenseSet {
 public:
  std::string Describe() const override { return "Q"; }

 protected:
  bool InD(const Rat&) const override { return true; }
  std::optional<Rat> SnapOne(const Rat& x, const Rat&) const override {
    return x;
  }
};

class DyadicSet : public CoordinateDenseSet {
 public:
  std::string Describe() const override { return "dyadic"; }

 protected:
  bool InD(const Rat& r) const override { return IsDyadic(r); }
  std::optional<Rat> SnapOne(const Rat& x, const Rat& e) const override {
    mpz_class q(1);
    return SnapCoordinate(x, e, [&]() {
      const mpz_class out = q;
      q *= 2;
      return out;
    });
  }
};

class BoundedDenominatorSet : public CoordinateDenseSet {
 public:
  explicit BoundedDenominatorSet(long n) : n_(n) {}
  std::string Describe() const override {
    return "denominator<=" + std::to_string(n_);
  }

 protected:
  bool InD(const Rat& r) const override { return r.den() <= n_; }
  std::optional<Rat> SnapOne(const Rat& x, const Rat& e) const override {
    long q = 0;
    return SnapCoordinate(x, e, [&]() {
      return ++q <= n_ ? mpz_class(q) : mpz_class(0);
    });
  }

 private:
  long n_;
};

Point SnapOrFail(const DenseSet& d, const Point& x, const Rat& eps) {
  std::optional<Point> y = d.Snap(x, eps);
  if (!y) {
    throw StrategyFailure(StrategyFailureKind::kSnapFailure,
                          "no point of " + d.Describe() + " within " +
                              eps.ToString() + " of " + x.ToString());
  }
  return *y;
}

void FillSnap(DualStep* s, const Rat& eps) {
  s->snapped = true;
  s->eps = eps;
  s->snap_distance = ExactDistance(s->real.center, s->shadow.center);
  s->snap_within = DistCmp(s->real.center, s->shadow.center, eps) < 0;
}

}  // namespace

DenseSetPtr AllRationals() { return std::make_shared<AllRationalsSet>(); }
DenseSetPtr Dyadics() { return std::make_shared<DyadicSet>(); }
DenseSetPtr BoundedDenominator(long max_den) {
  if (max_den < 1) throw InvalidArgumentError("denominator bound must be >= 1");
  return std::make_shared<BoundedDenominatorSet>(max_den);
}

void TransferParams::Validate() const {
  const Rat zero(0), one(1);
  if (!(zero < alpha && alpha < alpha_p && alpha_p < one)) {
    throw InvalidArgumentError("need 0 < alpha < alpha' < 1");
  }
  if (!(zero < beta_p && beta_p < beta && beta < one)) {
    throw InvalidArgumentError("need 0 < beta' < beta < 1");
  }
  if (alpha * beta != alpha_p * beta_p) {
    throw InvalidArgumentError("need alpha*beta == alpha'*beta'");
  }
  if (!dense) throw InvalidArgumentError("no dense set");
}

GameParams TransferParams::Low() const {
  GameParams g;
  g.alpha = alpha;
  g.beta = beta;
  return g;
}

GameParams TransferParams::High() const {
  GameParams g;
  g.alpha = alpha_p;
  g.beta = beta_p;
  return g;
}

std::pair<Rat, Rat> RhoPrimeBounds(const Rat& alpha, const Rat& beta,
                                   const Rat& alpha_p, const Rat& beta_p,
                                   const Rat& rho) {
  TransferParams t{alpha, beta, alpha_p, beta_p, AllRationals()};
  t.Validate();
  if (!rho.IsPositive()) throw InvalidArgumentError("rho must be positive");
  const Rat one(1);
  return {rho * (alpha / alpha_p) * (one - beta) / (one - beta_p),
          rho * (one - alpha) / (one - alpha_p)};
}

RhoPick PickRhoPrimeDetailed(const Rat& lo, const Rat& hi, const Rat& alpha,
                             const Rat& beta) {
  if (!(lo < hi)) throw InvalidArgumentError("empty bounds for rho'");
  if (lo.IsNegative()) throw InvalidArgumentError("bounds must be positive");
  constexpr long kMaxCost = 1 << 20;
  for (long cost = 1; cost <= kMaxCost; ++cost) {
    for (long s = 0; s < cost; ++s) {
      const Rat den(cost - s);
      for (long n = 0; n <= s; ++n) {
        const long m = s - n;
        const Rat f = alpha.Pow(n) * beta.Pow(m);
        const Rat p(((lo * den) / f).Floor() + 1, mpz_class(1));
        const Rat value = f * p / den;
        if (value < hi) {
          return {value, static_cast<int>(n), static_cast<int>(m), p / den};
        }
      }
    }
  }
  throw InvalidArgumentError("rho' search exhausted");
}

Rat PickRhoPrime(const Rat& lo, const Rat& hi, const Rat& alpha,
                 const Rat& beta) {
  return PickRhoPrimeDetailed(lo, hi, alpha, beta).value;
}

Rat TransferEpsilon(long n, const Rat& alpha, const Rat& beta,
                    const Rat& alpha_p, const Rat& beta_p, const Rat& rho,
                    const Rat& rho_p) {
  const Rat one(1);
  const Rat ab = alpha * beta;
  const Rat first = ab.Pow(n) * (rho * (one - alpha) - rho_p * (one - alpha_p));
  const Rat second = ab.Pow(n - 1) * (alpha_p * rho_p * (one - beta_p) -
                                      alpha * rho * (one - beta));
  return Min(first, second);
}

Rat TransferEpsilonI(long n, const Rat& alpha, const Rat& beta,
                     const Rat& alpha_p, const Rat& beta_p, const Rat& rho_s,
                     const Rat& rho) {
  const Rat one(1);
  const Rat scale = (alpha * beta).Pow(n);
  return scale * Min(rho_s * (one - alpha) - rho * (one - alpha_p),
                     alpha_p * rho * (one - beta_p) -
                         alpha * rho_s * (one - beta));
}

Position DualRun::ShadowPosition() const {
  Position p;
  for (const DualStep& s : steps) p.Push(s.shadow);
  return p;
}

std::string SerializeDualRun(const DualRun& run) {
  std::ostringstream os;
  os << "rho " << run.rho << " rho' " << run.rho_p << '\n';
  for (const DualStep& s : run.steps) {
    os << "turn " << s.turn << " real " << s.real << " shadow " << s.shadow;
    if (s.snapped) {
      os << " eps=" << s.eps;
      if (s.snap_distance) os << " snap=" << *s.snap_distance;
      os << (s.snap_within ? " within" : " OUTSIDE");
    }
    os << '\n';
  }
  return os.str();
}

TransferredII::TransferredII(StrategyPtr tau, TransferParams params)
    : tau_(std::move(tau)), params_(std::move(params)) {
  params_.Validate();
}

DualRun TransferredII::ComputeShadow(const Position& pos) const {
  if (pos.empty()) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "the shadow needs I's first move");
  }
  const TransferParams& t = params_;
  DualRun run;
  run.rho = pos[0].radius;
  const auto [lo, hi] =
      RhoPrimeBounds(t.alpha, t.beta, t.alpha_p, t.beta_p, run.rho);
  run.rho_p = PickRhoPrime(lo, hi, t.alpha, t.beta);
  const Rat ab = t.alpha * t.beta;
  Position shadow;
  for (size_t k = 0; k < pos.turn(); ++k) {
    const long n = static_cast<long>(k / 2);
    DualStep step;
    step.turn = k;
    step.real = pos[k];
    if (k % 2 == 0) {
      const Rat eps = TransferEpsilon(n, t.alpha, t.beta, t.alpha_p, t.beta_p,
                                      run.rho, run.rho_p);
      step.shadow =
          Ball(SnapOrFail(*t.dense, pos[k].center, eps), ab.Pow(n) * run.rho_p);
      FillSnap(&step, eps);
    } else {
      step.shadow = tau_->Next(shadow);
    }
    shadow.Push(step.shadow);
    run.steps.push_back(std::move(step));
  }
  return run;
}

Ball TransferredII::Next(const Position& pos) const {
  if (pos.mover() != Player::kII) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "transferred II asked to move for I");
  }
  const DualRun run = ComputeShadow(pos);
  const Ball reply = tau_->Next(run.ShadowPosition());
  const long n = static_cast<long>(pos.turn() / 2);
  return Ball(reply.center,
              params_.alpha * (params_.alpha * params_.beta).Pow(n) * run.rho);
}

std::string TransferredII::Describe() const {
  return "transfer_II(" + tau_->Describe() + ")";
}

TransferredI::TransferredI(StrategyPtr sigma, TransferParams params)
    : sigma_(std::move(sigma)), params_(std::move(params)) {
  params_.Validate();
}

DualRun TransferredI::ComputeShadow(const Position& pos) const {
  const TransferParams& t = params_;
  DualRun run;
  Position shadow;
  const Ball opening = sigma_->Next(shadow);
  run.rho_p = opening.radius;  // the rational game's opening radius rho_s
  const auto [lo, hi] =
      RhoPrimeBounds(t.alpha, t.beta, t.alpha_p, t.beta_p, run.rho_p);
  run.rho = PickRhoPrime(lo, hi, t.alpha, t.beta);
  const Rat ab = t.alpha * t.beta;
  for (size_t k = 0; k < pos.turn(); ++k) {
    const long n = static_cast<long>(k / 2);
    DualStep step;
    step.turn = k;
    step.real = pos[k];
    if (k % 2 == 0) {
      step.shadow = k == 0 ? opening : sigma_->Next(shadow);
    } else {
      const Rat eps = TransferEpsilonI(n, t.alpha, t.beta, t.alpha_p,
                                       t.beta_p, run.rho_p, run.rho);
      step.shadow = Ball(SnapOrFail(*t.dense, pos[k].center, eps),
                         t.alpha * ab.Pow(n) * run.rho_p);
      FillSnap(&step, eps);
    }
    shadow.Push(step.shadow);
    run.steps.push_back(std::move(step));
  }
  return run;
}

Ball TransferredI::Next(const Position& pos) const {
  if (pos.mover() != Player::kI) {
    throw StrategyFailure(StrategyFailureKind::kPrecondition,
                          "transferred I asked to move for II");
  }
  const DualRun run = ComputeShadow(pos);
  const Ball shadow_move = sigma_->Next(run.ShadowPosition());
  const long n = static_cast<long>(pos.turn() / 2);
  return Ball(shadow_move.center,
              (params_.alpha * params_.beta).Pow(n) * run.rho);
}

std::string TransferredI::Describe() const {
  return "transfer_I(" + sigma_->Describe() + ")";
}

Outcome AdjudicateBalls(const std::vector<Ball>& balls,
                        const TargetSet& target) {
  Outcome o;
  for (size_t i = 0; i < balls.size(); ++i) {
    if (target.BallInside(balls[i]) == Truth::kYes) {
      o.verdict = Verdict::kWinII;
      o.reason = OutcomeReason::kBallInside;
      o.depth = i;
      o.ball = balls[i];
      return o;
    }
    if (target.BallDisjoint(balls[i]) == Truth::kYes) {
      o.verdict = Verdict::kWinI;
      o.reason = OutcomeReason::kBallDisjoint;
      o.depth = i;
      o.ball = balls[i];
      return o;
    }
  }
  o.depth = balls.size();
  if (!balls.empty()) o.ball = balls.back();
  return o;
}

std::string ProbeReport::ToString() const {
  std::ostringstream os;
  os << "alpha beta alpha' beta' seed real shadow status\n";
  for (const ProbeRow& r : rows) {
    os << r.alpha << ' ' << r.beta << ' ' << r.alpha_p << ' ' << r.beta_p
       << ' ' << r.seed << ' ' << VerdictName(r.real) << ' '
       << VerdictName(r.shadow) << ' ' << r.status;
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << '\n';
  }
  os << "violations " << violations << " inconclusive " << inconclusive
     << " rows " << rows.size() << '\n';
  return os.str();
}

ProbeReport HyperbolaProbe(const TargetSet& target, const Rat& p,
                           std::vector<std::pair<Rat, Rat>> samples,
                           size_t depth, const std::vector<uint64_t>& seeds,
                           const ShadowFactory& tau_factory,
                           const Rat& opening_radius) {
  for (const auto& [a, b] : samples) {
    if (a * b != p) {
      throw InvalidArgumentError("sample (" + a.ToString() + "," +
                                 b.ToString() + ") is off the hyperbola");
    }
  }
  std::sort(samples.begin(), samples.end());
  ProbeReport report;
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    TransferParams t;
    t.alpha = samples[i].first;
    t.beta = samples[i].second;
    t.alpha_p = samples[i + 1].first;
    t.beta_p = samples[i + 1].second;
    t.Validate();
    const StrategyPtr tau = tau_factory(t.High());
    const TransferredII transferred(tau, t);
    for (uint64_t seed : seeds) {
      ProbeRow row;
      row.alpha = t.alpha;
      row.beta = t.beta;
      row.alpha_p = t.alpha_p;
      row.beta_p = t.beta_p;
      row.seed = seed;
      RandomOptions o;
      o.seed = seed;
      o.opening_radius = opening_radius;
      const StrategyPtr player_i = RandomPlayer(t.Low(), o);
      const Trace trace = Play(t.Low(), *player_i, transferred, target, depth);
      const Outcome& real = *trace.outcome;
      row.real = real.verdict;
      const Position pos = trace.ToPosition();
      if (real.reason == OutcomeReason::kViolation ||
          real.reason == OutcomeReason::kResignation) {
        row.status = "violation";
        row.note = "real run ended by " +
                   std::string(OutcomeReasonName(real.reason)) + ": " +
                   real.note;
        ++report.violations;
        report.rows.push_back(std::move(row));
        continue;
      }
      const DualRun dual = transferred.ComputeShadow(pos);
      const Outcome shadow =
          AdjudicateBalls(dual.ShadowPosition().balls(), target);
      row.shadow = shadow.verdict;
      const bool contradiction =
          (real.verdict == Verdict::kWinI && shadow.verdict == Verdict::kWinII) ||
          (real.verdict == Verdict::kWinII && shadow.verdict == Verdict::kWinI);
      if (contradiction) {
        row.status = "violation";
        ++report.violations;
      } else if (real.verdict == Verdict::kUndecided ||
                 shadow.verdict == Verdict::kUndecided) {
        row.status = "inconclusive";
        ++report.inconclusive;
      } else {
        row.status = "consistent";
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace schmidt
