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

// The rational Schmidt game and strategy transfer between parameter pairs
// (alpha, beta) and (alpha', beta') on the same hyperbola alpha*beta = p.
//
// Transfer for II: a strategy tau for II in the rational (alpha', beta') game
// becomes a strategy for II in the (alpha, beta) game. I's real centers are
// snapped into the dense set D within eps_n, fed to tau, and tau's centers are
// replayed with the real radii.
//
// Transfer for I runs the same construction with the roles swapped. A
// strategy sigma for I in the rational (alpha, beta) game with opening radius
// rho_s drives I in the (alpha', beta') game with opening radius rho chosen
// strictly inside RhoPrimeBounds(alpha, beta, alpha', beta', rho_s). Real I
// centers are sigma's centers; II's real centers are snapped within
//   eps'_n = (alpha beta)^n min{rho_s(1 - alpha) - rho(1 - alpha'),
//                              alpha' rho (1 - beta') - alpha rho_s (1 - beta)}.
// The first term keeps the shadow II move nested in the shadow I ball, the
// second keeps the real I move nested in the real II ball; both are positive
// exactly when rho lies strictly inside the bounds.

#ifndef SCHMIDT_TRANSFER_H_
#define SCHMIDT_TRANSFER_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/game.h"
#include "schmidt/strategy.h"

namespace schmidt {

// A countable dense set D with a deterministic snapping rule.
class DenseSet {
 public:
  virtual ~DenseSet() = default;
  virtual bool Contains(const Point& x) const = 0;
  // x itself when x is in D, otherwise the first member of D (by increasing
  // denominator, then numerator, per coordinate) with d(x, y) < eps.
  virtual std::optional<Point> Snap(const Point& x, const Rat& eps) const = 0;
  virtual std::string Describe() const = 0;
};
using DenseSetPtr = std::shared_ptr<const DenseSet>;

// All rational points (and all eventually constant Baire sequences).
DenseSetPtr AllRationals();
// Dyadic rationals on the line and in R^n.
DenseSetPtr Dyadics();
// Rationals with denominator <= max_den: not dense, so snapping can fail.
DenseSetPtr BoundedDenominator(long max_den);

struct TransferParams {
  Rat alpha{1, 4}, beta{1, 2};
  Rat alpha_p{1, 2}, beta_p{1, 4};
  DenseSetPtr dense = AllRationals();

  // 0 < alpha < alpha' < 1, 0 < beta' < beta < 1, alpha beta = alpha' beta'.
  void Validate() const;
  GameParams Low() const;   // the (alpha, beta) game
  GameParams High() const;  // the (alpha', beta') game
};

// (rho (alpha/alpha') (1-beta)/(1-beta'), rho (1-alpha)/(1-alpha')).
std::pair<Rat, Rat> RhoPrimeBounds(const Rat& alpha, const Rat& beta,
                                   const Rat& alpha_p, const Rat& beta_p,
                                   const Rat& rho);

// First alpha^n beta^m q strictly inside (lo, hi). Candidates are ordered by
// cost n + m + den(q), then by n + m, then n, then numerator.
struct RhoPick {
  Rat value;
  int n = 0, m = 0;
  Rat q;
};
RhoPick PickRhoPrimeDetailed(const Rat& lo, const Rat& hi, const Rat& alpha,
                             const Rat& beta);
Rat PickRhoPrime(const Rat& lo, const Rat& hi, const Rat& alpha,
                 const Rat& beta);

// eps_n = min{(ab)^n (rho(1-a) - rho'(1-a')), (ab)^(n-1) (a' rho'(1-b') -
// a rho (1-b))}, with the exponent n-1 kept as is at n = 0.
Rat TransferEpsilon(long n, const Rat& alpha, const Rat& beta,
                    const Rat& alpha_p, const Rat& beta_p, const Rat& rho,
                    const Rat& rho_p);
// eps'_n of the I-side transfer (see the file comment).
Rat TransferEpsilonI(long n, const Rat& alpha, const Rat& beta,
                     const Rat& alpha_p, const Rat& beta_p, const Rat& rho_s,
                     const Rat& rho);

// One turn of a transfer run: the real ball and its shadow.
struct DualStep {
  size_t turn = 0;
  Ball real;
  Ball shadow;
  bool snapped = false;  // true when the shadow center was snapped
  Rat eps;               // snapping radius (when snapped)
  std::optional<Rat> snap_distance;  // exact when rational
  bool snap_within = true;           // d(real, shadow) < eps
};

struct DualRun {
  Rat rho;    // opening radius of the real game
  Rat rho_p;  // opening radius of the shadow game
  std::vector<DualStep> steps;
  Position ShadowPosition() const;
};

// Aligned per-turn text: "turn <t> real <c> <r> shadow <c> <r> [eps=...]".
std::string SerializeDualRun(const DualRun& run);

class TransferredII : public Strategy {
 public:
  // tau plays II in the rational (alpha', beta') game.
  TransferredII(StrategyPtr tau, TransferParams params);

  Ball Next(const Position& pos) const override;
  std::string Describe() const override;

  // The shadow of the real position pos (I's first move required).
  DualRun ComputeShadow(const Position& pos) const;
  const TransferParams& params() const { return params_; }

 private:
  StrategyPtr tau_;
  TransferParams params_;
};

class TransferredI : public Strategy {
 public:
  // sigma plays I in the rational (alpha, beta) game; the transferred
  // strategy plays I in the (alpha', beta') game.
  TransferredI(StrategyPtr sigma, TransferParams params);

  Ball Next(const Position& pos) const override;
  std::string Describe() const override;

  DualRun ComputeShadow(const Position& pos) const;
  const TransferParams& params() const { return params_; }

 private:
  StrategyPtr sigma_;
  TransferParams params_;
};

// Walks the balls of a run through the target's ball oracles.
Outcome AdjudicateBalls(const std::vector<Ball>& balls,
                        const TargetSet& target);

struct ProbeRow {
  Rat alpha, beta, alpha_p, beta_p;
  uint64_t seed = 0;
  Verdict real = Verdict::kUndecided;
  Verdict shadow = Verdict::kUndecided;
  std::string status;  // consistent | violation | inconclusive
  std::string note;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  int violations = 0;
  int inconclusive = 0;
  std::string ToString() const;
};

// Makes II's rational-game strategy for the given (alpha', beta') game.
using ShadowFactory = std::function<StrategyPtr(const GameParams&)>;

// For each adjacent pair of samples (sorted by alpha), plays transferred II
// against seeded random I in the lower-alpha game and compares the real
// verdict with the verdict of the shadow run. A real certificate
// contradicting a shadow certificate is a violation.
ProbeReport HyperbolaProbe(const TargetSet& target, const Rat& p,
                           std::vector<std::pair<Rat, Rat>> samples,
                           size_t depth, const std::vector<uint64_t>& seeds,
                           const ShadowFactory& tau_factory,
                           const Rat& opening_radius = Rat(1));

}  // namespace schmidt

#endif  // SCHMIDT_TRANSFER_H_
