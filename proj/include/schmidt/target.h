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

#ifndef SCHMIDT_TARGET_H_
#define SCHMIDT_TARGET_H_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/metric.h"

namespace schmidt {

enum class Membership { kIn, kOut, kUnknown };
enum class Truth { kYes, kNo, kUnknown };

const char* MembershipName(Membership m);
const char* TruthName(Truth t);

// A target set T for player II, queried through three-valued oracles.
//
// Soundness contract: BallInside(B) == kYes implies PointQuery(p) == kIn for
// every p in B; BallDisjoint(B) == kYes implies PointQuery(p) == kOut for every
// p in B. kNo answers are equally binding: BallInside(B) == kNo means B is not
// contained in T. When an oracle cannot decide it answers kUnknown.
class TargetSet {
 public:
  virtual ~TargetSet() = default;
  virtual Membership PointQuery(const Point& p) const = 0;
  virtual Truth BallInside(const Ball& b) const = 0;
  virtual Truth BallDisjoint(const Ball& b) const = 0;
  virtual std::string Describe() const = 0;
};

using TargetPtr = std::shared_ptr<const TargetSet>;

// T = (-inf, -1] u [1, inf) u Q on the line.
TargetPtr RayUnionQ();
TargetPtr Rationals();
TargetPtr CoRationals();
// Closed interval [lo, hi]; either end may be infinite (nullopt).
TargetPtr ClosedInterval(std::optional<Rat> lo, std::optional<Rat> hi);
// The whole space and the empty set, for any space.
TargetPtr Everything();
TargetPtr Nothing();
// Baire space cylinder of all sequences extending `stem`.
TargetPtr StemCylinder(std::vector<int64_t> stem);

TargetPtr Union(TargetPtr a, TargetPtr b);
TargetPtr Complement(TargetPtr t);

// Parses the target mini-language:
//   rayq | Q | coQ | all | none | interval:a,b | stem:i.j.k
//   cylinder:<file> | union(t1,t2,...) | compl(t)
// `cylinder_factory` resolves "cylinder:<file>" (it needs game parameters);
// when empty, cylinder targets are rejected.
using CylinderFactory = std::function<TargetPtr(const std::string& path)>;
TargetPtr ParseTarget(std::string_view text,
                      const CylinderFactory& cylinder_factory = {});

}  // namespace schmidt

#endif  // SCHMIDT_TARGET_H_
