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

// Seeded invariant suites over every module, for `schmidt verify` and the
// property tests.

#ifndef SCHMIDT_VERIFY_H_
#define SCHMIDT_VERIFY_H_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schmidt/rational.h"

namespace schmidt {

struct SuiteOptions {
  uint64_t seed = 7;
  // Multiplies the number of random cases in every suite.
  int scale = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  size_t checks = 0;
  std::string detail;  // first failure
};

struct Suite {
  std::string name;
  std::function<SuiteResult(const SuiteOptions&)> run;
};

const std::vector<Suite>& InvariantSuites();

// Runs the suites whose name contains `filter` (all when empty).
std::vector<SuiteResult> RunInvariantSuites(const SuiteOptions& options,
                                            const std::string& filter = "");

// "suite checks result" table with a trailing summary line.
std::string FormatSuiteTable(const std::vector<SuiteResult>& results);

// A random rational in [lo, hi] with denominator at most max_den.
class RatSampler {
 public:
  explicit RatSampler(uint64_t seed);
  Rat Uniform(const Rat& lo, const Rat& hi, long max_den = 64);
  // Strictly inside (lo, hi).
  Rat Open(const Rat& lo, const Rat& hi, long max_den = 64);
  int64_t Int(int64_t lo, int64_t hi);
  uint64_t Bits();

 private:
  std::mt19937_64 rng_;
};

}  // namespace schmidt

#endif  // SCHMIDT_VERIFY_H_
