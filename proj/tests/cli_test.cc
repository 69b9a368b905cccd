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

// Runs the schmidt binary end to end.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "schmidt/config.h"
#include "schmidt/reductions.h"
#include "schmidt/text.h"

namespace schmidt {
namespace {

struct Result {
  int code = -1;
  std::string out;
};

// stderr is folded into out when merge is set, else discarded.
Result Run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(SCHMIDT_CLI) + " " + args +
                          (merge ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool Has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string TempPath(const std::string& name) {
  return std::string(SCHMIDT_BUILD_DIR) + "/" + name;
}

TEST_CASE("play: maximising the distance") {
  const Result r = Run(
      "play --alpha 1/4 --beta 1/2 --rho 2 --space line --target rayq "
      "--II maxdist:0 --depth 8");
  CHECK(r.code == 0);
  const Trace t = ParseTrace(r.out);
  REQUIRE(t.outcome);
  CHECK(t.outcome->verdict == Verdict::kWinII);
  CHECK(t.outcome->depth == 1);
  CHECK(t.outcome->ball->radius == Rat(1, 2));
}

TEST_CASE("play: a tangent move loses the strict game") {
  const Result r = Run(
      "play --variant non-tangent --alpha 1/2 --beta 1/2 --rho 1 "
      "--II tangent:-1 --target Q --depth 6");
  CHECK(r.code == 0);
  const Trace t = ParseTrace(r.out);
  CHECK(t.outcome->verdict == Verdict::kWinI);
  CHECK(t.outcome->reason == OutcomeReason::kViolation);
  CHECK(t.moves.back().verdict == MoveVerdict::kIllegalTangent);
}

TEST_CASE("play: Baire traces reduce to stems") {
  for (const char* seed : {"1", "2", "3"}) {
    const Result r = Run(std::string("play --space baire --alpha 1/2 --beta 1/2 "
                                     "--rho 1/2 --target stem:9.9.9.9.9.9.9.9 "
                                     "--depth 12 --I random:") + seed);
    CHECK((r.code == 0 || r.code == 3));
    const Trace t = ParseTrace(r.out);
    REQUIRE_FALSE(t.moves.empty());
    std::vector<int64_t> prev;
    for (const TraceEntry& m : t.moves) {
      REQUIRE(m.verdict == MoveVerdict::kLegal);
      const std::vector<int64_t> stem = BaireReduce(m.ball);
      CHECK(stem.size() == m.turn);
      CHECK(StemExtends(stem, prev));
      CHECK(BaireUnreduce(stem).radius == m.ball.radius);
      prev = stem;
    }
  }
}

TEST_CASE("play: undecided exits 3 and traces round trip") {
  const std::string out = TempPath("cli_test_trace.txt");
  const Result r = Run("play --alpha 1/3 --beta 2/5 --rho 1 --target Q --depth 10 --out " + out);
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  const std::string text = ReadFile(out);
  const Trace t = ParseTrace(text);
  CHECK(t.outcome->verdict == Verdict::kUndecided);
  CHECK(t.moves.size() == 10);
  CHECK(SerializeTrace(t) == text);
}

TEST_CASE("parse errors exit 2 and name the field") {
  struct Case {
    const char* args;
    const char* field;
  };
  const Case cases[] = {
      {"play --alpha 0.5", "alpha"},
      {"play --rho 1/0", "rho"},
      {"play --II bogus", "II"},
      {"play --I tangent", "I"},
      {"play --target reals", "target"},
      {"play --space euclid:x", "space"},
      {"play --variant fancy", "variant"},
      {"transfer --alpha-p 3/2", "alpha/beta/alpha-p/beta-p"},
  };
  for (const Case& c : cases) {
    const Result r = Run(c.args, true);
    INFO(std::string(c.args));
    CHECK(r.code == 2);
    CHECK(Has(r.out, std::string("error: ") + c.field));
  }
  CHECK(Run("play --no-such-flag").code == 2);
  CHECK(Run("dance").code == 2);
}

TEST_CASE("out-of-range parameters are field errors") {
  const Result r = Run("play --alpha 3/2", true);
  CHECK(r.code == 2);
  CHECK(Has(r.out, "alpha must lie in (0,1)"));
}

TEST_CASE("strategy failures outside play exit 1") {
  const Result r = Run("play --space baire --I avoid", true);
  CHECK(r.code == 1);
}

TEST_CASE("config files, with flags taking precedence") {
  const std::string cfg = TempPath("cli_test.cfg");
  {
    std::ofstream f(cfg);
    f << "# example-style config\n"
         "alpha = 1/4\nbeta = 1/2\nrho = 2\ntarget = rayq\nII = maxdist:0\n"
         "depth = 8\n";
  }
  const Result a = Run("play --config " + cfg);
  CHECK(a.code == 0);
  CHECK(ParseTrace(a.out).outcome->depth == 1);
  const Result b = Run("play --config " + cfg + " --target Q --II concentric");
  CHECK(b.code == 3);
  {
    std::ofstream f(cfg);
    f << "alpha 1/4\n";
  }
  const Result c = Run("play --config " + cfg, true);
  CHECK(c.code == 2);
  CHECK(Has(c.out, "config line 1"));
}

TEST_CASE("transfer prints the parameters") {
  const Result r = Run(
      "transfer --alpha 1/4 --beta 1/2 --alpha-p 1/2 --beta-p 1/4 --rho 1 "
      "--target Q --depth 12");
  CHECK(r.code == 3);
  CHECK(Has(r.out, "bounds (1/3,3/2)\n"));
  CHECK(Has(r.out, "rho' 1\n"));
  CHECK(Has(r.out, "eps_0 1/4\n"));
  CHECK(Has(r.out, "eps_1 1/32\n"));
  CHECK_FALSE(Has(r.out, "OUTSIDE"));
  CHECK(Has(r.out, "turn 11 real"));
  const Result i = Run(
      "transfer --side I --alpha 1/4 --beta 1/2 --alpha-p 1/2 --beta-p 1/4 "
      "--rho 1 --target Q --depth 8 --dense dyadics");
  CHECK(i.code == 3);
  CHECK_FALSE(Has(i.out, "OUTSIDE"));
}

TEST_CASE("simplify emits a valid document") {
  const Result r = Run("simplify --alpha 1/2 --beta 1/2 --rho 1 --sigma concentric --from 0 --to 1");
  CHECK(r.code == 0);
  CHECK(Has(r.out, "cell interval [0,1/2) -> center [0] radius 1/2"));
  CHECK(Has(r.out, "cell interval [1/2,1) -> center [1/2] radius 1/2"));
  CHECK(Has(r.out, "# validation: ok"));
  const Result t = Run("simplify --alpha 1/2 --beta 1/2 --rho 1 --sigma tangent:1 --from 0 --to 1", true);
  CHECK(t.code == 1);
  const Result nt = Run(
      "simplify --variant non-tangent --alpha 1/2 --beta 1/2 --rho 1 "
      "--sigma concentric --cover '0:1/2;1/4:1/2'");
  CHECK(nt.code == 0);
  CHECK(Has(nt.out, "minus"));
}

TEST_CASE("cylinder modes") {
  const Result duel = Run("cylinder duel --alpha 1/2 --beta 1/2 --rho 1 --depth 2");
  CHECK(duel.code == 0);
  CHECK(Has(duel.out, "# critical radius 1/3"));
  CHECK(Has(duel.out, "4 5/16\n"));
  const std::string table = std::string(SCHMIDT_TESTDATA) + "/three_rows.txt";
  const Result ex = Run("cylinder extract " + table + " --alpha 1/2 --beta 1/2 --rho 1");
  CHECK(ex.code == 0);
  CHECK(Has(ex.out, "0 3/5 4/5 yes"));
  CHECK_FALSE(Has(ex.out, " no"));
  const Result ver = Run("cylinder verify " + table + " --alpha 1/2 --beta 1/2 --rho 1");
  CHECK(ver.code == 0);
  CHECK(Run("cylinder spin").code == 2);
}

TEST_CASE("gstar emits its trace") {
  const Result r = Run("gstar --alpha 1/2 --beta 1/2 --depth 3 --target Q");
  CHECK(r.code == 3);
  const GStarTrace t = ParseGStarTrace(r.out);
  CHECK(t.pos.i_moves.size() == 3);
  CHECK(t.pos.indices.size() == 3);
}

TEST_CASE("verify runs every suite") {
  const Result r = Run("verify --seed 7");
  CHECK(r.code == 0);
  CHECK(Has(r.out, "15/15 suites passed"));
  const Result f = Run("verify --seed 3 --filter cylinder");
  CHECK(f.code == 0);
  CHECK(Has(f.out, "4/4 suites passed"));
}

TEST_CASE("exit codes depend on the verdict only") {
  CHECK(ExitCodeFor(Verdict::kWinI) == 0);
  CHECK(ExitCodeFor(Verdict::kWinII) == 0);
  CHECK(ExitCodeFor(Verdict::kUndecided) == 3);
}

TEST_CASE("transfer defaults to the (1/4,1/2), (1/2,1/4) pair") {
  const Result r = Run("transfer --rho 1 --target Q --depth 4", false);
  CHECK(r.code == 3);
  CHECK(Has(r.out, "bounds (1/3,3/2)"));
  CHECK(Has(r.out, "eps_1 1/32"));
}

}  // namespace
}  // namespace schmidt
