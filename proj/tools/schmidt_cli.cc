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

// Command-line front end.
//
//   schmidt play      run a match and print its trace
//   schmidt transfer  transfer a strategy along a hyperbola, print both runs
//   schmidt simplify  simplify a one-round strategy into cells
//   schmidt cylinder  duel | extract | verify for a relation table
//   schmidt gstar     play the half-real game and print its trace
//   schmidt verify    run the seeded invariant suites
//
// Exit status: 0 certified winner (or success), 3 undecided, 2 bad input,
// 1 any other error. Every flag may also come from --config, a file of
// "key = value" lines; flags on the command line win.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schmidt/builtins.h"
#include "schmidt/config.h"
#include "schmidt/cylinder.h"
#include "schmidt/reductions.h"
#include "schmidt/simple.h"
#include "schmidt/text.h"
#include "schmidt/transfer.h"
#include "schmidt/verify.h"

namespace schmidt {
namespace {

struct Flags {
  std::string alpha = "1/2";
  std::string beta = "1/2";
  std::string rho;
  std::string variant = "schmidt";
  std::string space = "line";
  std::string target = "all";
  std::string player_i;
  std::string player_ii;
  std::string opening;
  size_t depth = 16;
  uint64_t seed = 7;
  std::string out;
  std::string config;
};

void AddGameFlags(CLI::App* app, Flags* f) {
  app->add_option("--alpha", f->alpha, "II's factor (exact rational)");
  app->add_option("--beta", f->beta, "I's factor (exact rational)");
  app->add_option("--rho", f->rho, "fixed opening radius");
  app->add_option("--variant", f->variant, "schmidt | non-tangent | bm");
  app->add_option("--depth", f->depth, "number of moves or rounds");
  app->add_option("--seed", f->seed, "seed for random play");
  app->add_option("--config", f->config, "file of key = value lines");
}

ExperimentConfig BuildConfig(const Flags& f) {
  ExperimentConfig c;
  c.params.alpha = ParseRatField(f.alpha, "alpha");
  c.params.beta = ParseRatField(f.beta, "beta");
  if (!f.rho.empty()) c.params.rho = ParseRatField(f.rho, "rho");
  try {
    c.params.variant = ParseVariant(f.variant);
  } catch (const Error& e) {
    throw ParseError("variant", e.what());
  }
  try {
    c.params.Validate();
  } catch (const InvalidArgumentError& e) {
    throw ParseError("alpha/beta/rho", e.what());
  }
  c.space = Space::Parse(f.space);
  c.target = f.target;
  c.depth = f.depth;
  c.seed = f.seed;
  if (!f.opening.empty()) {
    try {
      c.opening_center = Point::Parse(f.opening);
    } catch (const Error& e) {
      throw ParseError("opening", e.what());
    }
  }
  return c;
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << text;
}

int RunPlay(const Flags& f) {
  ExperimentConfig cfg = BuildConfig(f);
  if (!f.player_i.empty()) cfg.player_i = f.player_i;
  if (!f.player_ii.empty()) cfg.player_ii = f.player_ii;
  const StrategyPtr si = MakeStrategy(cfg.player_i, cfg, Player::kI);
  const StrategyPtr sii = MakeStrategy(cfg.player_ii, cfg, Player::kII);
  const TargetPtr target = MakeTarget(cfg);
  const Trace trace = Play(cfg.params, *si, *sii, *target, cfg.depth);
  Emit(SerializeTrace(trace), f.out);
  const Outcome& o = *trace.outcome;
  std::cerr << VerdictName(o.verdict) << " at depth " << o.depth << " ("
            << OutcomeReasonName(o.reason) << ")\n";
  return ExitCodeFor(o.verdict);
}

struct TransferFlags {
  std::string alpha_p = "1/2";
  std::string beta_p = "1/4";
  std::string shadow = "tangent:-1";
  std::string side = "II";
  std::string dense = "rationals";
};

DenseSetPtr ParseDense(const std::string& text) {
  if (text == "rationals") return AllRationals();
  if (text == "dyadics") return Dyadics();
  if (StartsWith(text, "den:")) {
    return BoundedDenominator(
        static_cast<long>(ParseInt64(text.substr(4), "dense")));
  }
  throw ParseError("dense", "expected rationals | dyadics | den:<N>");
}

int RunTransfer(const Flags& f, const TransferFlags& t) {
  ExperimentConfig cfg = BuildConfig(f);
  TransferParams tp;
  tp.alpha = cfg.params.alpha;
  tp.beta = cfg.params.beta;
  tp.alpha_p = ParseRatField(t.alpha_p, "alpha-p");
  tp.beta_p = ParseRatField(t.beta_p, "beta-p");
  tp.dense = ParseDense(t.dense);
  try {
    tp.Validate();
  } catch (const InvalidArgumentError& e) {
    throw ParseError("alpha/beta/alpha-p/beta-p", e.what());
  }
  const Rat rho = cfg.params.rho.value_or(Rat(1));
  cfg.params.rho.reset();
  const TargetPtr target = MakeTarget(cfg);
  std::ostringstream os;
  const auto [lo, hi] = RhoPrimeBounds(tp.alpha, tp.beta, tp.alpha_p,
                                       tp.beta_p, rho);
  const Rat picked = PickRhoPrime(lo, hi, tp.alpha, tp.beta);
  os << "bounds (" << lo << "," << hi << ")\n";
  Verdict verdict = Verdict::kUndecided;
  if (t.side == "II") {
    os << "rho " << rho << "\nrho' " << picked << '\n';
    for (long n = 0; n < 2; ++n) {
      os << "eps_" << n << ' '
         << TransferEpsilon(n, tp.alpha, tp.beta, tp.alpha_p, tp.beta_p, rho,
                            picked)
         << '\n';
    }
    ExperimentConfig high = cfg;
    high.params = tp.High();
    const StrategyPtr tau = MakeStrategy(t.shadow, high, Player::kII);
    const TransferredII ii(tau, tp);
    ExperimentConfig low = cfg;
    low.params = tp.Low();
    low.params.rho = rho;
    const StrategyPtr si = MakeStrategy(
        f.player_i.empty() ? "random:" + std::to_string(cfg.seed) : f.player_i,
        low, Player::kI);
    const Trace trace = Play(tp.Low(), *si, ii, *target, cfg.depth);
    const DualRun run = ii.ComputeShadow(trace.ToPosition());
    os << SerializeDualRun(run) << SerializeTrace({{}, trace.outcome});
    verdict = trace.outcome->verdict;
  } else if (t.side == "I") {
    os << "rho_s " << rho << "\nrho " << picked << '\n';
    for (long n = 0; n < 2; ++n) {
      os << "eps'_" << n << ' '
         << TransferEpsilonI(n, tp.alpha, tp.beta, tp.alpha_p, tp.beta_p, rho,
                             picked)
         << '\n';
    }
    ExperimentConfig low = cfg;
    low.params = tp.Low();
    low.params.rho = rho;
    const StrategyPtr sigma = MakeStrategy(t.shadow, low, Player::kI);
    const TransferredI ti(sigma, tp);
    ExperimentConfig high = cfg;
    high.params = tp.High();
    const StrategyPtr sii = MakeStrategy(
        f.player_ii.empty() ? "random:" + std::to_string(cfg.seed)
                            : f.player_ii,
        high, Player::kII);
    const Trace trace = Play(tp.High(), ti, *sii, *target, cfg.depth);
    const DualRun run = ti.ComputeShadow(trace.ToPosition());
    os << SerializeDualRun(run) << SerializeTrace({{}, trace.outcome});
    verdict = trace.outcome->verdict;
  } else {
    throw ParseError("side", "expected I or II");
  }
  Emit(os.str(), f.out);
  return ExitCodeFor(verdict);
}

struct SimplifyFlags {
  std::string sigma = "concentric";
  std::string from = "0";
  std::string to = "1";
  std::string cover;
  size_t budget = 1000;
};

int RunSimplify(const Flags& f, const SimplifyFlags& s) {
  ExperimentConfig cfg = BuildConfig(f);
  if (!cfg.params.rho) cfg.params.rho = Rat(1);
  const StrategyPtr sigma = MakeStrategy(s.sigma, cfg, Player::kII);
  SimpleStrategy code;
  code.player = Player::kII;
  std::string note;
  if (!s.cover.empty()) {
    std::vector<Ball> cover;
    for (const std::string& part : Split(s.cover, ';')) {
      const std::vector<std::string> cr = Split(Trim(part), ':');
      if (cr.size() != 2) throw ParseError("cover", "expected center:radius");
      try {
        const std::string c(Trim(cr[0]));
        // Bare rationals are line points.
        cover.emplace_back(StartsWith(c, "[") ? Point::Parse(c)
                                              : Point::Line(Rat::Parse(c)),
                           ParseRatField(Trim(cr[1]), "cover"));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError("cover", e.what());
      }
    }
    code.rounds[{}] = SimplifyNonTangent(*sigma, cfg.params, Position(), cover);
  } else {
    const LineSimplification line = SimplifyOnLine(
        *sigma, cfg.params, Position(), ParseRatField(s.from, "from"),
        ParseRatField(s.to, "to"), s.budget);
    code.rounds[{}] = line.round;
    note = line.complete ? "" : "# budget exhausted: cells cover [" + s.from +
                                    "," + line.cursor.ToString() + ")\n";
  }
  RoundContext ctx;
  ctx.turn = 1;
  ctx.incoming_radius = *cfg.params.rho;
  const ValidationReport rep =
      ValidateSimple(code.rounds.at({}), cfg.params, ctx);
  std::ostringstream os;
  os << SerializeSimple(code) << note << "# validation:";
  for (const std::string& l : Split(rep.ToString(), '\n')) {
    if (!l.empty()) os << ' ' << l;
  }
  os << '\n';
  Emit(os.str(), f.out);
  return rep.ok() ? 0 : 1;
}

struct CylinderFlags {
  std::string mode;
  std::string file;
  std::string x = "0";
  std::string angle = "1,0";
  int scale = 1;
};

int RunCylinder(const Flags& f, const CylinderFlags& c) {
  ExperimentConfig cfg = BuildConfig(f);
  const Rat rho = cfg.params.rho.value_or(Rat(1));
  cfg.params.rho = rho;
  cfg.space = Space::Euclid(3);
  std::optional<RelationTable> rel;
  if (!c.file.empty()) rel = RelationTable::Parse(ReadFile(c.file));
  const Rat& a = cfg.params.alpha;
  const Rat& b = cfg.params.beta;
  std::ostringstream os;
  if (c.mode == "duel") {
    Rat x = ParseRatField(c.x, "x");
    RationalAngle ang;
    if (rel) {
      x = rel->rows[0].x;
      ang = rel->rows[0].angle;
    } else {
      const Vec v = ParseVecField(c.angle, "angle");
      if (v.size() != 2) throw ParseError("angle", "expected cos,sin");
      try {
        ang = RationalAngle::Make(v[0], v[1]);
      } catch (const InvalidArgumentError& e) {
        throw ParseError("angle", e.what());
      }
    }
    const Rat r = CriticalRadius(a, b, rho);
    const DuelRun run = GreedyDuel(a, b, rho, x, ang, cfg.depth);
    os << "# critical radius " << r << "\n# turn distance\n";
    for (size_t t = 0; t < run.distances.size(); ++t) {
      os << t << ' ' << run.distances[t] << '\n';
    }
  } else if (c.mode == "extract") {
    if (!rel) throw ParseError("file", "extract needs a relation table");
    const StrategyPtr tau =
        f.player_ii.empty() ? Responder(*rel, a, b, rho)
                            : MakeStrategy(f.player_ii, cfg, Player::kII);
    const std::map<Rat, RationalAngle> fx =
        ExtractUniformization(*tau, rel->Domain(), a, rho);
    os << "# x cos sin in-table\n";
    for (const auto& [x, ang] : fx) {
      os << x << ' ' << ang.cos << ' ' << ang.sin << ' '
         << (rel->Contains(x, ang) ? "yes" : "no") << '\n';
    }
  } else if (c.mode == "verify") {
    SuiteOptions o;
    o.seed = cfg.seed;
    o.scale = c.scale;
    std::vector<SuiteResult> results = RunInvariantSuites(o, "cylinder");
    if (rel) {
      SuiteResult r;
      r.name = "table-extraction";
      const std::map<Rat, RationalAngle> fx =
          ExtractUniformization(*Responder(*rel, a, b, rho), rel->Domain(), a,
                                rho);
      for (const auto& [x, ang] : fx) {
        ++r.checks;
        if (!rel->Contains(x, ang) && r.passed) {
          r.passed = false;
          r.detail = "angle at x=" + x.ToString() + " not in the table";
        }
      }
      results.push_back(std::move(r));
    }
    os << FormatSuiteTable(results);
    Emit(os.str(), f.out);
    for (const SuiteResult& r : results) {
      if (!r.passed) return 1;
    }
    return 0;
  } else {
    throw ParseError("mode", "expected duel | extract | verify");
  }
  Emit(os.str(), f.out);
  return 0;
}

struct GStarFlags {
  std::string star = "bisection";
};

int RunGStar(const Flags& f, const GStarFlags& g) {
  ExperimentConfig cfg = BuildConfig(f);
  const Ball opening = cfg.Opening();
  cfg.params.rho.reset();
  GStarStrategyPtr star;
  try {
    if (g.star == "bisection") {
      star = BisectionGStar(cfg.params, opening);
    } else if (g.star == "single") {
      star = SingleCellGStar(cfg.params, opening);
    } else {
      throw ParseError("star", "expected bisection | single");
    }
  } catch (const InvalidArgumentError& e) {
    throw ParseError("star", e.what());
  }
  const GStarGame game(cfg.params);
  const uint64_t seed = cfg.seed;
  auto player_ii = [&game, seed](const GStarPosition& pos) {
    std::seed_seq seq{static_cast<uint32_t>(seed),
                      static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(pos.indices.size())};
    std::mt19937_64 rng(seq);
    std::vector<int> legal;
    const int n = static_cast<int>(pos.i_moves.back().round.cells.size());
    for (int i = 0; i < n; ++i) {
      if (game.CheckIIMove(pos, i).legal) legal.push_back(i);
    }
    if (legal.empty()) return 0;
    return legal[std::uniform_int_distribution<size_t>(0, legal.size() - 1)(
        rng)];
  };
  const TargetPtr target = MakeTarget(cfg);
  const GStarTrace trace = PlayGStar(game, *star, player_ii, *target, cfg.depth);
  Emit(SerializeGStarTrace(trace), f.out);
  return ExitCodeFor(trace.outcome.verdict);
}

int RunVerify(const Flags& f, int scale, const std::string& filter) {
  SuiteOptions o;
  o.seed = f.seed;
  o.scale = scale;
  const std::vector<SuiteResult> results = RunInvariantSuites(o, filter);
  Emit(FormatSuiteTable(results), f.out);
  for (const SuiteResult& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}

// Splices "--config FILE" into "--key value" pairs placed right after the
// subcommand, so explicit flags (which come later) take precedence.
std::vector<std::string> ExpandConfig(std::vector<std::string> args) {
  std::string path;
  for (size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (StartsWith(args[i], "--config=")) {
      path = args[i].substr(9);
    }
  }
  if (path.empty() || args.size() < 2) return args;
  std::vector<std::string> extra;
  for (const auto& [k, v] : ParseKeyValues(ReadFile(path))) {
    if (k == "config") continue;
    extra.push_back("--" + k);
    extra.push_back(v);
  }
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact simulation of Schmidt's game and its relatives"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Flags flags;
  TransferFlags tflags;
  SimplifyFlags sflags;
  CylinderFlags cflags;
  GStarFlags gflags;
  int scale = 1;
  std::string filter;

  CLI::App* play = app.add_subcommand("play", "run a match, print its trace");
  AddGameFlags(play, &flags);
  play->add_option("--space", flags.space, "line | euclid:<n> | baire");
  play->add_option("--target", flags.target, "target descriptor");
  play->add_option("--I", flags.player_i, "strategy for I");
  play->add_option("--II", flags.player_ii, "strategy for II");
  play->add_option("--opening", flags.opening, "I's opening center");
  play->add_option("--out", flags.out, "trace file (default stdout)");

  CLI::App* transfer =
      app.add_subcommand("transfer", "transfer a strategy along a hyperbola");
  AddGameFlags(transfer, &flags);
  transfer->add_option("--alpha-p", tflags.alpha_p, "alpha'");
  transfer->add_option("--beta-p", tflags.beta_p, "beta'");
  transfer->add_option("--shadow", tflags.shadow,
                       "strategy in the rational game");
  transfer->add_option("--side", tflags.side, "I | II");
  transfer->add_option("--dense", tflags.dense,
                       "rationals | dyadics | den:<N>");
  transfer->add_option("--target", flags.target, "target descriptor");
  transfer->add_option("--I", flags.player_i, "real I (side II)");
  transfer->add_option("--II", flags.player_ii, "real II (side I)");
  transfer->add_option("--out", flags.out, "output file");

  CLI::App* simplify =
      app.add_subcommand("simplify", "simplify II's opening round");
  AddGameFlags(simplify, &flags);
  simplify->add_option("--sigma", sflags.sigma, "strategy for II");
  simplify->add_option("--from", sflags.from, "sweep start");
  simplify->add_option("--to", sflags.to, "sweep end");
  simplify->add_option("--cover", sflags.cover,
                       "open cover \"c:r;c:r\" for the non-tangent variant");
  simplify->add_option("--budget", sflags.budget, "cell budget");
  simplify->add_option("--out", flags.out, "output file");

  CLI::App* cylinder =
      app.add_subcommand("cylinder", "cylinder coding: duel | extract | verify");
  AddGameFlags(cylinder, &flags);
  cylinder->add_option("mode", cflags.mode, "duel | extract | verify")
      ->required();
  cylinder->add_option("file", cflags.file, "relation table");
  cylinder->add_option("--x", cflags.x, "duel: x coordinate");
  cylinder->add_option("--angle", cflags.angle, "duel: cos,sin");
  cylinder->add_option("--II", flags.player_ii, "extract: strategy for II");
  cylinder->add_option("--scale", cflags.scale, "verify: case multiplier");
  cylinder->add_option("--out", flags.out, "output file");

  CLI::App* gstar = app.add_subcommand("gstar", "play the half-real game");
  AddGameFlags(gstar, &flags);
  gstar->add_option("--star", gflags.star, "bisection | single");
  gstar->add_option("--opening", flags.opening, "I's opening center");
  gstar->add_option("--target", flags.target, "target descriptor");
  gstar->add_option("--out", flags.out, "output file");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--seed", flags.seed, "suite seed");
  verify->add_option("--scale", scale, "case multiplier");
  verify->add_option("--filter", filter, "run suites whose name contains this");
  verify->add_option("--config", flags.config, "file of key = value lines");
  verify->add_option("--out", flags.out, "output file");

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = ExpandConfig(std::move(args));
  } catch (const ParseError& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return 2;
  }
  std::vector<char*> cargs;
  for (std::string& a : args) cargs.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*play) return RunPlay(flags);
    if (*transfer) {
      // Unset alpha defaults to the low side of the default hyperbola pair.
      if (transfer->count("--alpha") == 0) flags.alpha = "1/4";
      return RunTransfer(flags, tflags);
    }
    if (*simplify) return RunSimplify(flags, sflags);
    if (*cylinder) return RunCylinder(flags, cflags);
    if (*gstar) return RunGStar(flags, gflags);
    if (*verify) return RunVerify(flags, scale, filter);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace
}  // namespace schmidt

int main(int argc, char** argv) { return schmidt::Main(argc, argv); }
