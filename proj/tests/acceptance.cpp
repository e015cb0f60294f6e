// Copyright 2026 The Blindfold Authors. All rights reserved.
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

// Acceptance suite. Prints one PASS/FAIL line per criterion; with
// `--criterion N` only that criterion runs. Exit status is nonzero when any
// selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blindfold/blindfold.hpp"
#include "blindfold/io.hpp"
#include "cli.hpp"
#include "oracles.hpp"

namespace blindfold::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 10.0;
constexpr double kSlowSweepSeconds = 120.0;
constexpr std::uint64_t kTightnessStates = 4096;
constexpr std::uint64_t kOracleStates = 256;
constexpr int kOracleStrategies = 200;
constexpr int kFuzzSequences = 100;
constexpr int kFuzzRounds = 1000;
constexpr int kRejectStrategies = 50;
constexpr std::uint64_t kRejectStates = 4096;
constexpr double kChainSeconds = 5.0;
constexpr double kOrbitSeconds = 1.0;
constexpr double kVerifySeconds = 0.050;
constexpr double kMinTransitionsPerSecond = 1e7;

double Since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string Name(const GameSpec& spec) {
  std::ostringstream s;
  s << "n=" << spec.n() << " m=" << spec.m()
    << " |S|=" << spec.generators().size();
  return s.str();
}

std::uint64_t States(const GameSpec& spec) {
  return ConfigCodec(spec.n(), spec.m()).total();
}

// Collects sub-case failures for one criterion.
class Report {
 public:
  void Fail(const std::string& what) {
    ++failures_;
    std::cout << "    FAIL " << what << "\n";
  }
  void Note(const std::string& what) { std::cout << "    " << what << "\n"; }
  void Check(bool ok, const std::string& what) {
    if (!ok) Fail(what);
  }
  bool ok() const { return failures_ == 0; }

 private:
  int failures_ = 0;
};

bool Replays(const Strategy& s, const Witness& w) {
  return !simulate_trace(s.spec(), w.start, s.moves(), w.perms).won();
}

// --- 1 ---------------------------------------------------------------------

void GoldenSequence(Report& r) {
  auto t0 = Clock::now();
  auto result = synth(GameSpec::rotations(4, 2));
  Json moves = Json::array();
  for (const auto& y : result.strategy.moves()) moves.push_back(to_json(y));
  const std::string got = moves.dump();
  const double secs = Since(t0);
  const std::string golden =
      "[[1,1,1,1],[0,1,0,1],[1,1,1,1],[0,0,1,1],[1,1,1,1],[0,1,0,1],"
      "[1,1,1,1],[0,0,0,1],[1,1,1,1],[0,1,0,1],[1,1,1,1],[0,0,1,1],"
      "[1,1,1,1],[0,1,0,1],[1,1,1,1]]";
  r.Check(got == golden, "moves " + got);
  r.Check(secs < kGoldenSeconds, "took " + std::to_string(secs) + " s");
  r.Note("15 moves byte-exact, " + std::to_string(secs) + " s");
}

// --- 2, 3 ------------------------------------------------------------------

struct SweepCase {
  GameSpec spec;
  bool slow;
};

std::vector<SweepCase> SweepCases() {
  std::vector<SweepCase> out;
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::uint32_t>>{
           {2, 2}, {4, 2}, {8, 2}, {2, 4}, {4, 4}, {2, 8}, {3, 3}, {3, 9},
           {9, 3}, {5, 5}, {7, 7}}) {
    out.push_back({GameSpec::rotations(n, m), n == 9 && m == 3});
  }
  for (const auto& g : {oracle::swap01_n4(), oracle::klein_n4(),
                        oracle::dihedral_n4(), oracle::cyclic_n4()}) {
    out.push_back({GameSpec(4, 2, g), false});
  }
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::uint32_t>>{
           {1, 5}, {2, 3}, {3, 2}}) {
    out.push_back({GameSpec(n, m, oracle::trivial(n)), false});
  }
  return out;
}

void SoundnessSweep(Report& r) {
  for (const auto& c : SweepCases()) {
    const double limit = c.slow ? kSlowSweepSeconds : kSweepSeconds;
    const std::string name = Name(c.spec) + (c.slow ? " [slow]" : "");
    auto t0 = Clock::now();
    auto s = synth(c.spec).strategy;
    const std::uint64_t want = States(c.spec) - 1;
    VerifyOptions opts;
    opts.deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(limit));
    try {
      auto v = verify_strategy(s, opts);
      const double secs = Since(t0);
      r.Check(v.wins, name + ": strategy loses");
      r.Check(s.size() == want, name + ": length " + std::to_string(s.size()) +
                                    " != " + std::to_string(want));
      r.Check(secs < limit, name + ": " + std::to_string(secs) + " s");
      r.Note(name + ": wins, " + std::to_string(s.size()) + " moves, " +
             std::to_string(secs) + " s");
    } catch (const DeadlineExceeded& e) {
      r.Fail(name + ": over the " + std::to_string(limit) + " s budget (" +
             e.what() + ")");
    }
  }
}

void Tightness(Report& r) {
  for (const auto& c : SweepCases()) {
    if (States(c.spec) > kTightnessStates) continue;
    const std::string name = Name(c.spec);
    auto s = synth(c.spec).strategy.without_last();
    VerifyOptions opts;
    opts.want_witness = true;
    auto v = verify_strategy(s, opts);
    if (v.wins) {
      r.Fail(name + ": still wins with " + std::to_string(s.size()) + " moves");
      continue;
    }
    r.Check(v.witness.has_value() && Replays(s, *v.witness),
            name + ": witness does not replay");
    r.Note(name + ": " + std::to_string(s.size()) + " moves lose from " +
           to_string(v.witness->start));
  }
}

// --- 4 ---------------------------------------------------------------------

std::vector<GameSpec> OracleSpecs() {
  std::vector<GameSpec> out;
  for (std::uint32_t m = 2; m <= 6; ++m) out.push_back(GameSpec::rotations(1, m));
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint32_t m = 2;; ++m) {
      GameSpec spec = GameSpec::rotations(n, m);
      if (States(spec) > kOracleStates) break;
      out.push_back(std::move(spec));
    }
  }
  for (std::uint32_t m = 2; m <= 3; ++m) {
    for (const auto& g : {oracle::swap01_n4(), oracle::klein_n4(),
                          oracle::dihedral_n4(), oracle::cyclic_n4(),
                          oracle::trivial(4)}) {
      out.emplace_back(4, m, g);
    }
  }
  for (std::uint32_t m = 2; m <= 6; ++m) {
    out.emplace_back(3, m, oracle::s3_gens());
    out.emplace_back(3, m, oracle::trivial(3));
  }
  out.emplace_back(2, 3, oracle::trivial(2));
  out.emplace_back(1, 5, oracle::trivial(1));
  return out;
}

// Half random strategies, half single-move mutations of the synthesized
// winner (when there is one), so both verdicts occur.
std::vector<Strategy> OracleStrategies(const GameSpec& spec,
                                       std::mt19937_64& rng) {
  const std::uint64_t states = States(spec);
  std::vector<Strategy> out;
  std::optional<Strategy> won;
  if (decide(spec).solvable) won = synth(spec).strategy;
  for (int i = 0; i < kOracleStrategies; ++i) {
    if (won && i % 2 == 1 && !won->moves().empty()) {
      auto moves = won->moves();
      if (i % 4 == 1) {
        moves[rng() % moves.size()] =
            oracle::random_strategy(spec, 1, rng).moves().front();
      } else {
        moves.resize(rng() % (moves.size() + 1));
      }
      out.emplace_back(spec, std::move(moves));
    } else {
      out.push_back(oracle::random_strategy(spec, rng() % (2 * states + 1), rng));
    }
  }
  return out;
}

void OracleEquivalence(Report& r) {
  std::mt19937_64 rng(20260419);
  std::uint64_t total = 0, wins = 0, disagreements = 0;
  const auto specs = OracleSpecs();
  for (const auto& spec : specs) {
    for (const auto& s : OracleStrategies(spec, rng)) {
      const bool want = oracle::game_tree_wins(s);
      VerifyOptions ptm, mtp;
      mtp.order = TurnOrder::kMoveThenPermute;
      const bool a = verify_strategy(s, ptm).wins;
      const bool b = verify_strategy(s, mtp).wins;
      ++total;
      wins += want;
      if (a != want || b != want) {
        ++disagreements;
        r.Fail(Name(spec) + " length " + std::to_string(s.size()) +
               ": oracle " + std::to_string(want) + " permute-then-move " +
               std::to_string(a) + " move-then-permute " + std::to_string(b));
      }
    }
  }
  r.Note(std::to_string(specs.size()) + " specs, " + std::to_string(total) +
         " strategies (" + std::to_string(wins) + " winning), " +
         std::to_string(disagreements) + " disagreements");
}

// --- 5 ---------------------------------------------------------------------

void ImpossibilityFuzz(Report& r) {
  std::vector<GameSpec> specs;
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::uint32_t>>{
           {2, 3}, {3, 2}, {6, 2}, {2, 6}, {12, 2}, {4, 6}}) {
    specs.push_back(GameSpec::rotations(n, m));
  }
  specs.emplace_back(3, 2, oracle::s3_gens());

  for (const auto& spec : specs) {
    const std::string name = Name(spec);
    UnsolvabilityCertificate cert;
    try {
      cert = build_certificate(spec);
    } catch (const Error& e) {
      r.Fail(name + ": no certificate: " + e.what());
      continue;
    }
    std::mt19937_64 rng(0x5eed + spec.n() * 131 + spec.m());
    int broken = 0;
    for (int seq = 0; seq < kFuzzSequences; ++seq) {
      Config x = initial_bad_config(cert, spec.n(), spec.m());
      const auto moves = oracle::random_strategy(spec, kFuzzRounds, rng).moves();
      for (const auto& y : moves) {
        x = act(adversary_move(x, y, cert, spec.generators()), x) + y;
        if (is_semi_homogeneous(x, cert) || x.is_zero()) {
          ++broken;
          break;
        }
      }
    }
    r.Check(broken == 0, name + ": invariant broken in " +
                             std::to_string(broken) + " sequences");

    int rejected = 0, tried = 0;
    if (States(spec) <= kRejectStates) {
      for (int i = 0; i < kRejectStrategies; ++i, ++tried) {
        auto s = oracle::random_strategy(spec, 2 * States(spec), rng);
        rejected += !verify_strategy(s).wins;
      }
      r.Check(rejected == tried, name + ": only " + std::to_string(rejected) +
                                     "/" + std::to_string(tried) + " rejected");
    }
    r.Note(name + ": p=" + std::to_string(cert.p) + " q=" +
           std::to_string(cert.q) + ", " + std::to_string(kFuzzSequences) +
           "x" + std::to_string(kFuzzRounds) + " rounds held, " +
           std::to_string(rejected) + "/" + std::to_string(tried) +
           " random strategies rejected");
  }
}

// --- 6 ---------------------------------------------------------------------

void ChainSuite(Report& r) {
  auto t0 = Clock::now();
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 2}, {2, 4}, {2, 8}, {3, 3}, {3, 9}, {5, 5}}) {
    const std::string name = "p=" + std::to_string(p) + " n=" + std::to_string(n);
    auto basis = binomial_basis(p, n);
    const GameSpec table = GameSpec::rotations(n, p);
    std::vector<oracle::Vec> raw;
    int checks = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const ModVector& x = basis[j];
      for (std::size_t i = 0; i < n; ++i) {
        r.Check(x[i] == oracle::binomial(i, j) % p,
                name + ": entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      }
      std::vector<ModVector> earlier(basis.vectors().begin(),
                                     basis.vectors().begin() + j);
      for (std::size_t shift = 0; shift < n; ++shift) {
        ModVector diff = x - act(Permutation::rotation(n, shift), x);
        const bool lib =
            j == 0 ? diff.is_zero() : solve_in_span(earlier, diff).has_value();
        const bool brute =
            !oracle::brute_force_span(raw, diff.entries(), p).empty();
        r.Check(lib && brute, name + ": x_" + std::to_string(j) + " shift " +
                                  std::to_string(shift));
        ++checks;
      }
      for (const auto& g : table.generators()) {
        ModVector diff = act(g, x) - x;
        r.Check(j == 0 ? diff.is_zero() : solve_in_span(earlier, diff).has_value(),
                name + ": fixed-chain step " + std::to_string(j));
      }
      raw.push_back(x.entries());
    }
    r.Note(name + ": " + std::to_string(checks) + " shifts in span");
  }
  const double secs = Since(t0);
  r.Check(secs < kChainSeconds, "took " + std::to_string(secs) + " s");
  r.Note(std::to_string(secs) + " s");
}

// --- 7 ---------------------------------------------------------------------

void Reductions(Report& r) {
  const GameSpec target = GameSpec::rotations(2, 2);
  auto four = synth(GameSpec::rotations(4, 2)).strategy;
  auto sub = subsample_strategy(four, 2);
  r.Check(sub.spec() == target, "subsample lands on the wrong game");
  r.Check(verify_strategy(sub).wins, "subsampled (4,2) strategy loses");
  auto two = synth(GameSpec::rotations(2, 4)).strategy;
  auto proj = project_strategy(two, 2);
  r.Check(proj.spec() == target, "projection lands on the wrong game");
  r.Check(verify_strategy(proj).wins, "projected (2,4) strategy loses");
  r.Note("subsample: " + std::to_string(sub.size()) + " moves; projection: " +
         std::to_string(proj.size()) + " moves");
}

// --- 8 ---------------------------------------------------------------------

void OrbitCounting(Report& r) {
  auto t0 = Clock::now();
  struct Case {
    std::string name;
    GeneratorSet gens;
    std::uint32_t p;
  };
  for (const auto& c : {Case{"Klein on Z_2^4", oracle::klein_n4(), 2},
                        Case{"rot1 on Z_3^3", GeneratorSet::rotations(3), 3}}) {
    const std::size_t n = c.gens.n();
    auto group = oracle::saturate(oracle::raw_perms(c.gens), n);
    auto sizes = oracle::orbit_sizes(group, n, c.p);
    std::uint64_t fixed = 0, covered = 0;
    for (auto s : sizes) {
      std::size_t x = s;
      while (x % c.p == 0) x /= c.p;
      r.Check(x == 1, c.name + ": orbit of size " + std::to_string(s));
      fixed += s == 1;
      covered += s;
    }
    r.Check(covered == oracle::all_vectors(n, c.p).size(),
            c.name + ": orbits do not partition");
    r.Check(fixed % c.p == 0, c.name + ": " + std::to_string(fixed) +
                                  " fixed vectors");
    std::uint64_t from_kernel = 1;
    for (std::size_t i = 0; i < fixed_space(c.gens, c.p).size(); ++i) {
      from_kernel *= c.p;
    }
    r.Check(from_kernel == fixed, c.name + ": kernel gives " +
                                      std::to_string(from_kernel));
    r.Note(c.name + ": " + std::to_string(sizes.size()) + " orbits, " +
           std::to_string(fixed) + " fixed");
  }
  const double secs = Since(t0);
  r.Check(secs < kOrbitSeconds, "took " + std::to_string(secs) + " s");
}

// --- 9 ---------------------------------------------------------------------

void Performance(Report& r) {
  auto s = synth(GameSpec::rotations(8, 2)).strategy;
  double best = 1e9;
  for (int i = 0; i < 5; ++i) {
    auto t0 = Clock::now();
    auto v = verify_strategy(s);
    best = std::min(best, Since(t0));
    r.Check(v.wins, "(8,2) strategy loses");
  }
  r.Check(best < kVerifySeconds,
          "(8,2) verify " + std::to_string(best * 1e3) + " ms");
  r.Note("(8,2) verify best of 5: " + std::to_string(best * 1e3) + " ms");

  for (const char* spec : {"8 2", "5 5"}) {
    std::istringstream words(spec);
    std::string n, m;
    words >> n >> m;
    const std::vector<std::string> args = {"blindfold", "bench", "-n", n, "-m",
                                           m, "--rotations", "--repeat", "5"};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in;
    std::ostringstream out, err;
    const int code =
        cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    if (code != 0) {
      r.Fail(std::string("bench ") + spec + " exited " + std::to_string(code));
      continue;
    }
    const double rate = parse_json(out.str())["transitions_per_second"];
    r.Check(rate >= kMinTransitionsPerSecond,
            std::string("bench ") + spec + ": " + std::to_string(rate) + "/s");
    r.Note(std::string("bench n,m=") + spec + ": " + std::to_string(rate) +
           " transitions/s");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Report&)> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {1, "golden sequence", GoldenSequence},
      {2, "soundness sweep", SoundnessSweep},
      {3, "tightness", Tightness},
      {4, "oracle equivalence", OracleEquivalence},
      {5, "impossibility fuzz", ImpossibilityFuzz},
      {6, "binomial chain", ChainSuite},
      {7, "reduction forward-checks", Reductions},
      {8, "orbit counting", OrbitCounting},
      {9, "performance floor", Performance},
  };
  return all;
}

}  // namespace
}  // namespace blindfold::acceptance

int main(int argc, char** argv) {
  using namespace blindfold::acceptance;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : Criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    std::cout << "criterion " << c.id << " (" << c.title << ")\n";
    Report report;
    auto t0 = Clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      report.Fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%.2f s)\n",
                report.ok() ? "PASS" : "FAIL", c.id, c.title, Since(t0));
    std::fflush(stdout);
    failed += !report.ok();
  }
  if (ran == 0) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
