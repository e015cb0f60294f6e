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

#ifndef BLINDFOLD_TOOLS_CLI_HPP_
#define BLINDFOLD_TOOLS_CLI_HPP_

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it with in-memory streams.
//
// Exit codes: 0 success / winnable / wins, 1 unwinnable / loses, 2 malformed
// input, exceeded caps or I/O failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blindfold/blindfold.hpp"
#include "blindfold/io.hpp"

namespace blindfold::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct SpecArgs {
  std::size_t n = 0;
  std::uint32_t m = 0;
  bool rotations = false;
  std::string gens;
};

struct Args {
  SpecArgs spec;
  std::string input;
  std::string output;
  std::string start;
  bool witness = false;
  std::uint64_t cap = kDefaultStateCap;
  std::uint64_t rounds = 1000;
  std::uint64_t cases = 10;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  unsigned repeat = 1;
};

namespace detail {

inline void add_spec_options(CLI::App* cmd, SpecArgs& s, bool required) {
  auto* n = cmd->add_option("-n", s.n, "number of positions");
  auto* m = cmd->add_option("-m", s.m, "counter modulus");
  auto* rot = cmd->add_flag("--rotations", s.rotations,
                            "adversary rotates the n-gon table");
  auto* gens = cmd->add_option(
      "--gens", s.gens,
      "generators: JSON array of image-form permutations, or a file holding "
      "one (identity implied)");
  rot->excludes(gens);
  gens->excludes(rot);
  if (required) {
    n->required();
    m->required();
  }
}

inline GameSpec make_spec(const SpecArgs& s) {
  if (s.rotations == !s.gens.empty()) {
    throw ParseError("give exactly one of --rotations or --gens");
  }
  if (s.m == 0) throw ParseError("-m must be >= 1");
  if (s.rotations) return GameSpec::rotations(s.n, s.m);
  std::string text = s.gens;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '[') text = read_file(text);
  return GameSpec(s.n, s.m, generators_from_json(parse_json(text), s.n));
}

inline void emit(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline int cmd_decide(const Args& a, std::ostream& out) {
  auto v = decide(make_spec(a.spec));
  out << dump(to_json(v));
  return v.solvable ? 0 : 1;
}

inline int cmd_synth(const Args& a, std::ostream& out, std::ostream& err) {
  GameSpec spec = make_spec(a.spec);
  auto v = decide(spec);
  if (!v.solvable) {
    err << "game is not winnable (|G| = " << v.group_order << ", m = "
        << spec.m() << "); run `refute` for a certificate\n";
    return 1;
  }
  auto r = synth(spec);
  emit(a.output, dump(to_json(r.strategy, metadata_of(r))), out);
  return 0;
}

inline int cmd_verify(const Args& a, std::ostream& out) {
  auto file = strategy_from_json(parse_json(read_file(a.input)));
  VerifyOptions opts;
  opts.want_witness = a.witness;
  opts.state_cap = a.cap;
  opts.threads = a.threads;
  auto v = verify_strategy(file.strategy, opts);
  emit(a.output, dump(to_json(v)), out);
  return v.wins ? 0 : 1;
}

inline int cmd_refute(const Args& a, std::ostream& out, std::ostream& err) {
  GameSpec spec = make_spec(a.spec);
  auto v = decide(spec);
  if (v.solvable) {
    err << "game is winnable; run `synth` for a strategy\n";
    return 1;
  }
  auto cert = build_certificate(spec);
  emit(a.output, dump(to_json(cert)), out);

  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<Residue> residue(0, spec.m() - 1);
  for (std::uint64_t c = 0; c < a.cases; ++c) {
    Config x = initial_bad_config(cert, spec.n(), spec.m());
    for (std::uint64_t r = 0; r < a.rounds; ++r) {
      std::vector<Residue> e(spec.n());
      for (auto& v : e) v = residue(rng);
      Move y(spec.m(), std::move(e));
      x = act(adversary_move(x, y, cert, spec.generators()), x) + y;
      if (is_semi_homogeneous(x, cert) || x.is_zero()) {
        err << "invariant broken in case " << c << " round " << r << "\n";
        return 1;
      }
    }
  }
  err << "invariant held: " << a.cases << " cases x " << a.rounds
      << " rounds (seed " << a.seed << ")\n";
  return 0;
}

inline Strategy load_or_synth(const Args& a) {
  if (!a.input.empty()) {
    return strategy_from_json(parse_json(read_file(a.input))).strategy;
  }
  GameSpec spec = make_spec(a.spec);
  if (!decide(spec).solvable) {
    throw InvalidArgument("game is not winnable; nothing to play");
  }
  return synth(spec).strategy;
}

inline int cmd_play(const Args& a, std::istream& in, std::ostream& out) {
  Strategy s = load_or_synth(a);
  const auto& spec = s.spec();
  const auto& gens = spec.generators();

  Config x = Config::zero(spec.m(), spec.n());
  if (!a.start.empty()) {
    std::vector<Residue> e;
    for (const auto& v : parse_json(a.start)) {
      if (!v.is_number_unsigned()) throw ParseError("--start: bad residue");
      e.push_back(v.get<Residue>());
    }
    if (e.size() != spec.n()) throw ParseError("--start: wrong length");
    x = Config(spec.m(), std::move(e));
  } else {
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<Residue> residue(0, spec.m() - 1);
    std::vector<Residue> e(spec.n());
    for (auto& v : e) v = residue(rng);
    x = Config(spec.m(), std::move(e));
  }

  out << "You are the table. The blindfolded player has " << s.size()
      << " moves.\ngenerators:\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out << "  [" << i << "] " << to_string(gens[i]) << "\n";
  }
  out << "table: " << to_string(x) << "\n";
  if (x.is_zero()) {
    out << "player wins at start\n";
    return 0;
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::size_t choice = 0;
    while (true) {
      out << "round " << k + 1 << " generator index> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) throw ParseError("play: input ended");
      std::istringstream ls(line);
      if (ls >> choice && choice < gens.size()) break;
      out << "enter an index in [0, " << gens.size() - 1 << "]\n";
    }
    x = act(gens[choice], x);
    out << "permuted: " << to_string(x) << "\n";
    x += s.moves()[k];
    out << "player adds " << to_string(s.moves()[k]) << "\n";
    out << "table: " << to_string(x) << "\n";
    if (x.is_zero()) {
      out << "player wins after move " << k + 1 << "\n";
      return 0;
    }
  }
  out << "table survives all " << s.size() << " moves\n";
  return 1;
}

inline int cmd_bench(const Args& a, std::ostream& out) {
  GameSpec spec = make_spec(a.spec);
  Strategy s = synth(spec).strategy;
  VerifyOptions opts;
  opts.state_cap = a.cap;
  opts.threads = a.threads;
  double best = 0;
  Verdict v;
  for (unsigned i = 0; i < std::max(1u, a.repeat); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    v = verify_strategy(s, opts);
    double dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (i == 0 || dt < best) best = dt;
  }
  const double secs = std::max(best, 1e-9);
  Json j;
  j["n"] = spec.n();
  j["m"] = spec.m();
  j["generators"] = spec.generators().size();
  j["moves"] = s.size();
  j["wins"] = v.wins;
  j["seconds"] = best;
  j["transitions"] = v.transitions;
  j["transitions_per_second"] = static_cast<double>(v.transitions) / secs;
  j["states_per_second"] = static_cast<double>(v.transitions) /
                           static_cast<double>(spec.generators().size()) /
                           secs;
  out << dump(j);
  return 0;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver toolkit for the blindfolded counters game"};
  app.require_subcommand(1, 1);
  Args a;

  auto* decide_cmd = app.add_subcommand("decide", "is the (S, m) game winnable");
  detail::add_spec_options(decide_cmd, a.spec, true);

  auto* synth_cmd = app.add_subcommand("synth", "write a winning strategy");
  detail::add_spec_options(synth_cmd, a.spec, true);
  synth_cmd->add_option("-o", a.output, "output path (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a strategy against every adversary");
  verify_cmd->add_option("strategy", a.input, "strategy file")->required();
  verify_cmd->add_flag("--witness", a.witness, "extract a losing line");
  verify_cmd->add_option("--cap", a.cap, "maximum number of states");
  verify_cmd->add_option("--threads", a.threads, "worker threads");
  verify_cmd->add_option("-o", a.output, "verdict path (default stdout)");

  auto* refute_cmd = app.add_subcommand(
      "refute", "write an impossibility certificate and fuzz it");
  detail::add_spec_options(refute_cmd, a.spec, true);
  refute_cmd->add_option("-o", a.output, "certificate path (default stdout)");
  refute_cmd->add_option("--rounds", a.rounds, "rounds per fuzz case");
  refute_cmd->add_option("--cases", a.cases, "number of fuzz cases");
  refute_cmd->add_option("--seed", a.seed, "fuzz seed");

  auto* play_cmd = app.add_subcommand(
      "play", "play the table against a strategy, one generator per round");
  play_cmd->add_option("strategy", a.input, "strategy file (or give a spec)");
  detail::add_spec_options(play_cmd, a.spec, false);
  play_cmd->add_option("--start", a.start, "start configuration, JSON array");
  play_cmd->add_option("--seed", a.seed, "seed for a random start");

  auto* bench_cmd =
      app.add_subcommand("bench", "time verification of a synthesized strategy");
  detail::add_spec_options(bench_cmd, a.spec, true);
  bench_cmd->add_option("--cap", a.cap, "maximum number of states");
  bench_cmd->add_option("--threads", a.threads, "worker threads");
  bench_cmd->add_option("--repeat", a.repeat, "runs; best time reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*decide_cmd) return detail::cmd_decide(a, out);
    if (*synth_cmd) return detail::cmd_synth(a, out, err);
    if (*verify_cmd) return detail::cmd_verify(a, out);
    if (*refute_cmd) return detail::cmd_refute(a, out, err);
    if (*play_cmd) return detail::cmd_play(a, in, out);
    if (*bench_cmd) return detail::cmd_bench(a, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace blindfold::cli

#endif  // BLINDFOLD_TOOLS_CLI_HPP_
