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

#ifndef BLINDFOLD_GAME_HPP_
#define BLINDFOLD_GAME_HPP_

// Game parameters, oblivious strategies and single-line replay.
//
// One round of play in the canonical order is:
//   1. the adversary permutes the table by some g in S,
//   2. the player's move is added to the counters,
//   3. the player wins if every counter reads zero.
// The starting configuration is itself a win check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blindfold/error.hpp"
#include "blindfold/permgroup.hpp"
#include "blindfold/zplinalg.hpp"

namespace blindfold {

using Config = ModVector;
using Move = ModVector;

enum class TurnOrder {
  kPermuteThenMove,  // canonical
  kMoveThenPermute,
};

// The (S, m) game on n positions. S must contain the identity.
class GameSpec {
 public:
  GameSpec(std::size_t n, std::uint32_t m, GeneratorSet gens)
      : n_(n), m_(m), gens_(std::move(gens)) {
    if (m_ == 0) throw InvalidArgument("GameSpec: modulus must be >= 1");
    if (gens_.n() != n_) {
      throw InvalidArgument("GameSpec: generators act on n=" +
                            std::to_string(gens_.n()) + ", expected " +
                            std::to_string(n_));
    }
    if (!gens_.contains_identity()) {
      throw InvalidArgument("GameSpec: generator set must contain identity");
    }
  }

  static GameSpec rotations(std::size_t n, std::uint32_t m) {
    return GameSpec(n, m, GeneratorSet::rotations(n));
  }

  std::size_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  const GeneratorSet& generators() const { return gens_; }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  std::size_t n_;
  std::uint32_t m_;
  GeneratorSet gens_;
};

// A fixed move sequence committed to in advance.
class Strategy {
 public:
  Strategy(GameSpec spec, std::vector<Move> moves)
      : spec_(std::move(spec)), moves_(std::move(moves)) {
    for (const auto& y : moves_) {
      if (y.size() != spec_.n() || y.modulus() != spec_.m()) {
        throw InvalidArgument("Strategy: move " + to_string(y) +
                              " does not live in Z_m^n");
      }
    }
  }

  const GameSpec& spec() const { return spec_; }
  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }

  // Copy without the final move; used for tightness checks.
  Strategy without_last() const {
    auto moves = moves_;
    if (!moves.empty()) moves.pop_back();
    return Strategy(spec_, std::move(moves));
  }

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  GameSpec spec_;
  std::vector<Move> moves_;
};

// Permutes coordinates: the entry at position i moves to position g(i).
inline ModVector act(const Permutation& g, const ModVector& x) {
  if (g.size() != x.size()) {
    throw InvalidArgument("act: permutation and vector lengths differ");
  }
  std::vector<Residue> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[g(i)] = x[i];
  return ModVector(x.modulus(), std::move(out));
}

struct Trace {
  // configs[0] is the start; configs[k] follows round k.
  std::vector<Config> configs;
  std::optional<std::size_t> won_at;

  bool won() const { return won_at.has_value(); }
};

// Replays one adversary line. perm_choices[k] indexes into S for round k+1.
inline Trace simulate_trace(const GameSpec& spec, const Config& start,
                            const std::vector<Move>& moves,
                            const std::vector<std::size_t>& perm_choices,
                            TurnOrder order = TurnOrder::kPermuteThenMove) {
  if (perm_choices.size() != moves.size()) {
    throw InvalidArgument("simulate_trace: need one permutation per move");
  }
  if (start.size() != spec.n() || start.modulus() != spec.m()) {
    throw InvalidArgument("simulate_trace: start is not in Z_m^n");
  }
  Trace t;
  t.configs.push_back(start);
  if (start.is_zero()) t.won_at = 0;
  Config x = start;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (perm_choices[k] >= spec.generators().size()) {
      throw InvalidArgument("simulate_trace: generator index " +
                            std::to_string(perm_choices[k]) + " out of range");
    }
    const auto& g = spec.generators()[perm_choices[k]];
    if (order == TurnOrder::kPermuteThenMove) {
      x = act(g, x) + moves[k];
    } else {
      x = x + moves[k];
      if (x.is_zero() && !t.won_at) t.won_at = k + 1;
      x = act(g, x);
    }
    if (x.is_zero() && !t.won_at) t.won_at = k + 1;
    t.configs.push_back(x);
  }
  return t;
}

// Largest index with a nonzero coefficient when x is expanded in the basis;
// nullopt for x = 0.
inline std::optional<std::size_t> leading_index(const ModVector& x,
                                                const ZpBasis& basis) {
  auto c = solve_in_span(basis, x);
  if (!c) throw InvalidArgument("leading_index: basis does not span x");
  for (std::size_t j = c->size(); j-- > 0;) {
    if ((*c)[j] != 0) return j;
  }
  return std::nullopt;
}

}  // namespace blindfold

#endif  // BLINDFOLD_GAME_HPP_
