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

#ifndef BLINDFOLD_REFUTATION_HPP_
#define BLINDFOLD_REFUTATION_HPP_

// Executable impossibility for unwinnable games.
//
// When primes p != q divide |G| and m respectively, pick c in G of order p.
// The blocks { g c^i(b) : 0 <= i < p }, g in G, cover the G-orbit of a
// base position b moved by c. A configuration is semi-homogeneous when each block is
// constant mod q. From a configuration that is not, some g in S always
// keeps it that way whatever the player adds, so the counters never all
// read zero. adversary_move finds that g.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blindfold/arith.hpp"
#include "blindfold/error.hpp"
#include "blindfold/game.hpp"
#include "blindfold/permgroup.hpp"
#include "blindfold/synthesis.hpp"

namespace blindfold {

struct UnsolvabilityCertificate {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Permutation c;
  std::vector<Block> blocks;

  friend bool operator==(const UnsolvabilityCertificate&,
                         const UnsolvabilityCertificate&) = default;
};

// Prime choice: the smallest prime of |G| not dividing m if there is one
// (q = smallest prime of m), otherwise the smallest prime of |G| with the
// smallest other prime of m.
inline UnsolvabilityCertificate build_certificate(
    const GameSpec& spec, std::size_t group_cap = kDefaultGroupCap) {
  Group g = closure(spec.generators(), group_cap);
  const std::uint64_t m = spec.m();
  auto gp = factorize(g.order());
  auto mp = factorize(m);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pq;
  for (auto [p, e] : gp) {
    if (m % p != 0 && !mp.empty()) {
      pq.emplace(p, mp.front().first);
      break;
    }
  }
  if (!pq && !gp.empty()) {
    const std::uint64_t p = gp.front().first;
    for (auto [q, e] : mp) {
      if (q != p) {
        pq.emplace(p, q);
        break;
      }
    }
  }
  if (!pq) {
    throw InvalidArgument("build_certificate: game is winnable (|G| = " +
                          std::to_string(g.order()) + ", m = " +
                          std::to_string(m) + ")");
  }
  UnsolvabilityCertificate cert;
  cert.p = pq->first;
  cert.q = pq->second;
  cert.c = cauchy_element(g, cert.p);
  cert.blocks = cyclic_blocks(g, cert.c, cert.p);
  return cert;
}

inline bool is_semi_homogeneous(const ModVector& x,
                                const UnsolvabilityCertificate& cert) {
  for (const auto& block : cert.blocks) {
    if (block.empty()) continue;
    const std::uint64_t first = x[block.front()] % cert.q;
    for (auto pos : block) {
      if (pos >= x.size()) {
        throw InvalidArgument("is_semi_homogeneous: block outside vector");
      }
      if (x[pos] % cert.q != first) return false;
    }
  }
  return true;
}

// 1 at the smallest position of the first block of size >= 2, 0 elsewhere.
inline Config initial_bad_config(const UnsolvabilityCertificate& cert,
                                 std::size_t n, std::uint32_t m) {
  if (cert.q < 2 || m % cert.q != 0) {
    throw InvalidArgument("initial_bad_config: q must be a prime dividing m");
  }
  for (const auto& block : cert.blocks) {
    if (block.size() >= 2) {
      std::vector<Residue> e(n, 0);
      e[block.front()] = 1;
      return Config(m, std::move(e));
    }
  }
  throw InvalidArgument("initial_bad_config: every block is a singleton");
}

// First g in S (listed order) keeping act(g, x) + y non-semi-homogeneous.
inline std::size_t adversary_move_index(const Config& x, const Move& y,
                                        const UnsolvabilityCertificate& cert,
                                        const GeneratorSet& gens) {
  if (is_semi_homogeneous(x, cert)) {
    throw InvalidArgument("adversary_move: configuration is already "
                          "semi-homogeneous");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_semi_homogeneous(act(gens[i], x) + y, cert)) return i;
  }
  throw InternalError("adversary_move: no generator preserves the invariant "
                      "from " + to_string(x) + " under move " + to_string(y));
}

inline Permutation adversary_move(const Config& x, const Move& y,
                                  const UnsolvabilityCertificate& cert,
                                  const GeneratorSet& gens) {
  return gens[adversary_move_index(x, y, cert, gens)];
}

// Keeps coordinates k-1, 2k-1, ..., n-1 of every move of a rotation-table
// strategy; the result is for the table of n/k positions.
inline Strategy subsample_strategy(const Strategy& s, std::size_t k) {
  const auto& spec = s.spec();
  if (!spec.generators().is_rotation_set()) {
    throw InvalidArgument("subsample_strategy: spec is not the rotation table");
  }
  if (k == 0 || spec.n() % k != 0) {
    throw InvalidArgument("subsample_strategy: k must divide n");
  }
  const std::size_t a = spec.n() / k;
  std::vector<Move> moves;
  moves.reserve(s.size());
  for (const auto& y : s.moves()) {
    std::vector<Residue> e(a);
    for (std::size_t j = 0; j < a; ++j) e[j] = y[(j + 1) * k - 1];
    moves.emplace_back(spec.m(), std::move(e));
  }
  return Strategy(GameSpec::rotations(a, spec.m()), std::move(moves));
}

// Reduces every residue mod b; b must divide m.
inline Strategy project_strategy(const Strategy& s, std::uint32_t b) {
  const auto& spec = s.spec();
  if (b == 0 || spec.m() % b != 0) {
    throw InvalidArgument("project_strategy: " + std::to_string(b) +
                          " does not divide m = " + std::to_string(spec.m()));
  }
  std::vector<Move> moves;
  moves.reserve(s.size());
  for (const auto& y : s.moves()) {
    std::vector<Residue> e(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) e[j] = y[j] % b;
    moves.emplace_back(b, std::move(e));
  }
  return Strategy(GameSpec(spec.n(), b, spec.generators()), std::move(moves));
}

}  // namespace blindfold

#endif  // BLINDFOLD_REFUTATION_HPP_
