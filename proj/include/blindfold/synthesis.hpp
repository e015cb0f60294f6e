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

#ifndef BLINDFOLD_SYNTHESIS_HPP_
#define BLINDFOLD_SYNTHESIS_HPP_

// Winnability decision and construction of optimal-length winning
// strategies.
//
// Winnable games and their constructions:
//   m = 1                 the empty strategy
//   |G| = 1               prefix sums walk Z_m^n in reflected Gray order
//   |G| = p^a, m = p      ruler sequence y_i = x_{v_p(i)} over a basis whose
//                         flag is G-stable (binomial basis for the cyclic
//                         table, fixed-chain basis otherwise)
//   |G| = p^a, m = p^b    b - 1 lifts of the mod-p strategy
// Every construction has exactly m^n - 1 moves.

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
#include "blindfold/zplinalg.hpp"

namespace blindfold {

// Strategies longer than this are refused.
inline constexpr std::uint64_t kDefaultLengthCap = std::uint64_t{1} << 32;

enum class SolvabilityReason {
  kTrivialGroup,
  kUnitModulus,
  kPrimePowerMatch,
  kMixedPrimes,
};

inline const char* to_string(SolvabilityReason r) {
  switch (r) {
    case SolvabilityReason::kTrivialGroup: return "trivial-group";
    case SolvabilityReason::kUnitModulus: return "unit-modulus";
    case SolvabilityReason::kPrimePowerMatch: return "prime-power-match";
    case SolvabilityReason::kMixedPrimes: return "mixed-primes";
  }
  return "?";
}

struct SolvabilityVerdict {
  bool solvable = false;
  std::uint64_t group_order = 0;
  SolvabilityReason reason = SolvabilityReason::kMixedPrimes;
  // Set for kPrimePowerMatch: |G| = p^a, m = p^b.
  std::optional<std::uint64_t> p;
  std::optional<unsigned> a;
  std::optional<unsigned> b;
};

inline SolvabilityVerdict decide(const GameSpec& spec,
                                 std::size_t group_cap = kDefaultGroupCap) {
  SolvabilityVerdict v;
  v.group_order = closure(spec.generators(), group_cap).order();
  if (v.group_order == 1) {
    v.solvable = true;
    v.reason = SolvabilityReason::kTrivialGroup;
  } else if (spec.m() == 1) {
    v.solvable = true;
    v.reason = SolvabilityReason::kUnitModulus;
  } else {
    auto g = prime_power(v.group_order);
    auto m = prime_power(spec.m());
    if (g && m && g->first == m->first) {
      v.solvable = true;
      v.reason = SolvabilityReason::kPrimePowerMatch;
      v.p = g->first;
      v.a = g->second;
      v.b = m->second;
    } else {
      v.solvable = false;
      v.reason = SolvabilityReason::kMixedPrimes;
    }
  }
  return v;
}

// m^n - 1: no strategy with fewer moves can win.
inline std::uint64_t optimal_length(std::uint64_t n, std::uint64_t m,
                                    std::uint64_t cap = kDefaultLengthCap) {
  if (m == 0) throw InvalidArgument("optimal_length: modulus must be >= 1");
  auto states = checked_pow(m, n, cap == UINT64_MAX ? cap : cap + 1);
  if (!states) {
    throw CapExceeded("optimal_length: " + std::to_string(m) + "^" +
                      std::to_string(n) + " - 1 exceeds " +
                      std::to_string(cap));
  }
  return *states - 1;
}

enum class Construction { kBinomial, kFixedChain, kGray, kLift };

inline const char* to_string(Construction c) {
  switch (c) {
    case Construction::kBinomial: return "binomial";
    case Construction::kFixedChain: return "fixed-chain";
    case Construction::kGray: return "gray";
    case Construction::kLift: return "lift";
  }
  return "?";
}

struct SynthesisResult {
  Strategy strategy;
  Construction construction = Construction::kGray;
  std::optional<ZpBasis> basis;  // the mod-p basis behind ruler sequences
  std::optional<std::uint64_t> p;
  std::optional<unsigned> a;
  std::optional<unsigned> b;
};

// For the trivial group: m^n - 1 moves, each +-1 on a single counter, whose
// prefix sums visit every nonzero vector of Z_m^n once (reflected mixed-radix
// Gray code, position 0 changing fastest).
inline Strategy enumeration_strategy(const GameSpec& spec,
                                     std::size_t group_cap = kDefaultGroupCap) {
  if (!closure(spec.generators(), group_cap).is_trivial()) {
    throw InvalidArgument("enumeration_strategy: group is not trivial");
  }
  const std::size_t n = spec.n();
  const std::uint32_t m = spec.m();
  const std::uint64_t len = optimal_length(n, m);
  std::vector<std::uint32_t> digits(n, 0);
  std::vector<int> dir(n, 1);
  std::vector<Move> moves;
  moves.reserve(len);
  for (std::uint64_t k = 0; k < len; ++k) {
    std::size_t j = 0;
    while (true) {
      const std::int64_t next = std::int64_t{digits[j]} + dir[j];
      if (next >= 0 && next < m) break;
      dir[j] = -dir[j];
      ++j;
    }
    digits[j] = static_cast<std::uint32_t>(std::int64_t{digits[j]} + dir[j]);
    std::vector<Residue> y(n, 0);
    y[j] = dir[j] > 0 ? 1 : m - 1;
    moves.emplace_back(m, std::move(y));
  }
  return Strategy(spec, std::move(moves));
}

namespace detail {

inline bool is_full_rotation_group(const Group& g) {
  if (g.order() != g.n()) return false;
  for (std::size_t r = 0; r < g.n(); ++r) {
    if (!g.contains(Permutation::rotation(g.n(), r))) return false;
  }
  return true;
}

// y_i = x_{v_p(i)} for i = 1 .. p^n - 1.
inline std::vector<Move> ruler_moves(const ZpBasis& basis) {
  const std::uint32_t p = basis.p();
  const std::uint64_t len = optimal_length(basis.size(), p);
  std::vector<Move> moves;
  moves.reserve(len);
  for (std::uint64_t i = 1; i <= len; ++i) moves.push_back(basis[vp(i, p)]);
  return moves;
}

inline SolvabilityVerdict require_solvable(const GameSpec& spec,
                                           std::size_t group_cap,
                                           const char* who) {
  auto v = decide(spec, group_cap);
  if (!v.solvable) {
    throw InvalidArgument(std::string(who) + ": game is not winnable (|G| = " +
                          std::to_string(v.group_order) + ", m = " +
                          std::to_string(spec.m()) + ")");
  }
  return v;
}

}  // namespace detail

inline SynthesisResult synth_mod_p(const GameSpec& spec,
                                   std::size_t group_cap = kDefaultGroupCap) {
  if (!is_prime(spec.m())) {
    throw InvalidArgument("synth_mod_p: modulus " + std::to_string(spec.m()) +
                          " is not prime");
  }
  auto verdict = detail::require_solvable(spec, group_cap, "synth_mod_p");
  const std::uint32_t p = spec.m();
  if (verdict.reason == SolvabilityReason::kTrivialGroup) {
    SynthesisResult r{enumeration_strategy(spec, group_cap),
                      Construction::kGray, std::nullopt, p, 0, 1};
    return r;
  }
  Group g = closure(spec.generators(), group_cap);
  SynthesisResult r{Strategy(spec, {}), Construction::kFixedChain,
                    std::nullopt, p, verdict.a, 1};
  if (detail::is_full_rotation_group(g)) {
    r.construction = Construction::kBinomial;
    r.basis = binomial_basis(p, spec.n());
  } else {
    r.basis = fixed_chain_basis(spec.generators(), p, group_cap);
  }
  r.strategy = Strategy(spec, detail::ruler_moves(*r.basis));
  return r;
}

// Combines a winning (S, p^(b-1)) strategy and a winning (S, p) strategy
// into a winning (S, p^b) strategy. With block = p^((b-1)n), move i (1-based)
// is the (i/block)-th mod-p move when block | i and p times the
// (i mod block)-th base move otherwise. Residues embed by value.
inline Strategy lift_strategy(const Strategy& base, const Strategy& modp) {
  const auto& bs = base.spec();
  const auto& ps = modp.spec();
  if (bs.n() != ps.n() || !(bs.generators() == ps.generators())) {
    throw InvalidArgument("lift_strategy: strategies are for different games");
  }
  const std::uint32_t p = ps.m();
  if (!is_prime(p)) {
    throw InvalidArgument("lift_strategy: second modulus is not prime");
  }
  auto base_pp = prime_power(bs.m());
  if (bs.m() != 1 && !(base_pp && base_pp->first == p)) {
    throw InvalidArgument("lift_strategy: base modulus " +
                          std::to_string(bs.m()) + " is not a power of " +
                          std::to_string(p));
  }
  const std::size_t n = bs.n();
  const std::uint64_t block = optimal_length(n, bs.m()) + 1;
  if (base.size() != block - 1 || modp.size() != optimal_length(n, p)) {
    throw InvalidArgument(
        "lift_strategy: inputs must have optimal length m^n - 1");
  }
  const std::uint64_t target_m = std::uint64_t{bs.m()} * p;
  if (target_m > UINT32_MAX) {
    throw CapExceeded("lift_strategy: modulus overflow");
  }
  const auto m = static_cast<std::uint32_t>(target_m);
  const std::uint64_t len = optimal_length(n, m);
  std::vector<Move> moves;
  moves.reserve(len);
  for (std::uint64_t i = 1; i <= len; ++i) {
    std::vector<Residue> e(n);
    if (i % block == 0) {
      const auto& y = modp.moves()[i / block - 1];
      for (std::size_t j = 0; j < n; ++j) e[j] = y[j];
    } else {
      const auto& x = base.moves()[i % block - 1];
      for (std::size_t j = 0; j < n; ++j) e[j] = p * x[j];
    }
    moves.emplace_back(m, std::move(e));
  }
  return Strategy(GameSpec(n, m, bs.generators()), std::move(moves));
}

inline SynthesisResult synth(const GameSpec& spec,
                             std::size_t group_cap = kDefaultGroupCap) {
  auto verdict = detail::require_solvable(spec, group_cap, "synth");
  switch (verdict.reason) {
    case SolvabilityReason::kTrivialGroup: {
      auto pp = prime_power(spec.m());
      SynthesisResult r{enumeration_strategy(spec, group_cap),
                        Construction::kGray, std::nullopt, std::nullopt,
                        std::nullopt, std::nullopt};
      if (pp) {
        r.p = pp->first;
        r.a = 0;
        r.b = pp->second;
      }
      return r;
    }
    case SolvabilityReason::kUnitModulus:
      return SynthesisResult{Strategy(spec, {}), Construction::kGray,
                             std::nullopt, std::nullopt, std::nullopt,
                             std::nullopt};
    default:
      break;
  }
  const auto p = static_cast<std::uint32_t>(*verdict.p);
  GameSpec mod_p_spec(spec.n(), p, spec.generators());
  SynthesisResult r = synth_mod_p(mod_p_spec, group_cap);
  if (*verdict.b == 1) return r;

  Strategy lifted = r.strategy;
  for (unsigned level = 2; level <= *verdict.b; ++level) {
    lifted = lift_strategy(lifted, r.strategy);
  }
  r.strategy = std::move(lifted);
  r.construction = Construction::kLift;
  r.b = verdict.b;
  return r;
}

}  // namespace blindfold

#endif  // BLINDFOLD_SYNTHESIS_HPP_
