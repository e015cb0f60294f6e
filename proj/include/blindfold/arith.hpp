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

#ifndef BLINDFOLD_ARITH_HPP_
#define BLINDFOLD_ARITH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "blindfold/error.hpp"

namespace blindfold {

inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

// Prime factorization by trial division, as (prime, exponent) pairs in
// increasing prime order. factorize(1) is empty.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(
    std::uint64_t x) {
  if (x == 0) throw InvalidArgument("factorize: zero has no factorization");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d != 0) continue;
    unsigned e = 0;
    while (x % d == 0) {
      x /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

// If x = p^k for a prime p and k >= 1, returns {p, k}.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(
    std::uint64_t x) {
  if (x < 2) return std::nullopt;
  auto f = factorize(x);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

// base^exp, or nullopt when the result exceeds `limit`.
inline std::optional<std::uint64_t> checked_pow(
    std::uint64_t base, std::uint64_t exp,
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

}  // namespace blindfold

#endif  // BLINDFOLD_ARITH_HPP_
