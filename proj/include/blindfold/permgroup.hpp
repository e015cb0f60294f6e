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

#ifndef BLINDFOLD_PERMGROUP_HPP_
#define BLINDFOLD_PERMGROUP_HPP_

// Permutations of table positions and the groups they generate.
//
// Positions are 0-based. A Permutation stores its image form: entry i is the
// position that the counter at position i moves to. Composition is
// right-to-left everywhere in the library:
//
//   compose(a, b)(i) == a(b(i))        (apply b first, then a)

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "blindfold/error.hpp"

namespace blindfold {

class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;

  explicit Permutation(std::vector<value_type> mapping)
      : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (value_type v : mapping_) {
      if (v >= mapping_.size() || seen[v]) {
        throw InvalidArgument("Permutation: image form is not a bijection");
      }
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<value_type> mapping)
      : Permutation(std::vector<value_type>(mapping)) {}

  static Permutation identity(std::size_t n) {
    std::vector<value_type> m(n);
    std::iota(m.begin(), m.end(), value_type{0});
    return Permutation(std::move(m));
  }

  // Rotation of an n-gon table by r steps: position i goes to (i + r) mod n.
  static Permutation rotation(std::size_t n, std::size_t r) {
    std::vector<value_type> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = static_cast<value_type>((i + r) % n);
    }
    return Permutation(std::move(m));
  }

  std::size_t size() const { return mapping_.size(); }
  value_type operator()(std::size_t i) const { return mapping_[i]; }
  const std::vector<value_type>& mapping() const { return mapping_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
      if (mapping_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> mapping_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p.mapping()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p(i));
  }
  return s + "]";
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("compose: permutations act on different n");
  }
  std::vector<Permutation::value_type> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a(b(i));
  return Permutation(std::move(m));
}

inline Permutation inverse(const Permutation& a) {
  std::vector<Permutation::value_type> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[a(i)] = static_cast<Permutation::value_type>(i);
  }
  return Permutation(std::move(m));
}

inline Permutation power(const Permutation& a, std::uint64_t k) {
  Permutation result = Permutation::identity(a.size());
  Permutation base = a;
  while (k) {
    if (k & 1) result = compose(base, result);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

// Smallest k >= 1 with a^k = identity: the lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation& a) {
  std::vector<bool> seen(a.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a(j)) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

// The input set S of table permutations. The identity is not required at
// this level; GameSpec requires it.
class GeneratorSet {
 public:
  GeneratorSet(std::size_t n, std::vector<Permutation> perms)
      : n_(n), perms_(std::move(perms)) {
    for (const auto& p : perms_) {
      if (p.size() != n_) {
        throw InvalidArgument("GeneratorSet: permutation of size " +
                              std::to_string(p.size()) + " in a set over n=" +
                              std::to_string(n_));
      }
    }
  }

  // All n rotations, identity first: {rot0, rot1, ..., rot(n-1)}.
  static GeneratorSet rotations(std::size_t n) {
    std::vector<Permutation> perms;
    perms.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
      perms.push_back(Permutation::rotation(n, r));
    }
    return GeneratorSet(n, std::move(perms));
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  bool empty() const { return perms_.empty(); }
  const std::vector<Permutation>& perms() const { return perms_; }
  const Permutation& operator[](std::size_t i) const { return perms_[i]; }
  auto begin() const { return perms_.begin(); }
  auto end() const { return perms_.end(); }

  bool contains(const Permutation& p) const {
    return std::find(perms_.begin(), perms_.end(), p) != perms_.end();
  }
  bool contains_identity() const {
    return std::any_of(perms_.begin(), perms_.end(),
                       [](const Permutation& p) { return p.is_identity(); });
  }

  // Appends the identity when it is missing; listed order is otherwise kept
  // so that generator indices stay stable.
  GeneratorSet with_identity() const {
    if (contains_identity()) return *this;
    auto perms = perms_;
    perms.push_back(Permutation::identity(n_));
    return GeneratorSet(n_, std::move(perms));
  }

  // T = { s^-1 : s in S }, in listed order.
  GeneratorSet inverses() const {
    std::vector<Permutation> inv;
    inv.reserve(perms_.size());
    for (const auto& p : perms_) inv.push_back(inverse(p));
    return GeneratorSet(n_, std::move(inv));
  }

  // True when the set of listed permutations is exactly the n rotations.
  bool is_rotation_set() const {
    std::set<Permutation> mine(perms_.begin(), perms_.end());
    auto rot = rotations(n_);
    std::set<Permutation> all(rot.begin(), rot.end());
    return mine == all;
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> perms_;
};

inline constexpr std::size_t kDefaultGroupCap = 100000;

// A fully materialized permutation group.
class Group {
 public:
  std::size_t n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

  std::size_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      throw InvalidArgument("Group: " + to_string(p) + " is not an element");
    }
    return it->second;
  }

  bool is_trivial() const { return elements_.size() == 1; }

 private:
  friend Group closure(const GeneratorSet&, std::size_t);

  std::size_t n_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

// Breadth-first closure of S. Elements appear in BFS insertion order: the
// identity first, then for each dequeued element e and each generator s in
// listed order, compose(s, e) if new.
inline Group closure(const GeneratorSet& gens,
                     std::size_t cap = kDefaultGroupCap) {
  if (gens.empty()) throw InvalidArgument("closure: empty generator list");
  Group g;
  g.n_ = gens.n();
  auto add = [&g, cap](Permutation p) {
    if (g.index_.count(p)) return false;
    if (g.elements_.size() >= cap) {
      throw CapExceeded("closure: group order exceeds cap " +
                        std::to_string(cap));
    }
    g.index_.emplace(p, g.elements_.size());
    g.elements_.push_back(std::move(p));
    return true;
  };
  add(Permutation::identity(gens.n()));
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      add(compose(s, g.elements_[head]));
    }
  }
  return g;
}

// Generator normalization: the adversary's default move t is folded into the
// board, leaving the set t^-1 . S which contains the identity.
inline GeneratorSet normalize_generators(const GeneratorSet& gens,
                                         const Permutation& t) {
  if (!gens.contains(t)) {
    throw InvalidArgument("normalize_generators: " + to_string(t) +
                          " is not in S");
  }
  Permutation t_inv = inverse(t);
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const auto& s : gens) out.push_back(compose(t_inv, s));
  return GeneratorSet(gens.n(), std::move(out));
}

// First element of G (closure order) whose order is divisible by p, raised
// to order/p. The result has order exactly p.
inline Permutation cauchy_element(const Group& group, std::uint64_t p) {
  if (p < 2 || group.order() % p != 0) {
    throw InvalidArgument("cauchy_element: " + std::to_string(p) +
                          " does not divide |G| = " +
                          std::to_string(group.order()));
  }
  for (const auto& g : group.elements()) {
    std::uint64_t k = element_order(g);
    if (k % p == 0) return power(g, k / p);
  }
  throw InternalError("cauchy_element: no element of order divisible by p");
}

inline std::vector<std::size_t> orbit(const Group& group, std::size_t point) {
  std::set<std::size_t> out;
  for (const auto& g : group.elements()) out.insert(g(point));
  return {out.begin(), out.end()};
}

// Smallest position moved by c; c must not be the identity.
inline std::size_t smallest_moved_point(const Permutation& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c(i) != i) return i;
  }
  throw InvalidArgument("smallest_moved_point: identity moves nothing");
}

using Block = std::vector<std::size_t>;

// The family { g(c^i(base)) : 0 <= i < p } over g in G, each block sorted and
// the family deduplicated and sorted. Positions outside the G-orbit of
// `base` appear in no block. Blocks from different g may overlap when the
// <c>-orbit of base is not a block of imprimitivity.
inline std::vector<Block> cyclic_blocks(const Group& group,
                                        const Permutation& c, std::uint64_t p,
                                        std::size_t base) {
  if (!group.contains(c)) {
    throw InvalidArgument("cyclic_blocks: " + to_string(c) +
                          " is not in the group");
  }
  if (element_order(c) != p) {
    throw InvalidArgument("cyclic_blocks: element order is not p");
  }
  if (base >= group.n()) throw InvalidArgument("cyclic_blocks: bad base");
  std::vector<std::size_t> cycle;
  std::size_t x = base;
  do {
    cycle.push_back(x);
    x = c(x);
  } while (x != base);

  std::set<Block> family;
  for (const auto& g : group.elements()) {
    Block b;
    b.reserve(cycle.size());
    for (auto pos : cycle) b.push_back(g(pos));
    std::sort(b.begin(), b.end());
    family.insert(std::move(b));
  }
  return {family.begin(), family.end()};
}

// Blocks based at the smallest position moved by c, so that every block has
// exactly p elements.
inline std::vector<Block> cyclic_blocks(const Group& group,
                                        const Permutation& c,
                                        std::uint64_t p) {
  return cyclic_blocks(group, c, p, smallest_moved_point(c));
}

}  // namespace blindfold

#endif  // BLINDFOLD_PERMGROUP_HPP_
