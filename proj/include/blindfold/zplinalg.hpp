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

#ifndef BLINDFOLD_ZPLINALG_HPP_
#define BLINDFOLD_ZPLINALG_HPP_

// Residue vectors and exact linear algebra over the prime field Z_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blindfold/arith.hpp"
#include "blindfold/error.hpp"
#include "blindfold/permgroup.hpp"

namespace blindfold {

using Residue = std::uint32_t;

// A vector in Z_m^n. Used for configurations, moves and basis vectors alike.
class ModVector {
 public:
  ModVector() = default;

  ModVector(std::uint32_t modulus, std::vector<Residue> entries)
      : modulus_(modulus), entries_(std::move(entries)) {
    if (modulus_ == 0) throw InvalidArgument("ModVector: modulus must be >= 1");
    for (Residue r : entries_) {
      if (r >= modulus_) {
        throw InvalidArgument("ModVector: entry " + std::to_string(r) +
                              " not below modulus " +
                              std::to_string(modulus_));
      }
    }
  }

  static ModVector zero(std::uint32_t modulus, std::size_t n) {
    return ModVector(modulus, std::vector<Residue>(n, 0));
  }

  // Reduces arbitrary integers into [0, modulus).
  static ModVector reduce(std::uint32_t modulus,
                          const std::vector<std::int64_t>& values) {
    if (modulus == 0) throw InvalidArgument("ModVector: modulus must be >= 1");
    std::vector<Residue> e(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::int64_t r = values[i] % static_cast<std::int64_t>(modulus);
      if (r < 0) r += modulus;
      e[i] = static_cast<Residue>(r);
    }
    return ModVector(modulus, std::move(e));
  }

  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return entries_.size(); }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Residue>& entries() const { return entries_; }

  bool is_zero() const {
    for (Residue r : entries_) {
      if (r) return false;
    }
    return true;
  }

  ModVector& operator+=(const ModVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      entries_[i] = static_cast<Residue>(
          (std::uint64_t{entries_[i]} + o.entries_[i]) % modulus_);
    }
    return *this;
  }

  ModVector& operator-=(const ModVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      entries_[i] = static_cast<Residue>(
          (std::uint64_t{entries_[i]} + modulus_ - o.entries_[i]) % modulus_);
    }
    return *this;
  }

  ModVector& operator*=(std::uint64_t c) {
    c %= modulus_;
    for (auto& r : entries_) {
      r = static_cast<Residue>((std::uint64_t{r} * c) % modulus_);
    }
    return *this;
  }

  friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
  friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }
  friend ModVector operator*(std::uint64_t c, ModVector a) { return a *= c; }
  ModVector operator-() const { return zero(modulus_, size()) - *this; }

  friend bool operator==(const ModVector&, const ModVector&) = default;

 private:
  void check_compatible(const ModVector& o) const {
    if (o.modulus_ != modulus_ || o.size() != size()) {
      throw InvalidArgument("ModVector: modulus or length mismatch");
    }
  }

  std::uint32_t modulus_ = 1;
  std::vector<Residue> entries_;
};

inline std::string to_string(const ModVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// p-adic valuation: the largest e with p^e | i.
inline unsigned vp(std::uint64_t i, std::uint64_t p) {
  if (i == 0) throw InvalidArgument("vp: valuation of zero is undefined");
  if (p < 2) throw InvalidArgument("vp: base must be >= 2");
  unsigned e = 0;
  while (i % p == 0) {
    i /= p;
    ++e;
  }
  return e;
}

namespace zp {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e,
                             std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

inline void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::string(who) + ": modulus " + std::to_string(p) +
                          " is not prime");
  }
}

// Dense row-major matrix over Z_p.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> a;

  Matrix(std::size_t r, std::size_t c, std::uint64_t prime)
      : rows(r), cols(c), p(prime), a(r * c, 0) {}

  std::uint64_t& operator()(std::size_t i, std::size_t j) {
    return a[i * cols + j];
  }
  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

// Reduced row echelon form in place, pivoting on the lowest column first.
// Only the first `limit` columns are used as pivot candidates. Returns the
// pivot column of each nonzero row, in row order.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    std::uint64_t inv = inv_mod(m(r, c), m.p);
    for (std::size_t j = 0; j < m.cols; ++j) m(r, j) = m(r, j) * inv % m.p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      std::uint64_t f = m(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        m(i, j) = (m(i, j) + m.p - f * m(r, j) % m.p) % m.p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::vector<std::size_t> rref(Matrix& m) { return rref(m, m.cols); }

// Null space basis of m in echelon order: one vector per free column,
// ascending, with a 1 at that column.
inline std::vector<std::vector<std::uint64_t>> kernel(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = (m.p - m(i, f)) % m.p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline ModVector to_mod_vector(const std::vector<std::uint64_t>& v,
                               std::uint64_t p) {
  std::vector<Residue> e(v.begin(), v.end());
  return ModVector(static_cast<std::uint32_t>(p), std::move(e));
}

inline std::size_t rank(const std::vector<ModVector>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m(vectors.size(), vectors.front().size(), vectors.front().modulus());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = vectors[i][j];
  }
  return rref(m).size();
}

}  // namespace zp

// An ordered basis x_0, ..., x_{n-1} of Z_p^n.
class ZpBasis {
 public:
  ZpBasis(std::uint32_t p, std::vector<ModVector> vectors)
      : p_(p), vectors_(std::move(vectors)) {
    zp::require_prime(p_, "ZpBasis");
    for (const auto& v : vectors_) {
      if (v.modulus() != p_ || v.size() != vectors_.size()) {
        throw InvalidArgument("ZpBasis: vectors must be n vectors in Z_p^n");
      }
    }
    if (zp::rank(vectors_) != vectors_.size()) {
      throw InvalidArgument("ZpBasis: vectors are linearly dependent");
    }
  }

  std::uint32_t p() const { return p_; }
  std::size_t size() const { return vectors_.size(); }
  const ModVector& operator[](std::size_t j) const { return vectors_[j]; }
  const std::vector<ModVector>& vectors() const { return vectors_; }

 private:
  std::uint32_t p_;
  std::vector<ModVector> vectors_;
};

// Coefficients c with sum_j c_j * vectors[j] == target, or nullopt when the
// target is outside the span. Free variables are set to zero.
inline std::optional<std::vector<Residue>> solve_in_span(
    const std::vector<ModVector>& vectors, const ModVector& target) {
  const std::uint64_t p = target.modulus();
  zp::require_prime(p, "solve_in_span");
  const std::size_t n = target.size();
  for (const auto& v : vectors) {
    if (v.modulus() != p || v.size() != n) {
      throw InvalidArgument("solve_in_span: modulus or length mismatch");
    }
  }
  const std::size_t k = vectors.size();
  zp::Matrix m(n, k + 1, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = vectors[j][i];
    m(i, k) = target[i];
  }
  auto pivots = zp::rref(m, k);
  for (std::size_t i = pivots.size(); i < n; ++i) {
    if (m(i, k) != 0) return std::nullopt;
  }
  std::vector<Residue> coeffs(k, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    coeffs[pivots[i]] = static_cast<Residue>(m(i, k));
  }
  return coeffs;
}

inline std::optional<std::vector<Residue>> solve_in_span(
    const ZpBasis& basis, const ModVector& target) {
  return solve_in_span(basis.vectors(), target);
}

// x_j has entry i equal to C(i, j) mod p, built by Pascal's rule. The matrix
// with these columns is lower unitriangular.
inline ZpBasis binomial_basis(std::uint32_t p, std::size_t n) {
  zp::require_prime(p, "binomial_basis");
  std::size_t x = n;
  while (x > 1 && x % p == 0) x /= p;
  if (n == 0 || x != 1) {
    throw InvalidArgument("binomial_basis: n=" + std::to_string(n) +
                          " is not a power of " + std::to_string(p));
  }
  std::vector<std::vector<Residue>> cols(n, std::vector<Residue>(n, 0));
  std::vector<Residue> row(n, 0), prev(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    row[0] = 1;
    for (std::size_t j = 1; j <= i; ++j) {
      row[j] = static_cast<Residue>((prev[j - 1] + prev[j]) % p);
    }
    for (std::size_t j = 0; j <= i; ++j) cols[j][i] = row[j];
    prev = row;
  }
  std::vector<ModVector> vectors;
  vectors.reserve(n);
  for (auto& c : cols) vectors.emplace_back(p, std::move(c));
  return ZpBasis(p, std::move(vectors));
}

// Basis of { x in Z_p^n : g.x = x for every g in S } in echelon order.
inline std::vector<ModVector> fixed_space(const GeneratorSet& gens,
                                          std::uint32_t p) {
  zp::require_prime(p, "fixed_space");
  const std::size_t n = gens.n();
  // g.x = x  <=>  x_i = x_{g(i)} for every position i.
  std::vector<std::pair<std::size_t, std::size_t>> eqs;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g(i) != i) eqs.emplace_back(i, g(i));
    }
  }
  zp::Matrix m(eqs.size(), n, p);
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    m(r, eqs[r].first) = 1;
    m(r, eqs[r].second) = p - 1;
  }
  std::vector<ModVector> out;
  for (auto& v : zp::kernel(std::move(m))) out.push_back(zp::to_mod_vector(v, p));
  return out;
}

// Ordered basis with the chain property: for every g in S and every j,
// g.x_j - x_j lies in span(x_0, ..., x_{j-1}). Each x_j is a fixed vector of
// the induced action on Z_p^n / span(x_0, ..., x_{j-1}); such a vector exists
// whenever the generated group is a p-group.
inline ZpBasis fixed_chain_basis(const GeneratorSet& gens, std::uint32_t p,
                                 std::size_t group_cap = kDefaultGroupCap) {
  zp::require_prime(p, "fixed_chain_basis");
  const std::size_t order = closure(gens, group_cap).order();
  if (order != 1 && !(prime_power(order) && prime_power(order)->first == p)) {
    throw InvalidArgument("fixed_chain_basis: |G| = " + std::to_string(order) +
                          " is not a power of " + std::to_string(p));
  }
  const std::size_t n = gens.n();
  std::vector<ModVector> chosen;

  while (chosen.size() < n) {
    // Echelon form of the chosen vectors; the standard vectors at the
    // non-pivot columns complete it to a basis of Z_p^n.
    zp::Matrix echelon(chosen.size(), n, p);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) echelon(i, j) = chosen[i][j];
    }
    auto pivots = zp::rref(echelon);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_pivot[j]) free_cols.push_back(j);
    }
    const std::size_t q = free_cols.size();

    // Quotient coordinates of a standard vector e_pos: eliminate the pivot
    // columns, read off the free columns.
    auto quotient_coords = [&](std::size_t pos) {
      std::vector<std::uint64_t> v(n, 0);
      v[pos] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::uint64_t f = v[pivots[r]];
        if (!f) continue;
        for (std::size_t j = 0; j < n; ++j) {
          v[j] = (v[j] + p - f * echelon(r, j) % p) % p;
        }
      }
      std::vector<std::uint64_t> out(q);
      for (std::size_t j = 0; j < q; ++j) out[j] = v[free_cols[j]];
      return out;
    };

    // Stack (A_g - I) for the induced action A_g on the quotient.
    zp::Matrix stacked(gens.size() * q, q, p);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const auto& g = gens[gi];
      for (std::size_t col = 0; col < q; ++col) {
        auto image = quotient_coords(g(free_cols[col]));
        for (std::size_t row = 0; row < q; ++row) {
          std::uint64_t v = image[row];
          if (row == col) v = (v + p - 1) % p;
          stacked(gi * q + row, col) = v;
        }
      }
    }
    auto fixed = zp::kernel(std::move(stacked));
    if (fixed.empty()) {
      throw InternalError("fixed_chain_basis: quotient has no fixed vector");
    }
    std::vector<Residue> lifted(n, 0);
    for (std::size_t j = 0; j < q; ++j) {
      lifted[free_cols[j]] = static_cast<Residue>(fixed.front()[j]);
    }
    chosen.emplace_back(p, std::move(lifted));
  }
  return ZpBasis(p, std::move(chosen));
}

}  // namespace blindfold

#endif  // BLINDFOLD_ZPLINALG_HPP_
