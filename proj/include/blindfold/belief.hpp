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

#ifndef BLINDFOLD_BELIEF_HPP_
#define BLINDFOLD_BELIEF_HPP_

// Exact adversarial verification of oblivious strategies.
//
// The belief set after k rounds holds every configuration that some start
// and some adversary line can produce without the player having won yet.
// A strategy wins iff the belief set is empty once all moves are played.
//
// Configurations are encoded as base-m integers, position 0 least
// significant. Up to a configurable size the belief set is a dense bitset;
// larger state spaces fall back to a hash set.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "blindfold/arith.hpp"
#include "blindfold/error.hpp"
#include "blindfold/game.hpp"

namespace blindfold {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

class DeadlineExceeded : public Error {
 public:
  explicit DeadlineExceeded(const std::string& what) : Error(what) {}
};

// Base-m positional encoding of Z_m^n.
class ConfigCodec {
 public:
  ConfigCodec(std::size_t n, std::uint32_t m,
              std::uint64_t cap = kDefaultStateCap)
      : n_(n), m_(m) {
    if (m == 0) throw InvalidArgument("ConfigCodec: modulus must be >= 1");
    auto total = checked_pow(m, n, cap);
    if (!total) {
      throw CapExceeded("state space " + std::to_string(m) + "^" +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
    }
    total_ = *total;
    pw_.resize(n + 1);
    pw_[0] = 1;
    for (std::size_t i = 0; i < n; ++i) pw_[i + 1] = pw_[i] * m;
  }

  std::size_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t weight(std::size_t i) const { return pw_[i]; }

  std::uint64_t encode(const ModVector& x) const {
    if (x.size() != n_ || x.modulus() != m_) {
      throw InvalidArgument("ConfigCodec: vector is not in Z_m^n");
    }
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n_; ++i) c += x[i] * pw_[i];
    return c;
  }

  ModVector decode(std::uint64_t code) const {
    std::vector<Residue> e(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      e[i] = static_cast<Residue>(code % m_);
      code /= m_;
    }
    return ModVector(m_, std::move(e));
  }

 private:
  std::size_t n_;
  std::uint32_t m_;
  std::uint64_t total_ = 1;
  std::vector<std::uint64_t> pw_;
};

// A set of configurations of Z_m^n, never containing zero.
class BeliefState {
 public:
  enum class Layout { kDense, kSparse };

  BeliefState(const ConfigCodec& codec, Layout layout)
      : codec_(codec), layout_(layout) {
    if (layout_ == Layout::kDense) {
      if (codec_.total() > (std::uint64_t{1} << 32)) {
        throw CapExceeded("BeliefState: dense layout limited to 2^32 states");
      }
      words_.assign((codec_.total() + 63) / 64, 0);
    }
  }

  // Every nonzero configuration: the belief before any move is played.
  static BeliefState all_nonzero(const ConfigCodec& codec, Layout layout) {
    BeliefState b(codec, layout);
    const std::uint64_t total = codec.total();
    if (layout == Layout::kDense) {
      std::fill(b.words_.begin(), b.words_.end(), ~std::uint64_t{0});
      if (total % 64) b.words_.back() = (std::uint64_t{1} << (total % 64)) - 1;
      b.words_[0] &= ~std::uint64_t{1};
    } else {
      b.set_.reserve(total);
      for (std::uint64_t c = 1; c < total; ++c) b.set_.insert(c);
    }
    b.count_ = total - 1;
    return b;
  }

  const ConfigCodec& codec() const { return codec_; }
  Layout layout() const { return layout_; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::uint64_t code) const {
    if (code >= codec_.total()) return false;
    if (layout_ == Layout::kDense) {
      return (words_[code >> 6] >> (code & 63)) & 1;
    }
    return set_.count(code) != 0;
  }
  bool contains(const ModVector& x) const {
    return contains(codec_.encode(x));
  }

  void insert(std::uint64_t code) {
    if (code == 0) return;
    if (code >= codec_.total()) {
      throw InvalidArgument("BeliefState: code out of range");
    }
    if (contains(code)) return;
    if (layout_ == Layout::kDense) {
      words_[code >> 6] |= std::uint64_t{1} << (code & 63);
    } else {
      set_.insert(code);
    }
    ++count_;
  }
  void insert(const ModVector& x) { insert(codec_.encode(x)); }

  // Members in increasing code order.
  std::vector<std::uint64_t> codes() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    if (layout_ == Layout::kDense) {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
          out.push_back(w * 64 + std::countr_zero(bits));
        }
      }
    } else {
      out.assign(set_.begin(), set_.end());
      std::sort(out.begin(), out.end());
    }
    return out;
  }

  std::uint64_t first() const {
    if (empty()) throw InvalidArgument("BeliefState: empty");
    return codes().front();
  }

  friend bool operator==(const BeliefState& a, const BeliefState& b) {
    return a.codec_.n() == b.codec_.n() && a.codec_.m() == b.codec_.m() &&
           a.codes() == b.codes();
  }

 private:
  friend class BeliefStepper;

  ConfigCodec codec_;
  Layout layout_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
  std::unordered_set<std::uint64_t> set_;
};

// Advances belief sets one round at a time. Holds the per-round lookup
// tables and worker scratch buffers so a long strategy allocates once.
//
// For each generator g the successor of x has digit (x_i + off_{g,i}) mod m
// at position g(i), where off_{g,i} = y_{g(i)} when the table turns before
// the move and y_i when it turns after. The successor code is a sum of
// per-digit terms; the low digits are served from a table indexed by
// code mod m^low, the high digits are evaluated once per table row.
class BeliefStepper {
 public:
  BeliefStepper(const GeneratorSet& gens, TurnOrder order, unsigned threads)
      : gens_(gens), order_(order), threads_(std::max(1u, threads)) {}

  BeliefState step(const BeliefState& in, const Move& y) {
    const auto& codec = in.codec_;
    if (y.size() != codec.n() || y.modulus() != codec.m() ||
        gens_.n() != codec.n()) {
      throw InvalidArgument("belief_step: move or generators do not match");
    }
    BeliefState out(codec, in.layout_);
    if (in.empty()) return out;
    transitions_ += in.count_ * gens_.size();
    prepare_offsets(codec, y);
    if (in.layout_ == BeliefState::Layout::kDense) {
      step_dense(in, out);
    } else {
      step_sparse(in, out);
    }
    return out;
  }

  // Configuration transitions evaluated so far (|B| x |S| per round).
  std::uint64_t transitions() const { return transitions_; }

 private:
  void prepare_offsets(const ConfigCodec& codec, const Move& y) {
    const std::size_t n = codec.n();
    const std::size_t s = gens_.size();
    off_.assign(s * n, 0);
    wt_.assign(s * n, 0);
    for (std::size_t g = 0; g < s; ++g) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t dst = gens_[g](i);
        off_[g * n + i] =
            order_ == TurnOrder::kPermuteThenMove ? y[dst] : y[i];
        wt_[g * n + i] = codec.weight(dst);
      }
    }
  }

  // Contribution of digits [from, n) of `code_high` (the code shifted down
  // by `from` digits) for generator g.
  std::uint64_t high_part(std::size_t g, std::uint64_t code_high,
                          std::size_t from, const ConfigCodec& codec) const {
    const std::size_t n = codec.n();
    const std::uint32_t m = codec.m();
    std::uint64_t acc = 0;
    for (std::size_t i = from; i < n; ++i) {
      const std::uint32_t d = static_cast<std::uint32_t>(code_high % m);
      code_high /= m;
      std::uint32_t v = d + off_[g * n + i];
      if (v >= m) v -= m;
      acc += v * wt_[g * n + i];
    }
    return acc;
  }

  void step_dense(const BeliefState& in, BeliefState& out) {
    const auto& codec = in.codec_;
    const std::size_t n = codec.n();
    const std::uint32_t m = codec.m();
    const std::size_t s = gens_.size();

    // Table rows of m^low codes; keep the table no larger than the work.
    std::size_t low = 0;
    std::uint64_t row_len = 1;
    const std::uint64_t budget = std::max<std::uint64_t>(1, in.count_ / 2);
    while (low < n && row_len * m <= budget && row_len * m <= 4096) {
      row_len *= m;
      ++low;
    }
    low_table_.assign(s * row_len, 0);
    digits_.assign(low, 0);
    for (std::uint64_t lo = 0; lo < row_len; ++lo) {
      for (std::size_t g = 0; g < s; ++g) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < low; ++i) {
          std::uint32_t v = digits_[i] + off_[g * n + i];
          if (v >= m) v -= m;
          acc += v * wt_[g * n + i];
        }
        low_table_[g * row_len + lo] = static_cast<std::uint32_t>(acc);
      }
      for (std::size_t i = 0; i < low; ++i) {
        if (++digits_[i] < m) break;
        digits_[i] = 0;
      }
    }

    const std::size_t nwords = in.words_.size();
    unsigned workers = threads_;
    if (in.count_ < (std::uint64_t{1} << 15)) workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(1, nwords)));

    auto run = [&](std::size_t w_begin, std::size_t w_end,
                   std::vector<std::uint64_t>& dst) {
      std::vector<std::uint64_t> hi(s, 0);
      std::uint64_t row_start = 0, row_end = 0;
      for (std::size_t w = w_begin; w < w_end; ++w) {
        for (std::uint64_t bits = in.words_[w]; bits; bits &= bits - 1) {
          const std::uint64_t code = w * 64 + std::countr_zero(bits);
          if (code >= row_end) {
            const std::uint64_t row = code / row_len;
            row_start = row * row_len;
            row_end = row_start + row_len;
            for (std::size_t g = 0; g < s; ++g) {
              hi[g] = high_part(g, row, low, codec);
            }
          }
          const std::uint64_t lo = code - row_start;
          for (std::size_t g = 0; g < s; ++g) {
            const std::uint64_t c = hi[g] + low_table_[g * row_len + lo];
            dst[c >> 6] |= std::uint64_t{1} << (c & 63);
          }
        }
      }
    };

    if (workers == 1) {
      run(0, nwords, out.words_);
    } else {
      scratch_.resize(workers - 1);
      std::vector<std::thread> pool;
      const std::size_t chunk = (nwords + workers - 1) / workers;
      for (unsigned t = 1; t < workers; ++t) {
        auto& buf = scratch_[t - 1];
        buf.assign(nwords, 0);
        const std::size_t b = std::min(nwords, t * chunk);
        const std::size_t e = std::min(nwords, b + chunk);
        pool.emplace_back([&run, &buf, b, e] { run(b, e, buf); });
      }
      run(0, std::min(nwords, chunk), out.words_);
      for (auto& th : pool) th.join();
      for (const auto& buf : scratch_) {
        for (std::size_t w = 0; w < nwords; ++w) out.words_[w] |= buf[w];
      }
    }

    out.words_[0] &= ~std::uint64_t{1};
    std::uint64_t count = 0;
    for (auto w : out.words_) count += std::popcount(w);
    out.count_ = count;
  }

  void step_sparse(const BeliefState& in, BeliefState& out) {
    const auto& codec = in.codec_;
    const std::size_t s = gens_.size();
    out.set_.reserve(in.set_.size() * 2);
    for (std::uint64_t code : in.set_) {
      for (std::size_t g = 0; g < s; ++g) {
        const std::uint64_t c = high_part(g, code, 0, codec);
        if (c != 0) out.set_.insert(c);
      }
    }
    out.count_ = out.set_.size();
  }

  const GeneratorSet& gens_;
  TurnOrder order_;
  unsigned threads_;
  std::uint64_t transitions_ = 0;
  std::vector<std::uint32_t> off_;
  std::vector<std::uint64_t> wt_;
  std::vector<std::uint32_t> low_table_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::vector<std::uint64_t>> scratch_;
};

// One round: { act(g, x) + y : x in B, g in S } without zero.
inline BeliefState belief_step(const BeliefState& belief, const Move& y,
                               const GeneratorSet& gens,
                               TurnOrder order = TurnOrder::kPermuteThenMove,
                               unsigned threads = 1) {
  BeliefStepper stepper(gens, order, threads);
  return stepper.step(belief, y);
}

struct Witness {
  Config start;
  std::vector<std::size_t> perms;  // generator index per round
};

struct Verdict {
  bool wins = false;
  std::uint64_t steps_checked = 0;
  std::optional<Witness> witness;
  std::uint64_t transitions = 0;
};

struct VerifyOptions {
  bool want_witness = false;
  std::uint64_t state_cap = kDefaultStateCap;
  // Dense bitsets up to this many states, hash sets beyond.
  std::uint64_t dense_limit = kDefaultStateCap;
  unsigned threads = 1;
  TurnOrder order = TurnOrder::kPermuteThenMove;
  std::uint64_t witness_memory_cap = std::uint64_t{1} << 30;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

// Walks the belief history backwards, choosing for each round the first
// generator (listed order) that explains the surviving configuration.
inline Witness extract_witness(const Strategy& strategy,
                               const std::vector<BeliefState>& history,
                               TurnOrder order) {
  const auto& gens = strategy.spec().generators();
  const auto& codec = history.front().codec();
  std::vector<Permutation> inv;
  for (const auto& g : gens) inv.push_back(inverse(g));

  const std::size_t rounds = strategy.size();
  Witness w{codec.decode(history.back().first()), {}};
  w.perms.assign(rounds, 0);
  for (std::size_t k = rounds; k > 0; --k) {
    const Move& y = strategy.moves()[k - 1];
    bool found = false;
    for (std::size_t g = 0; g < gens.size() && !found; ++g) {
      Config prev = order == TurnOrder::kPermuteThenMove
                        ? act(inv[g], w.start - y)
                        : act(inv[g], w.start) - y;
      if (history[k - 1].contains(prev)) {
        w.perms[k - 1] = g;
        w.start = std::move(prev);
        found = true;
      }
    }
    if (!found) {
      throw InternalError("extract_witness: surviving configuration has no "
                          "predecessor");
    }
  }
  return w;
}

}  // namespace detail

inline Verdict verify_strategy(const Strategy& strategy,
                               const VerifyOptions& opts = {}) {
  const auto& spec = strategy.spec();
  ConfigCodec codec(spec.n(), spec.m(), opts.state_cap);
  const auto layout = codec.total() <= opts.dense_limit
                          ? BeliefState::Layout::kDense
                          : BeliefState::Layout::kSparse;

  if (opts.want_witness) {
    const std::uint64_t per_state =
        layout == BeliefState::Layout::kDense ? (codec.total() + 7) / 8
                                              : codec.total() * 8;
    const std::uint64_t need = per_state * (strategy.size() + 1);
    if (need > opts.witness_memory_cap) {
      throw CapExceeded("verify_strategy: witness history needs " +
                        std::to_string(need) + " bytes");
    }
  }

  BeliefStepper stepper(spec.generators(), opts.order, opts.threads);
  std::vector<BeliefState> history;
  BeliefState belief = BeliefState::all_nonzero(codec, layout);
  Verdict v;
  for (const auto& y : strategy.moves()) {
    if (belief.empty()) break;
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) {
      throw DeadlineExceeded("verify_strategy: deadline passed after " +
                             std::to_string(v.steps_checked) + " of " +
                             std::to_string(strategy.size()) + " rounds");
    }
    if (opts.want_witness) history.push_back(belief);
    belief = stepper.step(belief, y);
    ++v.steps_checked;
  }
  v.wins = belief.empty();
  v.transitions = stepper.transitions();
  if (!v.wins && opts.want_witness) {
    history.push_back(std::move(belief));
    v.witness = detail::extract_witness(strategy, history, opts.order);
  }
  return v;
}

}  // namespace blindfold

#endif  // BLINDFOLD_BELIEF_HPP_
