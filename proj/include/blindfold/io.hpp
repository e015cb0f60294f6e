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

#ifndef BLINDFOLD_IO_HPP_
#define BLINDFOLD_IO_HPP_

// JSON documents for strategies, verdicts and certificates.
//
// Output is canonical: keys in a fixed order, compact separators, one
// trailing newline. Writing a parsed document reproduces it byte for byte.

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "blindfold/belief.hpp"
#include "blindfold/error.hpp"
#include "blindfold/game.hpp"
#include "blindfold/permgroup.hpp"
#include "blindfold/refutation.hpp"
#include "blindfold/synthesis.hpp"

namespace blindfold {

using Json = nlohmann::ordered_json;

struct StrategyMetadata {
  std::string construction;
  std::vector<std::vector<Residue>> basis;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> a;
  std::optional<unsigned> b;

  friend bool operator==(const StrategyMetadata&,
                         const StrategyMetadata&) = default;
};

struct StrategyFile {
  Strategy strategy;
  std::optional<StrategyMetadata> metadata;
};

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline StrategyMetadata metadata_of(const SynthesisResult& r) {
  StrategyMetadata md;
  md.construction = to_string(r.construction);
  if (r.basis) {
    for (const auto& v : r.basis->vectors()) md.basis.push_back(v.entries());
  }
  md.p = r.p;
  md.a = r.a;
  md.b = r.b;
  return md;
}

namespace detail {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

inline std::uint64_t get_uint(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw ParseError(std::string("expected non-negative integer field '") +
                     key + "'");
  }
  return j.at(key).get<std::uint64_t>();
}

inline const Json& get_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("expected array field '") + key + "'");
  }
  return j.at(key);
}

inline std::vector<std::uint64_t> uint_array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  std::vector<std::uint64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      throw ParseError("expected non-negative integers, got " + v.dump());
    }
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline Json to_json(const Permutation& p) { return Json(p.mapping()); }
inline Json to_json(const ModVector& v) { return Json(v.entries()); }

inline Permutation permutation_from_json(const Json& j) {
  return detail::guarded([&] {
    std::vector<Permutation::value_type> m;
    for (auto v : detail::uint_array(j)) {
      m.push_back(static_cast<Permutation::value_type>(v));
    }
    return Permutation(std::move(m));
  });
}

// Parses a generator list; the identity is implied and appended when absent.
inline GeneratorSet generators_from_json(const Json& j, std::size_t n) {
  return detail::guarded([&] {
    if (!j.is_array()) throw ParseError("generators must be an array");
    std::vector<Permutation> perms;
    for (const auto& g : j) perms.push_back(permutation_from_json(g));
    return GeneratorSet(n, std::move(perms)).with_identity();
  });
}

inline Json to_json(const Strategy& s,
                    const std::optional<StrategyMetadata>& md = std::nullopt) {
  Json j;
  j["n"] = s.spec().n();
  j["m"] = s.spec().m();
  Json gens = Json::array();
  for (const auto& g : s.spec().generators()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  Json moves = Json::array();
  for (const auto& y : s.moves()) moves.push_back(to_json(y));
  j["moves"] = std::move(moves);
  if (md) {
    Json meta;
    meta["basis"] = md->basis;
    meta["construction"] = md->construction;
    meta["p"] = detail::optional_json(md->p);
    meta["a"] = detail::optional_json(md->a);
    meta["b"] = detail::optional_json(md->b);
    j["metadata"] = std::move(meta);
  }
  return j;
}

inline StrategyFile strategy_from_json(const Json& j) {
  return detail::guarded([&] {
    if (!j.is_object()) throw ParseError("strategy document must be an object");
    const std::uint64_t n = detail::get_uint(j, "n");
    const std::uint64_t m = detail::get_uint(j, "m");
    if (m == 0 || m > UINT32_MAX) throw ParseError("m out of range");
    GeneratorSet gens = generators_from_json(detail::get_array(j, "generators"),
                                             static_cast<std::size_t>(n));
    GameSpec spec(n, static_cast<std::uint32_t>(m), std::move(gens));
    std::vector<Move> moves;
    for (const auto& y : detail::get_array(j, "moves")) {
      auto raw = detail::uint_array(y);
      if (raw.size() != n) throw ParseError("move of wrong length");
      std::vector<Residue> e;
      for (auto v : raw) {
        if (v >= m) throw ParseError("move residue " + std::to_string(v) +
                                     " not below m");
        e.push_back(static_cast<Residue>(v));
      }
      moves.emplace_back(spec.m(), std::move(e));
    }
    StrategyFile f{Strategy(std::move(spec), std::move(moves)), std::nullopt};
    if (j.contains("metadata") && !j.at("metadata").is_null()) {
      const Json& meta = j.at("metadata");
      StrategyMetadata md;
      md.construction = meta.at("construction").get<std::string>();
      for (const auto& v : detail::get_array(meta, "basis")) {
        std::vector<Residue> row;
        for (auto x : detail::uint_array(v)) {
          row.push_back(static_cast<Residue>(x));
        }
        md.basis.push_back(std::move(row));
      }
      md.p = detail::optional_from<std::uint64_t>(meta, "p");
      md.a = detail::optional_from<unsigned>(meta, "a");
      md.b = detail::optional_from<unsigned>(meta, "b");
      f.metadata = std::move(md);
    }
    return f;
  });
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["wins"] = v.wins;
  j["steps_checked"] = v.steps_checked;
  if (v.witness) {
    Json w;
    w["start"] = to_json(v.witness->start);
    w["perms"] = v.witness->perms;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

// The witness start is re-attached to Z_m^n of the given modulus.
inline Verdict verdict_from_json(const Json& j, std::uint32_t m) {
  return detail::guarded([&] {
    Verdict v;
    if (!j.contains("wins") || !j.at("wins").is_boolean()) {
      throw ParseError("expected boolean field 'wins'");
    }
    v.wins = j.at("wins").get<bool>();
    v.steps_checked = detail::get_uint(j, "steps_checked");
    if (j.contains("witness") && !j.at("witness").is_null()) {
      const Json& w = j.at("witness");
      std::vector<Residue> start;
      for (auto x : detail::uint_array(w.at("start"))) {
        start.push_back(static_cast<Residue>(x));
      }
      std::vector<std::size_t> perms;
      for (auto x : detail::uint_array(w.at("perms"))) {
        perms.push_back(static_cast<std::size_t>(x));
      }
      v.witness = Witness{ModVector(m, std::move(start)), std::move(perms)};
    }
    return v;
  });
}

inline Json to_json(const UnsolvabilityCertificate& c) {
  Json j;
  j["p"] = c.p;
  j["q"] = c.q;
  j["c"] = to_json(c.c);
  j["blocks"] = c.blocks;
  return j;
}

inline UnsolvabilityCertificate certificate_from_json(const Json& j) {
  return detail::guarded([&] {
    UnsolvabilityCertificate c;
    c.p = detail::get_uint(j, "p");
    c.q = detail::get_uint(j, "q");
    if (!j.contains("c")) throw ParseError("expected field 'c'");
    c.c = permutation_from_json(j.at("c"));
    for (const auto& b : detail::get_array(j, "blocks")) {
      Block block;
      for (auto x : detail::uint_array(b)) {
        block.push_back(static_cast<std::size_t>(x));
      }
      c.blocks.push_back(std::move(block));
    }
    return c;
  });
}

inline Json to_json(const SolvabilityVerdict& v) {
  Json j;
  j["solvable"] = v.solvable;
  j["group_order"] = v.group_order;
  j["reason"] = to_string(v.reason);
  j["p"] = detail::optional_json(v.p);
  j["a"] = detail::optional_json(v.a);
  j["b"] = detail::optional_json(v.b);
  return j;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace blindfold

#endif  // BLINDFOLD_IO_HPP_
