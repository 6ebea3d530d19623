// Copyright 2026 The mvrmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles and generators. Nothing here calls into the library's
// orbit or transform code, so the checks built on it stay independent.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvrmf/compact_spectrum.hpp"
#include "mvrmf/core.hpp"
#include "mvrmf/symmetry.hpp"

namespace mvrmf::testing {

inline std::vector<Digit> digits_of(std::string_view text) {
  std::vector<Digit> out;
  for (char c : text) out.push_back(static_cast<Digit>(c - '0'));
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// All tuples of (Z_p)^n in lexicographic order.
inline std::vector<std::vector<Digit>> all_tuples(Digit p, std::size_t n) {
  std::vector<std::vector<Digit>> out;
  std::vector<Digit> t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = n;
    while (k > 0 && t[k - 1] == p - 1) t[--k] = 0;
    if (k == 0) break;
    ++t[k - 1];
  }
  return out;
}

// Smallest string among all cyclic shifts, built by concatenation.
inline std::string necklace_key(const std::vector<Digit>& t) {
  std::string best;
  for (std::size_t s = 0; s < t.size(); ++s) {
    std::string key;
    for (std::size_t k = 0; k < t.size(); ++k) {
      key += std::to_string(t[(k + s) % t.size()]) + ",";
    }
    if (s == 0 || key < best) best = key;
  }
  return best;
}

inline std::size_t necklace_count_oracle(Digit p, std::size_t n) {
  std::set<std::string> keys;
  for (const auto& t : all_tuples(p, n)) keys.insert(necklace_key(t));
  return keys.size();
}

inline std::size_t sorted_tuple_count_oracle(Digit p, std::size_t n) {
  std::size_t count = 0;
  for (const auto& t : all_tuples(p, n)) {
    bool sorted = true;
    for (std::size_t k = 1; k < n; ++k) sorted = sorted && t[k - 1] <= t[k];
    count += sorted ? 1 : 0;
  }
  return count;
}

// Exact C(i, j) by the multiplicative formula; exact for i <= 60.
inline std::uint64_t exact_binomial(std::uint64_t i, std::uint64_t j) {
  if (j > i) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k <= j; ++k) r = r * (i - j + k) / k;
  return r;
}

inline Digit signed_binomial_mod(Digit i, Digit j, Digit p) {
  const std::uint64_t c = exact_binomial(i, j) % p;
  return static_cast<Digit>(j % 2 == 0 ? c : (p - c) % p);
}

// Entry (row, col) of the n-fold Kronecker power: the product of the
// per-digit basic entries.
inline Digit rmf_entry_oracle(Digit p, std::size_t n, std::size_t row,
                              std::size_t col) {
  std::uint64_t v = 1;
  for (std::size_t k = 0; k < n; ++k) {
    v = v * signed_binomial_mod(static_cast<Digit>(row % p),
                                static_cast<Digit>(col % p), p) %
        p;
    row /= p;
    col /= p;
  }
  return static_cast<Digit>(v);
}

inline std::vector<Digit> dense_rmf_oracle(Digit p, std::size_t n,
                                           const std::vector<Digit>& f) {
  std::vector<Digit> s(f.size(), 0);
  for (std::size_t r = 0; r < f.size(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c <= r; ++c) {
      acc = (acc + std::uint64_t{rmf_entry_oracle(p, n, r, c)} * f[c]) % p;
    }
    s[r] = static_cast<Digit>(acc);
  }
  return s;
}

inline std::vector<Digit> random_digits(std::mt19937_64& rng, Digit p,
                                        std::size_t count) {
  std::uniform_int_distribution<Digit> dist(0, p - 1);
  std::vector<Digit> out(count);
  for (auto& d : out) d = dist(rng);
  return out;
}

inline ValueVector random_function(std::mt19937_64& rng, Digit p,
                                   std::size_t n) {
  return ValueVector(Radix(p), n,
                     random_digits(rng, p, ipow(p, n)));
}

inline CompactVector random_compact(std::mt19937_64& rng,
                                    const OrbitTable& table) {
  return CompactVector(table,
                       random_digits(rng, table.radix().value(), table.size()));
}

// p = 3, n = 4: compact vectors that are zero except on the
// five cycles listed in golden::kSumCycles.
inline CompactVector cycle_function(
    const OrbitTable& table, std::span<const std::string_view> cycles,
    std::string_view values) {
  std::vector<Digit> entries(table.size(), 0);
  for (std::size_t c = 0; c < values.size(); ++c) {
    const auto rep = digits_of(cycles[c]);
    entries[table.rank_of(rep)] = static_cast<Digit>(values[c] - '0');
  }
  return CompactVector(table, std::move(entries));
}

}  // namespace mvrmf::testing
