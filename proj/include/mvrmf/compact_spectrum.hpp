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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "mvrmf/core.hpp"
#include "mvrmf/symmetry.hpp"

namespace mvrmf {

/// Compact RMF spectra of the elementary rotation symmetric functions.
/// Column k is the compact spectrum of the indicator of orbit k; every column
/// has one entry per orbit.
class SpectrumBasis {
 public:
  /// Throws Error(Domain) unless `columns` is square and every entry < p.
  SpectrumBasis(Radix p, std::size_t n,
                std::vector<std::vector<Digit>> columns);

  Radix radix() const noexcept { return p_; }
  std::size_t arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return columns_.size(); }

  std::span<const Digit> column(std::size_t k) const { return columns_.at(k); }
  const std::vector<std::vector<Digit>>& columns() const noexcept {
    return columns_;
  }

  friend bool operator==(const SpectrumBasis&, const SpectrumBasis&) = default;

 private:
  Radix p_;
  std::size_t n_;
  std::vector<std::vector<Digit>> columns_;
};

/// Transforms every elementary function of `table` with the fast transform
/// and compresses the result. Columns are computed on up to `threads`
/// workers (0 picks the hardware concurrency).
SpectrumBasis build_basis(const OrbitTable& table, unsigned threads = 0);
SpectrumBasis build_basis(Radix p, std::size_t n);

/// Weighted sum of basis columns, sum_j c[j] * column(j) mod p. Maps a
/// compact function to its compact spectrum and, since the transform is an
/// involution, a compact spectrum back to the compact function.
CompactVector compact_spectrum(const CompactVector& c,
                               const SpectrumBasis& basis);

struct SumResult {
  CompactVector sum;
  SymmetryClass symmetry;
};

/// Entrywise sum mod p of two rotation compact vectors and the symmetry
/// class of the function it represents.
SumResult sum_and_classify(const CompactVector& a, const CompactVector& b,
                           const OrbitTable& table);

/// Memo of spectrum bases keyed by (p, n). With a directory, bases are also
/// persisted there as JSON and reloaded by later processes. Safe for
/// concurrent use.
class BasisCache {
 public:
  explicit BasisCache(std::optional<std::filesystem::path> directory = {});

  std::shared_ptr<const SpectrumBasis> get(Radix p, std::size_t n);

  const std::optional<std::filesystem::path>& directory() const noexcept {
    return directory_;
  }

  /// File name used for (p, n) inside the cache directory.
  static std::string file_name(Radix p, std::size_t n);

 private:
  std::shared_ptr<const SpectrumBasis> load_or_build(Radix p, std::size_t n);

  std::optional<std::filesystem::path> directory_;
  std::shared_mutex mutex_;
  std::map<std::pair<Digit, std::size_t>, std::shared_ptr<const SpectrumBasis>>
      memo_;
};

}  // namespace mvrmf
