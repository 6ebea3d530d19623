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

#include "mvrmf/compact_spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "mvrmf/json_io.hpp"
#include "mvrmf/rmf.hpp"

namespace mvrmf {

SpectrumBasis::SpectrumBasis(Radix p, std::size_t n,
                             std::vector<std::vector<Digit>> columns)
    : p_(p), n_(n), columns_(std::move(columns)) {
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (columns_[k].size() != columns_.size()) {
      throw Error(ErrorKind::Domain,
                  "basis column " + std::to_string(k) + " has " +
                      std::to_string(columns_[k].size()) +
                      " entries, expected " + std::to_string(columns_.size()));
    }
    for (Digit d : columns_[k]) {
      if (!p.contains(d)) {
        throw Error(ErrorKind::Domain, "basis entry " + std::to_string(d) +
                                           " is not below p = " +
                                           std::to_string(p.value()));
      }
    }
  }
}

SpectrumBasis build_basis(const OrbitTable& table, unsigned threads) {
  if (table.kind() != OrbitKind::Rotation) {
    throw Error(ErrorKind::Domain, "spectrum basis needs a rotation orbit table");
  }
  const std::size_t count = table.size();
  std::vector<std::vector<Digit>> columns(count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        const auto spectrum = rmf_transform(elementary_function(table, k));
        const auto compact = compress(spectrum, table);
        columns[k].assign(compact.entries().begin(), compact.entries().end());
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return SpectrumBasis(table.radix(), table.arity(), std::move(columns));
}

SpectrumBasis build_basis(Radix p, std::size_t n) {
  return build_basis(build_orbit_table(p, n));
}

CompactVector compact_spectrum(const CompactVector& c,
                               const SpectrumBasis& basis) {
  if (c.kind() != OrbitKind::Rotation || c.radix() != basis.radix() ||
      c.arity() != basis.arity() || c.size() != basis.size()) {
    throw Error(ErrorKind::Domain,
                "compact vector does not match the spectrum basis for p = " +
                    std::to_string(basis.radix().value()) +
                    ", n = " + std::to_string(basis.arity()));
  }
  const Radix p = c.radix();
  std::vector<std::uint64_t> acc(basis.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Digit weight = c[j];
    if (weight == 0) continue;
    const auto column = basis.column(j);
    for (std::size_t q = 0; q < acc.size(); ++q) {
      acc[q] = (acc[q] + std::uint64_t{weight} * column[q]) % p.value();
    }
  }
  return CompactVector(p, c.arity(), OrbitKind::Rotation,
                       std::vector<Digit>(acc.begin(), acc.end()));
}

SumResult sum_and_classify(const CompactVector& a, const CompactVector& b,
                           const OrbitTable& table) {
  check_compatible(a, table);
  check_compatible(b, table);
  if (table.kind() != OrbitKind::Rotation) {
    throw Error(ErrorKind::Domain, "sum classification needs a rotation orbit table");
  }
  const Radix p = table.radix();
  std::vector<Digit> entries(table.size());
  for (std::size_t r = 0; r < entries.size(); ++r) entries[r] = p.add(a[r], b[r]);
  CompactVector sum(table, std::move(entries));
  const SymmetryClass symmetry = classify(sum, table);
  return SumResult{std::move(sum), symmetry};
}

BasisCache::BasisCache(std::optional<std::filesystem::path> directory)
    : directory_(std::move(directory)) {}

std::string BasisCache::file_name(Radix p, std::size_t n) {
  return "basis-p" + std::to_string(p.value()) + "-n" + std::to_string(n) +
         ".json";
}

std::shared_ptr<const SpectrumBasis> BasisCache::get(Radix p, std::size_t n) {
  const auto key = std::make_pair(p.value(), n);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto basis = load_or_build(p, n);
  memo_.emplace(key, basis);
  return basis;
}

std::shared_ptr<const SpectrumBasis> BasisCache::load_or_build(Radix p,
                                                               std::size_t n) {
  const OrbitTable table = build_orbit_table(p, n);
  if (!directory_) {
    return std::make_shared<const SpectrumBasis>(build_basis(table));
  }

  namespace fs = std::filesystem;
  const fs::path path = *directory_ / file_name(p, n);
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    try {
      auto basis = basis_from_json(parse_json(text.str()));
      if (basis.radix() == p && basis.arity() == n &&
          basis.size() == table.size()) {
        return std::make_shared<const SpectrumBasis>(std::move(basis));
      }
    } catch (const Error&) {
    }
    throw Error(ErrorKind::Io, "corrupt basis cache file " + path.string() +
                                   "; delete it to rebuild");
  }

  auto basis = std::make_shared<const SpectrumBasis>(build_basis(table));
  std::error_code ec;
  fs::create_directories(*directory_, ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << to_json(*basis).dump() << '\n';
    if (!out) {
      throw Error(ErrorKind::Io, "cannot write basis cache " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorKind::Io, "cannot write basis cache " + path.string() +
                                   ": " + ec.message());
  }
  return basis;
}

}  // namespace mvrmf
