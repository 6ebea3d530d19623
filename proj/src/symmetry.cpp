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

#include "mvrmf/symmetry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mvrmf {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::uint64_t to_u64(const cpp_int& value, const char* what) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::Resource,
                std::string(what) + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

void require_rotation_arity(std::size_t n) {
  if (n <= 2) {
    throw Error(ErrorKind::UnsupportedArity,
                "rotation symmetry needs more than two arguments, got n = " +
                    std::to_string(n));
  }
}

std::size_t checked_table_size(Radix p, std::size_t n) {
  const std::size_t size = table_size(p, n);
  if (size >= kUnassigned) {
    throw Error(ErrorKind::Resource, "orbit table for " +
                                         std::to_string(size) +
                                         " assignments is too large");
  }
  return size;
}

// Rank of every sorted (non-decreasing) tuple among all sorted tuples,
// indexed by flat index; kUnassigned for unsorted tuples.
std::vector<std::uint32_t> sorted_tuple_ranks(Radix p, std::size_t n,
                                              std::size_t size) {
  std::vector<std::uint32_t> ranks(size, kUnassigned);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const Assignment a = assignment_of(i, p, n);
    if (std::is_sorted(a.begin(), a.end())) ranks[i] = next++;
  }
  return ranks;
}

std::size_t sorted_index(Assignment a, Radix p) {
  std::sort(a.begin(), a.end());
  return index_of(a, p);
}

}  // namespace

std::string_view to_string(OrbitKind kind) noexcept {
  return kind == OrbitKind::Rotation ? "rotation" : "symmetric";
}

std::string_view to_string(SymmetryClass cls) noexcept {
  switch (cls) {
    case SymmetryClass::Symmetric:
      return "symmetric";
    case SymmetryClass::StrictlyRotationSymmetric:
      return "rotation-symmetric";
    case SymmetryClass::None:
      return "none";
  }
  return "none";
}

Assignment rotate(std::span<const Digit> a, std::size_t shift) {
  Assignment out(a.begin(), a.end());
  if (!out.empty()) {
    std::rotate(out.begin(),
                out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
  }
  return out;
}

Orbit orbit_of(std::span<const Digit> a, Radix p) {
  index_of(a, p);  // validates digits
  const Assignment start(a.begin(), a.end());
  std::vector<Assignment> shifts{start};
  for (std::size_t s = 1; s < start.size(); ++s) {
    Assignment next = rotate(start, s);
    if (next == start) break;
    shifts.push_back(std::move(next));
  }
  const auto min_it = std::min_element(shifts.begin(), shifts.end());
  std::rotate(shifts.begin(), min_it, shifts.end());
  return Orbit{shifts.front(), std::move(shifts)};
}

OrbitTable build_orbit_table(Radix p, std::size_t n) {
  require_rotation_arity(n);
  const std::size_t size = checked_table_size(p, n);

  OrbitTable table(p, n, OrbitKind::Rotation);
  table.rank_of_.assign(size, kUnassigned);
  const auto class_ranks = sorted_tuple_ranks(p, n, size);

  // Flat-index order is lexicographic order, so the first unvisited index of
  // an orbit is its representative and ranks come out sorted.
  for (std::size_t i = 0; i < size; ++i) {
    if (table.rank_of_[i] != kUnassigned) continue;
    const auto rank = static_cast<std::uint32_t>(table.orbits_.size());
    Orbit orbit = orbit_of(assignment_of(i, p, n), p);
    for (const auto& member : orbit.members) {
      table.rank_of_[index_of(member, p)] = rank;
    }
    table.representative_index_.push_back(i);
    table.class_of_.push_back(
        class_ranks[sorted_index(orbit.representative, p)]);
    table.orbits_.push_back(std::move(orbit));
  }
  table.class_count_ =
      static_cast<std::size_t>(std::count_if(class_ranks.begin(), class_ranks.end(),
                                             [](auto r) { return r != kUnassigned; }));
  return table;
}

OrbitTable build_symmetric_table(Radix p, std::size_t n) {
  const std::size_t size = checked_table_size(p, n);

  OrbitTable table(p, n, OrbitKind::Multiset);
  table.rank_of_.assign(size, kUnassigned);
  for (std::size_t i = 0; i < size; ++i) {
    Assignment a = assignment_of(i, p, n);
    if (!std::is_sorted(a.begin(), a.end())) continue;
    const auto rank = static_cast<std::uint32_t>(table.orbits_.size());
    Orbit orbit{a, {}};
    do {
      table.rank_of_[index_of(a, p)] = rank;
      orbit.members.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    table.representative_index_.push_back(i);
    table.class_of_.push_back(rank);
    table.orbits_.push_back(std::move(orbit));
  }
  table.class_count_ = table.orbits_.size();
  return table;
}

std::uint64_t orbit_count(Radix p, std::size_t n) {
  require_rotation_arity(n);
  // Rotation by s fixes p^gcd(s, n) tuples; average over the n rotations.
  cpp_int total = 0;
  for (std::size_t s = 0; s < n; ++s) {
    total += boost::multiprecision::pow(cpp_int(p.value()),
                                        static_cast<unsigned>(std::gcd(s, n)));
  }
  return to_u64(total / n, "orbit count");
}

std::uint64_t kappa(Radix p, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "argument count must be positive");
  // C(n+p-1, n), built incrementally so every partial quotient is exact.
  cpp_int value = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    value = value * (p.value() - 1 + k) / k;
  }
  return to_u64(value, "kappa");
}

cpp_int function_count(Radix p, std::uint64_t classes) {
  cpp_int result = 1;
  cpp_int base = p.value();
  while (classes != 0) {
    if (classes & 1u) result *= base;
    base *= base;
    classes >>= 1u;
  }
  return result;
}

SymmetryClass classify(const ValueVector& f) {
  const std::size_t n = f.arity();
  if (n == 1) return SymmetryClass::Symmetric;
  const Radix p = f.radix();

  // The transposition (x1 x2) and the rotation by one generate all
  // permutations of argument positions.
  bool swap_invariant = true;
  bool rotation_invariant = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Assignment a = assignment_of(i, p, n);
    if (rotation_invariant && f[index_of(rotate(a, 1), p)] != f[i]) {
      rotation_invariant = false;
    }
    std::swap(a[0], a[1]);
    if (swap_invariant && f[index_of(a, p)] != f[i]) swap_invariant = false;
    if (!swap_invariant && !rotation_invariant) break;
  }
  if (swap_invariant && rotation_invariant) return SymmetryClass::Symmetric;
  if (n > 2 && rotation_invariant) {
    return SymmetryClass::StrictlyRotationSymmetric;
  }
  return SymmetryClass::None;
}

CompactVector::CompactVector(Radix p, std::size_t n, OrbitKind kind,
                             std::vector<Digit> entries)
    : p_(p), n_(n), kind_(kind), entries_(std::move(entries)) {
  for (std::size_t r = 0; r < entries_.size(); ++r) {
    if (!p.contains(entries_[r])) {
      throw Error(ErrorKind::Domain,
                  "compact entry " + std::to_string(entries_[r]) +
                      " at rank " + std::to_string(r) + " is not below p = " +
                      std::to_string(p.value()));
    }
  }
}

CompactVector::CompactVector(const OrbitTable& table, std::vector<Digit> entries)
    : CompactVector(table.radix(), table.arity(), table.kind(),
                    std::move(entries)) {
  check_compatible(*this, table);
}

CompactVector CompactVector::zeros(const OrbitTable& table) {
  return CompactVector(table, std::vector<Digit>(table.size(), 0));
}

CompactVector CompactVector::unit(const OrbitTable& table, std::size_t rank) {
  if (rank >= table.size()) {
    throw Error(ErrorKind::Domain, "rank " + std::to_string(rank) +
                                       " out of range for " +
                                       std::to_string(table.size()) +
                                       " orbits");
  }
  std::vector<Digit> entries(table.size(), 0);
  entries[rank] = 1;
  return CompactVector(table, std::move(entries));
}

void check_compatible(const CompactVector& c, const OrbitTable& table) {
  if (c.radix() != table.radix() || c.arity() != table.arity() ||
      c.kind() != table.kind() || c.size() != table.size()) {
    throw Error(ErrorKind::Domain,
                "compact vector (p = " + std::to_string(c.radix().value()) +
                    ", n = " + std::to_string(c.arity()) + ", " +
                    std::string(to_string(c.kind())) + ", length " +
                    std::to_string(c.size()) + ") does not match table (p = " +
                    std::to_string(table.radix().value()) +
                    ", n = " + std::to_string(table.arity()) + ", " +
                    std::string(to_string(table.kind())) + ", length " +
                    std::to_string(table.size()) + ")");
  }
}

CompactVector compress(const ValueVector& f, const OrbitTable& table) {
  if (f.radix() != table.radix() || f.arity() != table.arity()) {
    throw Error(ErrorKind::Domain,
                "value vector and orbit table disagree on p or n");
  }
  std::vector<Digit> entries(table.size());
  for (std::size_t rank = 0; rank < table.size(); ++rank) {
    entries[rank] = f[table.representative_index(rank)];
  }
  const auto ranks = table.ranks();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != entries[ranks[i]]) {
      const Orbit& orbit = table.orbit(ranks[i]);
      throw Error(ErrorKind::NotCompressible,
                  "function is not constant on the orbit of " +
                      format_assignment(orbit.representative, f.radix()) +
                      " (rank " + std::to_string(ranks[i]) + ")");
    }
  }
  return CompactVector(table, std::move(entries));
}

ValueVector expand(const CompactVector& c, const OrbitTable& table) {
  check_compatible(c, table);
  const auto ranks = table.ranks();
  std::vector<Digit> values(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) values[i] = c[ranks[i]];
  return ValueVector(table.radix(), table.arity(), std::move(values));
}

ValueVector elementary_function(const OrbitTable& table, std::size_t rank) {
  return expand(CompactVector::unit(table, rank), table);
}

ValueVector elementary_function(Radix p, std::size_t n, std::size_t rank) {
  return elementary_function(build_orbit_table(p, n), rank);
}

namespace {

void require_rotation_table(const CompactVector& c, const OrbitTable& table) {
  check_compatible(c, table);
  if (table.kind() != OrbitKind::Rotation) {
    throw Error(ErrorKind::Domain, "operation needs a rotation orbit table");
  }
}

}  // namespace

std::size_t distinguishing_class_count(const CompactVector& c,
                                       const OrbitTable& table) {
  require_rotation_table(c, table);
  constexpr Digit kNone = std::numeric_limits<Digit>::max();
  std::vector<Digit> first(table.class_count(), kNone);
  std::vector<bool> split(table.class_count(), false);
  for (std::size_t rank = 0; rank < table.size(); ++rank) {
    const std::size_t cls = table.class_of(rank);
    if (first[cls] == kNone) {
      first[cls] = c[rank];
    } else if (first[cls] != c[rank]) {
      split[cls] = true;
    }
  }
  return static_cast<std::size_t>(std::count(split.begin(), split.end(), true));
}

SymmetryClass classify(const CompactVector& c, const OrbitTable& table) {
  return distinguishing_class_count(c, table) == 0
             ? SymmetryClass::Symmetric
             : SymmetryClass::StrictlyRotationSymmetric;
}

}  // namespace mvrmf
