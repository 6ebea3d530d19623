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
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mvrmf/core.hpp"

namespace mvrmf {

/// Which group acts on argument positions: cyclic shifts (rotation) or all
/// permutations (multiset classes, one per sorted tuple).
enum class OrbitKind { Rotation, Multiset };

enum class SymmetryClass { Symmetric, StrictlyRotationSymmetric, None };

std::string_view to_string(OrbitKind kind) noexcept;
std::string_view to_string(SymmetryClass cls) noexcept;

/// Left cyclic shift: the digit at position k moves to (k - shift) mod n.
Assignment rotate(std::span<const Digit> a, std::size_t shift);

/// A set of assignments closed under the acting group. `members` starts with
/// the representative; rotation orbits then list successive left shifts,
/// multiset classes list the remaining permutations in increasing order.
struct Orbit {
  Assignment representative;
  std::vector<Assignment> members;

  std::size_t size() const noexcept { return members.size(); }
};

/// Cyclic orbit of `a`. The representative is the lexicographic minimum.
Orbit orbit_of(std::span<const Digit> a, Radix p);

/// Partition of (Z_p)^n into orbits, ranked by the lexicographic order of
/// their representatives. Immutable once built.
class OrbitTable {
 public:
  Radix radix() const noexcept { return p_; }
  std::size_t arity() const noexcept { return n_; }
  OrbitKind kind() const noexcept { return kind_; }

  /// Number of orbits (length of a compact vector over this table).
  std::size_t size() const noexcept { return orbits_.size(); }

  const Orbit& orbit(std::size_t rank) const { return orbits_.at(rank); }
  std::span<const Orbit> orbits() const noexcept { return orbits_; }

  /// Rank of the orbit containing the assignment with flat index `index`.
  std::size_t rank_of(std::size_t index) const { return rank_of_.at(index); }
  std::size_t rank_of(std::span<const Digit> a) const {
    return rank_of_.at(index_of(a, p_));
  }

  /// Dense rank lookup over all p^n flat indices.
  std::span<const std::uint32_t> ranks() const noexcept { return rank_of_; }

  /// Flat index of the representative of orbit `rank`.
  std::size_t representative_index(std::size_t rank) const {
    return representative_index_.at(rank);
  }

  /// Rank of the multiset class (sorted tuple, length-kappa ranking) that
  /// contains orbit `rank`. For a multiset table this is the identity.
  std::size_t class_of(std::size_t rank) const { return class_of_.at(rank); }
  std::size_t class_count() const noexcept { return class_count_; }

  friend OrbitTable build_orbit_table(Radix p, std::size_t n);
  friend OrbitTable build_symmetric_table(Radix p, std::size_t n);

 private:
  OrbitTable(Radix p, std::size_t n, OrbitKind kind) : p_(p), n_(n), kind_(kind) {}

  Radix p_;
  std::size_t n_;
  OrbitKind kind_;
  std::vector<Orbit> orbits_;
  std::vector<std::uint32_t> rank_of_;
  std::vector<std::size_t> representative_index_;
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

/// Cyclic-shift orbits. Throws Error(UnsupportedArity) when n <= 2.
OrbitTable build_orbit_table(Radix p, std::size_t n);

/// Full-symmetric classes with sorted representatives; size() == kappa(p, n).
OrbitTable build_symmetric_table(Radix p, std::size_t n);

/// Number of cyclic orbits, by counting fixed points of each rotation.
/// Same preconditions as build_orbit_table.
std::uint64_t orbit_count(Radix p, std::size_t n);

/// Number of multisets of size n over p values: (n+p-1)! / ((p-1)! n!).
std::uint64_t kappa(Radix p, std::size_t n);

/// p^classes, the number of functions that are constant on each of
/// `classes` disjoint classes.
boost::multiprecision::cpp_int function_count(Radix p, std::uint64_t classes);

/// Strongest symmetry of f. For n <= 2 only Symmetric or None is reported.
SymmetryClass classify(const ValueVector& f);

/// One value per orbit of an OrbitTable, indexed by rank.
class CompactVector {
 public:
  /// Throws Error(Domain) on an entry >= p.
  CompactVector(Radix p, std::size_t n, OrbitKind kind,
                std::vector<Digit> entries);

  /// Checks the length against `table` as well.
  CompactVector(const OrbitTable& table, std::vector<Digit> entries);

  static CompactVector zeros(const OrbitTable& table);
  static CompactVector unit(const OrbitTable& table, std::size_t rank);

  Radix radix() const noexcept { return p_; }
  std::size_t arity() const noexcept { return n_; }
  OrbitKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return entries_.size(); }

  Digit operator[](std::size_t rank) const { return entries_[rank]; }
  std::span<const Digit> entries() const noexcept { return entries_; }

  friend bool operator==(const CompactVector&, const CompactVector&) = default;

 private:
  Radix p_;
  std::size_t n_;
  OrbitKind kind_;
  std::vector<Digit> entries_;
};

/// Throws Error(Domain) when `c` does not fit `table` (p, n, kind, length).
void check_compatible(const CompactVector& c, const OrbitTable& table);

/// Entry r is f's value on orbit r. Throws Error(NotCompressible) naming the
/// first orbit on which f is not constant.
CompactVector compress(const ValueVector& f, const OrbitTable& table);

ValueVector expand(const CompactVector& c, const OrbitTable& table);

/// Indicator of orbit `rank` (value 1 on its members, 0 elsewhere).
ValueVector elementary_function(const OrbitTable& table, std::size_t rank);
ValueVector elementary_function(Radix p, std::size_t n, std::size_t rank);

/// Same result as classify(expand(c, table)), computed on the compact form.
/// Requires a rotation table.
SymmetryClass classify(const CompactVector& c, const OrbitTable& table);

/// Number of multiset classes split into several cyclic orbits on which `c`
/// takes more than one value. Zero exactly when the function is Symmetric.
std::size_t distinguishing_class_count(const CompactVector& c,
                                       const OrbitTable& table);

}  // namespace mvrmf
