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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvrmf/error.hpp"

namespace mvrmf {

/// A logic value, always in `0..p-1` once validated.
using Digit = std::uint32_t;

/// Number of logic values p. Arithmetic on digits is done in the ring Z_p;
/// p need not be prime.
class Radix {
 public:
  /// Throws Error(Domain) when p < 2.
  explicit Radix(Digit p);

  Digit value() const noexcept { return p_; }

  bool contains(Digit d) const noexcept { return d < p_; }

  Digit add(Digit a, Digit b) const noexcept {
    return static_cast<Digit>((std::uint64_t{a} + b) % p_);
  }
  Digit mul(Digit a, Digit b) const noexcept {
    return static_cast<Digit>((std::uint64_t{a} * b) % p_);
  }
  Digit neg(Digit a) const noexcept { return a == 0 ? 0 : p_ - a % p_; }

  friend auto operator<=>(Radix, Radix) = default;

 private:
  Digit p_;
};

/// Argument tuple (x1, ..., xn); x1 is element 0 and the most significant
/// position of the flat index.
using Assignment = std::vector<Digit>;

/// p^n, the length of a value vector. Throws Error(Resource) when the result
/// does not fit in std::size_t, Error(Domain) when n == 0.
std::size_t table_size(Radix p, std::size_t n);

/// Flat truth-table position of `a`: sum of a[k] * p^(n-1-k).
std::size_t index_of(std::span<const Digit> a, Radix p);

/// Inverse of index_of.
Assignment assignment_of(std::size_t index, Radix p, std::size_t n);

/// Renders an assignment as contiguous digits ("012") when p <= 10,
/// otherwise as comma-separated integers ("0,11,3").
std::string format_assignment(std::span<const Digit> a, Radix p);

/// Full value vector of f: (Z_p)^n -> Z_p in flat-index order.
class ValueVector {
 public:
  /// Throws Error(Domain) on a length other than p^n or on an entry >= p.
  ValueVector(Radix p, std::size_t n, std::vector<Digit> values);

  static ValueVector zeros(Radix p, std::size_t n);

  Radix radix() const noexcept { return p_; }
  std::size_t arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }

  Digit operator[](std::size_t index) const { return values_[index]; }
  Digit at(std::span<const Digit> a) const { return values_[index_of(a, p_)]; }

  std::span<const Digit> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const ValueVector&, const ValueVector&) = default;

 private:
  Radix p_;
  std::size_t n_;
  std::vector<Digit> values_;
};

/// Parses `count` digits: contiguous characters when p <= 10, otherwise
/// comma-separated decimal integers. Surrounding whitespace is ignored.
std::vector<Digit> parse_digits(std::string_view text, Radix p,
                                std::size_t count);

/// Inverse of parse_digits.
std::string format_digits(std::span<const Digit> digits, Radix p);

ValueVector parse_value_vector(std::string_view text, Radix p, std::size_t n);

std::string format_value_vector(const ValueVector& f);

/// Two-dimensional rendering with x1 selecting the row and x2..xn the column,
/// headed by the column labels.
std::string format_map(std::span<const Digit> values, Radix p, std::size_t n);

}  // namespace mvrmf
