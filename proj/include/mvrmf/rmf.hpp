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
#include <span>
#include <vector>

#include "mvrmf/core.hpp"

namespace mvrmf {

/// Default bound on p^n for dense transform matrices.
inline constexpr std::size_t kDefaultDenseLimit = 4096;

/// Dense p^n x p^n Reed-Muller-Fourier matrix with entries in Z_p.
class RmfMatrix {
 public:
  RmfMatrix(Radix p, std::size_t n, std::vector<Digit> entries);

  Radix radix() const noexcept { return p_; }
  std::size_t arity() const noexcept { return n_; }
  /// Row (and column) count, p^n.
  std::size_t dimension() const noexcept { return dim_; }

  Digit operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Digit> row(std::size_t r) const {
    return std::span<const Digit>(entries_).subspan(r * dim_, dim_);
  }

  /// Matrix-vector product mod p.
  ValueVector apply(const ValueVector& f) const;

  friend bool operator==(const RmfMatrix&, const RmfMatrix&) = default;

 private:
  Radix p_;
  std::size_t n_;
  std::size_t dim_;
  std::vector<Digit> entries_;
};

/// Rows 0..rows-1 of Pascal's triangle reduced mod m, built with additions
/// only so that composite moduli work. Entry [i][j] is C(i, j) mod m.
std::vector<std::vector<Digit>> binomial_table_mod(std::size_t rows, Radix m);

/// R1, entry (i, j) = (-1)^j C(i, j) mod p.
RmfMatrix basic_matrix(Radix p);

/// R_n, the n-fold Kronecker power of R1. Throws Error(Resource) when
/// p^n > limit; use rmf_transform for large n.
RmfMatrix transform_matrix(Radix p, std::size_t n,
                           std::size_t limit = kDefaultDenseLimit);

/// RMF spectrum R_n F mod p, applying R1 along one argument axis at a time.
/// The transform is an involution.
ValueVector rmf_transform(const ValueVector& f);

/// Permutation of argument positions, stored 0-based. Applying it to f gives
/// g(x_1, ..., x_n) = f(x_{pi(1)}, ..., x_{pi(n)}).
class ArgPermutation {
 public:
  /// Throws Error(Domain) unless `images` is a permutation of 0..n-1.
  explicit ArgPermutation(std::vector<std::size_t> images);

  static ArgPermutation identity(std::size_t n);
  /// pi(k) = (k + shift) mod n, so g(x) = f(rotate(x, shift)).
  static ArgPermutation cyclic_shift(std::size_t n, std::size_t shift);
  /// Exchanges positions i and j (0-based).
  static ArgPermutation transposition(std::size_t n, std::size_t i,
                                      std::size_t j);

  std::size_t arity() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t k) const { return images_[k]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  /// Permutation equivalent to applying `first`, then `*this`.
  ArgPermutation after(const ArgPermutation& first) const;

  friend bool operator==(const ArgPermutation&, const ArgPermutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Value vector of g with g(x_1, ..., x_n) = f(x_{pi(1)}, ..., x_{pi(n)}).
ValueVector apply_arg_permutation(const ValueVector& f,
                                  const ArgPermutation& perm);

/// Neighbour transpositions whose successive application equals `perm`.
/// Element k stands for exchanging positions k and k+1 (0-based).
std::vector<std::size_t> adjacent_transpositions(const ArgPermutation& perm);

}  // namespace mvrmf
