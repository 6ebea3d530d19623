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

#include "mvrmf/rmf.hpp"

#include <algorithm>
#include <numeric>

namespace mvrmf {

RmfMatrix::RmfMatrix(Radix p, std::size_t n, std::vector<Digit> entries)
    : p_(p), n_(n), dim_(table_size(p, n)), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::Domain, "matrix needs " +
                                       std::to_string(dim_ * dim_) +
                                       " entries, got " +
                                       std::to_string(entries_.size()));
  }
}

ValueVector RmfMatrix::apply(const ValueVector& f) const {
  if (f.radix() != p_ || f.arity() != n_) {
    throw Error(ErrorKind::Domain, "matrix and value vector disagree on p or n");
  }
  std::vector<Digit> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    std::uint64_t acc = 0;
    const auto coeffs = row(r);
    for (std::size_t c = 0; c < dim_; ++c) {
      acc = (acc + std::uint64_t{coeffs[c]} * f[c]) % p_.value();
    }
    out[r] = static_cast<Digit>(acc);
  }
  return ValueVector(p_, n_, std::move(out));
}

std::vector<std::vector<Digit>> binomial_table_mod(std::size_t rows, Radix m) {
  std::vector<std::vector<Digit>> table(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    table[i].assign(i + 1, 0);
    table[i][0] = 1 % m.value();
    table[i][i] = 1 % m.value();
    for (std::size_t j = 1; j < i; ++j) {
      table[i][j] = m.add(table[i - 1][j - 1], table[i - 1][j]);
    }
  }
  return table;
}

RmfMatrix basic_matrix(Radix p) {
  const std::size_t size = p.value();
  const auto binom = binomial_table_mod(size, p);
  std::vector<Digit> entries(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      entries[i * size + j] = j % 2 == 0 ? binom[i][j] : p.neg(binom[i][j]);
    }
  }
  return RmfMatrix(p, 1, std::move(entries));
}

RmfMatrix transform_matrix(Radix p, std::size_t n, std::size_t limit) {
  const std::size_t dim = table_size(p, n);
  if (dim > limit) {
    throw Error(ErrorKind::Resource,
                "dense " + std::to_string(dim) + "x" + std::to_string(dim) +
                    " matrix exceeds the limit of " + std::to_string(limit) +
                    " rows; use the fast transform instead");
  }
  const RmfMatrix r1 = basic_matrix(p);
  RmfMatrix result = r1;
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t inner = result.dimension();
    const std::size_t outer = inner * p.value();
    std::vector<Digit> entries(outer * outer);
    for (std::size_t i = 0; i < outer; ++i) {
      for (std::size_t j = 0; j < outer; ++j) {
        entries[i * outer + j] =
            p.mul(r1(i / inner, j / inner), result(i % inner, j % inner));
      }
    }
    result = RmfMatrix(p, k, std::move(entries));
  }
  return result;
}

ValueVector rmf_transform(const ValueVector& f) {
  const Radix p = f.radix();
  const std::size_t q = p.value();
  const RmfMatrix r1 = basic_matrix(p);
  std::vector<Digit> work(f.begin(), f.end());
  std::vector<std::uint64_t> line(q);

  std::size_t stride = work.size();
  for (std::size_t axis = 0; axis < f.arity(); ++axis) {
    stride /= q;
    const std::size_t block = stride * q;
    for (std::size_t start = 0; start < work.size(); start += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        Digit* x = work.data() + start + offset;
        for (std::size_t i = 0; i < q; ++i) line[i] = x[i * stride];
        for (std::size_t i = 0; i < q; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t j = 0; j <= i; ++j) acc += r1(i, j) * line[j];
          x[i * stride] = static_cast<Digit>(acc % q);
        }
      }
    }
  }
  return ValueVector(p, f.arity(), std::move(work));
}

ArgPermutation::ArgPermutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(ErrorKind::Domain, "argument mapping is not a bijection");
    }
    seen[image] = true;
  }
}

ArgPermutation ArgPermutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return ArgPermutation(std::move(images));
}

ArgPermutation ArgPermutation::cyclic_shift(std::size_t n, std::size_t shift) {
  std::vector<std::size_t> images(n);
  for (std::size_t k = 0; k < n; ++k) images[k] = (k + shift) % n;
  return ArgPermutation(std::move(images));
}

ArgPermutation ArgPermutation::transposition(std::size_t n, std::size_t i,
                                             std::size_t j) {
  if (i >= n || j >= n) {
    throw Error(ErrorKind::Domain, "transposition position out of range");
  }
  auto perm = identity(n);
  std::swap(perm.images_[i], perm.images_[j]);
  return perm;
}

ArgPermutation ArgPermutation::after(const ArgPermutation& first) const {
  if (first.arity() != arity()) {
    throw Error(ErrorKind::Domain, "cannot compose permutations of different arity");
  }
  std::vector<std::size_t> images(arity());
  for (std::size_t k = 0; k < arity(); ++k) images[k] = images_[first[k]];
  return ArgPermutation(std::move(images));
}

ValueVector apply_arg_permutation(const ValueVector& f,
                                  const ArgPermutation& perm) {
  const std::size_t n = f.arity();
  if (perm.arity() != n) {
    throw Error(ErrorKind::Domain,
                "permutation of " + std::to_string(perm.arity()) +
                    " positions applied to a function of " +
                    std::to_string(n) + " arguments");
  }
  const Radix p = f.radix();
  std::vector<Digit> out(f.size());
  Assignment source(n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Assignment x = assignment_of(i, p, n);
    for (std::size_t k = 0; k < n; ++k) source[k] = x[perm[k]];
    out[i] = f.at(source);
  }
  return ValueVector(p, n, std::move(out));
}

std::vector<std::size_t> adjacent_transpositions(const ArgPermutation& perm) {
  // Bubble-sort the image list; each exchange of neighbours k, k+1 is one
  // factor, and the factors in exchange order compose back to perm.
  std::vector<std::size_t> images(perm.images().begin(), perm.images().end());
  std::vector<std::size_t> swaps;
  for (std::size_t pass = images.size(); pass > 1; --pass) {
    for (std::size_t k = 0; k + 1 < pass; ++k) {
      if (images[k] > images[k + 1]) {
        std::swap(images[k], images[k + 1]);
        swaps.push_back(k);
      }
    }
  }
  return swaps;
}

}  // namespace mvrmf
