// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers and independent oracles for the unit tests. The oracles
// avoid the library's elimination code on purpose.

#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "plt/error.hpp"
#include "plt/field.hpp"
#include "plt/matrix.hpp"
#include "plt/rng.hpp"

#define EXPECT_PLT_ERROR(statement, expected_code)                   \
  do {                                                               \
    try {                                                            \
      statement;                                                     \
      ADD_FAILURE() << "expected " << ::plt::to_string(expected_code); \
    } catch (const ::plt::Error& e) {                                \
      EXPECT_EQ(e.code(), expected_code) << e.what();                \
    }                                                                \
  } while (false)

namespace plt::testing {

// Leibniz expansion over all permutations, in plain modular integers.
inline std::uint64_t leibniz_det(const std::vector<std::vector<std::uint64_t>>& a, std::uint64_t q) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]] % q;
    total = (inversions % 2 == 0) ? (total + term) % q : (total + q - term) % q;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::uint64_t>> to_ints(const FqMatrix& m) {
  std::vector<std::vector<std::uint64_t>> out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).value();
  }
  return out;
}

inline std::uint64_t leibniz_det(const FqMatrix& m) {
  return leibniz_det(to_ints(m), m.field().modulus());
}

// Every maximal minor nonzero, by Leibniz.
inline bool mds_by_determinants(const FqMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<bool> pick(m.cols(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pick[c]) cols.push_back(c);
    }
    if (leibniz_det(m.select_columns(cols)) == 0) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

inline FqMatrix naive_product(const FqMatrix& a, const FqMatrix& b) {
  const std::uint64_t q = a.field().modulus();
  FqMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = (s + a(i, k).value() * b(k, j).value()) % q;
      out.at(i, j) = FieldElement(s);
    }
  }
  return out;
}

inline FqMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  FqMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.element(f);
  }
  return m;
}

}  // namespace plt::testing
