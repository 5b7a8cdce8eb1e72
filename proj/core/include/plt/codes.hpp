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

// Structured matrices and MDS machinery over GF(q).
//
// Conventions: a k x n matrix M is MDS when every k x k submatrix is
// invertible (k <= n). Codes are row spaces; "puncture" deletes coordinates,
// "shorten" keeps the codewords that vanish outside a coordinate set and then
// deletes the outside coordinates.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plt/field.hpp"
#include "plt/matrix.hpp"
#include "plt/rng.hpp"

namespace plt {

// Checks every maximal minor. Throws ShapeError if rows > cols.
bool is_mds_exhaustive(const FqMatrix& m);

// Column indices of the first singular maximal minor, or nullopt if M is MDS.
// Throws ShapeError if rows > cols.
std::optional<std::vector<std::size_t>> find_singular_minor(const FqMatrix& m);

// Same answer as is_mds_exhaustive. A generalized Reed-Solomon certificate
// (see recognize_grs) is tried first; it is a proof of the MDS property,
// so only matrices that are not GRS fall through to the exhaustive scan.
bool is_mds(const FqMatrix& m);

// True when every set of min(rows, cols) columns is linearly independent.
// For cols >= rows this is is_mds; for fewer columns it is full column rank.
bool in_general_position(const FqMatrix& m);

// result(i, j) = (x_i - y_j)^{-1}. Throws DegenerateCauchy on any repeat in x ∪ y.
FqMatrix cauchy(const PrimeField& field, std::span<const FieldElement> x,
                std::span<const FieldElement> y);

// result(i, j) = multipliers[j] * points[j]^i, i < k.
// Throws BadGrsParameters for repeated points, zero multipliers, k > n, or n > q.
FqMatrix grs_generator(const PrimeField& field, std::size_t k, std::span<const FieldElement> points,
                       std::span<const FieldElement> multipliers);

struct GrsParameters {
  std::vector<FieldElement> points;
  std::vector<FieldElement> multipliers;
};

// Finds points/multipliers whose GRS generator spans the same row space as
// m, or nullopt when the code of m is not GRS with finite evaluation points.
// m must have full row rank. Polynomial time: the systematic form of a GRS
// code is a scaled Cauchy matrix, and its cross-ratios pin the points down
// once three of them are normalized.
std::optional<GrsParameters> recognize_grs(const FqMatrix& m);

// Random invertible square matrix.
FqMatrix random_invertible(const PrimeField& field, std::size_t n, Rng& rng);

// Random rows x cols MDS matrix: a random basis of a GRS code with random
// distinct points and nonzero multipliers. Requires cols <= q.
FqMatrix random_mds(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng);

enum class CompletionStrategy {
  kAuto,        // GRS extension when the pinned columns are GRS, else random
  kRandomOnly,  // column-by-column rejection sampling only
};

// Fills the columns of `tmpl` that are not listed in `fixed_columns` so the
// whole matrix is MDS; listed columns are copied bit-for-bit. The random path
// retries each free column up to retry_cap times and throws CompletionFailed
// when that is exhausted (q too small for the dimensions). Throws
// CompletionFailed as well when the pinned columns are not in general position.
FqMatrix mds_complete(const FqMatrix& tmpl, std::span<const std::size_t> fixed_columns, Rng& rng,
                      std::size_t retry_cap = 1000,
                      CompletionStrategy strategy = CompletionStrategy::kAuto);

// Generator of the code with parity-check matrix h: (n - rows(h)) x n, full
// row rank, result * h^T = 0. Throws ShapeError if h.cols() != n and
// RankError if h is rank deficient.
FqMatrix generator_from_parity(const FqMatrix& h, std::size_t n);

// Deletes the listed columns; survivors keep their order. Throws IndexError.
FqMatrix puncture(const FqMatrix& m, std::span<const std::size_t> columns);

// Basis (in reduced echelon form) of the subcode of rowspace(m) vanishing
// outside `keep`, restricted to the `keep` coordinates in the listed order.
FqMatrix shorten(const FqMatrix& m, std::span<const std::size_t> keep);

}  // namespace plt
