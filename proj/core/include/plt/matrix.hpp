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

// Dense row-major matrices over GF(q) and exact Gaussian elimination.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "plt/field.hpp"

namespace plt {

class FqMatrix {
 public:
  // rows x cols zero matrix.
  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Entries are reduced mod q; throws ShapeError if values.size() != rows*cols.
  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::span<const std::int64_t> values);

  static FqMatrix from_rows(PrimeField field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static FqMatrix identity(PrimeField field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const FieldElement> data() const { return data_; }

  bool is_zero() const;

  FqMatrix transpose() const;
  FqMatrix select_rows(std::span<const std::size_t> indices) const;
  FqMatrix select_columns(std::span<const std::size_t> indices) const;
  FqMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const FqMatrix& src);
  FqMatrix scaled(FieldElement s) const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

std::ostream& operator<<(std::ostream& os, const FqMatrix& m);

// All binary operations throw ShapeError on dimension or field mismatch.
FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);

struct EchelonForm {
  FqMatrix reduced;                  // reduced row echelon form, zero rows trimmed
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// First-nonzero pivoting; exact, so no stability concerns.
EchelonForm rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);

// Basis of {x : m x = 0} as rows, (cols - rank) x cols, in canonical form:
// one row per free column f with a 1 at f, zeros at the other free columns.
// The result is itself in reduced row echelon form.
FqMatrix right_null_space(const FqMatrix& m);

// X with X * a == b, or nullopt if none exists. a is n x k, b is r x k.
std::optional<FqMatrix> solve_left(const FqMatrix& a, const FqMatrix& b);

std::optional<FqMatrix> inverse(const FqMatrix& a);

bool same_row_space(const FqMatrix& a, const FqMatrix& b);

}  // namespace plt
