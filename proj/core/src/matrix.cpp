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

#include "plt/matrix.hpp"

#include <algorithm>
#include <string>

#include "plt/error.hpp"

namespace plt {
namespace {

std::string dims(const FqMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const FqMatrix& a, const FqMatrix& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::ShapeError, "matrices over different fields");
  }
}

}  // namespace

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                   std::span<const std::int64_t> values)
    : FqMatrix(field, rows, cols) {
  if (values.size() != rows * cols) {
    throw Error(ErrorCode::ShapeError, "expected " + std::to_string(rows * cols) +
                                           " entries, got " + std::to_string(values.size()));
  }
  std::transform(values.begin(), values.end(), data_.begin(),
                 [&](std::int64_t v) { return field_.element(v); });
}

FqMatrix FqMatrix::from_rows(PrimeField field,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  std::vector<std::int64_t> flat;
  flat.reserve(nrows * ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorCode::ShapeError, "ragged matrix literal");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FqMatrix(field, nrows, ncols, flat);
}

FqMatrix FqMatrix::identity(PrimeField field, std::size_t n) {
  FqMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = (*this)(r, c);
  }
  return t;
}

FqMatrix FqMatrix::select_rows(std::span<const std::size_t> indices) const {
  FqMatrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw Error(ErrorCode::IndexError, "row index out of range");
    std::copy_n(row(indices[i]).begin(), cols_, out.data_.begin() + i * cols_);
  }
  return out;
}

FqMatrix FqMatrix::select_columns(std::span<const std::size_t> indices) const {
  FqMatrix out(field_, rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw Error(ErrorCode::IndexError, "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.at(r, j) = (*this)(r, indices[j]);
  }
  return out;
}

FqMatrix FqMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                         std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw Error(ErrorCode::IndexError, "block exceeds " + dims(*this));
  }
  FqMatrix out(field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) out.at(r, c) = (*this)(row0 + r, col0 + c);
  }
  return out;
}

void FqMatrix::set_block(std::size_t row0, std::size_t col0, const FqMatrix& src) {
  require_same_field(*this, src);
  if (row0 + src.rows() > rows_ || col0 + src.cols() > cols_) {
    throw Error(ErrorCode::IndexError, "block " + dims(src) + " does not fit in " + dims(*this));
  }
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) at(row0 + r, col0 + c) = src(r, c);
  }
}

FqMatrix FqMatrix::scaled(FieldElement s) const {
  FqMatrix out = *this;
  for (auto& e : out.data_) e = field_.mul(e, s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const FqMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ' ';
      os << m(r, c);
    }
  }
  return os << ']';
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeError, "cannot multiply " + dims(a) + " by " + dims(b));
  }
  const PrimeField& f = a.field();
  const std::uint64_t q = f.modulus();
  FqMatrix out(f, a.rows(), b.cols());
  // Accumulate unreduced products; q < 2^32 so reduce after each add of a
  // product to stay below 2^64.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k).value();
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const std::uint64_t acc = out(i, j).value() + (aik * b(k, j).value()) % q;
        out.at(i, j) = FieldElement(acc >= q ? acc - q : acc);
      }
    }
  }
  return out;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeError, "cannot add " + dims(a) + " and " + dims(b));
  }
  FqMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.field().add(a(r, c), b(r, c));
  }
  return out;
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeError, "hstack of " + dims(a) + " and " + dims(b));
  }
  FqMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeError, "vstack of " + dims(a) + " and " + dims(b));
  }
  FqMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

EchelonForm rref(const FqMatrix& m) {
  const PrimeField& f = m.field();
  FqMatrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < w.cols() && lead < w.rows(); ++c) {
    std::size_t p = lead;
    while (p < w.rows() && w(p, c).is_zero()) ++p;
    if (p == w.rows()) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < w.cols(); ++k) std::swap(w.at(p, k), w.at(lead, k));
    }
    const FieldElement inv = f.inv(w(lead, c));
    for (std::size_t k = 0; k < w.cols(); ++k) w.at(lead, k) = f.mul(w(lead, k), inv);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (r == lead || w(r, c).is_zero()) continue;
      const FieldElement factor = w(r, c);
      for (std::size_t k = 0; k < w.cols(); ++k) {
        w.at(r, k) = f.sub(w(r, k), f.mul(factor, w(lead, k)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return EchelonForm{w.block(0, 0, pivots.size(), w.cols()), std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) { return rref(m).pivots.size(); }

FqMatrix right_null_space(const FqMatrix& m) {
  const PrimeField& f = m.field();
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FqMatrix basis(f, free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis.at(i, fc) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis.at(i, e.pivots[r]) = f.neg(e.reduced(r, fc));
    }
  }
  // Rows built this way are already independent; rref puts them in the
  // canonical (pivot-leftmost) order.
  return rref(basis).reduced;
}

std::optional<FqMatrix> solve_left(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeError, "solve_left: " + dims(a) + " vs " + dims(b));
  }
  // X a = b  <=>  a^T X^T = b^T. Row reduce [a^T | b^T].
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  const EchelonForm e = rref(hstack(a.transpose(), b.transpose()));
  FqMatrix xt(f, n, b.rows());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= n) return std::nullopt;  // inconsistent: pivot in the augmented part
    for (std::size_t j = 0; j < b.rows(); ++j) xt.at(p, j) = e.reduced(r, n + j);
  }
  return xt.transpose();
}

std::optional<FqMatrix> inverse(const FqMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_left(a, FqMatrix::identity(a.field(), a.rows()));
}

bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

}  // namespace plt
