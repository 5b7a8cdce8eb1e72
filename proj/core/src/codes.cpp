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

#include "plt/codes.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "plt/combinatorics.hpp"
#include "plt/error.hpp"

namespace plt {
namespace {

void require_wide(const FqMatrix& m, const char* what) {
  if (m.rows() > m.cols()) {
    throw Error(ErrorCode::ShapeError, std::string(what) + ": " + std::to_string(m.rows()) +
                                           " rows exceed " + std::to_string(m.cols()) + " columns");
  }
}

bool all_distinct(std::span<const FieldElement> values) {
  std::unordered_set<std::uint64_t> seen;
  for (FieldElement v : values) {
    if (!seen.insert(v.value()).second) return false;
  }
  return true;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> taken) {
  std::vector<bool> used(n, false);
  for (std::size_t i : taken) {
    if (i >= n) throw Error(ErrorCode::IndexError, "column " + std::to_string(i) + " out of range");
    used[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) rest.push_back(i);
  }
  return rest;
}

// Multipliers v such that GRS_k(points, v) has the row space of m, if any.
// A word c lies in GRS_k(a, v) iff sum_j c_j u_j a_j^l / v_j = 0 for l < n-k,
// with u_j = 1 / prod_{i != j} (a_j - a_i). That is linear in z_j = 1/v_j.
std::optional<std::vector<FieldElement>> multipliers_for(const FqMatrix& m,
                                                         std::span<const FieldElement> points) {
  const PrimeField& f = m.field();
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (k == n) return std::vector<FieldElement>(n, f.one());

  std::vector<FieldElement> u(n);
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement prod = f.one();
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) prod = f.mul(prod, f.sub(points[j], points[i]));
    }
    u[j] = f.inv(prod);
  }
  const std::size_t r = n - k;
  FqMatrix system(f, k * r, n);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement term = f.mul(m(g, j), u[j]);
      for (std::size_t l = 0; l < r; ++l) {
        system.at(g * r + l, j) = term;
        term = f.mul(term, points[j]);
      }
    }
  }
  const FqMatrix z = right_null_space(system);
  if (z.rows() == 0) return std::nullopt;

  // The solution is unique up to scale for a GRS code; if the null space is
  // larger, look for a combination without zero entries.
  const std::uint64_t tries = std::min<std::uint64_t>(f.modulus() - 1, 4 * n + 4);
  for (std::uint64_t x = 1; x <= tries; ++x) {
    std::vector<FieldElement> zc(n, f.zero());
    FieldElement coeff = f.one();
    for (std::size_t b = 0; b < z.rows(); ++b) {
      for (std::size_t j = 0; j < n; ++j) zc[j] = f.add(zc[j], f.mul(coeff, z(b, j)));
      coeff = f.mul(coeff, f.reduce(x));
    }
    if (std::any_of(zc.begin(), zc.end(), [](FieldElement e) { return e.is_zero(); })) continue;
    std::vector<FieldElement> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = f.inv(zc[j]);
    if (same_row_space(m, grs_generator(f, k, points, v))) return v;
    if (z.rows() == 1) break;
  }
  return std::nullopt;
}

std::vector<FieldElement> first_points(const PrimeField& f, std::size_t n) {
  std::vector<FieldElement> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = f.reduce(i);
  return pts;
}

// True when every max(rows)-subset of `cols` that contains `newest` has full rank.
bool independent_with(const FqMatrix& m, std::span<const std::size_t> cols, std::size_t newest) {
  const std::size_t k = std::min(m.rows(), cols.size() + 1);
  bool ok = true;
  std::vector<std::size_t> pick(k);
  for_each_combination(cols.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i + 1 < k; ++i) pick[i] = cols[idx[i]];
    pick[k - 1] = newest;
    ok = rank(m.select_columns(pick)) == k;
    return ok;
  });
  return ok;
}

FqMatrix complete_random(const FqMatrix& tmpl, std::span<const std::size_t> fixed,
                         std::span<const std::size_t> free, Rng& rng, std::size_t retry_cap) {
  const PrimeField& f = tmpl.field();
  FqMatrix out = tmpl;
  std::vector<std::size_t> placed(fixed.begin(), fixed.end());
  for (std::size_t col : free) {
    bool done = false;
    for (std::size_t attempt = 0; attempt < retry_cap && !done; ++attempt) {
      for (std::size_t r = 0; r < out.rows(); ++r) out.at(r, col) = rng.element(f);
      done = independent_with(out, placed, col);
    }
    if (!done) {
      throw Error(ErrorCode::CompletionFailed,
                  "no admissible column " + std::to_string(col) + " after " +
                      std::to_string(retry_cap) + " draws over GF(" + std::to_string(f.modulus()) +
                      ")");
    }
    placed.push_back(col);
  }
  return out;
}

// Extends the GRS structure of the pinned columns to the whole matrix.
std::optional<FqMatrix> complete_structured(const FqMatrix& tmpl, std::span<const std::size_t> fixed,
                                            std::span<const std::size_t> free, Rng& rng,
                                            std::size_t retry_cap) {
  const PrimeField& f = tmpl.field();
  const std::size_t k = tmpl.rows();
  const std::size_t n = tmpl.cols();
  if (n > f.modulus()) return std::nullopt;
  const FqMatrix pinned = tmpl.select_columns(fixed);

  std::vector<FieldElement> points(n);
  std::vector<FieldElement> mult(n);
  if (fixed.size() >= k) {
    const auto grs = recognize_grs(pinned);
    if (!grs) return std::nullopt;
    std::unordered_set<std::uint64_t> used;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      points[fixed[i]] = grs->points[i];
      mult[fixed[i]] = grs->multipliers[i];
      used.insert(grs->points[i].value());
    }
    std::vector<FieldElement> fresh;
    if (f.modulus() <= 4 * n) {
      for (std::uint64_t v = 0; v < f.modulus(); ++v) {
        if (!used.count(v)) fresh.emplace_back(v);
      }
      rng.shuffle(std::span<FieldElement>(fresh));
    } else {
      while (fresh.size() < free.size()) {
        const FieldElement v = rng.element(f);
        if (used.insert(v.value()).second) fresh.push_back(v);
      }
    }
    for (std::size_t i = 0; i < free.size(); ++i) {
      points[free[i]] = fresh[i];
      mult[free[i]] = rng.nonzero(f);
    }
    const FqMatrix gamma = grs_generator(f, k, points, mult);
    const auto a = solve_left(gamma.select_columns(fixed), pinned);
    if (!a) return std::nullopt;
    return *a * gamma;
  }

  // Fewer pinned columns than rows: any GRS code works once a basis maps the
  // pinned columns of the GRS generator onto the template.
  const auto pts = rng.distinct_elements(f, n);
  for (std::size_t j = 0; j < n; ++j) {
    points[j] = pts[j];
    mult[j] = rng.nonzero(f);
  }
  const FqMatrix gamma = grs_generator(f, k, points, mult);
  std::vector<std::size_t> basis(fixed.begin(), fixed.end());
  basis.insert(basis.end(), free.begin(), free.begin() + static_cast<std::ptrdiff_t>(k - fixed.size()));
  const auto gamma_inv = inverse(gamma.select_columns(basis));
  for (std::size_t attempt = 0; attempt < retry_cap; ++attempt) {
    FqMatrix target(f, k, k);
    target.set_block(0, 0, pinned);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = fixed.size(); c < k; ++c) target.at(r, c) = rng.element(f);
    }
    if (rank(target) == k) return target * *gamma_inv * gamma;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_singular_minor(const FqMatrix& m) {
  require_wide(m, "find_singular_minor");
  std::optional<std::vector<std::size_t>> bad;
  for_each_combination(m.cols(), m.rows(), [&](const std::vector<std::size_t>& idx) {
    if (rank(m.select_columns(idx)) != m.rows()) bad = idx;
    return !bad;
  });
  return bad;
}

bool is_mds_exhaustive(const FqMatrix& m) { return !find_singular_minor(m); }

bool is_mds(const FqMatrix& m) {
  require_wide(m, "is_mds");
  if (m.rows() == 0) return true;
  if (rank(m) != m.rows()) return false;
  if (recognize_grs(m)) return true;
  return is_mds_exhaustive(m);
}

bool in_general_position(const FqMatrix& m) {
  if (m.cols() < m.rows()) return rank(m) == m.cols();
  return is_mds(m);
}

FqMatrix cauchy(const PrimeField& field, std::span<const FieldElement> x,
                std::span<const FieldElement> y) {
  std::vector<FieldElement> all(x.begin(), x.end());
  all.insert(all.end(), y.begin(), y.end());
  if (!all_distinct(all)) throw Error(ErrorCode::DegenerateCauchy, "x and y must be pairwise distinct");
  FqMatrix out(field, x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out.at(i, j) = field.inv(field.sub(x[i], y[j]));
  }
  return out;
}

FqMatrix grs_generator(const PrimeField& field, std::size_t k, std::span<const FieldElement> points,
                       std::span<const FieldElement> multipliers) {
  const std::size_t n = points.size();
  if (multipliers.size() != n) throw Error(ErrorCode::BadGrsParameters, "points/multipliers length mismatch");
  if (k > n) throw Error(ErrorCode::BadGrsParameters, "k exceeds n");
  if (n > field.modulus()) throw Error(ErrorCode::BadGrsParameters, "n exceeds q");
  if (!all_distinct(points)) throw Error(ErrorCode::BadGrsParameters, "repeated evaluation point");
  for (FieldElement v : multipliers) {
    if (v.is_zero() || !field.contains(v.value())) {
      throw Error(ErrorCode::BadGrsParameters, "multipliers must be nonzero field elements");
    }
  }
  FqMatrix out(field, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement e = multipliers[j];
    for (std::size_t i = 0; i < k; ++i) {
      out.at(i, j) = e;
      e = field.mul(e, points[j]);
    }
  }
  return out;
}

std::optional<GrsParameters> recognize_grs(const FqMatrix& m) {
  const PrimeField& f = m.field();
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (k > n || n > f.modulus() || rank(m) != k) return std::nullopt;

  auto attempt = [&](std::vector<FieldElement> pts) -> std::optional<GrsParameters> {
    auto v = multipliers_for(m, pts);
    if (!v) return std::nullopt;
    return GrsParameters{std::move(pts), std::move(*v)};
  };
  // Small dimensions: every MDS code is GRS on any point set.
  if (k <= 1 || n - k <= 1) return attempt(first_points(f, n));

  // Systematic form [I | P]; for GRS, P(i, j) = c_i d_j / (y_j - x_i).
  const EchelonForm e = rref(m);
  for (std::size_t i = 0; i < k; ++i) {
    if (e.pivots[i] != i) return std::nullopt;
  }
  const std::size_t r = n - k;
  FqMatrix qm(f, k, r);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const FieldElement p = e.reduced(i, k + j);
      if (p.is_zero()) return std::nullopt;
      qm.at(i, j) = f.inv(p);
    }
  }
  // Cross ratios of Q = 1/P are invariant under the scalings c, d and equal
  // (y_0 - x_0)(y_j - x_i) / ((y_j - x_0)(y_0 - x_i)). Fix x_0 = 0, y_0 = 1,
  // y_1 = lambda. A wrong lambda only fails when it sends some true point to
  // infinity, which at most n - 3 values do, so n candidates suffice.
  auto rho = [&](std::size_t i, std::size_t j) {
    return f.div(f.mul(qm(0, 0), qm(i, j)), f.mul(qm(0, j), qm(i, 0)));
  };
  const std::uint64_t last = std::min<std::uint64_t>(f.modulus() - 1, n + 2);
  for (std::uint64_t lv = 2; lv <= last; ++lv) {
    const FieldElement lambda(lv);
    std::vector<FieldElement> pts(n);
    pts[0] = f.zero();
    pts[k] = f.one();
    pts[k + 1] = lambda;
    bool finite = true;
    for (std::size_t i = 1; i < k && finite; ++i) {
      const FieldElement p = rho(i, 1);
      const FieldElement den = f.sub(f.one(), f.mul(p, lambda));
      if (den.is_zero()) {
        finite = false;
        break;
      }
      pts[i] = f.div(f.mul(lambda, f.sub(f.one(), p)), den);
    }
    if (!finite) continue;
    const FieldElement x1 = pts[1];
    for (std::size_t j = 2; j < r && finite; ++j) {
      const FieldElement den = f.sub(f.one(), f.mul(rho(1, j), f.sub(f.one(), x1)));
      if (den.is_zero()) {
        finite = false;
        break;
      }
      pts[k + j] = f.div(x1, den);
    }
    if (!finite || !all_distinct(pts)) continue;
    if (auto found = attempt(std::move(pts))) return found;
  }
  return std::nullopt;
}

FqMatrix random_invertible(const PrimeField& field, std::size_t n, Rng& rng) {
  while (true) {
    FqMatrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.element(field);
    }
    if (rank(m) == n) return m;
  }
}

FqMatrix random_mds(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) throw Error(ErrorCode::ShapeError, "random_mds: rows exceed columns");
  const auto points = rng.distinct_elements(field, cols);
  std::vector<FieldElement> mult(cols);
  for (auto& v : mult) v = rng.nonzero(field);
  return random_invertible(field, rows, rng) * grs_generator(field, rows, points, mult);
}

FqMatrix mds_complete(const FqMatrix& tmpl, std::span<const std::size_t> fixed_columns, Rng& rng,
                      std::size_t retry_cap, CompletionStrategy strategy) {
  require_wide(tmpl, "mds_complete");
  const std::vector<std::size_t> free = complement(tmpl.cols(), fixed_columns);
  if (std::unordered_set<std::size_t>(fixed_columns.begin(), fixed_columns.end()).size() !=
      fixed_columns.size()) {
    throw Error(ErrorCode::IndexError, "repeated fixed column");
  }
  if (tmpl.rows() == 0) return tmpl;
  if (!in_general_position(tmpl.select_columns(fixed_columns))) {
    throw Error(ErrorCode::CompletionFailed, "fixed columns are not in general position");
  }
  if (free.empty()) return tmpl;

  if (strategy == CompletionStrategy::kAuto) {
    if (auto out = complete_structured(tmpl, fixed_columns, free, rng, retry_cap)) {
      // Copy the pinned columns verbatim; the solve reproduces them exactly,
      // this only guards the bit-identity contract.
      for (std::size_t c : fixed_columns) {
        for (std::size_t r = 0; r < tmpl.rows(); ++r) out->at(r, c) = tmpl(r, c);
      }
      return *out;
    }
  }
  return complete_random(tmpl, fixed_columns, free, rng, retry_cap);
}

FqMatrix generator_from_parity(const FqMatrix& h, std::size_t n) {
  if (h.cols() != n) {
    throw Error(ErrorCode::ShapeError, "parity-check matrix has " + std::to_string(h.cols()) +
                                           " columns, expected " + std::to_string(n));
  }
  if (rank(h) != h.rows()) throw Error(ErrorCode::RankError, "parity-check matrix is rank deficient");
  return right_null_space(h);
}

FqMatrix puncture(const FqMatrix& m, std::span<const std::size_t> columns) {
  return m.select_columns(complement(m.cols(), columns));
}

FqMatrix shorten(const FqMatrix& m, std::span<const std::size_t> keep) {
  const std::vector<std::size_t> outside = complement(m.cols(), keep);
  // Combinations y with (y m) vanishing on `outside`: y in the left null
  // space of m restricted to those columns.
  const FqMatrix combos = right_null_space(m.select_columns(outside).transpose());
  if (combos.rows() == 0) return FqMatrix(m.field(), 0, keep.size());
  return rref((combos * m).select_columns(keep)).reduced;
}

}  // namespace plt
