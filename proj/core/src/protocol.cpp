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

#include "plt/protocol.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "plt/error.hpp"

namespace plt {
namespace {

std::vector<std::size_t> ascending_complement(std::size_t n, std::span<const std::size_t> taken) {
  std::vector<bool> used(n, false);
  for (std::size_t i : taken) used[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) rest.push_back(i);
  }
  return rest;
}

void check_demand_fits(const Demand& demand, const ProtocolParams& params) {
  if (demand.D() != params.D || demand.L() != params.L) {
    throw Error(ErrorCode::InvalidDemand,
                "demand is " + std::to_string(demand.L()) + "x" + std::to_string(demand.D()) +
                    ", parameters expect " + std::to_string(params.L) + "x" +
                    std::to_string(params.D));
  }
  if (demand.V().field().modulus() != params.q) {
    throw Error(ErrorCode::InvalidDemand, "demand coefficients live in a different field");
  }
  for (std::size_t i : demand.W()) {
    if (i >= params.K) throw Error(ErrorCode::InvalidDemand, "support index beyond K");
  }
}

}  // namespace

Demand::Demand(std::vector<std::size_t> w, FqMatrix v, std::size_t K)
    : w_(std::move(w)), v_(std::move(v)) {
  std::unordered_set<std::size_t> seen;
  for (std::size_t i : w_) {
    if (i >= K) {
      throw Error(ErrorCode::InvalidDemand,
                  "index " + std::to_string(i + 1) + " outside [1, " + std::to_string(K) + "]");
    }
    if (!seen.insert(i).second) {
      throw Error(ErrorCode::InvalidDemand, "index " + std::to_string(i + 1) + " repeated");
    }
  }
  if (v_.cols() != w_.size() || v_.rows() == 0 || v_.rows() > v_.cols()) {
    throw Error(ErrorCode::InvalidDemand, "coefficient matrix must be L x D with 1 <= L <= D");
  }
  if (!is_mds(v_)) {
    std::string where;
    if (const auto bad = find_singular_minor(v_)) {
      where = ": singular minor on columns";
      for (std::size_t c : *bad) where += " " + std::to_string(c + 1);
    }
    throw Error(ErrorCode::InvalidDemand, "coefficient matrix is not MDS" + where);
  }
}

Demand Demand::reordered(std::span<const std::size_t> order) const {
  std::vector<std::size_t> w(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) w[j] = w_.at(order[j]);
  return Demand(std::move(w), v_.select_columns(order));
}

FqMatrix demand_value(const Demand& demand, const FqMatrix& x) {
  return demand.V() * x.select_rows(demand.W());
}

Demand random_demand(const ProtocolParams& params, Rng& rng) {
  const PrimeField f = params.field();
  auto w = rng.subset(params.K, params.D);
  return Demand(std::move(w), random_mds(f, params.L, params.D, rng), params.K);
}

ShuffledDemand shuffle_demand(const Demand& demand, Rng& rng) {
  auto order = rng.permutation(demand.D());
  return ShuffledDemand{demand.reordered(order), std::move(order)};
}

std::size_t select_block(const ProtocolParams& params, Rng& rng) {
  const std::size_t u = rng.below(params.K);
  return u < params.n * params.D ? u / params.D : params.n;
}

std::optional<std::vector<FieldElement>> alignment_coefficients(std::size_t t,
                                                                std::span<const std::size_t> k_idx,
                                                                std::span<const std::size_t> l_idx,
                                                                const FqMatrix& omega) {
  const PrimeField& f = omega.field();
  const std::vector<std::size_t> unchosen = ascending_complement(t, k_idx);
  FqMatrix m1(f, unchosen.size(), l_idx.size());
  for (std::size_t a = 0; a < unchosen.size(); ++a) {
    for (std::size_t b = 0; b < l_idx.size(); ++b) m1.at(a, b) = omega(l_idx[b] - t, unchosen[a]);
  }
  const FqMatrix null = right_null_space(m1);
  if (null.rows() != 1) return std::nullopt;
  const auto row = null.row(0);
  if (row[0].is_zero()) return std::nullopt;
  const FieldElement scale = f.inv(row[0]);
  std::vector<FieldElement> c(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    c[j] = f.mul(row[j], scale);
    if (c[j].is_zero()) return std::nullopt;
  }
  return c;
}

AlignmentSolution solve_alignment(std::size_t t, std::size_t m, std::span<const std::size_t> k_idx,
                                  std::span<const std::size_t> l_idx, const FqMatrix& omega,
                                  Rng& rng) {
  if (l_idx.empty() || k_idx.size() + l_idx.size() != t + 1) {
    throw Error(ErrorCode::AlignmentSingular, "need |k| + |l| = t + 1 with at least one l");
  }
  if (omega.rows() != m || omega.cols() != t) {
    throw Error(ErrorCode::ShapeError, "Cauchy matrix must be m x t");
  }
  const PrimeField& f = omega.field();
  auto c = alignment_coefficients(t, k_idx, l_idx, omega);
  if (!c) {
    throw Error(ErrorCode::AlignmentSingular,
                "zero-forcing system lacks a unique solution without zeros");
  }
  std::vector<FieldElement> alpha(t + m);
  std::vector<int> role(t + m, 0);  // 1 = k index, 2 = l index
  for (std::size_t k : k_idx) role.at(k) = 1;
  for (std::size_t l : l_idx) role.at(l) = 2;
  for (std::size_t i = 0; i < t + m; ++i) {
    if (role[i] == 2) {
      const auto j = static_cast<std::size_t>(std::find(l_idx.begin(), l_idx.end(), i) - l_idx.begin());
      alpha[i] = f.inv((*c)[j]);
    } else if (role[i] == 1) {
      FieldElement sum = f.zero();
      for (std::size_t j = 0; j < l_idx.size(); ++j) {
        sum = f.add(sum, f.mul((*c)[j], omega(l_idx[j] - t, i)));
      }
      if (sum.is_zero()) throw Error(ErrorCode::AlignmentSingular, "aligned column-block vanishes");
      alpha[i] = f.inv(sum);
    } else {
      alpha[i] = rng.nonzero(f);
    }
  }
  return AlignmentSolution{std::move(*c), std::move(alpha)};
}

FqMatrix assemble_aligned_block(const AlignScaffold& sc, std::size_t S, std::size_t L) {
  const PrimeField& f = sc.C.field();
  const std::size_t m = sc.omega.rows();
  const std::size_t t = sc.omega.cols();
  FqMatrix out(f, L * m, (t + m) * S);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const FieldElement s = f.mul(sc.alpha[j], sc.omega(i, j));
      out.set_block(i * L, j * S, sc.C.block(0, j * S, L, S).scaled(s));
    }
    out.set_block(i * L, (t + i) * S, sc.C.block(0, (t + i) * S, L, S).scaled(sc.alpha[t + i]));
  }
  return out;
}

QueryBundle build_query(const Demand& demand, const ProtocolParams& params, Rng& rng,
                        const BuildOptions& options) {
  check_demand_fits(demand, params);
  const PrimeField f = params.field();
  const std::size_t K = params.K, D = params.D, L = params.L, R = params.R, S = params.S,
                    n = params.n;

  ShuffledDemand sh = shuffle_demand(demand, rng);
  const FqMatrix& vs = sh.demand.V();
  const std::size_t b = options.forced_block ? *options.forced_block : select_block(params, rng);
  if (b > n) throw Error(ErrorCode::IndexError, "forced block beyond n");

  ClientSecret secret;
  secret.b = b;
  secret.order = sh.order;
  secret.permuted_w = sh.demand.W();

  FqMatrix G(f, params.answer_rows, K);
  for (std::size_t i = 0; i < n; ++i) {
    G.set_block(i * L, i * D, i == b ? vs : random_mds(f, L, D, rng));
  }

  // Where each shuffled support element lands in the permuted message order.
  std::vector<std::size_t> planted(D);
  if (b < n) {
    for (std::size_t j = 0; j < D; ++j) planted[j] = b * D + j;
  }

  if (params.kind == ProtocolCase::kAlignS) {
    const std::size_t t = params.t, m = params.m;
    const auto pts = rng.distinct_elements(f, m + t);
    std::vector<FieldElement> x(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<FieldElement> y(pts.begin() + static_cast<std::ptrdiff_t>(m), pts.end());
    FqMatrix omega = cauchy(f, x, y);

    std::optional<FqMatrix> C;
    std::vector<FieldElement> alpha;
    if (b < n) {
      C = random_mds(f, L, D + R, rng);
      alpha.resize(t + m);
      for (auto& a : alpha) a = rng.nonzero(f);
    } else {
      const auto chosen = rng.subset(t + m, t + 1);
      for (std::size_t u : chosen) (u < t ? secret.k_idx : secret.l_idx).push_back(u);
      const std::size_t r = secret.k_idx.size();
      FqMatrix tmpl(f, L, D + R);
      std::vector<std::size_t> fixed;
      for (std::size_t e = 0; e < D / S; ++e) {
        const std::size_t u = e < r ? secret.k_idx[e] : secret.l_idx[e - r];
        tmpl.set_block(0, u * S, vs.block(0, e * S, L, S));
        for (std::size_t j = 0; j < S; ++j) {
          fixed.push_back(u * S + j);
          planted[e * S + j] = n * D + u * S + j;
        }
      }
      C = mds_complete(tmpl, fixed, rng, options.retry_cap, options.completion);
      AlignmentSolution sol = solve_alignment(t, m, secret.k_idx, secret.l_idx, omega, rng);
      secret.c = std::move(sol.c);
      alpha = std::move(sol.alpha);
    }
    secret.scaffold = AlignScaffold{std::move(*C), std::move(omega), std::move(alpha),
                                    std::move(x), std::move(y)};
    G.set_block(n * L, n * D, assemble_aligned_block(*secret.scaffold, S, L));
  } else if (b < n) {
    G.set_block(n * L, n * D, random_mds(f, L + R, D + R, rng));
  } else {
    secret.h = rng.subset(D + R, D);
    const FqMatrix lambda = right_null_space(vs);
    FqMatrix tmpl(f, lambda.rows(), D + R);
    for (std::size_t j = 0; j < D; ++j) {
      tmpl.set_block(0, secret.h[j], lambda.block(0, j, lambda.rows(), 1));
      planted[j] = n * D + secret.h[j];
    }
    const FqMatrix H = mds_complete(tmpl, secret.h, rng, options.retry_cap, options.completion);
    secret.trailing_generator = generator_from_parity(H, D + R);
    G.set_block(n * L, n * D, *secret.trailing_generator);
  }

  std::vector<std::size_t> pi(K, K);
  for (std::size_t j = 0; j < D; ++j) pi[secret.permuted_w[j]] = planted[j];
  std::vector<std::size_t> open = ascending_complement(K, planted);
  rng.shuffle(std::span<std::size_t>(open));
  std::size_t next = 0;
  for (std::size_t i = 0; i < K; ++i) {
    if (pi[i] == K) pi[i] = open[next++];
  }
  return QueryBundle{Query{std::move(G), std::move(pi)}, std::move(secret)};
}

FqMatrix recover(const Answer& answer, const ClientSecret& secret, const ProtocolParams& params,
                 const Demand& demand) {
  const FqMatrix& y = answer.Y;
  const std::size_t L = params.L, n = params.n;
  if (y.rows() != params.answer_rows) {
    throw Error(ErrorCode::RecoveryInconsistent,
                "answer has " + std::to_string(y.rows()) + " rows, expected " +
                    std::to_string(params.answer_rows));
  }
  if (secret.b < n) return y.block(secret.b * L, 0, L, y.cols());

  const PrimeField& f = y.field();
  if (params.kind == ProtocolCase::kAlignS) {
    if (secret.c.size() != secret.l_idx.size() || secret.l_idx.empty()) {
      throw Error(ErrorCode::RecoveryInconsistent, "secret lacks alignment coefficients");
    }
    FqMatrix z(f, L, y.cols());
    for (std::size_t j = 0; j < secret.l_idx.size(); ++j) {
      const std::size_t row0 = n * L + (secret.l_idx[j] - params.t) * L;
      z = z + y.block(row0, 0, L, y.cols()).scaled(secret.c[j]);
    }
    return z;
  }

  if (!secret.trailing_generator || secret.h.size() != params.D) {
    throw Error(ErrorCode::RecoveryInconsistent, "secret lacks the trailing generator");
  }
  const FqMatrix vs = demand.reordered(secret.order).V();
  FqMatrix u(f, L, params.trailing_cols());
  for (std::size_t j = 0; j < params.D; ++j) u.set_block(0, secret.h[j], vs.block(0, j, L, 1));
  const auto T = solve_left(*secret.trailing_generator, u);
  if (!T) throw Error(ErrorCode::RecoveryInconsistent, "target is outside the trailing code");
  return *T * y.block(n * L, 0, params.trailing_rows(), y.cols());
}

Rational achieved_rate(const ProtocolParams& params) {
  return Rational(static_cast<std::int64_t>(params.L), static_cast<std::int64_t>(params.answer_rows));
}

}  // namespace plt
