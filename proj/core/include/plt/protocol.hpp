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

// Client side of the protocol: demands, query construction and recovery.
//
// Indices are 0-based throughout: messages in [0, K), blocks in [0, n],
// column-blocks of the trailing block in [0, t + m), trailing positions in
// [0, D + R).

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plt/codes.hpp"
#include "plt/matrix.hpp"
#include "plt/params.hpp"
#include "plt/query.hpp"
#include "plt/rational.hpp"
#include "plt/rng.hpp"

namespace plt {

// Support W (distinct message indices) and the L x D coefficient matrix V
// whose column j multiplies message W[j].
class Demand {
 public:
  // Throws InvalidDemand for repeated or out-of-range indices, a column
  // count other than |W|, or a V that is not MDS.
  Demand(std::vector<std::size_t> w, FqMatrix v, std::size_t K);

  const std::vector<std::size_t>& W() const { return w_; }
  const FqMatrix& V() const { return v_; }
  std::size_t D() const { return w_.size(); }
  std::size_t L() const { return v_.rows(); }

  // Column j of the result is column order[j] of this demand.
  Demand reordered(std::span<const std::size_t> order) const;

 private:
  Demand(std::vector<std::size_t> w, FqMatrix v) : w_(std::move(w)), v_(std::move(v)) {}

  std::vector<std::size_t> w_;
  FqMatrix v_;
};

// V * X_W.
FqMatrix demand_value(const Demand& demand, const FqMatrix& x);

// Random demand: sorted uniform support and a GRS-sampled MDS V.
Demand random_demand(const ProtocolParams& params, Rng& rng);

struct ShuffledDemand {
  Demand demand;
  std::vector<std::size_t> order;  // column j came from column order[j]
};

ShuffledDemand shuffle_demand(const Demand& demand, Rng& rng);

// Trailing block index: b < n with probability D/K each, b = n with (D+R)/K.
std::size_t select_block(const ProtocolParams& params, Rng& rng);

struct AlignmentSolution {
  std::vector<FieldElement> c;      // one per l index, c[0] = 1
  std::vector<FieldElement> alpha;  // t + m scalars
};

// k_idx in [0, t), l_idx in [t, t + m), both ascending, |k| + |l| = t + 1,
// |l| >= 1. omega is the m x t Cauchy matrix. Throws AlignmentSingular when
// the zero-forcing system does not have a 1-dimensional solution free of
// zeros. Only the unchosen alpha entries consume randomness.
AlignmentSolution solve_alignment(std::size_t t, std::size_t m, std::span<const std::size_t> k_idx,
                                  std::span<const std::size_t> l_idx, const FqMatrix& omega,
                                  Rng& rng);

// Zero-forcing coefficients alone; nullopt instead of AlignmentSingular.
std::optional<std::vector<FieldElement>> alignment_coefficients(std::size_t t,
                                                                std::span<const std::size_t> k_idx,
                                                                std::span<const std::size_t> l_idx,
                                                                const FqMatrix& omega);

// The Cauchy/alpha scaffold of an AlignS trailing block.
struct AlignScaffold {
  FqMatrix C;                          // L x (D + R), S-wide column-blocks
  FqMatrix omega;                      // m x t
  std::vector<FieldElement> alpha;     // t + m
  std::vector<FieldElement> cauchy_x;  // m
  std::vector<FieldElement> cauchy_y;  // t
};

// Row-block i, column-block j < t holds alpha_j * omega(i, j) * C_j;
// column-block t + i holds alpha_{t+i} * C_{t+i}; everything else is zero.
FqMatrix assemble_aligned_block(const AlignScaffold& scaffold, std::size_t S, std::size_t L);

struct ClientSecret {
  std::size_t b = 0;
  std::vector<std::size_t> order;       // shuffle applied to the demand's columns
  std::vector<std::size_t> permuted_w;  // W in shuffled order

  // AlignS only.
  std::optional<AlignScaffold> scaffold;
  std::vector<std::size_t> k_idx;  // b = n only
  std::vector<std::size_t> l_idx;  // b = n only
  std::vector<FieldElement> c;     // b = n only

  // ParityEmbed, b = n only.
  std::vector<std::size_t> h;
  std::optional<FqMatrix> trailing_generator;  // G_{n+1}
};

struct BuildOptions {
  std::optional<std::size_t> forced_block;  // skip select_block
  std::size_t retry_cap = 1000;
  CompletionStrategy completion = CompletionStrategy::kAuto;
};

struct QueryBundle {
  Query query;
  ClientSecret secret;
};

// Throws FieldTooSmall or CompletionFailed from the sub-steps, and
// InvalidDemand when the demand does not match params.
QueryBundle build_query(const Demand& demand, const ProtocolParams& params, Rng& rng,
                        const BuildOptions& options = {});

// Returns V * X_W for the original demand. Throws RecoveryInconsistent when
// the answer cannot be decoded.
FqMatrix recover(const Answer& answer, const ClientSecret& secret, const ProtocolParams& params,
                 const Demand& demand);

// L / answer_rows.
Rational achieved_rate(const ProtocolParams& params);

}  // namespace plt
