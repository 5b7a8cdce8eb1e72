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

// Structural privacy and feasibility audits of generated queries.
//
// From the server's side a query admits a fixed family of possible demand
// supports: each of the n leading blocks, and every union of trailing units
// (S-wide column-blocks choosing t+1 in the AlignS case, single positions
// choosing D in the ParityEmbed case). Units are formed from pi, so a
// corrupted pi shows up as units of the wrong size.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plt/matrix.hpp"
#include "plt/params.hpp"
#include "plt/protocol.hpp"
#include "plt/query.hpp"
#include "plt/rational.hpp"

namespace plt {

struct SupportCandidate {
  std::vector<std::size_t> support;  // message indices, ordered by query position
  Rational weight;
};

struct CandidateFamily {
  std::vector<std::vector<std::size_t>> block_units;     // n units
  std::vector<std::vector<std::size_t>> trailing_units;  // t + m or D + R units
  std::size_t choose = 0;                                // t + 1 or D
  std::uint64_t trailing_subsets = 0;                    // C(units, choose)
  Rational block_weight;                                 // D / K
  Rational trailing_weight;                              // (D + R) / (K * subsets)
};

CandidateFamily candidate_family(const Query& query, const ProtocolParams& params);

// Every candidate whose support has exactly D members. Throws TooLarge when
// the family exceeds max_candidates.
std::vector<SupportCandidate> candidate_supports(const Query& query, const ProtocolParams& params,
                                                 std::uint64_t max_candidates = 1'000'000);

// Sum of the weights of candidates containing message i.
Rational posterior(std::size_t i, std::span<const SupportCandidate> candidates);

struct PrivacyReport {
  Rational expected;                  // D / K
  std::vector<Rational> posterior;    // one per message
  std::vector<std::size_t> violations;
  Rational total_weight;
  std::uint64_t candidates = 0;

  bool ok() const { return violations.empty() && total_weight == Rational(1); }
};

// Posteriors by counting rather than enumeration, so it scales to any
// family size.
PrivacyReport audit_individual_privacy(const Query& query, const ProtocolParams& params);

std::string to_text(const PrivacyReport& report);

// The query as a generator over message indices: column i is G[:, pi[i]].
FqMatrix effective_generator(const Query& query);

// True iff the codewords of rowspace(m) vanishing outside w, restricted to
// w (in the listed order), span exactly rowspace(v). Throws ShapeError.
bool kl_feasible(const FqMatrix& m, std::span<const std::size_t> w, const FqMatrix& v);

struct SubsetSweep {
  std::uint64_t subsets = 0;
  std::uint64_t feasible = 0;
  std::vector<std::vector<std::size_t>> failures;  // first few infeasible subsets

  bool ok() const { return subsets == feasible; }
};

// AlignS: for every (t+1)-subset J of column-blocks, the zero-forcing
// solve succeeds with nonzero c, the combined row-block is supported exactly
// on J, and the surviving L x D matrix is MDS.
SubsetSweep alignment_feasibility_sweep(const FqMatrix& trailing, const AlignScaffold& scaffold,
                                        const ProtocolParams& params);

// ParityEmbed: for every D-subset of the D + R trailing coordinates the
// shortened code has dimension L, is MDS, and passes kl_feasible.
SubsetSweep shortening_feasibility_sweep(const FqMatrix& trailing, const ProtocolParams& params);

// For each enumerated candidate, derives its coefficient matrix (block copy,
// alignment solve or shortening) and checks kl_feasible against the whole
// query. The AlignS case needs the scaffold from the secret.
SubsetSweep candidate_feasibility(const Query& query, const ProtocolParams& params,
                                  const ClientSecret& secret,
                                  std::uint64_t max_candidates = 1'000'000);

}  // namespace plt
