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

#include "plt/audit.hpp"

#include <algorithm>
#include <sstream>

#include "plt/codes.hpp"
#include "plt/combinatorics.hpp"
#include "plt/error.hpp"

namespace plt {
namespace {

constexpr std::size_t kMaxReportedFailures = 8;

Rational ratio(std::uint64_t a, std::uint64_t b) {
  return Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

// ways[k][s]: number of k-subsets of `sizes` with total size s.
std::vector<std::vector<std::uint64_t>> count_subsets(std::span<const std::size_t> sizes,
                                                      std::size_t choose, std::size_t target) {
  std::vector<std::vector<std::uint64_t>> ways(choose + 1, std::vector<std::uint64_t>(target + 1, 0));
  ways[0][0] = 1;
  for (std::size_t sz : sizes) {
    for (std::size_t k = choose; k >= 1; --k) {
      for (std::size_t s = target; s >= sz; --s) {
        ways[k][s] += ways[k - 1][s - sz];
        if (s == 0) break;
      }
    }
  }
  return ways;
}

std::vector<std::size_t> trailing_columns(const ProtocolParams& params, std::span<const std::size_t> units) {
  std::vector<std::size_t> cols;
  for (std::size_t u : units) {
    if (params.kind == ProtocolCase::kAlignS) {
      for (std::size_t j = 0; j < params.S; ++j) cols.push_back(u * params.S + j);
    } else {
      cols.push_back(u);
    }
  }
  return cols;
}

// Message indices sitting at the given trailing coordinates, in order.
std::vector<std::size_t> messages_at(const Query& query, const ProtocolParams& params,
                                     std::span<const std::size_t> trailing_cols) {
  std::vector<std::size_t> at(params.K, params.K);
  for (std::size_t i = 0; i < query.pi.size(); ++i) {
    if (query.pi[i] < params.K) at[query.pi[i]] = i;
  }
  std::vector<std::size_t> out;
  for (std::size_t c : trailing_cols) out.push_back(at[params.n * params.D + c]);
  return out;
}

void record(SubsetSweep& sweep, bool ok, std::vector<std::size_t> subset) {
  ++sweep.subsets;
  if (ok) {
    ++sweep.feasible;
  } else if (sweep.failures.size() < kMaxReportedFailures) {
    sweep.failures.push_back(std::move(subset));
  }
}

// Combined row-block for the aligned subset (k, l), or nullopt if the
// zero-forcing solve fails.
std::optional<FqMatrix> aligned_combination(const FqMatrix& trailing, const AlignScaffold& sc,
                                            const ProtocolParams& params,
                                            std::span<const std::size_t> k_idx,
                                            std::span<const std::size_t> l_idx) {
  const auto c = alignment_coefficients(params.t, k_idx, l_idx, sc.omega);
  if (!c) return std::nullopt;
  FqMatrix combined(trailing.field(), params.L, trailing.cols());
  for (std::size_t j = 0; j < l_idx.size(); ++j) {
    combined = combined +
               trailing.block((l_idx[j] - params.t) * params.L, 0, params.L, trailing.cols())
                   .scaled((*c)[j]);
  }
  return combined;
}

void split_units(std::span<const std::size_t> units, std::size_t t, std::vector<std::size_t>& k,
                 std::vector<std::size_t>& l) {
  k.clear();
  l.clear();
  for (std::size_t u : units) (u < t ? k : l).push_back(u);
}

}  // namespace

CandidateFamily candidate_family(const Query& query, const ProtocolParams& params) {
  const std::size_t n = params.n, D = params.D, R = params.R, K = params.K;
  CandidateFamily fam;
  fam.block_units.resize(n);
  const bool align = params.kind == ProtocolCase::kAlignS;
  const std::size_t units = align ? params.t + params.m : D + R;
  fam.trailing_units.resize(units);
  fam.choose = align ? params.t + 1 : D;
  fam.trailing_subsets = binomial(units, fam.choose);
  for (std::size_t i = 0; i < query.pi.size(); ++i) {
    const std::size_t p = query.pi[i];
    if (p >= K) continue;
    if (p < n * D) {
      fam.block_units[p / D].push_back(i);
    } else {
      const std::size_t off = p - n * D;
      fam.trailing_units[align ? off / params.S : off].push_back(i);
    }
  }
  fam.block_weight = ratio(D, K);
  fam.trailing_weight = ratio(D + R, K) / static_cast<std::int64_t>(fam.trailing_subsets);
  return fam;
}

std::vector<SupportCandidate> candidate_supports(const Query& query, const ProtocolParams& params,
                                                 std::uint64_t max_candidates) {
  const CandidateFamily fam = candidate_family(query, params);
  if (fam.trailing_subsets + fam.block_units.size() > max_candidates) {
    throw Error(ErrorCode::TooLarge, std::to_string(fam.trailing_subsets) +
                                         " trailing candidates exceed the enumeration cap");
  }
  std::vector<SupportCandidate> out;
  for (const auto& unit : fam.block_units) {
    if (unit.size() == params.D) out.push_back({unit, fam.block_weight});
  }
  for_each_combination(fam.trailing_units.size(), fam.choose, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> support;
    for (std::size_t u : pick) {
      const auto& unit = fam.trailing_units[u];
      support.insert(support.end(), unit.begin(), unit.end());
    }
    if (support.size() == params.D) out.push_back({std::move(support), fam.trailing_weight});
    return true;
  });
  return out;
}

Rational posterior(std::size_t i, std::span<const SupportCandidate> candidates) {
  Rational sum(0);
  for (const auto& c : candidates) {
    if (std::find(c.support.begin(), c.support.end(), i) != c.support.end()) sum += c.weight;
  }
  return sum;
}

PrivacyReport audit_individual_privacy(const Query& query, const ProtocolParams& params) {
  const CandidateFamily fam = candidate_family(query, params);
  const std::size_t D = params.D;
  PrivacyReport rep;
  rep.expected = ratio(D, params.K);
  rep.posterior.assign(params.K, Rational(0));
  rep.total_weight = 0;

  for (const auto& unit : fam.block_units) {
    if (unit.size() != D) continue;
    ++rep.candidates;
    rep.total_weight += fam.block_weight;
    for (std::size_t i : unit) rep.posterior[i] += fam.block_weight;
  }

  std::vector<std::size_t> sizes;
  for (const auto& unit : fam.trailing_units) sizes.push_back(unit.size());
  const auto all = count_subsets(sizes, fam.choose, D);
  rep.candidates += all[fam.choose][D];
  rep.total_weight += fam.trailing_weight * static_cast<std::int64_t>(all[fam.choose][D]);
  for (std::size_t u = 0; u < sizes.size(); ++u) {
    if (sizes[u] > D || fam.trailing_units[u].empty()) continue;
    std::vector<std::size_t> others = sizes;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(u));
    const auto ways = count_subsets(others, fam.choose - 1, D - sizes[u]);
    const auto hits = static_cast<std::int64_t>(ways[fam.choose - 1][D - sizes[u]]);
    for (std::size_t i : fam.trailing_units[u]) rep.posterior[i] += fam.trailing_weight * hits;
  }

  for (std::size_t i = 0; i < params.K; ++i) {
    if (rep.posterior[i] != rep.expected) rep.violations.push_back(i);
  }
  return rep;
}

std::string to_text(const PrivacyReport& rep) {
  std::ostringstream out;
  out << "candidates " << rep.candidates << ", total weight " << to_fraction(rep.total_weight)
      << ", expected posterior " << to_fraction(rep.expected) << '\n';
  for (std::size_t i : rep.violations) {
    out << "violation: message " << i + 1 << " posterior " << to_fraction(rep.posterior[i]) << '\n';
  }
  out << "summary candidates=" << rep.candidates << " violations=" << rep.violations.size()
      << " ok=" << (rep.ok() ? 1 : 0) << '\n';
  return out.str();
}

FqMatrix effective_generator(const Query& query) {
  check_permutation(query.pi);
  return query.G.select_columns(query.pi);
}

bool kl_feasible(const FqMatrix& m, std::span<const std::size_t> w, const FqMatrix& v) {
  if (v.cols() != w.size()) {
    throw Error(ErrorCode::ShapeError, "V has " + std::to_string(v.cols()) + " columns for |W|=" +
                                           std::to_string(w.size()));
  }
  std::vector<bool> inside(m.cols(), false);
  for (std::size_t i : w) {
    if (i >= m.cols()) throw Error(ErrorCode::ShapeError, "support index beyond the code length");
    inside[i] = true;
  }
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!inside[c]) outside.push_back(c);
  }
  const FqMatrix combos = right_null_space(m.select_columns(outside).transpose());
  if (combos.rows() == 0) return rank(v) == 0;
  return same_row_space((combos * m).select_columns(w), v);
}

SubsetSweep alignment_feasibility_sweep(const FqMatrix& trailing, const AlignScaffold& sc,
                                        const ProtocolParams& params) {
  const std::size_t t = params.t, m = params.m, S = params.S, L = params.L;
  SubsetSweep sweep;
  std::vector<std::size_t> k, l;
  for_each_combination(t + m, t + 1, [&](const std::vector<std::size_t>& pick) {
    split_units(pick, t, k, l);
    const auto combined = aligned_combination(trailing, sc, params, k, l);
    bool ok = combined.has_value();
    if (ok) {
      std::vector<bool> chosen(t + m, false);
      for (std::size_t u : pick) chosen[u] = true;
      for (std::size_t u = 0; u < t + m && ok; ++u) {
        const bool zero = combined->block(0, u * S, L, S).is_zero();
        ok = chosen[u] ? !zero : zero;
      }
      ok = ok && is_mds(combined->select_columns(trailing_columns(params, pick)));
    }
    record(sweep, ok, pick);
    return true;
  });
  return sweep;
}

SubsetSweep shortening_feasibility_sweep(const FqMatrix& trailing, const ProtocolParams& params) {
  SubsetSweep sweep;
  for_each_combination(params.D + params.R, params.D, [&](const std::vector<std::size_t>& pick) {
    const FqMatrix v = shorten(trailing, pick);
    const bool ok = v.rows() == params.L && is_mds(v) && kl_feasible(trailing, pick, v);
    record(sweep, ok, pick);
    return true;
  });
  return sweep;
}

SubsetSweep candidate_feasibility(const Query& query, const ProtocolParams& params,
                                  const ClientSecret& secret, std::uint64_t max_candidates) {
  const CandidateFamily fam = candidate_family(query, params);
  if (fam.trailing_subsets + fam.block_units.size() > max_candidates) {
    throw Error(ErrorCode::TooLarge, "candidate family exceeds the enumeration cap");
  }
  const std::size_t L = params.L, D = params.D, n = params.n;
  const FqMatrix eff = effective_generator(query);
  const FqMatrix trailing = query.G.block(n * L, n * D, params.trailing_rows(), params.trailing_cols());
  SubsetSweep sweep;

  std::vector<std::size_t> at(params.K);
  for (std::size_t i = 0; i < params.K; ++i) at[query.pi[i]] = i;
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<std::size_t> w(D);
    for (std::size_t j = 0; j < D; ++j) w[j] = at[b * D + j];
    record(sweep, kl_feasible(eff, w, query.G.block(b * L, b * D, L, D)), w);
  }

  const bool align = params.kind == ProtocolCase::kAlignS;
  if (align && !secret.scaffold) {
    throw Error(ErrorCode::ShapeError, "AlignS feasibility needs the Cauchy scaffold");
  }
  std::vector<std::size_t> k, l;
  for_each_combination(fam.trailing_units.size(), fam.choose, [&](const std::vector<std::size_t>& pick) {
    const std::vector<std::size_t> cols = trailing_columns(params, pick);
    const std::vector<std::size_t> w = messages_at(query, params, cols);
    bool ok = false;
    if (align) {
      split_units(pick, params.t, k, l);
      if (const auto combined = aligned_combination(trailing, *secret.scaffold, params, k, l)) {
        ok = kl_feasible(eff, w, combined->select_columns(cols));
      }
    } else {
      const FqMatrix v = shorten(trailing, cols);
      ok = v.rows() == L && kl_feasible(eff, w, v);
    }
    record(sweep, ok, w);
    return true;
  });
  return sweep;
}

}  // namespace plt
