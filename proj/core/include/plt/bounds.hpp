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

// Capacity bounds, the joint-privacy comparison rate, the converse ILP
// oracle and sweep tables.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plt/rational.hpp"

namespace plt {

struct RateBounds {
  Rational upper;
  Rational lower;
  std::optional<Rational> exact;  // present iff R <= L or R | D
  Rational jplt;
};

// All of these throw BadShape unless 1 <= L <= D <= K.
Rational capacity_upper(std::size_t K, std::size_t D, std::size_t L);
Rational capacity_lower(std::size_t K, std::size_t D, std::size_t L);
std::optional<Rational> capacity_exact(std::size_t K, std::size_t D, std::size_t L);
Rational jplt_rate(std::size_t K, std::size_t D, std::size_t L);
RateBounds rate_bounds(std::size_t K, std::size_t D, std::size_t L);

inline constexpr std::size_t kIlpMaxK = 60;

// Minimum of sum_i min(L, N_i) over multisets of parts N_i in [1, D] that sum
// to K and contain at least one part equal to D. Exhaustive dynamic program
// over the remaining mass. Throws TooLarge for K > kIlpMaxK.
std::uint64_t ilp_bruteforce(std::size_t K, std::size_t D, std::size_t L);

// L * floor(K / D) + min(L, K mod D).
std::uint64_t ilp_closed_form(std::size_t K, std::size_t D, std::size_t L);

struct SweepRow {
  std::size_t D = 0;
  std::optional<std::size_t> L;  // absent when ratio * D is not a valid L
  RateBounds bounds;
};

std::vector<SweepRow> sweep(std::size_t K, const Rational& ratio, std::span<const std::size_t> d_values);

// Header `D,L,iplt_lower,iplt_upper,jplt,exact`, LF endings, 6 decimals.
// Skipped rows become '#' comment lines.
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace plt
