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

#include "plt/bounds.hpp"

#include <functional>
#include <sstream>

#include "support.hpp"

namespace plt {
namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Enumerates every multiset of parts in [1, D] summing to K with at least
// one part equal to D, and takes the minimum of sum(min(L, part)).
std::uint64_t partition_oracle(std::size_t K, std::size_t D, std::size_t L) {
  std::uint64_t best = UINT64_MAX;
  std::function<void(std::size_t, std::size_t, std::uint64_t)> go = [&](std::size_t left, std::size_t max_part,
                                                                        std::uint64_t cost) {
    if (left == 0) {
      best = std::min(best, cost);
      return;
    }
    for (std::size_t part = std::min(left, max_part); part >= 1; --part) {
      go(left - part, part, cost + std::min(L, part));
    }
  };
  go(K - D, D, std::min(L, D));
  return best;
}

TEST(Bounds, WorkedExampleRates) {
  EXPECT_EQ(capacity_upper(24, 8, 2), r(1, 3));
  EXPECT_EQ(capacity_lower(24, 8, 2), r(1, 3));
  EXPECT_EQ(capacity_exact(24, 8, 2), r(1, 3));
  EXPECT_EQ(jplt_rate(24, 8, 2), r(2, 18));

  EXPECT_EQ(capacity_upper(24, 9, 2), r(1, 3));
  EXPECT_EQ(capacity_lower(24, 9, 2), r(1, 4));
  EXPECT_FALSE(capacity_exact(24, 9, 2).has_value());
  EXPECT_EQ(jplt_rate(24, 9, 2), r(2, 17));

  EXPECT_EQ(capacity_upper(24, 7, 2), r(1, 4));
  EXPECT_EQ(capacity_lower(24, 7, 2), r(2, 9));
  EXPECT_EQ(jplt_rate(24, 7, 2), r(2, 19));
  EXPECT_EQ(capacity_exact(24, 7, 7), r(7, 24));
  EXPECT_EQ(capacity_exact(10, 10, 3), r(1));
}

TEST(Bounds, RejectsBadShapes) {
  EXPECT_PLT_ERROR(capacity_upper(5, 6, 2), ErrorCode::BadShape);
  EXPECT_PLT_ERROR(capacity_lower(5, 3, 4), ErrorCode::BadShape);
  EXPECT_PLT_ERROR(jplt_rate(5, 3, 0), ErrorCode::BadShape);
  EXPECT_PLT_ERROR(rate_bounds(0, 0, 0), ErrorCode::BadShape);
}

TEST(Bounds, IlpMatchesPartitionEnumeration) {
  for (std::size_t K = 1; K <= 22; ++K) {
    for (std::size_t D = 1; D <= K; ++D) {
      for (std::size_t L = 1; L <= D; ++L) {
        const std::uint64_t oracle = partition_oracle(K, D, L);
        EXPECT_EQ(ilp_bruteforce(K, D, L), oracle) << K << " " << D << " " << L;
        EXPECT_EQ(ilp_closed_form(K, D, L), oracle) << K << " " << D << " " << L;
      }
    }
  }
  EXPECT_EQ(ilp_bruteforce(24, 8, 2), 6u);
  EXPECT_EQ(ilp_bruteforce(24, 7, 2), 8u);
  EXPECT_PLT_ERROR(ilp_bruteforce(kIlpMaxK + 1, 2, 1), ErrorCode::TooLarge);
}

TEST(Bounds, OrderingTightnessAndConverse) {
  for (std::size_t K = 1; K <= 40; ++K) {
    for (std::size_t D = 1; D <= K; ++D) {
      for (std::size_t L = 1; L <= D; ++L) {
        const RateBounds b = rate_bounds(K, D, L);
        const std::size_t R = K % D;
        const bool tight = R <= L || (R > 0 && D % R == 0);
        EXPECT_LE(b.lower, b.upper);
        EXPECT_EQ(b.lower == b.upper, tight) << K << " " << D << " " << L;
        EXPECT_EQ(b.exact.has_value(), tight);
        if (b.exact) {
          EXPECT_EQ(*b.exact, b.upper);
        }
        EXPECT_EQ(b.upper, r(static_cast<std::int64_t>(L),
                             static_cast<std::int64_t>(ilp_bruteforce(K, D, L))));
        EXPECT_GE(b.lower, b.jplt);
      }
    }
  }
}

TEST(Bounds, SweepRowsAndCsv) {
  const std::vector<std::size_t> ds{250, 333, 1000};
  const auto rows = sweep(1000, r(3, 5), ds);
  ASSERT_EQ(rows.size(), 3u);
  ASSERT_TRUE(rows[0].L.has_value());
  EXPECT_EQ(*rows[0].L, 150u);
  EXPECT_EQ(rows[0].bounds.lower, r(1, 4));
  EXPECT_EQ(rows[0].bounds.upper, r(1, 4));
  EXPECT_EQ(rows[0].bounds.jplt, r(150, 900));
  EXPECT_FALSE(rows[1].L.has_value());
  // D = K: the demand spans every message, so each downloaded row is useful.
  EXPECT_EQ(rows[2].bounds.lower, r(1, 1));
  EXPECT_EQ(rows[2].bounds.upper, r(1, 1));
  EXPECT_EQ(rows[2].bounds.jplt, r(1, 1));

  const std::string csv = sweep_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "D,L,iplt_lower,iplt_upper,jplt,exact");
  std::getline(in, line);
  EXPECT_EQ(line, "250,150,0.250000,0.250000,0.166667,0.250000");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# D=333", 0), 0u) << line;
  std::getline(in, line);
  EXPECT_EQ(line, "1000,600,1.000000,1.000000,1.000000,1.000000");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Bounds, RateGainsAtQuarterSupport) {
  // Relative gain of individual over joint privacy at K=1000, D=250.
  const auto gain = [](std::size_t L) {
    const RateBounds b = rate_bounds(1000, 250, L);
    return b.lower / b.jplt - r(1);
  };
  EXPECT_EQ(gain(150), r(1, 2));
  EXPECT_EQ(gain(100), r(9, 8));
}

}  // namespace
}  // namespace plt
