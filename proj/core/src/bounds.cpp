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

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "plt/error.hpp"

namespace plt {
namespace {

struct Shape {
  std::int64_t K, D, L, R, S;
};

Shape check(std::size_t K, std::size_t D, std::size_t L) {
  if (L < 1 || L > D || D > K) {
    throw Error(ErrorCode::BadShape, "need 1 <= L <= D <= K, got K=" + std::to_string(K) +
                                         " D=" + std::to_string(D) + " L=" + std::to_string(L));
  }
  const auto k = static_cast<std::int64_t>(K), d = static_cast<std::int64_t>(D),
             l = static_cast<std::int64_t>(L);
  const std::int64_t r = k % d;
  return Shape{k, d, l, r, r == 0 ? d : std::gcd(d + r, r)};
}

}  // namespace

Rational capacity_upper(std::size_t K, std::size_t D, std::size_t L) {
  const Shape s = check(K, D, L);
  return 1 / (Rational(s.K / s.D) + std::min(Rational(1), Rational(s.R, s.L)));
}

Rational capacity_lower(std::size_t K, std::size_t D, std::size_t L) {
  const Shape s = check(K, D, L);
  return 1 / (Rational(s.K / s.D) + std::min(Rational(s.R, s.S), Rational(s.R, s.L)));
}

std::optional<Rational> capacity_exact(std::size_t K, std::size_t D, std::size_t L) {
  const Shape s = check(K, D, L);
  if (s.R <= s.L || s.D % s.R == 0) return capacity_upper(K, D, L);
  return std::nullopt;
}

Rational jplt_rate(std::size_t K, std::size_t D, std::size_t L) {
  const Shape s = check(K, D, L);
  return Rational(s.L, s.K - s.D + s.L);
}

RateBounds rate_bounds(std::size_t K, std::size_t D, std::size_t L) {
  return RateBounds{capacity_upper(K, D, L), capacity_lower(K, D, L), capacity_exact(K, D, L),
                    jplt_rate(K, D, L)};
}

std::uint64_t ilp_bruteforce(std::size_t K, std::size_t D, std::size_t L) {
  check(K, D, L);
  if (K > kIlpMaxK) {
    throw Error(ErrorCode::TooLarge, "ILP oracle is limited to K <= " + std::to_string(kIlpMaxK));
  }
  // best[mass]: cheapest way to split `mass` into parts of size at most D.
  std::vector<std::uint64_t> best(K - D + 1, std::numeric_limits<std::uint64_t>::max());
  best[0] = 0;
  for (std::size_t mass = 1; mass < best.size(); ++mass) {
    for (std::size_t part = 1; part <= std::min(D, mass); ++part) {
      best[mass] = std::min(best[mass], std::min(L, part) + best[mass - part]);
    }
  }
  return L + best[K - D];
}

std::uint64_t ilp_closed_form(std::size_t K, std::size_t D, std::size_t L) {
  check(K, D, L);
  return L * (K / D) + std::min(L, K % D);
}

std::vector<SweepRow> sweep(std::size_t K, const Rational& ratio, std::span<const std::size_t> d_values) {
  std::vector<SweepRow> rows;
  for (std::size_t d : d_values) {
    SweepRow row;
    row.D = d;
    const Rational l = ratio * static_cast<std::int64_t>(d);
    if (l.denominator() == 1 && l.numerator() >= 1 && l.numerator() <= static_cast<std::int64_t>(d) &&
        d <= K) {
      row.L = static_cast<std::size_t>(l.numerator());
      row.bounds = rate_bounds(K, d, *row.L);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "D,L,iplt_lower,iplt_upper,jplt,exact\n";
  for (const SweepRow& row : rows) {
    if (!row.L) {
      out << "# D=" << row.D << " skipped: L is not an integer in [1, D]\n";
      continue;
    }
    const RateBounds& b = row.bounds;
    out << row.D << ',' << *row.L << ',' << to_decimal(b.lower) << ',' << to_decimal(b.upper) << ','
        << to_decimal(b.jplt) << ',' << (b.exact ? to_decimal(*b.exact) : "") << '\n';
  }
  return out.str();
}

}  // namespace plt
