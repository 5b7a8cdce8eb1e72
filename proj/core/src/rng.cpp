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

#include "plt/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "plt/error.hpp"

namespace plt {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::IndexError, "Rng::below(0)");
  // Largest multiple of bound that fits; values above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  shuffle(std::span<std::size_t>(p));
  return p;
}

std::vector<std::size_t> Rng::subset(std::size_t n, std::size_t k) {
  if (k > n) throw Error(ErrorCode::IndexError, "subset larger than ground set");
  // Partial Fisher-Yates: the first k slots are a uniform k-subset.
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(below(n - i));
    std::swap(p[i], p[j]);
  }
  p.resize(k);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<FieldElement> Rng::distinct_elements(const PrimeField& field, std::size_t k) {
  if (k > field.modulus()) {
    throw Error(ErrorCode::FieldTooSmall, "cannot draw " + std::to_string(k) +
                                              " distinct elements from GF(" +
                                              std::to_string(field.modulus()) + ")");
  }
  std::vector<FieldElement> out;
  out.reserve(k);
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < k) {
    const FieldElement e = element(field);
    if (seen.insert(e.value()).second) out.push_back(e);
  }
  return out;
}

}  // namespace plt
