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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "plt/field.hpp"

namespace plt {

// The single source of randomness threaded through every protocol choice.
//
// Bounded draws use rejection on the raw engine output instead of
// std::uniform_int_distribution so that a seed yields the same stream with
// any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  FieldElement element(const PrimeField& field) { return FieldElement(below(field.modulus())); }
  FieldElement nonzero(const PrimeField& field) {
    return FieldElement(1 + below(field.modulus() - 1));
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Uniform random permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation(std::size_t n);

  // Uniform k-subset of {0, ..., n-1}, sorted ascending.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k);

  // k distinct field elements in uniformly random order.
  std::vector<FieldElement> distinct_elements(const PrimeField& field, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace plt
