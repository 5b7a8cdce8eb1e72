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

// Protocol parameters derived from (K, D, L, q, N).

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "plt/field.hpp"

namespace plt {

enum class ProtocolCase {
  kAlignS,       // L <= S: Cauchy-aligned trailing block
  kParityEmbed,  // L > S: trailing block from an embedded parity-check matrix
};

std::string_view to_string(ProtocolCase c);

struct ProtocolParams {
  std::size_t K = 0;
  std::size_t D = 0;
  std::size_t L = 0;
  std::uint64_t q = 0;
  std::size_t N = 1;

  std::size_t R = 0;  // K mod D
  std::size_t S = 0;  // gcd(D + R, R), or D when R = 0
  std::size_t n = 0;  // floor(K / D) - 1
  // Only meaningful for kAlignS; zero otherwise.
  std::size_t t = 0;  // D / S - 1
  std::size_t m = 0;  // R / S + 1
  ProtocolCase kind = ProtocolCase::kAlignS;
  std::size_t answer_rows = 0;

  PrimeField field() const { return PrimeField(q); }
  std::size_t trailing_rows() const { return answer_rows - n * L; }
  std::size_t trailing_cols() const { return D + R; }
};

// Throws BadShape unless 1 <= L <= D <= K and N >= 1, NotPrime for a bad q,
// and FieldTooSmall when q < D + R.
ProtocolParams derive_params(std::size_t K, std::size_t D, std::size_t L, std::uint64_t q,
                             std::size_t N = 1);

}  // namespace plt
