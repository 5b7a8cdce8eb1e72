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

#include "plt/params.hpp"

#include <numeric>
#include <string>

#include "plt/error.hpp"

namespace plt {

std::string_view to_string(ProtocolCase c) {
  return c == ProtocolCase::kAlignS ? "AlignS" : "ParityEmbed";
}

ProtocolParams derive_params(std::size_t K, std::size_t D, std::size_t L, std::uint64_t q,
                             std::size_t N) {
  if (L < 1 || L > D || D > K) {
    throw Error(ErrorCode::BadShape, "need 1 <= L <= D <= K, got K=" + std::to_string(K) +
                                         " D=" + std::to_string(D) + " L=" + std::to_string(L));
  }
  if (N < 1) throw Error(ErrorCode::BadShape, "message length N must be positive");
  const PrimeField field(q);

  ProtocolParams p;
  p.K = K;
  p.D = D;
  p.L = L;
  p.q = field.modulus();
  p.N = N;
  p.R = K % D;
  p.S = p.R == 0 ? D : std::gcd(D + p.R, p.R);
  p.n = K / D - 1;
  if (q < D + p.R) {
    throw Error(ErrorCode::FieldTooSmall, "q=" + std::to_string(q) + " is below D+R=" +
                                              std::to_string(D + p.R));
  }
  if (L <= p.S) {
    p.kind = ProtocolCase::kAlignS;
    p.t = D / p.S - 1;
    p.m = p.R / p.S + 1;
    p.answer_rows = L * (p.n + p.m);
  } else {
    p.kind = ProtocolCase::kParityEmbed;
    p.answer_rows = L * (p.n + 1) + p.R;
  }
  return p;
}

}  // namespace plt
