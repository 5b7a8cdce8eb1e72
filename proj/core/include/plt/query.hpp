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

// The query/answer exchange as the server sees it. Nothing here knows about
// demands or client secrets.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plt/matrix.hpp"

namespace plt {

struct Query {
  FqMatrix G;                  // answer_rows x K
  std::vector<std::size_t> pi; // message i is moved to row pi[i] (0-based)
};

struct Answer {
  FqMatrix Y;  // answer_rows x N
};

// Throws ShapeError unless pi is a bijection on {0, ..., pi.size()-1}.
void check_permutation(std::span<const std::size_t> pi);

// Row pi[i] of the result is row i of x.
FqMatrix permute_rows(const FqMatrix& x, std::span<const std::size_t> pi);

// Y = G * pi(X). Throws ShapeError on a K or field mismatch.
Answer answer(const Query& query, const FqMatrix& x);

}  // namespace plt
