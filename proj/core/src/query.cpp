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

#include "plt/query.hpp"

#include <string>

#include "plt/error.hpp"

namespace plt {

void check_permutation(std::span<const std::size_t> pi) {
  std::vector<bool> seen(pi.size(), false);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] >= pi.size() || seen[pi[i]]) {
      throw Error(ErrorCode::ShapeError,
                  "pi is not a permutation: entry " + std::to_string(i) + " = " +
                      std::to_string(pi[i]));
    }
    seen[pi[i]] = true;
  }
}

FqMatrix permute_rows(const FqMatrix& x, std::span<const std::size_t> pi) {
  if (pi.size() != x.rows()) {
    throw Error(ErrorCode::ShapeError, "permutation of length " + std::to_string(pi.size()) +
                                           " applied to " + std::to_string(x.rows()) + " rows");
  }
  check_permutation(pi);
  FqMatrix out(x.field(), x.rows(), x.cols());
  for (std::size_t i = 0; i < pi.size(); ++i) out.set_block(pi[i], 0, x.block(i, 0, 1, x.cols()));
  return out;
}

Answer answer(const Query& query, const FqMatrix& x) {
  if (!(query.G.field() == x.field())) {
    throw Error(ErrorCode::ShapeError, "messages and query are over different fields");
  }
  if (query.G.cols() != x.rows() || query.pi.size() != x.rows()) {
    throw Error(ErrorCode::ShapeError, "query expects K=" + std::to_string(query.G.cols()) +
                                           " messages, store has " + std::to_string(x.rows()));
  }
  return Answer{query.G * permute_rows(x, query.pi)};
}

}  // namespace plt
