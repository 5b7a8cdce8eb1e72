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

// Demand files: a first line "W: i1,...,iD" with ascending 1-based indices,
// then L lines of D space-separated coefficients.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "plt/protocol.hpp"

namespace plt {

// Throws ParseError for malformed text and InvalidDemand for a bad support
// or a coefficient matrix that is not MDS.
Demand parse_demand(std::string_view text, const PrimeField& field, std::size_t K);
Demand read_demand_file(const std::string& path, const PrimeField& field, std::size_t K);

std::string format_demand(const Demand& demand);

}  // namespace plt
