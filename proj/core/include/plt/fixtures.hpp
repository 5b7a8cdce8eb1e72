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

// The three worked GF(17) examples: printed matrices as fixtures, and the
// reproduction checks behind `plt example`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plt/params.hpp"
#include "plt/protocol.hpp"
#include "plt/query.hpp"

namespace plt {

struct ExampleFixture {
  int which = 0;
  ProtocolParams params;
  Demand demand;         // sorted support with the printed V
  Query query;           // printed blocks and printed permutation
  ClientSecret secret;   // printed recovery data
};

// which in {1, 2, 3}; throws IndexError otherwise.
ExampleFixture example_fixture(int which);

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleReport {
  int which = 0;
  std::vector<FixtureCheck> checks;

  bool passed() const;
};

// Recomputes every printed derived quantity and runs answer + recover on a
// seeded random message matrix.
ExampleReport run_example(int which, std::uint64_t seed);

std::string to_text(const ExampleReport& report);

}  // namespace plt
