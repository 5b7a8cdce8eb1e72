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

#include "plt/fixtures.hpp"

#include "plt/audit.hpp"
#include "plt/codes.hpp"
#include "support.hpp"

namespace plt {
namespace {

const FixtureCheck* find_check(const ExampleReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(Fixtures, FirstExamplePasses) {
  const ExampleReport r = run_example(1, 0);
  EXPECT_TRUE(r.passed()) << to_text(r);
}

TEST(Fixtures, SecondExamplePasses) {
  const ExampleReport r = run_example(2, 0);
  EXPECT_TRUE(r.passed()) << to_text(r);
  const ExampleFixture fx = example_fixture(2);
  EXPECT_TRUE(is_mds(fx.secret.scaffold->C));
  // Posterior for a block message and a trailing message.
  const auto cands = candidate_supports(fx.query, fx.params);
  EXPECT_EQ(posterior(16, cands), Rational(9, 24));
  EXPECT_EQ(posterior(3, cands), Rational(9, 24));
}

TEST(Fixtures, ThirdExampleHonestChecksPass) {
  const ExampleReport r = run_example(3, 0);
  for (const char* name : {"parameters", "G1 and G2 are MDS", "Lambda is a parity check of V",
                           "null space of V spans Lambda", "H restricted to h is Lambda", "H is MDS",
                           "support lands on positions 14 + h", "pi(4) = 15",
                           "recovery via the code of H", "all 120 shortened supports feasible",
                           "achieved rate", "joint-privacy rate", "posterior D/K for every message"}) {
    const FixtureCheck* c = find_check(r, name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_TRUE(c->pass) << name << ": " << c->detail;
  }
}

TEST(Fixtures, PrintedPermutationsAreBijections) {
  for (int which = 1; which <= 3; ++which) {
    EXPECT_NO_THROW(check_permutation(example_fixture(which).query.pi));
  }
  EXPECT_EQ(example_fixture(1).query.pi[4], 8u);   // pi(5) = 9
  EXPECT_EQ(example_fixture(1).query.pi[17], 15u); // pi(18) = 16
  EXPECT_PLT_ERROR(example_fixture(4), ErrorCode::IndexError);
}

TEST(Fixtures, ReportIsStableForAGivenSeed) {
  EXPECT_EQ(to_text(run_example(2, 9)), to_text(run_example(2, 9)));
}

}  // namespace
}  // namespace plt
