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

#include <algorithm>
#include <sstream>

#include "plt/audit.hpp"
#include "plt/bounds.hpp"
#include "plt/codes.hpp"
#include "plt/error.hpp"

namespace plt {
namespace {

using Rows = std::initializer_list<std::initializer_list<std::int64_t>>;

const PrimeField kF17(17);

FqMatrix mat(Rows rows) { return FqMatrix::from_rows(kF17, rows); }

std::vector<std::size_t> zero_based(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (std::size_t v : one_based) out.push_back(v - 1);
  return out;
}

std::vector<FieldElement> elems(std::initializer_list<std::uint64_t> values) {
  std::vector<FieldElement> out;
  for (std::uint64_t v : values) out.emplace_back(v);
  return out;
}

// The examples list the permuted message order: position p holds message
// order[p]. The query stores the inverse.
std::vector<std::size_t> pi_from_order(std::initializer_list<std::size_t> order) {
  const auto o = zero_based(order);
  std::vector<std::size_t> pi(o.size());
  for (std::size_t p = 0; p < o.size(); ++p) pi[o[p]] = p;
  return pi;
}

// Column order that turns the sorted support into the printed shuffled one.
std::vector<std::size_t> order_of(const std::vector<std::size_t>& sorted,
                                  const std::vector<std::size_t>& shuffled) {
  std::vector<std::size_t> order;
  for (std::size_t w : shuffled) {
    order.push_back(static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), w) - sorted.begin()));
  }
  return order;
}

FqMatrix block_diagonal(const std::vector<FqMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  FqMatrix g(kF17, rows, cols);
  rows = cols = 0;
  for (const auto& b : blocks) {
    g.set_block(rows, cols, b);
    rows += b.rows();
    cols += b.cols();
  }
  return g;
}

// Shared pieces of the printed data.
FqMatrix ex3_g3() {
  return mat({{3, 14, 11, 8, 4, 10, 8, 5, 5, 6},
              {12, 16, 3, 4, 6, 3, 1, 15, 8, 4},
              {14, 11, 7, 2, 9, 6, 15, 11, 6, 14},
              {5, 15, 5, 1, 5, 12, 4, 16, 13, 15},
              {3, 5, 6, 9, 16, 7, 9, 14, 14, 10}});
}
FqMatrix ex3_h() {
  return mat({{8, 1, 5, 9, 2, 6, 14, 11, 4, 13},
              {15, 6, 6, 13, 3, 12, 6, 16, 3, 3},
              {9, 2, 14, 15, 13, 7, 5, 14, 15, 2},
              {2, 12, 10, 16, 11, 14, 7, 8, 7, 7},
              {8, 4, 12, 8, 8, 11, 3, 7, 1, 16}});
}
FqMatrix ex3_lambda() {
  return mat({{8, 5, 9, 6, 14, 11, 13},
              {15, 6, 13, 12, 6, 16, 3},
              {9, 14, 15, 7, 5, 14, 2},
              {2, 10, 16, 14, 7, 8, 7},
              {8, 12, 8, 11, 3, 7, 16}});
}

ExampleFixture example1() {
  const auto w = zero_based({2, 4, 5, 7, 8, 10, 11, 18});
  Demand demand(w, mat({{2, 15, 3, 6, 1, 4, 11, 13}, {6, 9, 4, 3, 11, 15, 13, 8}}), 24);
  ClientSecret secret;
  secret.b = 1;
  secret.order = order_of(w, zero_based({5, 8, 11, 2, 4, 7, 10, 18}));
  secret.permuted_w = demand.reordered(secret.order).W();
  const FqMatrix g1 = mat({{1, 4, 7, 6, 3, 12, 4, 9}, {5, 7, 6, 9, 3, 15, 2, 1}});
  const FqMatrix g3 = mat({{9, 13, 2, 10, 7, 1, 15, 3}, {9, 11, 12, 3, 13, 13, 7, 10}});
  Query query{block_diagonal({g1, demand.reordered(secret.order).V(), g3}),
              pi_from_order({1, 22, 13, 19, 24, 17, 20, 12, 5, 8, 11, 2, 4, 7, 10, 18, 3, 15, 9,
                             21, 16, 14, 6, 23})};
  return ExampleFixture{1, derive_params(24, 8, 2, 17), std::move(demand), std::move(query),
                        std::move(secret)};
}

ExampleFixture example2() {
  const auto w = zero_based({2, 4, 5, 7, 8, 10, 11, 18, 23});
  Demand demand(w, mat({{2, 15, 3, 6, 1, 4, 11, 13, 9}, {6, 9, 4, 3, 11, 15, 13, 8, 1}}), 24);
  const ProtocolParams params = derive_params(24, 9, 2, 17);
  ClientSecret secret;
  secret.b = 1;
  secret.order = order_of(w, zero_based({10, 4, 8, 11, 7, 23, 18, 2, 5}));
  const Demand shuffled = demand.reordered(secret.order);
  secret.permuted_w = shuffled.W();
  secret.k_idx = {0};
  secret.l_idx = {2, 4};
  secret.c = elems({1, 13});

  const FqMatrix& vs = shuffled.V();
  FqMatrix c(kF17, 2, 15);
  c.set_block(0, 0, vs.block(0, 0, 2, 3));
  c.set_block(0, 3, mat({{1, 4, 7}, {5, 7, 6}}));
  c.set_block(0, 6, vs.block(0, 3, 2, 3));
  c.set_block(0, 9, mat({{6, 3, 12}, {9, 3, 15}}));
  c.set_block(0, 12, vs.block(0, 6, 2, 3));
  const auto x = elems({1, 5, 7});
  const auto y = elems({11, 16});
  secret.scaffold = AlignScaffold{c, cauchy(kF17, x, y), elems({3, 2, 1, 10, 4}), x, y};

  const FqMatrix g1 = mat({{3, 14, 11, 8, 4, 10, 5, 5, 6}, {12, 16, 3, 4, 6, 3, 7, 15, 4}});
  Query query{block_diagonal({g1, assemble_aligned_block(*secret.scaffold, params.S, params.L)}),
              pi_from_order({17, 22, 20, 14, 24, 21, 19, 15, 6, 10, 4, 8, 1, 13, 16, 11, 7, 23, 9,
                             3, 12, 18, 2, 5})};
  return ExampleFixture{2, params, std::move(demand), std::move(query), std::move(secret)};
}

ExampleFixture example3() {
  const auto w = zero_based({2, 4, 7, 10, 15, 18, 23});
  Demand demand(w, mat({{2, 15, 6, 4, 11, 13, 9}, {6, 9, 3, 15, 13, 8, 1}}), 24);
  ClientSecret secret;
  secret.b = 2;
  secret.order = order_of(w, zero_based({4, 10, 7, 23, 18, 2, 15}));
  secret.permuted_w = demand.reordered(secret.order).W();
  secret.h = zero_based({1, 3, 4, 6, 7, 8, 10});
  secret.trailing_generator = ex3_g3();
  const FqMatrix g1 = mat({{11, 5, 10, 1, 15, 2, 7}, {16, 10, 16, 6, 1, 1, 13}});
  const FqMatrix g2 = mat({{5, 8, 14, 7, 4, 3, 16}, {3, 5, 8, 1, 6, 2, 15}});
  Query query{block_diagonal({g1, g2, ex3_g3()}),
              pi_from_order({8, 14, 17, 22, 19, 16, 13, 3, 20, 24, 21, 1, 6, 12, 4, 5, 10, 7, 9,
                             23, 18, 2, 11, 15})};
  return ExampleFixture{3, derive_params(24, 7, 2, 17), std::move(demand), std::move(query),
                        std::move(secret)};
}

std::string show(const FqMatrix& m) {
  std::ostringstream out;
  out << m;
  return out.str();
}

class Checker {
 public:
  explicit Checker(ExampleReport& report) : report_(report) {}

  void expect(const std::string& name, bool pass, const std::string& detail = {}) {
    report_.checks.push_back(FixtureCheck{name, pass, detail});
  }
  void equal(const std::string& name, const FqMatrix& got, const FqMatrix& want) {
    expect(name, got == want, got == want ? show(got) : "got " + show(got) + ", expected " + show(want));
  }
  void equal(const std::string& name, const Rational& got, const Rational& want) {
    expect(name, got == want, "got " + to_fraction(got) + ", expected " + to_fraction(want));
  }
  // Runs fn and records a failing check instead of propagating its error.
  template <typename Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      expect(name, false, e.what());
    }
  }

 private:
  ExampleReport& report_;
};

FqMatrix random_messages(std::size_t K, std::size_t N, std::uint64_t seed) {
  Rng rng(seed);
  FqMatrix x(kF17, K, N);
  for (std::size_t r = 0; r < K; ++r) {
    for (std::size_t c = 0; c < N; ++c) x.at(r, c) = rng.element(kF17);
  }
  return x;
}

void common_checks(Checker& ck, const ExampleFixture& fx, const FqMatrix& x, std::size_t rows,
                   const Rational& rate, const Rational& jplt) {
  const ProtocolParams& p = fx.params;
  ck.expect("answer rows", p.answer_rows == rows && fx.query.G.rows() == rows,
            std::to_string(fx.query.G.rows()) + " x " + std::to_string(fx.query.G.cols()));
  ck.equal("achieved rate", achieved_rate(p), rate);
  ck.equal("joint-privacy rate", jplt_rate(p.K, p.D, p.L), jplt);
  ck.guarded("permutation", [&] {
    check_permutation(fx.query.pi);
    ck.expect("permutation", true);
  });
  const PrivacyReport privacy = audit_individual_privacy(fx.query, p);
  ck.expect("posterior D/K for every message", privacy.ok(),
            std::to_string(privacy.candidates) + " candidates, " +
                std::to_string(privacy.violations.size()) + " violations");
  ck.guarded("recovery", [&] {
    const FqMatrix z = recover(answer(fx.query, x), fx.secret, p, fx.demand);
    ck.equal("recovery", z, demand_value(fx.demand, x));
  });
}

ExampleReport check_example1(std::uint64_t seed) {
  ExampleReport report{1, {}};
  Checker ck(report);
  const ExampleFixture fx = example1();
  const ProtocolParams& p = fx.params;
  ck.expect("parameters", p.R == 0 && p.S == 8 && p.n == 2 && p.m == 1 && p.t == 0 &&
                              p.kind == ProtocolCase::kAlignS);
  ck.expect("G1 and G3 are MDS", is_mds(fx.query.G.block(0, 0, 2, 8)) && is_mds(fx.query.G.block(4, 16, 2, 8)));
  bool planted = true;
  for (std::size_t j = 0; j < p.D; ++j) planted = planted && fx.query.pi[fx.secret.permuted_w[j]] == 8 + j;
  ck.expect("support lands on positions 9..16", planted);
  const FqMatrix x = random_messages(p.K, 4, seed);
  const Answer a = answer(fx.query, x);
  ck.equal("Y2 = V X_W", a.Y.block(2, 0, 2, 4), demand_value(fx.demand, x));
  common_checks(ck, fx, x, 6, Rational(1, 3), Rational(2, 18));
  return report;
}

ExampleReport check_example2(std::uint64_t seed) {
  ExampleReport report{2, {}};
  Checker ck(report);
  const ExampleFixture fx = example2();
  const ProtocolParams& p = fx.params;
  ck.expect("parameters", p.R == 6 && p.S == 3 && p.n == 1 && p.m == 3 && p.t == 2 &&
                              p.kind == ProtocolCase::kAlignS);
  const AlignScaffold& sc = *fx.secret.scaffold;
  ck.equal("Cauchy matrix", cauchy(kF17, sc.cauchy_x, sc.cauchy_y), mat({{5, 9}, {14, 3}, {4, 15}}));
  ck.expect("inverse of 13 is 4", kF17.inv(FieldElement(13)) == FieldElement(4));
  ck.guarded("alignment solve", [&] {
    Rng rng(seed);
    const AlignmentSolution sol = solve_alignment(p.t, p.m, fx.secret.k_idx, fx.secret.l_idx, sc.omega, rng);
    ck.expect("c = (1, 13)", sol.c == elems({1, 13}));
    ck.expect("alpha1, alpha3, alpha5 = 3, 1, 4",
              sol.alpha[0] == FieldElement(3) && sol.alpha[2] == FieldElement(1) &&
                  sol.alpha[4] == FieldElement(4));
  });
  ck.expect("C is MDS", is_mds(sc.C));
  FqMatrix pattern(kF17, 3, 5);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) pattern.at(i, j) = kF17.mul(sc.alpha[j], sc.omega(i, j));
    pattern.at(i, 2 + i) = sc.alpha[2 + i];
  }
  ck.equal("G2 coefficient pattern", pattern, mat({{15, 1, 1, 0, 0}, {8, 6, 0, 10, 0}, {12, 13, 0, 0, 4}}));
  const FqMatrix trailing = fx.query.G.block(2, 9, 6, 15);
  const SubsetSweep sweep = alignment_feasibility_sweep(trailing, sc, p);
  ck.expect("all 10 alignment subsets feasible", sweep.ok() && sweep.subsets == 10,
            std::to_string(sweep.feasible) + "/" + std::to_string(sweep.subsets));
  ck.expect("11 candidate supports", candidate_supports(fx.query, p).size() == 11);
  const FqMatrix x = random_messages(p.K, 4, seed);
  common_checks(ck, fx, x, 8, Rational(1, 4), Rational(2, 17));
  return report;
}

ExampleReport check_example3(std::uint64_t seed) {
  ExampleReport report{3, {}};
  Checker ck(report);
  const ExampleFixture fx = example3();
  const ProtocolParams& p = fx.params;
  ck.expect("parameters", p.R == 3 && p.S == 1 && p.n == 2 && p.kind == ProtocolCase::kParityEmbed);
  const FqMatrix vs = fx.demand.reordered(fx.secret.order).V();
  const FqMatrix lambda = ex3_lambda();
  const FqMatrix h = ex3_h();
  const FqMatrix g3 = ex3_g3();
  ck.expect("G1 and G2 are MDS", is_mds(fx.query.G.block(0, 0, 2, 7)) && is_mds(fx.query.G.block(2, 7, 2, 7)));
  ck.expect("Lambda is a parity check of V", (vs * lambda.transpose()).is_zero() && rank(lambda) == 5);
  ck.expect("null space of V spans Lambda", same_row_space(right_null_space(vs), lambda));
  ck.equal("H restricted to h is Lambda", h.select_columns(fx.secret.h), lambda);
  ck.expect("H is MDS", is_mds(h));
  bool planted = true;
  for (std::size_t j = 0; j < p.D; ++j) planted = planted && fx.query.pi[fx.secret.permuted_w[j]] == 14 + fx.secret.h[j];
  ck.expect("support lands on positions 14 + h", planted);
  ck.expect("pi(4) = 15", fx.query.pi[3] == 14);

  ck.expect("printed G3 satisfies G3 H^T = 0", (g3 * h.transpose()).is_zero(), show(g3 * h.transpose()));
  ck.expect("printed G3 spans the code of H", same_row_space(generator_from_parity(h, 10), g3));

  const FqMatrix x = random_messages(p.K, 4, seed);
  const Answer a = answer(fx.query, x);
  const FqMatrix t = mat({{6, 4, 13, 1, 0}, {0, 6, 4, 13, 1}});
  ck.equal("T Y3 = V X_W", t * a.Y.block(4, 0, 5, 4), demand_value(fx.demand, x));

  // Same protocol step with the generator the parity-check matrix defines.
  ExampleFixture honest = example3();
  const FqMatrix g3_from_h = generator_from_parity(h, 10);
  honest.query.G.set_block(4, 14, g3_from_h);
  honest.secret.trailing_generator = g3_from_h;
  ck.guarded("recovery via the code of H", [&] {
    const FqMatrix z = recover(answer(honest.query, x), honest.secret, p, honest.demand);
    ck.equal("recovery via the code of H", z, demand_value(fx.demand, x));
  });
  const SubsetSweep sweep = shortening_feasibility_sweep(g3_from_h, p);
  ck.expect("all 120 shortened supports feasible", sweep.ok() && sweep.subsets == 120,
            std::to_string(sweep.feasible) + "/" + std::to_string(sweep.subsets));
  common_checks(ck, fx, x, 9, Rational(2, 9), Rational(2, 19));
  return report;
}

}  // namespace

ExampleFixture example_fixture(int which) {
  switch (which) {
    case 1:
      return example1();
    case 2:
      return example2();
    case 3:
      return example3();
    default:
      throw Error(ErrorCode::IndexError, "examples are numbered 1 to 3");
  }
}

bool ExampleReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

ExampleReport run_example(int which, std::uint64_t seed) {
  switch (which) {
    case 1:
      return check_example1(seed);
    case 2:
      return check_example2(seed);
    case 3:
      return check_example3(seed);
    default:
      throw Error(ErrorCode::IndexError, "examples are numbered 1 to 3");
  }
}

std::string to_text(const ExampleReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << "example " << report.which << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace plt
