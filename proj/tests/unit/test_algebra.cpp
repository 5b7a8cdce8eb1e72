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

#include "plt/field.hpp"
#include "plt/matrix.hpp"

#include "plt/combinatorics.hpp"
#include "plt/rational.hpp"
#include "support.hpp"

namespace plt {
namespace {

using testing::leibniz_det;
using testing::naive_product;
using testing::random_matrix;

TEST(Field, RejectsNonPrimeAndOversizedModuli) {
  EXPECT_PLT_ERROR(PrimeField(1), ErrorCode::NotPrime);
  EXPECT_PLT_ERROR(PrimeField(15), ErrorCode::NotPrime);
  EXPECT_PLT_ERROR(PrimeField(4294967311ULL), ErrorCode::NotPrime);
  EXPECT_NO_THROW(PrimeField(PrimeField::kMaxModulus));
}

TEST(Field, InverseMatchesExhaustiveSearch) {
  for (std::uint64_t q : {2ULL, 3ULL, 17ULL, 19ULL, 101ULL}) {
    const PrimeField f(q);
    for (std::uint64_t a = 1; a < q; ++a) {
      std::uint64_t expected = 0;
      for (std::uint64_t b = 1; b < q; ++b) {
        if (a * b % q == 1) expected = b;
      }
      EXPECT_EQ(f.inv(FieldElement(a)).value(), expected) << "q=" << q << " a=" << a;
    }
  }
}

TEST(Field, InverseOfZeroThrows) {
  EXPECT_PLT_ERROR(PrimeField(17).inv(FieldElement(0)), ErrorCode::InversionOfZero);
}

TEST(Field, LargestModulusArithmeticAgreesWithWideIntegers) {
  const PrimeField f(PrimeField::kMaxModulus);
  const std::uint64_t q = f.modulus();
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const FieldElement a = rng.element(f);
    const FieldElement b = rng.nonzero(f);
    const auto wide = static_cast<detail::uint128>(a.value()) * b.value() % q;
    EXPECT_EQ(f.mul(a, b).value(), static_cast<std::uint64_t>(wide));
    EXPECT_EQ(f.add(a, b).value(), (a.value() + b.value()) % q);
    EXPECT_EQ(f.mul(b, f.inv(b)), f.one());
    EXPECT_EQ(f.add(f.sub(a, b), b), a);
  }
}

TEST(Field, ElementReducesNegativeValues) {
  const PrimeField f(17);
  EXPECT_EQ(f.element(-1).value(), 16u);
  EXPECT_EQ(f.element(-35).value(), 16u);
  EXPECT_EQ(f.element(34).value(), 0u);
}

TEST(Field, FermatAgreesWithInverse) {
  const PrimeField f(19);
  for (std::uint64_t a = 1; a < 19; ++a) {
    EXPECT_EQ(f.pow(FieldElement(a), 17), f.inv(FieldElement(a)));
  }
}

TEST(Matrix, ProductMatchesNaiveTripleLoop) {
  const PrimeField f(PrimeField::kMaxModulus);
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const FqMatrix a = random_matrix(f, 1 + rng.below(6), 7, rng);
    const FqMatrix b = random_matrix(f, 7, 1 + rng.below(6), rng);
    // naive_product overflows for this modulus, so compare with a wide oracle.
    FqMatrix want(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        detail::uint128 s = 0;
        for (std::size_t k = 0; k < 7; ++k) s += static_cast<detail::uint128>(a(i, k).value()) * b(k, j).value();
        want.at(i, j) = FieldElement(static_cast<std::uint64_t>(s % f.modulus()));
      }
    }
    EXPECT_EQ(a * b, want);
  }
  const PrimeField small(17);
  const FqMatrix a = random_matrix(small, 4, 5, rng);
  const FqMatrix b = random_matrix(small, 5, 3, rng);
  EXPECT_EQ(a * b, naive_product(a, b));
}

TEST(Matrix, ShapeMismatchesThrow) {
  const PrimeField f(17);
  EXPECT_PLT_ERROR(FqMatrix(f, 2, 3) * FqMatrix(f, 2, 3), ErrorCode::ShapeError);
  EXPECT_PLT_ERROR(FqMatrix(f, 2, 3) + FqMatrix(f, 3, 2), ErrorCode::ShapeError);
  EXPECT_PLT_ERROR(FqMatrix(f, 2, 3) * FqMatrix(PrimeField(19), 3, 2), ErrorCode::ShapeError);
  EXPECT_PLT_ERROR(FqMatrix(f, 2, 2).block(1, 1, 2, 1), ErrorCode::IndexError);
  EXPECT_PLT_ERROR(FqMatrix::from_rows(f, {{1, 2}, {3}}), ErrorCode::ShapeError);
}

TEST(Matrix, FullRankExactlyWhenLeibnizDeterminantIsNonzero) {
  const PrimeField f(5);
  Rng rng(2);
  int singular = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const FqMatrix a = random_matrix(f, n, n, rng);
    const bool invertible = leibniz_det(a) != 0;
    singular += !invertible;
    EXPECT_EQ(rank(a) == n, invertible);
    const auto inv = inverse(a);
    ASSERT_EQ(inv.has_value(), invertible);
    if (inv) {
      EXPECT_EQ(*inv * a, FqMatrix::identity(f, n));
      EXPECT_EQ(a * *inv, FqMatrix::identity(f, n));
    }
  }
  EXPECT_GT(singular, 0);
}

TEST(Matrix, RrefIsReducedAndSpansTheSameRows) {
  const PrimeField f(7);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const FqMatrix a = random_matrix(f, 1 + rng.below(5), 1 + rng.below(7), rng);
    const EchelonForm e = rref(a);
    ASSERT_EQ(e.reduced.rows(), e.pivots.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (r > 0) {
        EXPECT_LT(e.pivots[r - 1], e.pivots[r]);
      }
      for (std::size_t s = 0; s < e.reduced.rows(); ++s) {
        EXPECT_EQ(e.reduced(s, e.pivots[r]).value(), r == s ? 1u : 0u);
      }
    }
    EXPECT_TRUE(same_row_space(e.reduced, a) || e.pivots.empty());
  }
}

TEST(Matrix, RightNullSpaceHasComplementaryDimension) {
  const PrimeField f(11);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const FqMatrix a = random_matrix(f, 1 + rng.below(4), 2 + rng.below(6), rng);
    const FqMatrix ns = right_null_space(a);
    EXPECT_EQ(ns.rows(), a.cols() - rank(a));
    EXPECT_EQ(rank(ns), ns.rows());
    if (!ns.empty()) {
      EXPECT_TRUE((a * ns.transpose()).is_zero());
    }
    EXPECT_EQ(rref(ns).reduced, ns);
  }
}

TEST(Matrix, SolveLeftFindsSolutionsAndReportsInconsistency) {
  const PrimeField f(13);
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const FqMatrix a = random_matrix(f, 3, 6, rng);
    const FqMatrix x = random_matrix(f, 2, 3, rng);
    const auto solved = solve_left(a, x * a);
    ASSERT_TRUE(solved.has_value());
    EXPECT_EQ(*solved * a, x * a);
  }
  const FqMatrix a = FqMatrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_FALSE(solve_left(a, FqMatrix::from_rows(f, {{0, 0, 1}})).has_value());
}

TEST(Combinatorics, BinomialMatchesPascalTriangle) {
  std::vector<std::vector<std::uint64_t>> pascal(68);
  for (std::size_t n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]) << n << " " << k;
  }
  EXPECT_EQ(binomial(3, 5), 0u);
}

TEST(Combinatorics, CombinationsAreLexicographicAndComplete) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_combination(6, 3, [&](const std::vector<std::size_t>& c) {
    seen.push_back(c);
    return true;
  });
  EXPECT_EQ(seen.size(), 20u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<std::size_t>{3, 4, 5}));
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(9);
  const auto s = c.subset(10, 4);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_PLT_ERROR(c.distinct_elements(PrimeField(5), 6), ErrorCode::FieldTooSmall);
}

TEST(Rational, FormatsFractionsAndDecimals) {
  EXPECT_EQ(to_fraction(Rational(2, 18)), "1/9");
  EXPECT_EQ(to_fraction(Rational(3, 1)), "3");
  EXPECT_EQ(to_decimal(Rational(1, 6)), "0.166667");
  EXPECT_EQ(to_decimal(Rational(2, 17)), "0.117647");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 2), "-0.33");
  EXPECT_EQ(parse_rational("2/6"), Rational(1, 3));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_PLT_ERROR(parse_rational("1/0"), ErrorCode::ParseError);
  EXPECT_PLT_ERROR(parse_rational("abc"), ErrorCode::ParseError);
}

}  // namespace
}  // namespace plt
