// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "oracles.h"
#include "resonance/arrangement.h"
#include "resonance/errors.h"
#include "resonance/nbc.h"

namespace resonance {
namespace {

std::vector<mpz_class> Z(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

// Points of F_q^n with every subset sum nonzero, by direct enumeration.
mpz_class BrutePointCount(int n, uint64_t q) {
  uint64_t total = 1;
  for (int j = 0; j < n; ++j) total *= q;
  unsigned long good = 0;
  std::vector<uint64_t> x(n);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int j = 0; j < n; ++j) {
      x[j] = c % q;
      c /= q;
    }
    bool off = true;
    for (uint64_t s = 1; s < (uint64_t{1} << n) && off; ++s) {
      uint64_t sum = 0;
      for (int j = 0; j < n; ++j) {
        if ((s >> j) & 1) sum += x[j];
      }
      off = sum % q != 0;
    }
    good += off;
  }
  return good;
}

TEST(ArrangementTest, HyperplanesInBinaryOrder) {
  EXPECT_EQ(Arrangement(1).ToVector(), std::vector<SubsetMask>{Chi({1}, 1)});
  EXPECT_EQ(Arrangement(2).ToVector(),
            (std::vector<SubsetMask>{Chi({1}, 2), Chi({2}, 2), Chi({1, 2}, 2)}));
  const auto a3 = Arrangement(3).ToVector();
  ASSERT_EQ(a3.size(), 7u);
  EXPECT_EQ(a3.back(), Chi({1, 2, 3}, 3));
  EXPECT_THROW(Arrangement(0), ValidationError);
}

TEST(CharPolyTest, RejectsMalformedPolynomials) {
  EXPECT_THROW(CharPoly(Z({1, 1})), ValidationError);   // t + 1
  EXPECT_THROW(CharPoly(Z({-1, 2})), ValidationError);  // not monic
  EXPECT_EQ(CharPoly(Z({-9, 15, -7, 1})).ToString(), "t^3 - 7t^2 + 15t - 9");
  EXPECT_EQ(CharPoly::FromBetti(Z({1, 7, 15, 9})), CharPoly(Z({-9, 15, -7, 1})));
}

TEST(WhitneyTest, Examples) {
  EXPECT_EQ(WhitneyCharPoly(1).ToString(), "t - 1");
  EXPECT_EQ(WhitneyCharPoly(3).ToString(), "t^3 - 7t^2 + 15t - 9");
  EXPECT_EQ(WhitneyCharPoly(4).BettiNumbers(), Z({1, 15, 80, 170, 104}));
  EXPECT_THROW(WhitneyCharPoly(5), GuardError);
}

TEST(WhitneyTest, MatchesSubsetSumOracle) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(WhitneyCharPoly(n).BettiNumbers(), oracle::WhitneyBetti(n))
        << "n = " << n;
  }
}

TEST(FiniteFieldTest, PointCountsMatchEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    for (uint64_t q : {3u, 5u, 7u, 11u}) {
      EXPECT_EQ(CountPointsOffArrangement(n, q), BrutePointCount(n, q))
          << "n = " << n << ", q = " << q;
    }
  }
  // (q - 1)(q - 2) for n = 2.
  EXPECT_EQ(BrutePointCount(2, 13), 11 * 12);
}

TEST(FiniteFieldTest, Examples) {
  const std::vector<uint64_t> p2 = {3, 5, 7};
  EXPECT_EQ(FiniteFieldCharPoly(2, p2).ToString(), "t^2 - 3t + 2");
  const std::vector<uint64_t> p3 = {5, 7, 11, 13};
  EXPECT_EQ(FiniteFieldCharPoly(3, p3).ToString(), "t^3 - 7t^2 + 15t - 9");
  // b_5 is the remainder of R_5 = 11292: 11292 - (1 + 31 + 375 + 2130 + 5270).
  EXPECT_EQ(FiniteFieldCharPoly(5).BettiNumbers(),
            Z({1, 31, 375, 2130, 5270, 3485}));
}

TEST(FiniteFieldTest, RejectsInadmissiblePrimes) {
  const std::vector<uint64_t> too_few = {5, 7, 11};
  EXPECT_THROW(FiniteFieldCharPoly(3, too_few), ValidationError);
  const std::vector<uint64_t> composite = {5, 7, 9, 11};
  EXPECT_THROW(FiniteFieldCharPoly(3, composite), ValidationError);
  // A 0/1 minor of size 3 can be 2, so q = 2 is not admissible for n = 3.
  const std::vector<uint64_t> small = {2, 5, 7, 11};
  EXPECT_THROW(FiniteFieldCharPoly(3, small), ValidationError);
  const std::vector<uint64_t> repeated = {5, 5, 7, 11};
  EXPECT_THROW(FiniteFieldCharPoly(3, repeated), ValidationError);
  EXPECT_THROW(FiniteFieldCharPoly(7), GuardError);
}

TEST(FiniteFieldTest, IndependentOfPrimeChoice) {
  const std::vector<uint64_t> a4 = {5, 7, 11, 13, 17};
  const std::vector<uint64_t> b4 = {19, 23, 29, 31, 37, 41};
  EXPECT_EQ(FiniteFieldCharPoly(4, a4), FiniteFieldCharPoly(4, b4));
  const std::vector<uint64_t> a5 = {7, 11, 13, 17, 19, 23};
  const std::vector<uint64_t> b5 = {29, 31, 37, 41, 43, 47};
  EXPECT_EQ(FiniteFieldCharPoly(5, a5), FiniteFieldCharPoly(5, b5));
}

TEST(MaxDeterminantTest, SmallValues) {
  // Largest determinants of 0/1 matrices of order 1..6.
  const uint64_t expected[] = {1, 1, 2, 3, 5, 9};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(MaxZeroOneDeterminant(n), expected[n - 1]);
}

TEST(ThreeWayTest, WhitneyFiniteFieldNbcAgree) {
  for (int n = 1; n <= 4; ++n) {
    const CharPoly w = WhitneyCharPoly(n);
    EXPECT_EQ(FiniteFieldCharPoly(n), w) << "n = " << n;
    EXPECT_EQ(CharPolyViaNbc(n), w) << "n = " << n;
  }
}

TEST(CharPolyTest, SignsAlternateAndFirstBettiIsSize) {
  for (int n = 1; n <= 6; ++n) {
    const CharPoly p = CharPolyViaNbc(n);
    ASSERT_EQ(p.degree(), n);
    EXPECT_EQ(p.Betti(0), 1);
    EXPECT_EQ(p.Betti(1), (mpz_class(1) << n) - 1);
    for (int d = 0; d <= n; ++d) {
      const mpz_class& c = p.coeffs()[d];
      EXPECT_GT(c * ((n - d) % 2 == 0 ? 1 : -1), 0) << "n = " << n;
    }
  }
}

TEST(RegionCountTest, ExamplesAndKnownValues) {
  EXPECT_EQ(RegionCount(CharPoly(Z({-9, 15, -7, 1}))), 32);
  EXPECT_EQ(RegionCount(CharPoly(Z({-1, 1}))), 2);
  const long known[] = {2, 6, 32, 370, 11292, 1066044};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(RegionCount(CharPolyViaNbc(n)), known[n - 1]) << "n = " << n;
  }
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(RegionCount(FiniteFieldCharPoly(n)), known[n - 1]) << "n = " << n;
  }
}

TEST(ChambersTest, BruteForceMatchesZaslavsky) {
  const long known[] = {2, 6, 32, 370};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(EnumerateChambersBruteforce(n), known[n - 1]);
    EXPECT_EQ(EnumerateChambersBruteforce(n), RegionCount(WhitneyCharPoly(n)));
  }
  EXPECT_THROW(EnumerateChambersBruteforce(6), GuardError);
}

TEST(IsPrimeTest, Small) {
  std::vector<uint64_t> primes;
  for (uint64_t q = 0; q < 40; ++q) {
    if (IsPrime(q)) primes.push_back(q);
  }
  EXPECT_EQ(primes, (std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                           31, 37}));
}

}  // namespace
}  // namespace resonance
