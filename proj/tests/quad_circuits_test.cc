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

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "oracles.h"
#include "resonance/errors.h"
#include "resonance/nbc.h"
#include "resonance/quad_circuits.h"
#include "resonance/stirling.h"

namespace resonance {
namespace {

std::array<SubsetMask, 4> Family(const oracle::Family& f, int n) {
  return {SubsetMask(f[0], n), SubsetMask(f[1], n), SubsetMask(f[2], n),
          SubsetMask(f[3], n)};
}

oracle::Family Key(const std::array<SubsetMask, 4>& a) {
  oracle::Family f = {a[0].bits(), a[1].bits(), a[2].bits(), a[3].bits()};
  std::sort(f.begin(), f.end());
  return f;
}

std::array<uint64_t, 3> WithoutMax(const oracle::Family& f) {
  return {f[0], f[1], f[2]};
}

// Every side-midpoint tuple on [n]: each element goes to S_1..S_4, M or
// nowhere.
std::vector<SideMidpointTuple> AllTuples(int n) {
  std::vector<SideMidpointTuple> out;
  std::vector<int> slot(n, 0);
  for (;;) {
    SideMidpointTuple t;
    t.n = n;
    for (int e = 0; e < n; ++e) {
      if (slot[e] >= 1 && slot[e] <= 4) t.sides[slot[e] - 1] |= uint64_t{1} << e;
      if (slot[e] == 5) t.midpoint |= uint64_t{1} << e;
    }
    if (t.Violation().empty()) out.push_back(t);
    int e = 0;
    while (e < n && slot[e] == 5) slot[e++] = 0;
    if (e == n) break;
    ++slot[e];
  }
  return out;
}

TEST(TriplesTest, MatchBruteForce) {
  // Three subsets of [2] cannot pairwise meet: {1} and {2} are disjoint.
  // Both the closed form and the Stirling expansion give 0 at n = 2.
  EXPECT_EQ(oracle::IntersectingTriples(2), 0);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(CountIntersectingTriples(n), oracle::IntersectingTriples(n))
        << "n = " << n;
  }
  EXPECT_EQ(CountIntersectingTriples(1), 0);
  EXPECT_EQ(CountIntersectingTriples(3), 13);
}

TEST(ClassifyCircuitTest, Examples) {
  const int n = 4;
  EXPECT_EQ(ClassifyRelevant4Circuit({Chi({1, 2}, n), Chi({1, 3}, n),
                                      Chi({2, 3}, n), Chi({1, 2, 3}, n)})
                .type,
            CircuitType::kTypeI);
  EXPECT_EQ(ClassifyRelevant4Circuit({Chi({1, 2}, n), Chi({1, 3}, n),
                                      Chi({1}, n), Chi({2, 3}, n)})
                .type,
            CircuitType::kTypeII);
  EXPECT_EQ(ClassifyRelevant4Circuit({Chi({1, 2}, n), Chi({1, 3}, n),
                                      Chi({1}, n), Chi({1, 2, 3}, n)})
                .type,
            CircuitType::kTypeIII);
  const CircuitClassification iv = ClassifyRelevant4Circuit(
      {Chi({2, 4}, n), Chi({1, 3, 4}, n), Chi({1, 4}, n), Chi({2, 3, 4}, n)});
  EXPECT_EQ(iv.type, CircuitType::kTypeIV);
  EXPECT_EQ(iv.x, Chi({1}, n).bits());
  // Not a circuit, and a circuit whose small sets do not all meet.
  EXPECT_EQ(ClassifyRelevant4Circuit({Chi({1}, n), Chi({2}, n), Chi({3}, n),
                                      Chi({4}, n)})
                .type,
            CircuitType::kNotRelevantCircuit);
  EXPECT_EQ(ClassifyRelevant4Circuit({Chi({1}, n), Chi({2}, n), Chi({1, 2}, n),
                                      Chi({3}, n)})
                .type,
            CircuitType::kNotRelevantCircuit);
  EXPECT_THROW(ClassifyRelevant4Circuit({Chi({1}, n), Chi({1}, n), Chi({2}, n),
                                         Chi({3}, n)}),
               ValidationError);
}

TEST(ClassifyCircuitTest, RelevantIffOneOfFourTypes) {
  for (int n = 2; n <= 5; ++n) {
    const oracle::FourCircuitCensus census = oracle::FourCircuits(n);
    const uint64_t top = (uint64_t{1} << n) - 1;
    long relevant = 0;
    for (uint64_t a = 1; a <= top; ++a) {
      for (uint64_t b = a + 1; b <= top; ++b) {
        for (uint64_t c = b + 1; c <= top; ++c) {
          for (uint64_t d = c + 1; d <= top; ++d) {
            const oracle::Family f = {a, b, c, d};
            const CircuitClassification got =
                ClassifyRelevant4Circuit(Family(f, n));
            const bool is_relevant = census.relevant.count(f) > 0;
            ASSERT_EQ(got.type != CircuitType::kNotRelevantCircuit, is_relevant);
            relevant += is_relevant;
            if (got.type == CircuitType::kTypeI) {
              ASSERT_TRUE(census.tetrahedra.count(f));
            }
          }
        }
      }
    }
    EXPECT_EQ(relevant, static_cast<long>(census.relevant.size()));
  }
}

TEST(TetrahedraTest, MatchEnumeration) {
  EXPECT_EQ(CountTetrahedronCircuits(2), 0);
  EXPECT_EQ(CountTetrahedronCircuits(3), 1);
  EXPECT_EQ(CountTetrahedronCircuits(5), 65);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(CountTetrahedronCircuits(n),
              mpz_class(static_cast<unsigned long>(
                  oracle::FourCircuits(n).tetrahedra.size())))
        << "n = " << n;
  }
}

TEST(RectanglesTest, MatchEnumeration) {
  EXPECT_EQ(CountRectangleCircuits(2), 0);
  EXPECT_EQ(CountRectangleCircuits(3), 3);
  EXPECT_EQ(CountRectangleCircuits(4), 42);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(CountRectangleCircuits(n),
              mpz_class(static_cast<unsigned long>(
                  oracle::FourCircuits(n).rectangles.size())))
        << "n = " << n;
  }
}

TEST(SideMidpointTest, Examples) {
  SideMidpointTuple t;
  t.n = 3;
  t.midpoint = Chi({1}, 3).bits();
  t.sides = {Chi({2}, 3).bits(), Chi({3}, 3).bits(), 0, 0};
  const auto a = RectangleFromSides(t);
  EXPECT_EQ(a, (std::array<SubsetMask, 4>{Chi({1, 2}, 3), Chi({1, 2, 3}, 3),
                                          Chi({1, 3}, 3), Chi({1}, 3)}));
  EXPECT_EQ(SidesFromRectangle(a), t);

  SideMidpointTuple empty_sides;
  empty_sides.n = 3;
  empty_sides.midpoint = 1;
  EXPECT_FALSE(empty_sides.Violation().empty());
  EXPECT_THROW(RectangleFromSides(empty_sides), ValidationError);

  // The type IV family above in cyclic order: {2,4}, {1,4}, {1,3,4}, {2,3,4}.
  const SideMidpointTuple iv = SidesFromRectangle(
      {Chi({2, 4}, 4), Chi({1, 4}, 4), Chi({1, 3, 4}, 4), Chi({2, 3, 4}, 4)});
  EXPECT_EQ(iv.midpoint, Chi({4}, 4).bits());

  EXPECT_THROW(SidesFromRectangle({Chi({1, 2}, 3), Chi({1}, 3), Chi({1, 2}, 3),
                                   Chi({1, 3}, 3)}),
               ValidationError);
}

TEST(SideMidpointTest, BijectionExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Family> rectangles;
    for (const SideMidpointTuple& t : AllTuples(n)) {
      const auto a = RectangleFromSides(t);
      ASSERT_EQ(SidesFromRectangle(a), t);
      // Opposite vertices have the same sum.
      for (int e = 0; e < n; ++e) {
        ASSERT_EQ(a[0].Contains(e + 1) + a[2].Contains(e + 1),
                  a[1].Contains(e + 1) + a[3].Contains(e + 1));
      }
      const CircuitType type = ClassifyRelevant4Circuit(a).type;
      ASSERT_TRUE(type == CircuitType::kTypeIII || type == CircuitType::kTypeIV);
      rectangles.insert(Key(a));
    }
    EXPECT_EQ(rectangles, oracle::FourCircuits(n).rectangles) << "n = " << n;
    // Each rectangle has 8 cyclic orders, and each gives one tuple.
    EXPECT_EQ(AllTuples(n).size(), 8 * rectangles.size());
  }
}

TEST(BrokenTriplesTest, DisjointUnionOfTetrahedraAndRectangles) {
  for (int n = 1; n <= 4; ++n) {
    const oracle::FourCircuitCensus census = oracle::FourCircuits(n);
    std::set<std::array<uint64_t, 3>> from_tetra, from_rect;
    for (const oracle::Family& f : census.tetrahedra) from_tetra.insert(WithoutMax(f));
    for (const oracle::Family& f : census.rectangles) from_rect.insert(WithoutMax(f));
    // No broken triple arises twice.
    EXPECT_EQ(from_tetra.size(), census.tetrahedra.size());
    EXPECT_EQ(from_rect.size(), census.rectangles.size());
    std::set<std::array<uint64_t, 3>> both;
    std::set_intersection(from_tetra.begin(), from_tetra.end(),
                          from_rect.begin(), from_rect.end(),
                          std::inserter(both, both.begin()));
    EXPECT_TRUE(both.empty());
    std::set<std::array<uint64_t, 3>> all = from_tetra;
    all.insert(from_rect.begin(), from_rect.end());
    EXPECT_EQ(all, oracle::BrokenTriples(n)) << "n = " << n;

    // The library's IsNbc sees the same broken triples.
    std::set<std::array<uint64_t, 3>> library;
    const uint64_t top = (uint64_t{1} << n) - 1;
    for (uint64_t a = 1; a <= top; ++a) {
      for (uint64_t b = a + 1; b <= top; ++b) {
        for (uint64_t c = b + 1; c <= top; ++c) {
          const SubsetMask x(a, n), y(b, n), z(c, n);
          if (IsNbc(std::vector<SubsetMask>{x, y}) &&
              IsNbc(std::vector<SubsetMask>{x, z}) &&
              IsNbc(std::vector<SubsetMask>{y, z}) &&
              !IsNbc(std::vector<SubsetMask>{x, y, z})) {
            library.insert({a, b, c});
          }
        }
      }
    }
    EXPECT_EQ(library, all);
  }
}

TEST(B3ViaCircuitsTest, MatchesClosedFormAndNbc) {
  EXPECT_EQ(B3ViaCircuits(3), 9);
  EXPECT_EQ(B3ViaCircuits(4), 170);
  EXPECT_EQ(B3ViaCircuits(6), 22435);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(B3ViaCircuits(n), B3Closed(n));
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(B3ViaCircuits(n), BettiViaNbc(n, 3)[3]);
}

}  // namespace
}  // namespace resonance
