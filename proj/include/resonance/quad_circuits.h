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

#ifndef RESONANCE_QUAD_CIRCUITS_H_
#define RESONANCE_QUAD_CIRCUITS_H_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

#include "resonance/subset_mask.h"

namespace resonance {

// Census of the 4-element circuits of A_n that matter for b_3.

// Families {A, B, C} of distinct subsets of [n] that pairwise intersect:
// (8^n - 3*6^n + 3*5^n - 4*4^n + 3*3^n + 2*2^n - 2) / 6
//   = 13 S(n+1,4) + 92 S(n+1,5) + 360 S(n+1,6) + 840 S(n+1,7)
//     + 840 S(n+1,8).
// Both are evaluated and compared (InvariantError on mismatch).
mpz_class CountIntersectingTriples(int n);

enum class CircuitType {
  kTypeI,    // {A1, A3, A1 xor A3, A1 ∪ A3}
  kTypeII,   // {A1, A3, A1 ∩ A3, A1 xor A3}
  kTypeIII,  // {A1, A3, A1 ∩ A3, A1 ∪ A3}
  kTypeIV,   // {A1, A3, (A1 ∩ A3) ∪ X, (A1 ∪ A3) \ X}
  kNotRelevantCircuit,
};

std::string ToString(CircuitType t);

struct CircuitClassification {
  CircuitType type = CircuitType::kNotRelevantCircuit;
  // Witnesses as bitmasks over [n]; a1 < a3 in the binary order. x is
  // nonzero only for type IV.
  uint64_t a1 = 0;
  uint64_t a3 = 0;
  uint64_t x = 0;
};

// The family is sorted; its maximum plays the role of the last set in each
// pattern. A family is a relevant circuit when it is a circuit and its
// three smaller sets pairwise intersect. For type IV the witness X must be
// nonempty and inside A1 xor A3. A relevant circuit that fits no pattern
// raises InvariantError. Throws ValidationError unless the four masks are
// distinct and of one dimension.
CircuitClassification ClassifyRelevant4Circuit(
    const std::array<SubsetMask, 4>& family);

// S(n+1, 4). For n <= 5 the circuits are also built from the partitions of
// [n+1] into four blocks and checked one by one.
mpz_class CountTetrahedronCircuits(int n);

// (S_1, S_2, S_3, S_4, M) as bitmasks over [n]; sides may be empty.
struct SideMidpointTuple {
  int n = 0;
  std::array<uint64_t, 4> sides{};
  uint64_t midpoint = 0;

  // Empty string for a valid tuple: sides pairwise disjoint, midpoint
  // nonempty and disjoint from the sides, and no two opposite sides both
  // empty. Otherwise the first violated condition.
  std::string Violation() const;

  friend bool operator==(const SideMidpointTuple&,
                         const SideMidpointTuple&) = default;
};

// A_i = M ∪ S_{i-1} ∪ S_i, indices cyclic. Throws ValidationError when the
// tuple is not valid.
std::array<SubsetMask, 4> RectangleFromSides(const SideMidpointTuple& t);

// M = ∩ A_i, S_i = (A_i ∩ A_{i+1}) \ M. `a` is in cyclic order, so the
// relation pairs a[0], a[2] against a[1], a[3]. Throws ValidationError
// unless the sets are distinct, pairwise intersecting and satisfy
// chi(A_1) + chi(A_3) = chi(A_2) + chi(A_4).
SideMidpointTuple SidesFromRectangle(const std::array<SubsetMask, 4>& a);

// 3 S(n+1,4) + 12 S(n+1,5) + 15 S(n+1,6). For n <= 6 the side-midpoint
// tuples are also enumerated; each rectangle is met once per symmetry of
// the square, so the raw count is divided by 8.
mpz_class CountRectangleCircuits(int n);

// Pairwise intersecting triples minus the broken circuits of size three,
// which come from tetrahedron and rectangle circuits.
mpz_class B3ViaCircuits(int n);

}  // namespace resonance

#endif  // RESONANCE_QUAD_CIRCUITS_H_
