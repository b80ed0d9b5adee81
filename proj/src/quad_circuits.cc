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

#include "resonance/quad_circuits.h"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "resonance/errors.h"
#include "resonance/linalg.h"
#include "resonance/prototype.h"
#include "resonance/stirling.h"

namespace resonance {
namespace {

mpz_class Power(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

void CheckDimension(int n) {
  if (n < 1 || n > kMaxMaskDimension) {
    throw ValidationError("n must lie in [1, 63], got " + std::to_string(n));
  }
}

constexpr int kTetrahedronCheckMax = 5;
constexpr int kRectangleCheckMax = 6;

// Tries the four patterns with (a1, a3) fixed, `third` the remaining small
// set and `top` the maximum.
bool MatchPattern(uint64_t a1, uint64_t a3, uint64_t third, uint64_t top,
                  CircuitClassification* out) {
  const uint64_t meet = a1 & a3;
  const uint64_t join = a1 | a3;
  const uint64_t sym = a1 ^ a3;
  if (meet == 0 || (a1 & ~a3) == 0 || (a3 & ~a1) == 0) return false;
  *out = {CircuitType::kNotRelevantCircuit, std::min(a1, a3),
          std::max(a1, a3), 0};
  if (third == sym && top == join) {
    out->type = CircuitType::kTypeI;
  } else if (third == meet && top == sym) {
    out->type = CircuitType::kTypeII;
  } else if (third == meet && top == join) {
    out->type = CircuitType::kTypeIII;
  } else if ((third & meet) == meet && third != meet &&
             ((third & ~meet) & ~sym) == 0 &&
             top == (join & ~(third & ~meet))) {
    out->type = CircuitType::kTypeIV;
    out->x = third & ~meet;
  } else {
    return false;
  }
  return true;
}

}  // namespace

mpz_class CountIntersectingTriples(int n) {
  CheckDimension(n);
  const mpz_class scaled = Power(8, n) - 3 * Power(6, n) + 3 * Power(5, n) -
                           4 * Power(4, n) + 3 * Power(3, n) +
                           2 * Power(2, n) - 2;
  const StirlingCombination comb{
      3, {{4, 13}, {5, 92}, {6, 360}, {7, 840}, {8, 840}}};
  const mpz_class stirling = comb.Evaluate(n);
  if (scaled % 6 != 0 || scaled / 6 != stirling) {
    throw InvariantError("intersecting-triple formulas disagree at n = " +
                         std::to_string(n));
  }
  return stirling;
}

std::string ToString(CircuitType t) {
  switch (t) {
    case CircuitType::kTypeI:
      return "TypeI";
    case CircuitType::kTypeII:
      return "TypeII";
    case CircuitType::kTypeIII:
      return "TypeIII";
    case CircuitType::kTypeIV:
      return "TypeIV";
    case CircuitType::kNotRelevantCircuit:
      return "NotRelevantCircuit";
  }
  return "?";
}

CircuitClassification ClassifyRelevant4Circuit(
    const std::array<SubsetMask, 4>& family) {
  SameDimension(family);
  std::array<SubsetMask, 4> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  for (int x = 0; x < 3; ++x) {
    if (sorted[x] == sorted[x + 1]) {
      throw ValidationError("family members must be distinct");
    }
  }
  CircuitClassification out;
  const uint64_t s[3] = {sorted[0].bits(), sorted[1].bits(), sorted[2].bits()};
  const uint64_t top = sorted[3].bits();
  if (!(s[0] & s[1]) || !(s[0] & s[2]) || !(s[1] & s[2])) return out;
  if (!IsCircuit(sorted)) return out;
  // (a1, a3) is one of the three pairs of small sets.
  static constexpr int kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& [x, y, z] : kPairs) {
    if (MatchPattern(s[x], s[y], s[z], top, &out)) return out;
  }
  throw InvariantError("relevant 4-circuit fits none of the four types");
}

mpz_class CountTetrahedronCircuits(int n) {
  CheckDimension(n);
  const mpz_class count = Stirling2(n + 1, 4);
  if (n > kTetrahedronCheckMax) return count;
  const uint64_t ground = (uint64_t{1} << n) - 1;
  std::vector<std::array<uint64_t, 4>> seen;
  EnumerateSetPartitions(n + 1, 4, [&](const std::vector<uint64_t>& blocks) {
    // blocks are sorted, so the block holding n+1 comes last.
    const uint64_t a4 = ground & ~blocks[3];
    std::array<SubsetMask, 4> family = {
        SubsetMask(a4 & ~blocks[0], n), SubsetMask(a4 & ~blocks[1], n),
        SubsetMask(a4 & ~blocks[2], n), SubsetMask(a4, n)};
    // Every element of A_4 lies in exactly two of A_1, A_2, A_3.
    for (int e = 0; e < n; ++e) {
      int hits = 0;
      for (int j = 0; j < 3; ++j) hits += (family[j].bits() >> e) & 1;
      if (hits != 2 * static_cast<int>((a4 >> e) & 1)) {
        throw InvariantError("tetrahedron relation fails");
      }
    }
    if (!IsCircuit(family)) throw InvariantError("tetrahedron not a circuit");
    std::array<uint64_t, 4> key;
    for (int j = 0; j < 4; ++j) key[j] = family[j].bits();
    std::sort(key.begin(), key.end());
    seen.push_back(key);
    return true;
  });
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
      mpz_class(static_cast<unsigned long>(seen.size())) != count) {
    throw InvariantError("tetrahedron enumeration disagrees with S(n+1,4)");
  }
  return count;
}

std::string SideMidpointTuple::Violation() const {
  if (n < 1 || n > kMaxMaskDimension) return "dimension out of range";
  const uint64_t ground = (uint64_t{1} << n) - 1;
  for (uint64_t s : sides) {
    if (s & ~ground) return "side outside [n]";
  }
  if (midpoint & ~ground) return "midpoint outside [n]";
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      if (sides[x] & sides[y]) return "sides not pairwise disjoint";
    }
  }
  for (uint64_t s : sides) {
    if (s & midpoint) return "midpoint meets a side";
  }
  if (midpoint == 0) return "midpoint empty";
  if ((sides[0] == 0 && sides[2] == 0) || (sides[1] == 0 && sides[3] == 0)) {
    return "two opposite sides empty";
  }
  return "";
}

std::array<SubsetMask, 4> RectangleFromSides(const SideMidpointTuple& t) {
  if (const std::string v = t.Violation(); !v.empty()) {
    throw ValidationError("not a side-midpoint tuple: " + v);
  }
  auto vertex = [&](int i) {
    return SubsetMask(t.midpoint | t.sides[(i + 3) % 4] | t.sides[i], t.n);
  };
  return {vertex(0), vertex(1), vertex(2), vertex(3)};
}

SideMidpointTuple SidesFromRectangle(const std::array<SubsetMask, 4>& a) {
  const int n = SameDimension(a);
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      if (a[x] == a[y]) throw ValidationError("(C1) vertices not distinct");
      if (!(a[x].bits() & a[y].bits())) {
        throw ValidationError("(C3) vertices not pairwise intersecting");
      }
    }
  }
  // chi(A1) + chi(A3) = chi(A2) + chi(A4) as 0/1 sums: equal meets and joins.
  const uint64_t b[4] = {a[0].bits(), a[1].bits(), a[2].bits(), a[3].bits()};
  if ((b[0] & b[2]) != (b[1] & b[3]) || (b[0] | b[2]) != (b[1] | b[3])) {
    throw ValidationError("rectangle relation fails");
  }
  SideMidpointTuple t;
  t.n = n;
  t.midpoint = b[0] & b[1] & b[2] & b[3];
  for (int i = 0; i < 4; ++i) {
    t.sides[i] = (b[i] & b[(i + 1) % 4]) & ~t.midpoint;
  }
  if (const std::string v = t.Violation(); !v.empty()) {
    throw InvariantError("rectangle produced an invalid tuple: " + v);
  }
  return t;
}

mpz_class CountRectangleCircuits(int n) {
  CheckDimension(n);
  const mpz_class count =
      3 * Stirling2(n + 1, 4) + 12 * Stirling2(n + 1, 5) +
      15 * Stirling2(n + 1, 6);
  if (n > kRectangleCheckMax) return count;
  // Each element of [n] goes to one of S_1..S_4, M, or nowhere.
  unsigned long raw = 0;
  std::vector<int> slot(n, 0);
  for (;;) {
    SideMidpointTuple t;
    t.n = n;
    for (int e = 0; e < n; ++e) {
      if (slot[e] >= 1 && slot[e] <= 4) t.sides[slot[e] - 1] |= uint64_t{1} << e;
      if (slot[e] == 5) t.midpoint |= uint64_t{1} << e;
    }
    if (t.Violation().empty()) ++raw;
    int e = 0;
    while (e < n && slot[e] == 5) slot[e++] = 0;
    if (e == n) break;
    ++slot[e];
  }
  if (raw % 8 != 0 || mpz_class(raw / 8) != count) {
    throw InvariantError("side-midpoint enumeration gives " +
                         std::to_string(raw) + " / 8, formula gives " +
                         count.get_str());
  }
  return count;
}

mpz_class B3ViaCircuits(int n) {
  return CountIntersectingTriples(n) - CountTetrahedronCircuits(n) -
         CountRectangleCircuits(n);
}

}  // namespace resonance
