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

#ifndef RESONANCE_LINALG_H_
#define RESONANCE_LINALG_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "resonance/exact_matrix.h"
#include "resonance/subset_mask.h"

namespace resonance {

// Matroid primitives on sets of characteristic vectors. All results are
// exact over Q; see modular_span.h for when the fast modular path is used.

// Rank over Q via Bareiss elimination. Empty input has rank 0. Throws
// ValidationError when the masks live in different dimensions.
int Rank(std::span<const SubsetMask> columns);

bool IsIndependent(std::span<const SubsetMask> columns);

// Rank of the same vectors reduced modulo the prime p. Used to cross-check
// Rank(); for p above the largest 0/1 minor the two agree.
int RankModPrime(std::span<const SubsetMask> columns, uint64_t p);

// All H in `universe` with rank(S + H) == rank(S), in universe order.
// Throws ValidationError if some element of S is not in `universe`.
std::vector<SubsetMask> Closure(std::span<const SubsetMask> s,
                                std::span<const SubsetMask> universe);

// For independent T and e in closure(T) \ T, returns the unique circuit
// contained in T + e, sorted in binary order (e included). Throws
// ValidationError when T is dependent, e is in T, or e is outside the span.
std::vector<SubsetMask> FundamentalCircuit(std::span<const SubsetMask> t,
                                           SubsetMask e);

// True iff `c` is a circuit: dependent, with every proper subset
// independent.
bool IsCircuit(std::span<const SubsetMask> c);

// Incremental span of masks with exact membership, backed by MaskSpan when
// the dimension is certified for modular arithmetic and by rational
// elimination otherwise.
class SpanOracle {
 public:
  explicit SpanOracle(int n);
  ~SpanOracle();
  SpanOracle(SpanOracle&&) noexcept;
  SpanOracle& operator=(SpanOracle&&) noexcept;
  SpanOracle(const SpanOracle& other);

  bool Add(uint64_t mask);
  bool Contains(uint64_t mask) const;
  int rank() const;
  // Fills `support` with the indices (into the added generators) whose
  // expansion coefficient for `mask` is nonzero. Returns false when `mask`
  // is outside the span.
  bool Support(uint64_t mask, std::vector<int>* support) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace resonance

#endif  // RESONANCE_LINALG_H_
