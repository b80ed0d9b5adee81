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

#ifndef RESONANCE_PROTOTYPE_H_
#define RESONANCE_PROTOTYPE_H_

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "resonance/guards.h"
#include "resonance/stirling.h"
#include "resonance/subset_mask.h"

namespace resonance {

// An (i,k)-prototype: an injective map f from [k-1] to the nonempty subsets
// of [i]. images[l-1] is f(l) as a bitmask over [i].
struct Prototype {
  int i = 0;
  int k = 0;
  std::vector<uint32_t> images;

  // Throws ValidationError unless 1 <= i <= kMaxPrototypeIndex,
  // i+1 <= k <= 2^i, and images is an injective list of nonempty masks.
  void Validate() const;

  // I_j = {l in [k-1] : j in f(l)} for j = 1..i, as bitmasks over [k-1].
  std::vector<uint64_t> BuildingBlocks() const;

  // "[{1},{1,2}]"
  std::string ToString() const;

  friend bool operator==(const Prototype&, const Prototype&) = default;
};

inline constexpr int kMaxPrototypeIndex = 5;

// A partition of [n+1] into k blocks, stored as bitmasks over [n+1] in
// increasing order. The block holding n+1 has the top bit, so it is last.
class Partition {
 public:
  // Throws ValidationError unless `blocks` are nonempty, pairwise disjoint
  // and cover [n+1]. The blocks are sorted on construction.
  Partition(int n, std::vector<uint64_t> blocks);

  // {1}, {2}, ..., {k}: the partition of [k] used for classification.
  static Partition Singletons(int k);

  int n() const { return n_; }
  int k() const { return static_cast<int>(blocks_.size()); }
  const std::vector<uint64_t>& blocks() const { return blocks_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_;
  std::vector<uint64_t> blocks_;
};

// Calls `visit` on each partition of [m] into exactly k blocks (as sorted
// block masks over [m]), in restricted-growth-string order. Stops early
// when `visit` returns false.
void EnumerateSetPartitions(
    int m, int k,
    const std::function<bool(const std::vector<uint64_t>&)>& visit);

// (2^i - 1)! / (2^i - k)!: the number of (i,k)-prototypes.
mpz_class CountPrototypes(int i, int k);

// Visits every (i,k)-prototype once, in lexicographic order of the image
// sequence (images compared as integers). Allowed when i <= the guard cap,
// or beyond it when there are at most 10^6 maps (e.g. i = 4, k <= 6).
void EnumeratePrototypes(int i, int k,
                         const std::function<bool(const Prototype&)>& visit,
                         const Guards& guards = {});

// (A_1, ..., A_i) with A_j the union of the blocks P_l, l in I_j. Throws
// ValidationError when the block counts disagree or when the result is not
// a tuple of distinct nonempty subsets (some I_j empty or two I_j equal).
std::vector<SubsetMask> Realize(const Prototype& p, const Partition& pi);

struct PrototypeAndPartition {
  Prototype prototype;
  Partition partition;
};

// Inverse of Realize: the atoms of (A_1, ..., A_i) together with
// {n+1} ∪ ([n] minus all A_j) form the partition, and
// f(l) = {j : P_l ⊆ A_j}. Requires distinct nonempty A_j of one dimension.
// A tuple with fewer than i + 1 atoms spans fewer than i dimensions and has
// no prototype; it raises ValidationError.
PrototypeAndPartition RecoverPrototype(const std::vector<SubsetMask>& tuple);

enum class PrototypeClass {
  kFunctional,
  kBroken,
  // Some building block is empty or two coincide, so the map realizes no
  // tuple of distinct hyperplanes on any partition.
  kDegenerate,
};

std::string ToString(PrototypeClass c);

// Realizes p on the singletons of [k] (n = k - 1) and checks the resulting
// set for broken circuits of A_{k-1}.
PrototypeClass Classify(const Prototype& p);

// The same test on an arbitrary partition.
PrototypeClass ClassifyOn(const Prototype& p, const Partition& pi);

// Functional (i,k)-prototype counts per k, before division by i!.
std::vector<mpz_class> FunctionalCounts(int i, const Guards& guards = {});

// c_{i,k} = #functional (i,k)-prototypes / i! for i+1 <= k <= 2^i. The
// division is checked to be exact. Zero coefficients are omitted.
StirlingCombination Coefficients(int i, const Guards& guards = {});

// sum_k c_{i,k} S(n+1, k).
mpz_class BettiViaPrototypes(int i, int n, const Guards& guards = {});

}  // namespace resonance

#endif  // RESONANCE_PROTOTYPE_H_
