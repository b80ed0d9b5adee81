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

#include "resonance/prototype.h"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "resonance/errors.h"
#include "resonance/nbc.h"

namespace resonance {
namespace {

constexpr unsigned long kSmallPrototypeCount = 1000000;

std::string MaskString(uint64_t bits) {
  std::string s = "{";
  for (int e = 0; bits; ++e, bits >>= 1) {
    if (!(bits & 1)) continue;
    if (s.size() > 1) s += ",";
    s += std::to_string(e + 1);
  }
  return s + "}";
}

void CheckShape(int i, int k) {
  if (i < 1 || i > kMaxPrototypeIndex) {
    throw ValidationError("prototype index i must lie in [1, " +
                          std::to_string(kMaxPrototypeIndex) + "], got " +
                          std::to_string(i));
  }
  if (k < i + 1 || k > (1 << i)) {
    throw ValidationError("k must lie in [i+1, 2^i] = [" +
                          std::to_string(i + 1) + ", " +
                          std::to_string(1 << i) + "], got " +
                          std::to_string(k));
  }
}

}  // namespace

void Prototype::Validate() const {
  CheckShape(i, k);
  if (static_cast<int>(images.size()) != k - 1) {
    throw ValidationError("an (i,k)-prototype has k - 1 images");
  }
  uint64_t used = 0;
  for (uint32_t m : images) {
    if (m == 0 || m >= (uint32_t{1} << i)) {
      throw ValidationError("prototype image " + std::to_string(m) +
                            " is not a nonempty subset of [i]");
    }
    if ((used >> m) & 1) throw ValidationError("prototype is not injective");
    used |= uint64_t{1} << m;
  }
}

std::vector<uint64_t> Prototype::BuildingBlocks() const {
  std::vector<uint64_t> blocks(i, 0);
  for (size_t l = 0; l < images.size(); ++l) {
    for (int j = 0; j < i; ++j) {
      if ((images[l] >> j) & 1) blocks[j] |= uint64_t{1} << l;
    }
  }
  return blocks;
}

std::string Prototype::ToString() const {
  std::string s = "[";
  for (size_t l = 0; l < images.size(); ++l) {
    if (l) s += ",";
    s += MaskString(images[l]);
  }
  return s + "]";
}

Partition::Partition(int n, std::vector<uint64_t> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n + 1 > kMaxMaskDimension) {
    throw ValidationError("partition ground set [n+1] needs 1 <= n <= " +
                          std::to_string(kMaxMaskDimension - 1));
  }
  const uint64_t full = (uint64_t{1} << (n + 1)) - 1;
  uint64_t seen = 0;
  for (uint64_t b : blocks_) {
    if (b == 0) throw ValidationError("partition has an empty block");
    if (b & ~full) throw ValidationError("block outside [n+1]");
    if (b & seen) throw ValidationError("partition blocks overlap");
    seen |= b;
  }
  if (seen != full) throw ValidationError("partition blocks do not cover [n+1]");
  std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::Singletons(int k) {
  std::vector<uint64_t> blocks;
  for (int l = 0; l < k; ++l) blocks.push_back(uint64_t{1} << l);
  return Partition(k - 1, std::move(blocks));
}

void EnumerateSetPartitions(
    int m, int k,
    const std::function<bool(const std::vector<uint64_t>&)>& visit) {
  if (m < 1 || m > kMaxMaskDimension || k < 1 || k > m) return;
  // Restricted growth string: label[0] = 0, label[e] <= 1 + max so far.
  std::vector<int> label(m, 0);
  std::vector<uint64_t> blocks;
  bool stop = false;
  std::function<void(int, int)> rec = [&](int e, int used) {
    if (stop) return;
    if (m - e < k - used) return;  // not enough elements left
    if (e == m) {
      if (used != k) return;
      blocks.assign(k, 0);
      for (int x = 0; x < m; ++x) blocks[label[x]] |= uint64_t{1} << x;
      std::sort(blocks.begin(), blocks.end());
      if (!visit(blocks)) stop = true;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      label[e] = b;
      rec(e + 1, std::max(used, b + 1));
      if (stop) return;
    }
  };
  rec(0, 0);
}

mpz_class CountPrototypes(int i, int k) {
  CheckShape(i, k);
  mpz_class total = 1;
  const long subsets = (1l << i) - 1;
  for (long j = 0; j < k - 1; ++j) total *= subsets - j;
  return total;
}

void EnumeratePrototypes(int i, int k,
                         const std::function<bool(const Prototype&)>& visit,
                         const Guards& guards) {
  CheckShape(i, k);
  const mpz_class count = CountPrototypes(i, k);
  if (!guards.override_all && i > guards.prototypes_max_i &&
      count > kSmallPrototypeCount) {
    throw GuardError("(" + std::to_string(i) + "," + std::to_string(k) +
                     ")-prototypes number " + count.get_str() +
                     ", above the cap for i > " +
                     std::to_string(guards.prototypes_max_i) +
                     "; use --guard-override for deliberately long runs");
  }
  Prototype p{i, k, std::vector<uint32_t>(k - 1, 0)};
  const uint32_t top = uint32_t{1} << i;
  uint64_t used = 0;
  bool stop = false;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k - 1) {
      if (!visit(p)) stop = true;
      return;
    }
    for (uint32_t m = 1; m < top && !stop; ++m) {
      if ((used >> m) & 1) continue;
      used |= uint64_t{1} << m;
      p.images[pos] = m;
      rec(pos + 1);
      used &= ~(uint64_t{1} << m);
    }
  };
  rec(0);
}

std::vector<SubsetMask> Realize(const Prototype& p, const Partition& pi) {
  p.Validate();
  if (pi.k() != p.k) {
    throw ValidationError("prototype has k = " + std::to_string(p.k) +
                          " but the partition has " + std::to_string(pi.k()) +
                          " blocks");
  }
  std::vector<SubsetMask> out;
  for (uint64_t block_set : p.BuildingBlocks()) {
    uint64_t a = 0;
    for (uint64_t b = block_set; b; b &= b - 1) {
      a |= pi.blocks()[std::countr_zero(b)];
    }
    if (a == 0) {
      throw ValidationError("prototype " + p.ToString() +
                            " has an empty building block");
    }
    out.emplace_back(a, pi.n());
  }
  for (size_t x = 0; x < out.size(); ++x) {
    for (size_t y = x + 1; y < out.size(); ++y) {
      if (out[x] == out[y]) {
        throw ValidationError("prototype " + p.ToString() +
                              " has two equal building blocks");
      }
    }
  }
  return out;
}

PrototypeAndPartition RecoverPrototype(const std::vector<SubsetMask>& tuple) {
  if (tuple.empty() || static_cast<int>(tuple.size()) > kMaxPrototypeIndex) {
    throw ValidationError("tuple length must lie in [1, " +
                          std::to_string(kMaxPrototypeIndex) + "]");
  }
  const int n = SameDimension(tuple);
  if (n + 1 > kMaxMaskDimension) throw ValidationError("dimension too large");
  const int i = static_cast<int>(tuple.size());
  for (int x = 0; x < i; ++x) {
    for (int y = x + 1; y < i; ++y) {
      if (tuple[x] == tuple[y]) {
        throw ValidationError("tuple entries must be distinct");
      }
    }
  }
  // Membership pattern of each element of [n+1]; n+1 lies in no A_j.
  std::map<uint32_t, uint64_t> atoms;
  for (int e = 0; e <= n; ++e) {
    uint32_t pattern = 0;
    for (int j = 0; j < i; ++j) {
      if ((tuple[j].bits() >> e) & 1) pattern |= uint32_t{1} << j;
    }
    atoms[pattern] |= uint64_t{1} << e;
  }
  std::vector<uint64_t> blocks;
  for (const auto& [pattern, block] : atoms) blocks.push_back(block);
  Partition pi(n, blocks);
  Prototype p{i, pi.k(), {}};
  for (int l = 0; l + 1 < pi.k(); ++l) {
    const uint64_t block = pi.blocks()[l];
    const int e = std::countr_zero(block);
    uint32_t image = 0;
    for (int j = 0; j < i; ++j) {
      if ((tuple[j].bits() >> e) & 1) image |= uint32_t{1} << j;
    }
    p.images.push_back(image);
  }
  p.Validate();
  return {std::move(p), std::move(pi)};
}

std::string ToString(PrototypeClass c) {
  switch (c) {
    case PrototypeClass::kFunctional:
      return "functional";
    case PrototypeClass::kBroken:
      return "broken";
    case PrototypeClass::kDegenerate:
      return "degenerate";
  }
  return "?";
}

PrototypeClass ClassifyOn(const Prototype& p, const Partition& pi) {
  p.Validate();
  const std::vector<uint64_t> blocks = p.BuildingBlocks();
  for (size_t x = 0; x < blocks.size(); ++x) {
    if (blocks[x] == 0) return PrototypeClass::kDegenerate;
    for (size_t y = x + 1; y < blocks.size(); ++y) {
      if (blocks[x] == blocks[y]) return PrototypeClass::kDegenerate;
    }
  }
  const std::vector<SubsetMask> set = Realize(p, pi);
  return IsNbc(set) ? PrototypeClass::kFunctional : PrototypeClass::kBroken;
}

PrototypeClass Classify(const Prototype& p) {
  return ClassifyOn(p, Partition::Singletons(p.k));
}

std::vector<mpz_class> FunctionalCounts(int i, const Guards& guards) {
  if (i < 1 || i > kMaxPrototypeIndex) {
    throw ValidationError("prototype index i must lie in [1, " +
                          std::to_string(kMaxPrototypeIndex) + "]");
  }
  EnforceGuard(guards, "prototype index i", i, guards.prototypes_max_i);
  std::vector<mpz_class> counts((1 << i) + 1, 0);
  for (int k = i + 1; k <= (1 << i); ++k) {
    unsigned long functional = 0;
    EnumeratePrototypes(
        i, k,
        [&](const Prototype& p) {
          if (Classify(p) == PrototypeClass::kFunctional) ++functional;
          return true;
        },
        guards);
    counts[k] = functional;
  }
  return counts;
}

StirlingCombination Coefficients(int i, const Guards& guards) {
  const std::vector<mpz_class> counts = FunctionalCounts(i, guards);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), i);
  StirlingCombination out;
  out.i = i;
  for (int k = 0; k < static_cast<int>(counts.size()); ++k) {
    if (counts[k] == 0) continue;
    if (!mpz_divisible_p(counts[k].get_mpz_t(), fact.get_mpz_t())) {
      throw InvariantError("functional (" + std::to_string(i) + "," +
                           std::to_string(k) + ")-prototype count " +
                           counts[k].get_str() + " is not divisible by " +
                           fact.get_str());
    }
    out.c[k] = counts[k] / fact;
  }
  return out;
}

mpz_class BettiViaPrototypes(int i, int n, const Guards& guards) {
  return Coefficients(i, guards).Evaluate(n);
}

}  // namespace resonance
