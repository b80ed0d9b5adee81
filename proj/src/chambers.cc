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

// Chamber count of A_n by incremental insertion.
//
// Inserting hyperplane h into a central arrangement B adds as many chambers
// as the arrangement {h' cap h : h' in B} has inside h. Applied recursively,
// every intermediate arrangement is "the hyperplanes with index < t,
// restricted to the flat X", so the count is memoized on (X, t), where the
// flat X is represented by the set of hyperplanes containing it (a closed
// set of the matroid, here a bitmask over hyperplane indices).

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "resonance/arrangement.h"
#include "resonance/errors.h"
#include "resonance/linalg.h"

namespace resonance {
namespace {

class ChamberCounter {
 public:
  explicit ChamberCounter(int n)
      : n_(n), count_((uint64_t{1} << n) - 1) {}

  uint64_t CountAll() { return Count(0, static_cast<int>(count_)); }

 private:
  static uint64_t Mask(int index) { return static_cast<uint64_t>(index) + 1; }

  // Hyperplanes (as an index bitmask) containing the flat cut out by
  // `flat` and hyperplane `index`.
  uint64_t Meet(uint64_t flat, int index) {
    const auto key = std::make_pair(flat, index);
    if (auto it = meet_.find(key); it != meet_.end()) return it->second;
    SpanOracle span(n_);
    for (uint64_t b = flat; b; b &= b - 1) span.Add(Mask(std::countr_zero(b)));
    span.Add(Mask(index));
    uint64_t closed = 0;
    for (int h = 0; h < static_cast<int>(count_); ++h) {
      if (span.Contains(Mask(h))) closed |= uint64_t{1} << h;
    }
    meet_.emplace(key, closed);
    return closed;
  }

  // Chambers of {h_l cap X : l < t, X not inside h_l} within X.
  uint64_t Count(uint64_t flat, int t) {
    const auto key = std::make_pair(flat, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    uint64_t total = 1;
    std::vector<uint64_t> seen;
    for (int l = 0; l < t; ++l) {
      if ((flat >> l) & 1) continue;
      const uint64_t sub = Meet(flat, l);
      bool repeated = false;
      for (uint64_t s : seen) repeated |= (s == sub);
      if (repeated) continue;
      seen.push_back(sub);
      total += Count(sub, l);
    }
    memo_.emplace(key, total);
    return total;
  }

  int n_;
  uint64_t count_;
  std::map<std::pair<uint64_t, int>, uint64_t> meet_;
  std::map<std::pair<uint64_t, int>, uint64_t> memo_;
};

}  // namespace

mpz_class EnumerateChambersBruteforce(int n, const Guards& guards) {
  Arrangement arrangement(n);
  EnforceGuard(guards, "chamber enumeration n", n, guards.chambers_max_n);
  if (n > 6) {
    throw GuardError("chamber enumeration tracks flats in one machine word; "
                     "n must be at most 6");
  }
  ChamberCounter counter(n);
  return mpz_class(static_cast<unsigned long>(counter.CountAll()));
}

}  // namespace resonance
