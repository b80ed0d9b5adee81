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

#ifndef RESONANCE_NBC_H_
#define RESONANCE_NBC_H_

#include <gmpxx.h>

#include <functional>
#include <span>
#include <vector>

#include "resonance/arrangement.h"
#include "resonance/guards.h"
#include "resonance/subset_mask.h"

namespace resonance {

// Broken circuit complex of A_n under the binary order.
//
// The first three functions are direct transcriptions of the definitions and
// serve as the reference for the counting engine below.

// True iff some hyperplane H > max(T) makes T + H a circuit of A_n. When
// `completion` is non-null it receives the smallest such H.
bool IsBrokenCircuit(std::span<const SubsetMask> t,
                     SubsetMask* completion = nullptr);

// True iff no nonempty subset of `s` is a broken circuit. Exponential in
// |s|; rejects |s| > 16.
bool IsNbc(std::span<const SubsetMask> s);

// For an NBC set `s` (binary order) and e > max(s): whether s + e is NBC,
// decided as "s + e independent and no f > e enters the closure". Throws
// ValidationError when `s` is not strictly increasing or e <= max(s).
bool NbcExtend(std::span<const SubsetMask> s, SubsetMask e);

// b_0..b_{i_max} of A_n as counts of NBC sets by cardinality.
//
// The DFS adds hyperplanes in increasing binary order. At a node S every
// remaining hyperplane f > max(S) is projected to Q^n / span(S); S + e is
// NBC exactly when e is the largest hyperplane on its projective line, so
// children are the maxima of the projective classes. Arithmetic runs modulo
// 65521, which exceeds every 0/1 minor for n <= 14.
//
// Allowed when n <= guards.nbc_full_max_n, or when n <= nbc_depth_max_n and
// i_max <= nbc_depth_max_i. Work splits over the 2^n - 1 depth-one roots.
std::vector<mpz_class> BettiViaNbc(int n, int i_max, const Guards& guards = {},
                                   int threads = 1);

CharPoly CharPolyViaNbc(int n, const Guards& guards = {}, int threads = 1);

// Calls `visit` on every NBC set with at most i_max elements, in DFS order,
// starting with the empty set. Stops early when `visit` returns false.
// Single-threaded; meant for tests and capped listings.
void EnumerateNbcSets(
    int n, int i_max,
    const std::function<bool(std::span<const SubsetMask>)>& visit,
    const Guards& guards = {});

}  // namespace resonance

#endif  // RESONANCE_NBC_H_
