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

#ifndef RESONANCE_MODULAR_SPAN_H_
#define RESONANCE_MODULAR_SPAN_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace resonance {

// The Mersenne prime 2^61 - 1.
inline constexpr uint64_t kSpanPrime = (uint64_t{1} << 61) - 1;

// True when every nonzero k x k minor (k <= n) of a 0/1 matrix with n rows is
// nonzero modulo p, so linear algebra of 0/1 vectors over F_p agrees with Q.
// Certified by the Hadamard bound |det| <= (n+1)^((n+1)/2) / 2^n, compared
// exactly.
bool ZeroOneMinorsBelow(int n, uint64_t p);

// Largest n for which ZeroOneMinorsBelow(n, p) holds.
int MaxExactDimension(uint64_t p);

// Incremental row-echelon basis of a span of 0/1 vectors in F_p^n with
// p = 2^61 - 1. Only constructible when ZeroOneMinorsBelow(n, p), in which
// case ranks, memberships and expansion supports match exact rational
// arithmetic.
class MaskSpan {
 public:
  // Throws ValidationError when n is outside the certified range.
  explicit MaskSpan(int n);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Adds `mask` if it enlarges the span; returns whether it did. Only
  // vectors that were actually added count as generators for Express().
  bool Add(uint64_t mask);
  bool Contains(uint64_t mask) const;

  // Coefficients of `mask` in terms of the added generators (in insertion
  // order), or nullopt when `mask` is outside the span. A coefficient is
  // zero mod p exactly when it is zero over Q.
  std::optional<std::vector<uint64_t>> Express(uint64_t mask) const;

 private:
  struct Row {
    int pivot;
    std::vector<uint64_t> v;     // length n, v[pivot] == 1
    std::vector<uint64_t> comb;  // row = sum comb[j] * generator_j
  };

  std::vector<uint64_t> Lift(uint64_t mask) const;
  // Reduces v in place against the basis, accumulating the subtracted
  // multiples of each row into `used` when non-null.
  void Reduce(std::vector<uint64_t>& v, std::vector<uint64_t>* used) const;

  int n_;
  std::vector<Row> rows_;
};

namespace modp {

uint64_t Mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t Pow(uint64_t a, uint64_t e, uint64_t p);
inline uint64_t Inverse(uint64_t a, uint64_t p) { return Pow(a, p - 2, p); }

}  // namespace modp

}  // namespace resonance

#endif  // RESONANCE_MODULAR_SPAN_H_
