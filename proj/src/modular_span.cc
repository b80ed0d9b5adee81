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

#include "resonance/modular_span.h"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resonance/errors.h"

namespace resonance {
namespace modp {

uint64_t Mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t Pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = Mul(r, a, p);
    a = Mul(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace modp

bool ZeroOneMinorsBelow(int n, uint64_t p) {
  // (n+1)^(n+1) < (p * 2^n)^2  <=>  Hadamard bound < p.
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(n) + 1,
                static_cast<unsigned long>(n) + 1);
  rhs = mpz_class(std::to_string(p));
  rhs <<= n;
  rhs *= rhs;
  return lhs < rhs;
}

int MaxExactDimension(uint64_t p) {
  int n = 0;
  while (ZeroOneMinorsBelow(n + 1, p)) ++n;
  return n;
}

MaskSpan::MaskSpan(int n) : n_(n) {
  static const int kMax = MaxExactDimension(kSpanPrime);
  if (n < 1 || n > kMax) {
    throw ValidationError("MaskSpan supports 1 <= n <= " +
                          std::to_string(kMax) + ", got " + std::to_string(n));
  }
}

std::vector<uint64_t> MaskSpan::Lift(uint64_t mask) const {
  std::vector<uint64_t> v(n_, 0);
  for (int i = 0; i < n_; ++i) v[i] = (mask >> i) & 1;
  return v;
}

void MaskSpan::Reduce(std::vector<uint64_t>& v,
                      std::vector<uint64_t>* used) const {
  constexpr uint64_t p = kSpanPrime;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Row& row = rows_[k];
    const uint64_t f = v[row.pivot];
    if (f == 0) continue;
    for (int i = 0; i < n_; ++i) {
      if (row.v[i] == 0) continue;
      v[i] = (v[i] + p - modp::Mul(f, row.v[i], p)) % p;
    }
    if (used) (*used)[k] = f;
  }
}

bool MaskSpan::Add(uint64_t mask) {
  constexpr uint64_t p = kSpanPrime;
  std::vector<uint64_t> v = Lift(mask);
  std::vector<uint64_t> used(rows_.size(), 0);
  Reduce(v, &used);
  int pivot = 0;
  while (pivot < n_ && v[pivot] == 0) ++pivot;
  if (pivot == n_) return false;

  // new row = (mask - sum used[k] * row_k) / v[pivot]
  const int generators = rank() + 1;
  std::vector<uint64_t> comb(generators, 0);
  comb[generators - 1] = 1;
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (used[k] == 0) continue;
    for (size_t j = 0; j < rows_[k].comb.size(); ++j) {
      comb[j] = (comb[j] + p - modp::Mul(used[k], rows_[k].comb[j], p)) % p;
    }
  }
  const uint64_t inv = modp::Inverse(v[pivot], p);
  for (uint64_t& x : v) x = modp::Mul(x, inv, p);
  for (uint64_t& x : comb) x = modp::Mul(x, inv, p);
  for (Row& row : rows_) row.comb.resize(generators, 0);
  rows_.push_back(Row{pivot, std::move(v), std::move(comb)});
  return true;
}

bool MaskSpan::Contains(uint64_t mask) const {
  std::vector<uint64_t> v = Lift(mask);
  Reduce(v, nullptr);
  for (uint64_t x : v) {
    if (x) return false;
  }
  return true;
}

std::optional<std::vector<uint64_t>> MaskSpan::Express(uint64_t mask) const {
  constexpr uint64_t p = kSpanPrime;
  std::vector<uint64_t> v = Lift(mask);
  std::vector<uint64_t> used(rows_.size(), 0);
  Reduce(v, &used);
  for (uint64_t x : v) {
    if (x) return std::nullopt;
  }
  std::vector<uint64_t> coeffs(rank(), 0);
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (used[k] == 0) continue;
    for (size_t j = 0; j < rows_[k].comb.size(); ++j) {
      coeffs[j] = (coeffs[j] + modp::Mul(used[k], rows_[k].comb[j], p)) % p;
    }
  }
  return coeffs;
}

}  // namespace resonance
