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

#include "resonance/arrangement.h"

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resonance/errors.h"
#include "resonance/linalg.h"

namespace resonance {

Arrangement::Arrangement(int n) : n_(n) {
  if (n < 1 || n > kMaxMaskDimension) {
    throw ValidationError("arrangement dimension must lie in [1, 63], got " +
                          std::to_string(n));
  }
}

std::vector<SubsetMask> Arrangement::ToVector() const {
  if (n_ > 20) {
    throw GuardError("refusing to materialize 2^" + std::to_string(n_) +
                     " - 1 hyperplanes");
  }
  std::vector<SubsetMask> out;
  out.reserve(size());
  for (SubsetMask h : hyperplanes()) out.push_back(h);
  return out;
}

CharPoly::CharPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ValidationError("empty characteristic polynomial");
  const int n = degree();
  if (coeffs_[n] != 1) throw ValidationError("characteristic polynomial not monic");
  for (int i = 0; i <= n; ++i) {
    const mpz_class& c = coeffs_[n - i];
    if (c == 0) continue;
    if ((c < 0) != (i % 2 == 1)) {
      throw ValidationError("coefficient of t^" + std::to_string(n - i) +
                            " breaks the alternating sign pattern");
    }
  }
}

CharPoly CharPoly::FromBetti(std::span<const mpz_class> betti) {
  const int n = static_cast<int>(betti.size()) - 1;
  std::vector<mpz_class> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) {
    coeffs[n - i] = (i % 2 == 0) ? betti[i] : mpz_class(-betti[i]);
  }
  return CharPoly(std::move(coeffs));
}

mpz_class CharPoly::Betti(int i) const {
  if (i < 0 || i > degree()) return 0;
  return abs(coeffs_[degree() - i]);
}

std::vector<mpz_class> CharPoly::BettiNumbers() const {
  std::vector<mpz_class> out;
  for (int i = 0; i <= degree(); ++i) out.push_back(Betti(i));
  return out;
}

std::vector<std::string> CharPoly::DescendingDecimal() const {
  std::vector<std::string> out;
  for (int d = degree(); d >= 0; --d) out.push_back(coeffs_[d].get_str());
  return out;
}

std::string CharPoly::ToString() const {
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[d];
    if (c == 0) continue;
    const mpz_class a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (a != 1 || d == 0) s += a.get_str();
    if (d >= 1) s += "t";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

CharPoly WhitneyCharPoly(int n, const Guards& guards) {
  Arrangement a(n);
  EnforceGuard(guards, "whitney n", n, guards.whitney_max_n);
  if (n > 5) throw GuardError("the Whitney sum is infeasible beyond n = 5");
  const std::vector<SubsetMask> hyperplanes = a.ToVector();
  const uint64_t m = hyperplanes.size();
  std::vector<mpz_class> coeffs(n + 1, 0);
  std::vector<SubsetMask> subset;
  for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
    subset.clear();
    for (uint64_t b = s; b; b &= b - 1) {
      subset.push_back(hyperplanes[std::countr_zero(b)]);
    }
    const int r = Rank(subset);
    if (subset.size() % 2 == 0) {
      coeffs[n - r] += 1;
    } else {
      coeffs[n - r] -= 1;
    }
  }
  return CharPoly(std::move(coeffs));
}

mpz_class RegionCount(const CharPoly& p) {
  mpz_class total = 0;
  for (const mpz_class& c : p.coeffs()) total += abs(c);
  return total;
}

}  // namespace resonance
