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

#ifndef RESONANCE_ARRANGEMENT_H_
#define RESONANCE_ARRANGEMENT_H_

#include <gmpxx.h>

#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "resonance/guards.h"
#include "resonance/subset_mask.h"

namespace resonance {

// The resonance arrangement A_n: one hyperplane per nonempty subset of [n],
// ordered by mask value (the binary order). Hyperplanes are generated on
// demand, so even n = 63 is cheap to hold.
class Arrangement {
 public:
  // Throws ValidationError unless 1 <= n <= 63.
  explicit Arrangement(int n);

  int n() const { return n_; }
  uint64_t size() const { return (uint64_t{1} << n_) - 1; }
  // index is 0-based; the hyperplane is the mask index + 1.
  SubsetMask operator[](uint64_t index) const {
    return SubsetMask(index + 1, n_);
  }

  auto hyperplanes() const {
    const int n = n_;
    return std::views::iota(uint64_t{1}, uint64_t{1} << n) |
           std::views::transform(
               [n](uint64_t bits) { return SubsetMask(bits, n); });
  }

  // Materialized list; refuses n > 20.
  std::vector<SubsetMask> ToVector() const;

 private:
  int n_;
};

// Degree-n integer polynomial; coeffs()[d] is the coefficient of t^d.
class CharPoly {
 public:
  // Throws ValidationError unless the polynomial is monic of degree
  // coeffs.size() - 1 with alternating signs.
  explicit CharPoly(std::vector<mpz_class> coeffs);
  // From b_0..b_n with the signs (-1)^i attached to t^(n-i).
  static CharPoly FromBetti(std::span<const mpz_class> betti);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // |coefficient of t^(n-i)|.
  mpz_class Betti(int i) const;
  std::vector<mpz_class> BettiNumbers() const;
  // Highest degree first, as decimal strings: {"1", "-7", "15", "-9"}.
  std::vector<std::string> DescendingDecimal() const;
  // "t^3 - 7t^2 + 15t - 9".
  std::string ToString() const;

  friend bool operator==(const CharPoly& a, const CharPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<mpz_class> coeffs_;
};

// Direct Whitney sum over all 2^(2^n - 1) subsets with Bareiss ranks.
// Guarded by guards.whitney_max_n.
CharPoly WhitneyCharPoly(int n, const Guards& guards = {});

// Largest absolute n x n 0/1 determinant (tabulated for n <= 8, the
// Hadamard bound beyond). Every prime above it preserves the matroid of A_n
// under reduction mod q, since all minors of the normal matrix are 0/1
// determinants of size <= n.
uint64_t MaxZeroOneDeterminant(int n);

// The first `count` primes strictly above MaxZeroOneDeterminant(n).
std::vector<uint64_t> DefaultPrimes(int n, int count);

// Number of points of F_q^n off every hyperplane of A_n (mod q).
mpz_class CountPointsOffArrangement(int n, uint64_t q, int threads = 1);

// Interpolates the point counts for each admissible prime. With more than
// n + 1 primes the surplus counts must agree with the interpolant. Throws
// ValidationError for too few, non-prime, repeated or too-small primes, or
// primes >= 128. Guarded by guards.finite_field_max_n.
CharPoly FiniteFieldCharPoly(int n, std::span<const uint64_t> primes,
                             const Guards& guards = {}, int threads = 1);
CharPoly FiniteFieldCharPoly(int n, const Guards& guards = {},
                             int threads = 1);

// Sum of the absolute coefficients, the number of chambers of a real
// arrangement.
mpz_class RegionCount(const CharPoly& p);

// Independent chamber count for A_n by inserting hyperplanes one at a time
// in binary order; each insertion adds as many chambers as the earlier
// hyperplanes cut out on the new one, computed recursively on flats.
// Guarded by guards.chambers_max_n.
mpz_class EnumerateChambersBruteforce(int n, const Guards& guards = {});

bool IsPrime(uint64_t q);

}  // namespace resonance

#endif  // RESONANCE_ARRANGEMENT_H_
