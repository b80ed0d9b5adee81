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

#ifndef RESONANCE_STIRLING_H_
#define RESONANCE_STIRLING_H_

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace resonance {

// Triangular table S(n, k), 0 <= k <= n <= cap, built by the recurrence
// S(n, k) = k S(n-1, k) + S(n-1, k-1).
class StirlingTable {
 public:
  explicit StirlingTable(int cap);

  int cap() const { return cap_; }
  // Zero for k > n or k < 0. Throws ValidationError when n is outside
  // [0, cap].
  mpz_class operator()(int n, int k) const;

 private:
  int cap_;
  std::vector<std::vector<mpz_class>> rows_;
};

// Stirling numbers of the second kind by the recurrence.
mpz_class Stirling2(int n, int k);

// The same value from the alternating sum
// (1/k!) sum_{j=0..k} (-1)^j C(k, j) (k - j)^n. The division is checked to
// be exact.
mpz_class Stirling2Explicit(int n, int k);

// b_2(A_n) = 2 S(n+1,3) + 3 S(n+1,4) = (4^n - 3^n - 2^n + 1) / 2. Both
// expressions are evaluated; InvariantError if they differ.
mpz_class B2Closed(int n);

// b_3(A_n) = 9 S(n+1,4) + 80 S(n+1,5) + 345 S(n+1,6) + 840 S(n+1,7)
//          + 840 S(n+1,8)
//          = (4*8^n - 15*6^n + 15*5^n - 14*4^n + 18*3^n - 7*2^n - 1) / 24.
mpz_class B3Closed(int n);

// b_i(A_n) written as sum_k c[k] S(n+1, k).
struct StirlingCombination {
  int i = 0;
  std::map<int, mpz_class> c;

  mpz_class Evaluate(int n) const;
  // "{3: 2, 4: 3}"
  std::string ToString() const;

  friend bool operator==(const StirlingCombination&,
                         const StirlingCombination&) = default;
};

// floor(C(2^i - 1, k - 1) (k - 1)! / i!), the largest value c_{i,k} can
// take: at most that many injective maps [k-1] -> nonempty subsets of [i],
// divided by the i! orderings.
mpz_class CoefficientBound(int i, int k);

// Solves sum_{k=1..2^i} c_k S(n+1, k) = values[n-1] for n = 1..2^i over Q.
// Requires exactly 2^i values. The solution must vanish for k <= i and be
// integral and nonnegative elsewhere; otherwise the inputs are inconsistent
// and ValidationError is thrown. Zero coefficients are omitted from the
// result.
StirlingCombination FitStirlingCoeffs(int i, std::span<const mpz_class> values);

// ceil(2^{i n} / i!). For i >= 1, b_i(A_n) is strictly below 2^{in}/i!,
// and for an integer b that is the same as b < ceil(2^{in}/i!).
mpz_class BettiUpperBound(int i, int n);

struct RegionBound {
  int exponent = 0;     // n^2 - n + 1
  mpq_class bound_sum;  // sum_{i=0..n} 2^{in} / i!, exactly
  bool certified = false;  // bound_sum < 2^exponent
};

// The chain R_n = sum_i b_i <= sum_i 2^{in}/i! < 2^{n^2-n+1}. The second
// inequality is evaluated exactly; it is false for n = 2 (13 > 8) and
// true from n = 3 on. Requires n > 1.
RegionBound RegionLog2Bound(int n);

}  // namespace resonance

#endif  // RESONANCE_STIRLING_H_
