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

#include "resonance/stirling.h"

#include <gmpxx.h>

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "resonance/errors.h"
#include "resonance/exact_matrix.h"

namespace resonance {
namespace {

mpz_class Power(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

mpz_class Factorial(unsigned long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

mpz_class Binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void CheckDimension(int n) {
  if (n < 1) {
    throw ValidationError("n must be at least 1, got " + std::to_string(n));
  }
}

// Largest i for which 2^i unknowns are still a sensible dense solve.
constexpr int kMaxFitIndex = 10;

}  // namespace

StirlingTable::StirlingTable(int cap) : cap_(cap) {
  if (cap < 0) throw ValidationError("negative Stirling table size");
  rows_.resize(cap + 1);
  rows_[0] = {1};
  for (int n = 1; n <= cap; ++n) {
    rows_[n].assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      const mpz_class above = (k < n) ? rows_[n - 1][k] : mpz_class(0);
      rows_[n][k] = k * above + rows_[n - 1][k - 1];
    }
  }
}

mpz_class StirlingTable::operator()(int n, int k) const {
  if (n < 0 || n > cap_) {
    throw ValidationError("S(" + std::to_string(n) + ", .) outside the table");
  }
  if (k < 0 || k > n) return 0;
  return rows_[n][k];
}

mpz_class Stirling2(int n, int k) {
  if (n < 0 || k < 0) throw ValidationError("Stirling arguments must be >= 0");
  if (k > n) return 0;
  // One row at a time; only columns <= k matter.
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

mpz_class Stirling2Explicit(int n, int k) {
  if (n < 0 || k < 0) throw ValidationError("Stirling arguments must be >= 0");
  mpz_class sum = 0;
  for (int j = 0; j <= k; ++j) {
    // 0^0 = 1 so that S(0, 0) = 1.
    const mpz_class term = Binomial(k, j) * Power(k - j, n);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const mpz_class fact = Factorial(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), fact.get_mpz_t())) {
    throw InvariantError("alternating Stirling sum not divisible by k!");
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), fact.get_mpz_t());
  return out;
}

mpz_class B2Closed(int n) {
  CheckDimension(n);
  const mpz_class stirling = 2 * Stirling2(n + 1, 3) + 3 * Stirling2(n + 1, 4);
  const mpz_class twice = Power(4, n) - Power(3, n) - Power(2, n) + 1;
  if (twice % 2 != 0 || twice / 2 != stirling) {
    throw InvariantError("b_2 closed forms disagree at n = " +
                         std::to_string(n));
  }
  return stirling;
}

mpz_class B3Closed(int n) {
  CheckDimension(n);
  const StirlingCombination comb{
      3, {{4, 9}, {5, 80}, {6, 345}, {7, 840}, {8, 840}}};
  const mpz_class stirling = comb.Evaluate(n);
  const mpz_class scaled = 4 * Power(8, n) - 15 * Power(6, n) +
                           15 * Power(5, n) - 14 * Power(4, n) +
                           18 * Power(3, n) - 7 * Power(2, n) - 1;
  if (scaled % 24 != 0 || scaled / 24 != stirling) {
    throw InvariantError("b_3 closed forms disagree at n = " +
                         std::to_string(n));
  }
  return stirling;
}

mpz_class StirlingCombination::Evaluate(int n) const {
  CheckDimension(n);
  mpz_class total = 0;
  for (const auto& [k, coeff] : c) total += coeff * Stirling2(n + 1, k);
  return total;
}

std::string StirlingCombination::ToString() const {
  std::string s = "{";
  for (const auto& [k, coeff] : c) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ": " + coeff.get_str();
  }
  return s + "}";
}

mpz_class CoefficientBound(int i, int k) {
  if (i < 1 || i > 30 || k < 1) {
    throw ValidationError("coefficient bound needs 1 <= i <= 30, k >= 1");
  }
  const unsigned long subsets = (1ul << i) - 1;
  if (static_cast<unsigned long>(k - 1) > subsets) return 0;
  const mpz_class maps = Binomial(subsets, k - 1) * Factorial(k - 1);
  return maps / Factorial(i);
}

StirlingCombination FitStirlingCoeffs(int i,
                                      std::span<const mpz_class> values) {
  if (i < 1 || i > kMaxFitIndex) {
    throw ValidationError("fit index must lie in [1, " +
                          std::to_string(kMaxFitIndex) + "]");
  }
  const int m = 1 << i;
  if (static_cast<int>(values.size()) != m) {
    throw ValidationError("expected 2^" + std::to_string(i) + " = " +
                          std::to_string(m) + " values, got " +
                          std::to_string(values.size()));
  }
  const StirlingTable table(m + 1);
  ExactMatrix a(m, m);
  std::vector<mpq_class> b(m);
  for (int n = 1; n <= m; ++n) {
    for (int k = 1; k <= m; ++k) a(n - 1, k - 1) = table(n + 1, k);
    b[n - 1] = values[n - 1];
  }
  const std::vector<mpq_class> x = SolveExact(a, b);

  StirlingCombination out;
  out.i = i;
  for (int k = 1; k <= m; ++k) {
    const mpq_class& c = x[k - 1];
    if (k <= i && c != 0) {
      throw ValidationError("inconsistent values: c_" + std::to_string(k) +
                            " = " + c.get_str() + " should vanish");
    }
    if (c.get_den() != 1) {
      throw ValidationError("inconsistent values: c_" + std::to_string(k) +
                            " = " + c.get_str() + " is not an integer");
    }
    if (c < 0) {
      throw ValidationError("inconsistent values: c_" + std::to_string(k) +
                            " = " + c.get_str() + " is negative");
    }
    if (c != 0) out.c[k] = c.get_num();
  }
  return out;
}

mpz_class BettiUpperBound(int i, int n) {
  if (i < 0 || n < 1) throw ValidationError("bound needs i >= 0, n >= 1");
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), Power(2, static_cast<unsigned long>(i) * n).get_mpz_t(),
             Factorial(i).get_mpz_t());
  return out;
}

RegionBound RegionLog2Bound(int n) {
  if (n < 2) throw ValidationError("region bound needs n > 1");
  RegionBound out;
  out.exponent = n * n - n + 1;
  out.bound_sum = 0;
  for (int i = 0; i <= n; ++i) {
    out.bound_sum += mpq_class(Power(2, static_cast<unsigned long>(i) * n),
                               Factorial(i));
  }
  out.bound_sum.canonicalize();
  out.certified = out.bound_sum < mpq_class(Power(2, out.exponent));
  return out;
}

}  // namespace resonance
