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

// Finite-field point counting for A_n.
//
// A point x of F_q^n avoids every hyperplane iff all nonempty subset sums of
// its coordinates are nonzero. Coordinates are fixed one at a time while the
// set of reachable subset sums is kept as a q-bit cyclic bitset: appending x
// maps the set S to S + {x} + (S + x), and x is admissible iff x != 0 and
// -x is not in S. The last coordinate is counted by popcount. Scaling by a
// unit is a bijection on admissible points, so x_1 = 1 is fixed and the
// total multiplied by q - 1.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "resonance/arrangement.h"
#include "resonance/errors.h"

namespace resonance {
namespace {

using SumSet = unsigned __int128;

constexpr uint64_t kMaxFieldSize = 127;

int PopCount(SumSet s) {
  return std::popcount(static_cast<uint64_t>(s)) +
         std::popcount(static_cast<uint64_t>(s >> 64));
}

class PointCounter {
 public:
  PointCounter(int n, uint64_t q) : n_(n), q_(static_cast<int>(q)) {
    full_ = (q_ == 128) ? ~SumSet{0} : ((SumSet{1} << q_) - 1);
  }

  bool Admissible(SumSet s, int x) const {
    return x != 0 && !((s >> ((q_ - x) % q_)) & 1);
  }

  SumSet Extend(SumSet s, int x) const {
    const SumSet shifted = ((s << x) | (s >> (q_ - x))) & full_;
    return s | shifted | (SumSet{1} << x);
  }

  // Admissible completions of a prefix with `depth` coordinates fixed.
  uint64_t Count(SumSet s, int depth) const {
    if (depth == n_) return 1;
    if (depth == n_ - 1) return q_ - 1 - PopCount(s);
    uint64_t total = 0;
    for (int x = 1; x < q_; ++x) {
      if (Admissible(s, x)) total += Count(Extend(s, x), depth + 1);
    }
    return total;
  }

 private:
  int n_;
  int q_;
  SumSet full_;
};

}  // namespace

bool IsPrime(uint64_t q) {
  if (q < 2) return false;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

uint64_t MaxZeroOneDeterminant(int n) {
  static constexpr uint64_t kKnown[] = {1, 1, 2, 3, 5, 9, 32, 56};
  if (n < 1) throw ValidationError("dimension must be positive");
  if (n <= 8) return kKnown[n - 1];
  // floor((n+1)^((n+1)/2) / 2^n), exactly.
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n) + 1,
                static_cast<unsigned long>(n) + 1);
  mpz_sqrt(num.get_mpz_t(), num.get_mpz_t());
  num += 1;
  num >>= n;
  if (!num.fits_ulong_p()) throw ValidationError("dimension too large");
  return num.get_ui();
}

std::vector<uint64_t> DefaultPrimes(int n, int count) {
  std::vector<uint64_t> out;
  for (uint64_t q = MaxZeroOneDeterminant(n) + 1;
       static_cast<int>(out.size()) < count; ++q) {
    if (IsPrime(q)) out.push_back(q);
  }
  return out;
}

mpz_class CountPointsOffArrangement(int n, uint64_t q, int threads) {
  if (n < 1) throw ValidationError("dimension must be positive");
  if (!IsPrime(q)) throw ValidationError(std::to_string(q) + " is not prime");
  if (q > kMaxFieldSize) {
    throw ValidationError("field size " + std::to_string(q) +
                          " exceeds the supported maximum 127");
  }
  const PointCounter counter(n, q);
  const SumSet start = SumSet{1} << 1;  // x_1 = 1
  uint64_t per_unit = 0;
  if (n <= 2) {
    per_unit = counter.Count(start, 1);
  } else {
    // Work units: the value of x_2. Partial counts merge by addition.
    std::vector<int> units;
    for (int x = 1; x < static_cast<int>(q); ++x) {
      if (counter.Admissible(start, x)) units.push_back(x);
    }
    std::vector<uint64_t> partial(units.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t u; (u = next.fetch_add(1)) < units.size();) {
        partial[u] = counter.Count(counter.Extend(start, units[u]), 2);
      }
    };
    const int nthreads =
        std::max(1, std::min(threads, static_cast<int>(units.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    for (uint64_t p : partial) per_unit += p;
  }
  mpz_class total = per_unit;
  total *= static_cast<unsigned long>(q - 1);
  return total;
}

CharPoly FiniteFieldCharPoly(int n, std::span<const uint64_t> primes,
                             const Guards& guards, int threads) {
  Arrangement arrangement(n);
  EnforceGuard(guards, "finite-field n", n, guards.finite_field_max_n);
  if (static_cast<int>(primes.size()) < n + 1) {
    throw ValidationError("need at least n + 1 = " + std::to_string(n + 1) +
                          " primes, got " + std::to_string(primes.size()));
  }
  const uint64_t bound = MaxZeroOneDeterminant(n);
  std::set<uint64_t> seen;
  for (uint64_t q : primes) {
    if (!IsPrime(q)) throw ValidationError(std::to_string(q) + " is not prime");
    if (q <= bound) {
      throw ValidationError("prime " + std::to_string(q) +
                            " does not exceed the largest 0/1 minor " +
                            std::to_string(bound));
    }
    if (!seen.insert(q).second) {
      throw ValidationError("repeated prime " + std::to_string(q));
    }
  }

  std::vector<mpq_class> xs, ys;
  for (uint64_t q : primes) {
    xs.emplace_back(mpz_class(static_cast<unsigned long>(q)));
    ys.emplace_back(CountPointsOffArrangement(n, q, threads));
  }

  // Newton divided differences through the first n + 1 points.
  const int m = n + 1;
  std::vector<mpq_class> dd(ys.begin(), ys.begin() + m);
  for (int level = 1; level < m; ++level) {
    for (int j = m - 1; j >= level; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - level]);
    }
  }
  // Expand sum dd[j] * prod_{l<j} (t - x_l) into monomials (Horner form).
  std::vector<mpq_class> poly(1, dd[m - 1]);
  for (int j = m - 2; j >= 0; --j) {
    std::vector<mpq_class> next(poly.size() + 1);
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[j];
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  poly.resize(n + 1);

  std::vector<mpz_class> coeffs;
  for (mpq_class& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw InvariantError("interpolated point count has a non-integral "
                           "coefficient");
    }
    coeffs.push_back(c.get_num());
  }
  for (size_t j = m; j < xs.size(); ++j) {
    mpz_class value = 0;
    for (int d = n; d >= 0; --d) value = value * xs[j].get_num() + coeffs[d];
    if (value != ys[j]) {
      throw InvariantError("point count for q = " + xs[j].get_str() +
                           " disagrees with the interpolant");
    }
  }
  try {
    return CharPoly(std::move(coeffs));
  } catch (const ValidationError& e) {
    throw InvariantError(std::string("finite-field interpolant: ") + e.what());
  }
}

CharPoly FiniteFieldCharPoly(int n, const Guards& guards, int threads) {
  Arrangement arrangement(n);
  const std::vector<uint64_t> primes = DefaultPrimes(n, n + 1);
  return FiniteFieldCharPoly(n, primes, guards, threads);
}

}  // namespace resonance
