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

#ifndef RESONANCE_TESTS_ORACLES_H_
#define RESONANCE_TESTS_ORACLES_H_

// Brute-force reference implementations. They share nothing with the
// library beyond GMP: plain Gauss-Jordan over Q, definitions unfolded
// literally, exponential running time. Keep n small.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<mpq_class>>;

// Rank of the span of `rows` over Q.
inline int Rank(Rows rows) {
  if (rows.empty()) return 0;
  const size_t width = rows[0].size();
  int rank = 0;
  for (size_t col = 0; col < width && rank < static_cast<int>(rows.size());
       ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < width; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<mpq_class> Vector(uint64_t mask, int n) {
  std::vector<mpq_class> v(n);
  for (int e = 0; e < n; ++e) v[e] = (mask >> e) & 1;
  return v;
}

inline int MaskRank(const std::vector<uint64_t>& masks, int n) {
  Rows rows;
  for (uint64_t m : masks) rows.push_back(Vector(m, n));
  return Rank(rows);
}

inline bool InSpan(std::vector<uint64_t> s, uint64_t h, int n) {
  const int before = MaskRank(s, n);
  s.push_back(h);
  return MaskRank(s, n) == before;
}

// Minimal dependent: dependent, and every proper subset obtained by dropping
// one element is independent.
inline bool IsCircuit(const std::vector<uint64_t>& c, int n) {
  if (MaskRank(c, n) == static_cast<int>(c.size())) return false;
  for (size_t drop = 0; drop < c.size(); ++drop) {
    std::vector<uint64_t> rest;
    for (size_t j = 0; j < c.size(); ++j) {
      if (j != drop) rest.push_back(c[j]);
    }
    if (MaskRank(rest, n) != static_cast<int>(rest.size())) return false;
  }
  return true;
}

// S (distinct masks) is NBC in the binary order iff it is independent and
// no hyperplane H outside S lies in the span of the elements of S below H.
// (Otherwise a minimal such subset plus H is a circuit with maximum H.)
inline bool IsNbc(std::vector<uint64_t> s, int n) {
  std::sort(s.begin(), s.end());
  if (MaskRank(s, n) != static_cast<int>(s.size())) return false;
  for (uint64_t h = 1; h < (uint64_t{1} << n); ++h) {
    if (std::binary_search(s.begin(), s.end(), h)) continue;
    std::vector<uint64_t> below;
    for (uint64_t x : s) {
      if (x < h) below.push_back(x);
    }
    if (!below.empty() && InSpan(below, h, n)) return false;
  }
  return true;
}

// Calls visit(subset) for every subset of {1..2^n-1} of size <= k, in
// increasing order within each subset.
inline void ForEachHyperplaneSet(
    int n, int k, const std::function<void(const std::vector<uint64_t>&)>& visit) {
  const uint64_t count = (uint64_t{1} << n) - 1;
  std::vector<uint64_t> cur;
  std::function<void(uint64_t)> rec = [&](uint64_t start) {
    visit(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (uint64_t h = start; h <= count; ++h) {
      cur.push_back(h);
      rec(h + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

// b_0..b_imax by counting NBC sets of each size.
inline std::vector<mpz_class> NbcBetti(int n, int i_max) {
  std::vector<mpz_class> b(i_max + 1, 0);
  ForEachHyperplaneSet(n, i_max, [&](const std::vector<uint64_t>& s) {
    if (IsNbc(s, n)) b[s.size()] += 1;
  });
  return b;
}

// b_0..b_n from the Whitney sum over all subsets of hyperplanes:
// chi(t) = sum_S (-1)^|S| t^(n - rank S). Feasible for n <= 4.
inline std::vector<mpz_class> WhitneyBetti(int n) {
  const uint64_t count = (uint64_t{1} << n) - 1;
  std::vector<mpz_class> signed_sum(n + 1, 0);
  for (uint64_t subset = 0; subset < (uint64_t{1} << count); ++subset) {
    std::vector<uint64_t> s;
    for (uint64_t h = 1; h <= count; ++h) {
      if ((subset >> (h - 1)) & 1) s.push_back(h);
    }
    signed_sum[MaskRank(s, n)] += (s.size() % 2 == 0) ? 1 : -1;
  }
  for (mpz_class& x : signed_sum) x = abs(x);
  return signed_sum;
}

// Number of partitions of an m-set into k blocks, by walking restricted
// growth strings.
inline mpz_class SetPartitions(int m, int k) {
  mpz_class count = 0;
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == m) {
      if (used == k) count += 1;
      return;
    }
    for (int b = 0; b <= std::min(used, k - 1); ++b) {
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  if (m == 0) return k == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

// Unordered triples of distinct nonempty subsets of [n], pairwise
// intersecting.
inline mpz_class IntersectingTriples(int n) {
  const uint64_t count = (uint64_t{1} << n) - 1;
  mpz_class total = 0;
  for (uint64_t a = 1; a <= count; ++a) {
    for (uint64_t b = a + 1; b <= count; ++b) {
      if (!(a & b)) continue;
      for (uint64_t c = b + 1; c <= count; ++c) {
        if ((a & c) && (b & c)) total += 1;
      }
    }
  }
  return total;
}

using Family = std::array<uint64_t, 4>;  // sorted

struct FourCircuitCensus {
  std::set<Family> relevant;    // circuits whose three smallest sets meet
  std::set<Family> tetrahedra;  // sum of the three smallest = 2 * largest
  std::set<Family> rectangles;  // a + b = c + d for some pairing
};

// Classifies every 4-element family of A_n by its integer relation.
inline FourCircuitCensus FourCircuits(int n) {
  const uint64_t count = (uint64_t{1} << n) - 1;
  FourCircuitCensus out;
  auto sum_equal = [n](uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    for (int e = 0; e < n; ++e) {
      if (((a >> e) & 1) + ((b >> e) & 1) != ((c >> e) & 1) + ((d >> e) & 1)) {
        return false;
      }
    }
    return true;
  };
  for (uint64_t a = 1; a <= count; ++a) {
    for (uint64_t b = a + 1; b <= count; ++b) {
      if (!(a & b)) continue;
      for (uint64_t c = b + 1; c <= count; ++c) {
        if (!(a & c) || !(b & c)) continue;
        for (uint64_t d = c + 1; d <= count; ++d) {
          if (!IsCircuit({a, b, c, d}, n)) continue;
          const Family f = {a, b, c, d};
          out.relevant.insert(f);
          bool tetra = true;
          for (int e = 0; e < n; ++e) {
            const int lhs = ((a >> e) & 1) + ((b >> e) & 1) + ((c >> e) & 1);
            if (lhs != 2 * static_cast<int>((d >> e) & 1)) tetra = false;
          }
          if (tetra) out.tetrahedra.insert(f);
          if (sum_equal(a, b, c, d) || sum_equal(a, c, b, d) ||
              sum_equal(a, d, b, c)) {
            out.rectangles.insert(f);
          }
        }
      }
    }
  }
  return out;
}

// 3-sets that are not NBC although all their 2-subsets are.
inline std::set<std::array<uint64_t, 3>> BrokenTriples(int n) {
  const uint64_t count = (uint64_t{1} << n) - 1;
  std::set<std::pair<uint64_t, uint64_t>> good_pairs;
  for (uint64_t a = 1; a <= count; ++a) {
    for (uint64_t b = a + 1; b <= count; ++b) {
      if (IsNbc({a, b}, n)) good_pairs.insert({a, b});
    }
  }
  std::set<std::array<uint64_t, 3>> out;
  for (uint64_t a = 1; a <= count; ++a) {
    for (uint64_t b = a + 1; b <= count; ++b) {
      if (!good_pairs.count({a, b})) continue;
      for (uint64_t c = b + 1; c <= count; ++c) {
        if (good_pairs.count({a, c}) && good_pairs.count({b, c}) &&
            !IsNbc({a, b, c}, n)) {
          out.insert({a, b, c});
        }
      }
    }
  }
  return out;
}

}  // namespace oracle

#endif  // RESONANCE_TESTS_ORACLES_H_
