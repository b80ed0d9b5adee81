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

#include "resonance/nbc.h"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "resonance/errors.h"
#include "resonance/linalg.h"

namespace resonance {
namespace {

constexpr int kMaxReferenceDimension = 24;

void CheckReferenceDimension(int n) {
  if (n > kMaxReferenceDimension) {
    throw GuardError("reference broken-circuit tests scan all hyperplanes; "
                     "n must be at most " +
                     std::to_string(kMaxReferenceDimension));
  }
}

// ---------------------------------------------------------------------------
// Counting engine.

constexpr uint32_t kPrime = 65521;
constexpr int kMaxEngineDimension = 14;

const std::vector<uint16_t>& InverseTable() {
  static const std::vector<uint16_t> table = [] {
    std::vector<uint16_t> inv(kPrime, 0);
    inv[1] = 1;
    for (uint32_t a = 2; a < kPrime; ++a) {
      inv[a] = static_cast<uint16_t>(
          kPrime - static_cast<uint64_t>(kPrime / a) * inv[kPrime % a] % kPrime);
    }
    return inv;
  }();
  return table;
}

// Hyperplanes f > max(S) with their projections to Q^n / span(S), each
// scaled so the first nonzero coordinate is 1.
struct Frontier {
  std::vector<uint32_t> masks;  // ascending
  std::vector<uint16_t> coords;  // masks.size() * n

  void clear() {
    masks.clear();
    coords.clear();
  }
};

class Engine {
 public:
  Engine(int n, int i_max) : n_(n), i_max_(i_max), inv_(InverseTable()) {
    frontiers_.resize(i_max + 2);
    children_.resize(i_max + 2);
    path_.reserve(i_max + 1);
    root_.clear();
    for (uint32_t m = 1; m < (uint32_t{1} << n); ++m) {
      root_.masks.push_back(m);
      for (int c = 0; c < n; ++c) root_.coords.push_back((m >> c) & 1);
    }
  }

  const Frontier& root() const { return root_; }

  // Counts NBC sets of size >= 1 whose smallest element is root.masks[r].
  void CountRoot(size_t r, std::vector<uint64_t>& counts) {
    Descend(root_, r, frontiers_[1]);
    Count(frontiers_[1], 1, counts);
  }

  void Enumerate(const std::function<bool(std::span<const uint32_t>)>& visit) {
    path_.clear();
    stop_ = false;
    Walk(root_, 0, visit);
  }

 private:
  const uint16_t* Row(const Frontier& f, size_t i) const {
    return f.coords.data() + i * n_;
  }

  // Builds the frontier of S + e from the frontier of S, where e is
  // parent.masks[e_index].
  void Descend(const Frontier& parent, size_t e_index, Frontier& child) const {
    child.clear();
    const uint16_t* we = Row(parent, e_index);
    int pivot = 0;
    while (we[pivot] == 0) ++pivot;
    std::array<uint32_t, kMaxEngineDimension> g{};
    for (size_t i = e_index + 1; i < parent.masks.size(); ++i) {
      const uint16_t* wf = Row(parent, i);
      const uint32_t a = wf[pivot];
      int lead = -1;
      for (int c = 0; c < n_; ++c) {
        g[c] = (wf[c] + kPrime - a * we[c] % kPrime) % kPrime;
        if (lead < 0 && g[c]) lead = c;
      }
      if (lead < 0) {
        throw InvariantError("NBC frontier element fell into the closure");
      }
      const uint32_t s = inv_[g[lead]];
      child.masks.push_back(parent.masks[i]);
      for (int c = 0; c < n_; ++c) {
        child.coords.push_back(static_cast<uint16_t>(g[c] * s % kPrime));
      }
    }
  }

  // Indices of class maxima in `f`, i.e. the e with S + e NBC.
  void Children(const Frontier& f, std::vector<uint32_t>& out) {
    out.clear();
    const size_t size = f.masks.size();
    if (size == 0) return;
    size_t cap = 16;
    while (cap < 2 * size) cap <<= 1;
    table_.assign(cap, -1);
    const size_t mask = cap - 1;
    for (size_t i = size; i-- > 0;) {
      const uint16_t* w = Row(f, i);
      uint64_t h = 0x9e3779b97f4a7c15ull;
      for (int c = 0; c < n_; ++c) {
        h = (h ^ w[c]) * 0xff51afd7ed558ccdull;
        h ^= h >> 29;
      }
      size_t slot = h & mask;
      bool found = false;
      while (table_[slot] >= 0) {
        if (std::equal(w, w + n_, Row(f, table_[slot]))) {
          found = true;
          break;
        }
        slot = (slot + 1) & mask;
      }
      if (found) continue;
      table_[slot] = static_cast<int32_t>(i);
      out.push_back(static_cast<uint32_t>(i));
    }
  }

  void Count(const Frontier& f, int depth, std::vector<uint64_t>& counts) {
    counts[depth] += 1;
    if (depth == i_max_) return;
    std::vector<uint32_t>& kids = children_[depth];
    Children(f, kids);
    if (depth + 1 == i_max_) {
      counts[depth + 1] += kids.size();
      return;
    }
    for (uint32_t k : kids) {
      Descend(f, k, frontiers_[depth + 1]);
      Count(frontiers_[depth + 1], depth + 1, counts);
    }
  }

  void Walk(const Frontier& f, int depth,
            const std::function<bool(std::span<const uint32_t>)>& visit) {
    if (!visit(path_)) {
      stop_ = true;
      return;
    }
    if (depth == i_max_) return;
    // Children() reuses scratch per depth; copy before recursing.
    std::vector<uint32_t> kids;
    Children(f, kids);
    std::sort(kids.begin(), kids.end());
    Frontier child;
    for (uint32_t k : kids) {
      Descend(f, k, child);
      path_.push_back(f.masks[k]);
      Walk(child, depth + 1, visit);
      path_.pop_back();
      if (stop_) return;
    }
  }

  int n_;
  int i_max_;
  const std::vector<uint16_t>& inv_;
  Frontier root_;
  std::vector<Frontier> frontiers_;
  std::vector<std::vector<uint32_t>> children_;
  std::vector<int32_t> table_;
  std::vector<uint32_t> path_;
  bool stop_ = false;
};

void CheckNbcRequest(int n, int i_max, const Guards& guards) {
  Arrangement arrangement(n);
  if (i_max < 0 || i_max > n) {
    throw ValidationError("i_max must lie in [0, n], got " +
                          std::to_string(i_max));
  }
  const bool full_ok = guards.override_all || n <= guards.nbc_full_max_n;
  const bool depth_ok =
      guards.override_all ||
      (n <= guards.nbc_depth_max_n && i_max <= guards.nbc_depth_max_i);
  if (!full_ok && !depth_ok) {
    throw GuardError(
        "NBC enumeration for n = " + std::to_string(n) + ", i_max = " +
        std::to_string(i_max) + " exceeds the configured caps (full n <= " +
        std::to_string(guards.nbc_full_max_n) + ", or n <= " +
        std::to_string(guards.nbc_depth_max_n) + " with i_max <= " +
        std::to_string(guards.nbc_depth_max_i) +
        "); use --guard-override for deliberately long runs");
  }
  if (n > kMaxEngineDimension) {
    throw GuardError("the NBC engine is exact only for n <= " +
                     std::to_string(kMaxEngineDimension));
  }
}

}  // namespace

bool IsBrokenCircuit(std::span<const SubsetMask> t, SubsetMask* completion) {
  if (t.empty()) return false;
  const int n = SameDimension(t);
  CheckReferenceDimension(n);
  SpanOracle span(n);
  for (const SubsetMask& m : t) {
    if (!span.Add(m.bits())) return false;  // dependent, or repeated
  }
  const uint64_t top = std::max_element(t.begin(), t.end())->bits();
  std::vector<int> support;
  for (uint64_t h = top + 1; h < (uint64_t{1} << n); ++h) {
    if (span.Support(h, &support) && support.size() == t.size()) {
      if (completion) *completion = SubsetMask(h, n);
      return true;
    }
  }
  return false;
}

bool IsNbc(std::span<const SubsetMask> s) {
  if (s.size() > 16) throw ValidationError("IsNbc is limited to 16 elements");
  SameDimension(s);
  std::vector<SubsetMask> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("IsNbc needs distinct elements");
  }
  std::vector<SubsetMask> t;
  for (uint32_t sub = 1; sub < (uint32_t{1} << sorted.size()); ++sub) {
    t.clear();
    for (size_t j = 0; j < sorted.size(); ++j) {
      if ((sub >> j) & 1) t.push_back(sorted[j]);
    }
    if (IsBrokenCircuit(t)) return false;
  }
  return true;
}

bool NbcExtend(std::span<const SubsetMask> s, SubsetMask e) {
  const int n = SameDimension(s, e.n());
  if (n != e.n()) throw ValidationError("NbcExtend: dimension mismatch");
  CheckReferenceDimension(n);
  for (size_t j = 0; j + 1 < s.size(); ++j) {
    if (!(s[j] < s[j + 1])) {
      throw ValidationError("NbcExtend: S must be strictly increasing");
    }
  }
  if (!s.empty() && !(s.back() < e)) {
    throw ValidationError("NbcExtend: " + e.ToString() +
                          " does not exceed max(S) = " + s.back().ToString());
  }
  SpanOracle before(n);
  for (const SubsetMask& m : s) before.Add(m.bits());
  SpanOracle after = before;
  if (!after.Add(e.bits())) return false;
  for (uint64_t f = e.bits() + 1; f < (uint64_t{1} << n); ++f) {
    if (after.Contains(f) && !before.Contains(f)) return false;
  }
  return true;
}

std::vector<mpz_class> BettiViaNbc(int n, int i_max, const Guards& guards,
                                   int threads) {
  CheckNbcRequest(n, i_max, guards);
  std::vector<mpz_class> betti(i_max + 1, 0);
  betti[0] = 1;
  if (i_max == 0) return betti;

  const size_t roots = (size_t{1} << n) - 1;
  const int nthreads =
      std::max(1, std::min<int>(threads, static_cast<int>(roots)));
  std::vector<std::vector<uint64_t>> partial(
      nthreads, std::vector<uint64_t>(i_max + 1, 0));
  std::atomic<size_t> next{0};
  auto worker = [&](int id) {
    Engine engine(n, i_max);
    for (size_t r; (r = next.fetch_add(1)) < roots;) {
      engine.CountRoot(r, partial[id]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (std::thread& t : pool) t.join();

  for (const auto& counts : partial) {
    for (int d = 1; d <= i_max; ++d) {
      betti[d] += mpz_class(static_cast<unsigned long>(counts[d]));
    }
  }
  return betti;
}

CharPoly CharPolyViaNbc(int n, const Guards& guards, int threads) {
  const std::vector<mpz_class> betti = BettiViaNbc(n, n, guards, threads);
  return CharPoly::FromBetti(betti);
}

void EnumerateNbcSets(
    int n, int i_max,
    const std::function<bool(std::span<const SubsetMask>)>& visit,
    const Guards& guards) {
  CheckNbcRequest(n, i_max, guards);
  Engine engine(n, i_max);
  std::vector<SubsetMask> set;
  engine.Enumerate([&](std::span<const uint32_t> path) {
    set.clear();
    for (uint32_t m : path) set.emplace_back(m, n);
    return visit(set);
  });
}

}  // namespace resonance
