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

#include "resonance/linalg.h"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "resonance/errors.h"
#include "resonance/modular_span.h"

namespace resonance {
namespace {

// Rational twin of MaskSpan for dimensions beyond the certified modular
// range.
class RationalSpan {
 public:
  explicit RationalSpan(int n) : n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool Add(uint64_t mask) {
    std::vector<mpq_class> v = Lift(mask);
    std::vector<mpq_class> used(rows_.size());
    Reduce(v, used);
    int pivot = 0;
    while (pivot < n_ && v[pivot] == 0) ++pivot;
    if (pivot == n_) return false;
    const int generators = rank() + 1;
    std::vector<mpq_class> comb(generators);
    comb[generators - 1] = 1;
    for (size_t k = 0; k < rows_.size(); ++k) {
      if (used[k] == 0) continue;
      for (size_t j = 0; j < rows_[k].comb.size(); ++j) {
        comb[j] -= used[k] * rows_[k].comb[j];
      }
    }
    const mpq_class inv = 1 / v[pivot];
    for (mpq_class& x : v) x *= inv;
    for (mpq_class& x : comb) x *= inv;
    for (Row& row : rows_) row.comb.resize(generators);
    rows_.push_back(Row{pivot, std::move(v), std::move(comb)});
    return true;
  }

  std::optional<std::vector<mpq_class>> Express(uint64_t mask) const {
    std::vector<mpq_class> v = Lift(mask);
    std::vector<mpq_class> used(rows_.size());
    Reduce(v, used);
    for (const mpq_class& x : v) {
      if (x != 0) return std::nullopt;
    }
    std::vector<mpq_class> coeffs(rank());
    for (size_t k = 0; k < rows_.size(); ++k) {
      for (size_t j = 0; j < rows_[k].comb.size(); ++j) {
        coeffs[j] += used[k] * rows_[k].comb[j];
      }
    }
    return coeffs;
  }

 private:
  struct Row {
    int pivot;
    std::vector<mpq_class> v;
    std::vector<mpq_class> comb;
  };

  std::vector<mpq_class> Lift(uint64_t mask) const {
    std::vector<mpq_class> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = static_cast<long>((mask >> i) & 1);
    return v;
  }

  void Reduce(std::vector<mpq_class>& v, std::vector<mpq_class>& used) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const Row& row = rows_[k];
      const mpq_class f = v[row.pivot];
      if (f == 0) continue;
      for (int i = 0; i < n_; ++i) {
        if (row.v[i] != 0) v[i] -= f * row.v[i];
      }
      used[k] = f;
    }
  }

  int n_;
  std::vector<Row> rows_;
};

std::unordered_set<uint64_t> BitsOf(std::span<const SubsetMask> masks) {
  std::unordered_set<uint64_t> out;
  for (const SubsetMask& m : masks) out.insert(m.bits());
  return out;
}

}  // namespace

struct SpanOracle::Impl {
  std::optional<MaskSpan> fast;
  std::optional<RationalSpan> exact;
};

SpanOracle::SpanOracle(int n) : impl_(std::make_unique<Impl>()) {
  if (n < 1 || n > kMaxMaskDimension) {
    throw ValidationError("span dimension must lie in [1, 63]");
  }
  if (ZeroOneMinorsBelow(n, kSpanPrime)) {
    impl_->fast.emplace(n);
  } else {
    impl_->exact.emplace(n);
  }
}

SpanOracle::~SpanOracle() = default;
SpanOracle::SpanOracle(SpanOracle&&) noexcept = default;
SpanOracle& SpanOracle::operator=(SpanOracle&&) noexcept = default;
SpanOracle::SpanOracle(const SpanOracle& other)
    : impl_(std::make_unique<Impl>(*other.impl_)) {}

bool SpanOracle::Add(uint64_t mask) {
  return impl_->fast ? impl_->fast->Add(mask) : impl_->exact->Add(mask);
}

bool SpanOracle::Contains(uint64_t mask) const {
  if (impl_->fast) return impl_->fast->Contains(mask);
  return impl_->exact->Express(mask).has_value();
}

int SpanOracle::rank() const {
  return impl_->fast ? impl_->fast->rank() : impl_->exact->rank();
}

bool SpanOracle::Support(uint64_t mask, std::vector<int>* support) const {
  support->clear();
  if (impl_->fast) {
    auto coeffs = impl_->fast->Express(mask);
    if (!coeffs) return false;
    for (size_t j = 0; j < coeffs->size(); ++j) {
      if ((*coeffs)[j] != 0) support->push_back(static_cast<int>(j));
    }
    return true;
  }
  auto coeffs = impl_->exact->Express(mask);
  if (!coeffs) return false;
  for (size_t j = 0; j < coeffs->size(); ++j) {
    if ((*coeffs)[j] != 0) support->push_back(static_cast<int>(j));
  }
  return true;
}

int Rank(std::span<const SubsetMask> columns) {
  if (columns.empty()) return 0;
  const int n = SameDimension(columns);
  return Rank(ExactMatrix::FromMasks(columns, n));
}

bool IsIndependent(std::span<const SubsetMask> columns) {
  return Rank(columns) == static_cast<int>(columns.size());
}

int RankModPrime(std::span<const SubsetMask> columns, uint64_t p) {
  if (columns.empty()) return 0;
  const int n = SameDimension(columns);
  std::vector<std::vector<uint64_t>> rows(n,
                                          std::vector<uint64_t>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c) {
    for (int r = 0; r < n; ++r) rows[r][c] = columns[c].Contains(r + 1) ? 1 : 0;
  }
  int rank = 0;
  const int cols = static_cast<int>(columns.size());
  for (int col = 0; col < cols && rank < n; ++col) {
    int piv = rank;
    while (piv < n && rows[piv][col] % p == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[rank]);
    const uint64_t inv = modp::Inverse(rows[rank][col] % p, p);
    for (int i = rank + 1; i < n; ++i) {
      const uint64_t f = modp::Mul(rows[i][col] % p, inv, p);
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        rows[i][j] = (rows[i][j] % p + p - modp::Mul(f, rows[rank][j], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<SubsetMask> Closure(std::span<const SubsetMask> s,
                                std::span<const SubsetMask> universe) {
  const int n = SameDimension(universe, SameDimension(s, 1));
  if (SameDimension(s, n) != n) {
    throw ValidationError("closure: S and universe differ in dimension");
  }
  const std::unordered_set<uint64_t> in_universe = BitsOf(universe);
  SpanOracle span(n);
  for (const SubsetMask& m : s) {
    if (!in_universe.count(m.bits())) {
      throw ValidationError("closure: " + m.ToString() +
                            " is not in the universe");
    }
    span.Add(m.bits());
  }
  std::vector<SubsetMask> out;
  if (span.rank() == 0) return out;
  for (const SubsetMask& h : universe) {
    if (span.Contains(h.bits())) out.push_back(h);
  }
  return out;
}

std::vector<SubsetMask> FundamentalCircuit(std::span<const SubsetMask> t,
                                           SubsetMask e) {
  const int n = SameDimension(t, e.n());
  if (n != e.n()) throw ValidationError("fundamental circuit: dimension mismatch");
  SpanOracle span(n);
  for (const SubsetMask& m : t) {
    if (m == e) {
      throw ValidationError("fundamental circuit: " + e.ToString() +
                            " already belongs to T");
    }
    if (!span.Add(m.bits())) {
      throw ValidationError("fundamental circuit: T is dependent");
    }
  }
  std::vector<int> support;
  if (!span.Support(e.bits(), &support)) {
    throw ValidationError("fundamental circuit: " + e.ToString() +
                          " is not in the closure of T");
  }
  std::vector<SubsetMask> circuit;
  for (int j : support) circuit.push_back(t[j]);
  circuit.push_back(e);
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

bool IsCircuit(std::span<const SubsetMask> c) {
  if (c.empty()) return false;
  const int k = static_cast<int>(c.size());
  if (Rank(c) != k - 1) return false;
  std::vector<SubsetMask> rest;
  for (int skip = 0; skip < k; ++skip) {
    rest.clear();
    for (int j = 0; j < k; ++j) {
      if (j != skip) rest.push_back(c[j]);
    }
    if (!IsIndependent(rest)) return false;
  }
  return true;
}

}  // namespace resonance
