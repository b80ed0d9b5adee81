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

#include "resonance/exact_matrix.h"

#include <gmpxx.h>

#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resonance/errors.h"

namespace resonance {
namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Multiplies each row by the lcm of its denominators.
IntRows ToIntegerRows(const ExactMatrix& m) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }
  return rows;
}

// In-place Bareiss elimination with column skipping. Entry (i, j) below the
// current pivot is always a minor of the input, so every division is exact.
// Returns the pivot columns in order; `rows` ends in row echelon form.
std::vector<int> BareissEliminate(IntRows& rows, int cols) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<int> pivots;
  mpz_class prev = 1;
  mpz_class t;
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int p = rank;
    while (p < nrows && rows[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(rows[p], rows[rank]);
    const mpz_class& piv = rows[rank][col];
    for (int i = rank + 1; i < nrows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        t = piv * rows[i][j] - rows[i][col] * rows[rank][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix shape");
  entries_.assign(static_cast<size_t>(rows) * cols, mpq_class(0));
}

ExactMatrix ExactMatrix::Identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::FromRows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<mpq_class>> q;
  for (const auto& row : rows) {
    q.emplace_back();
    for (long v : row) q.back().emplace_back(v);
  }
  return FromRows(q);
}

ExactMatrix ExactMatrix::FromRows(
    const std::vector<std::vector<mpq_class>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw ValidationError("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::FromMasks(std::span<const SubsetMask> columns, int n) {
  const int dim = SameDimension(columns, n);
  if (dim != n) throw ValidationError("mask dimension differs from n");
  ExactMatrix m(n, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < n; ++r) {
      if (columns[c].Contains(r + 1)) m(r, c) = 1;
    }
  }
  return m;
}

std::vector<mpq_class> ExactMatrix::Column(int c) const {
  std::vector<mpq_class> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::SelectColumns(std::span<const int> columns) const {
  ExactMatrix out(rows_, static_cast<int>(columns.size()));
  for (int j = 0; j < out.cols(); ++j) {
    if (columns[j] < 0 || columns[j] >= cols_) {
      throw ValidationError("column index out of range");
    }
    for (int r = 0; r < rows_; ++r) out(r, j) = (*this)(r, columns[j]);
  }
  return out;
}

ExactMatrix ExactMatrix::TopRows(int count) const {
  if (count < 0 || count > rows_) throw ValidationError("row count out of range");
  ExactMatrix out(count, cols_);
  for (int r = 0; r < count; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  }
  return out;
}

bool ExactMatrix::IsIntegral() const {
  for (const mpq_class& q : entries_) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

std::string ExactMatrix::ToString() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
    os << '\n';
  }
  return os.str();
}

int Rank(const ExactMatrix& m) {
  IntRows rows = ToIntegerRows(m);
  return static_cast<int>(BareissEliminate(rows, m.cols()).size());
}

ExactMatrix Pivot(const ExactMatrix& m, int row, int col) {
  if (row < 0 || row >= m.rows() || col < 0 || col >= m.cols()) {
    throw ValidationError("pivot position out of range");
  }
  if (m(row, col) == 0) {
    throw ValidationError("zero pivot at (" + std::to_string(row) + ", " +
                          std::to_string(col) + ")");
  }
  ExactMatrix out = m;
  const mpq_class inv = 1 / m(row, col);
  for (int c = 0; c < m.cols(); ++c) out(row, c) *= inv;
  for (int r = 0; r < m.rows(); ++r) {
    if (r == row || out(r, col) == 0) continue;
    const mpq_class factor = out(r, col);
    for (int c = 0; c < m.cols(); ++c) out(r, c) -= factor * out(row, c);
  }
  return out;
}

std::vector<mpq_class> SolveExact(const ExactMatrix& a,
                                  std::span<const mpq_class> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) {
    throw ValidationError("SolveExact needs a square system");
  }
  ExactMatrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  IntRows rows = ToIntegerRows(aug);
  const std::vector<int> pivots = BareissEliminate(rows, n + 1);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) {
    throw ValidationError("singular system");
  }
  std::vector<mpq_class> x(n);
  for (int r = n - 1; r >= 0; --r) {
    mpq_class acc = mpq_class(rows[r][n]);
    for (int c = r + 1; c < n; ++c) acc -= mpq_class(rows[r][c]) * x[c];
    x[r] = acc / mpq_class(rows[r][r]);
    x[r].canonicalize();
  }
  return x;
}

}  // namespace resonance
