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

#ifndef RESONANCE_EXACT_MATRIX_H_
#define RESONANCE_EXACT_MATRIX_H_

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "resonance/subset_mask.h"

namespace resonance {

// Dense row-major matrix of GMP rationals. No floating point anywhere.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix Identity(int n);
  // Integer literal rows, mainly for tests: FromRows({{2, 1}, {0, 1}}).
  static ExactMatrix FromRows(
      std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix FromRows(const std::vector<std::vector<mpq_class>>& rows);
  // Columns are the characteristic vectors of `columns`, each of length n.
  static ExactMatrix FromMasks(std::span<const SubsetMask> columns, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class& operator()(int r, int c) { return entries_[Index(r, c)]; }
  const mpq_class& operator()(int r, int c) const {
    return entries_[Index(r, c)];
  }

  std::vector<mpq_class> Column(int c) const;
  ExactMatrix SelectColumns(std::span<const int> columns) const;
  ExactMatrix TopRows(int count) const;
  bool IsIntegral() const;

  // One row per line, entries separated by single spaces.
  std::string ToString() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> entries_;
};

// Rank over Q by fraction-free (Bareiss) elimination. Each row is first
// scaled to integers, which does not change the rank.
int Rank(const ExactMatrix& m);

// Scales `row` so that m(row, col) becomes 1 and clears the rest of column
// `col` with row operations. Row operations preserve the column matroid.
// Throws ValidationError on a zero pivot or out-of-range index.
ExactMatrix Pivot(const ExactMatrix& m, int row, int col);

// Unique solution x of a x = b for square nonsingular `a`. Forward
// elimination is fraction-free; back substitution runs over Q. Throws
// ValidationError when `a` is singular or shapes disagree.
std::vector<mpq_class> SolveExact(const ExactMatrix& a,
                                  std::span<const mpq_class> b);

}  // namespace resonance

#endif  // RESONANCE_EXACT_MATRIX_H_
