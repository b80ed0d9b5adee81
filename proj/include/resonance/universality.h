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

#ifndef RESONANCE_UNIVERSALITY_H_
#define RESONANCE_UNIVERSALITY_H_

#include <gmpxx.h>

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "resonance/exact_matrix.h"

namespace resonance {

// Compiles the matroid of a rational matrix A (r x n) into a minor of the
// matroid of A_N: restrict to V ∪ R, then contract R.

// a = sum_j chi(P_j) - sum_k chi(N_k), with the level sets
// P_j = {rows : a_row >= j} and N_k = {rows : a_row <= -k}. Row indices are
// 1-based.
struct ColumnDecomposition {
  std::vector<std::vector<int>> positive;
  std::vector<std::vector<int>> negative;

  int m_plus() const { return static_cast<int>(positive.size()); }
  int m_minus() const { return static_cast<int>(negative.size()); }
  friend bool operator==(const ColumnDecomposition&,
                         const ColumnDecomposition&) = default;
};

ColumnDecomposition DecomposeColumn(std::span<const long> a);

// Inverse of DecomposeColumn: the integer vector of length `rows`.
std::vector<long> Reconstruct(const ColumnDecomposition& d, int rows);

using ZeroOneVector = std::vector<uint8_t>;

// A named range of coordinates of Q^N: "e" (the first r), or "e^{i,-}",
// "e^{i,+}", "e^{i,++}" for input column i (1-based).
struct CoordinateBlock {
  std::string name;
  int begin = 0;
  int size = 0;
};

enum class VectorRole { kV, kMinus, kPlus, kPlusPlus };

// One column of the assembled matrix.
struct EmbeddedColumn {
  VectorRole role = VectorRole::kV;
  int column = 0;  // input column i, 1-based
  int index = 0;   // k or j, 1-based; 0 for v_i
  ZeroOneVector bits;

  // "v_1", "r^{1,-}_2", "r^{2,++}_1"
  std::string Label() const;
};

struct Embedding {
  int r = 0;
  int n = 0;
  int N = 0;
  // Each input column was multiplied by scales[i] (its least common
  // denominator) to make it integral.
  std::vector<mpz_class> scales;
  std::vector<ColumnDecomposition> decompositions;
  std::vector<CoordinateBlock> layout;
  // v_1, r^{1,-}_*, r^{1,+}_*, r^{1,++}_*, v_2, ... as in the block matrix.
  std::vector<EmbeddedColumn> columns;

  std::vector<const EmbeddedColumn*> V() const;
  std::vector<const EmbeddedColumn*> R() const;
  // N x (n + |R|) matrix with `columns` as its columns.
  ExactMatrix Assemble() const;
};

// Throws ValidationError for a zero column or an empty matrix. Entries are
// limited to |a| <= 4096 after scaling, which bounds N.
Embedding Embed(const ExactMatrix& a);

struct Verification {
  bool ok = false;
  std::string failure;                    // empty when ok
  std::vector<std::pair<int, int>> pivots;  // (row, column), 0-based
  ExactMatrix pivoted;                    // after all pivots
  ExactMatrix residual;                   // first r rows of the V columns
};

// Runs the pivot sequence of the construction: for every input column, on
// (e^{i,-}_k, r^{i,-}_k) for each k, then on (e^{i,+}_j, r^{i,+}_j) and
// (e^{i,++}_j, r^{i,++}_j) for each j. Succeeds iff every vector is a
// distinct nonzero 0/1 vector, every pivot entry is nonzero, every R column
// ends as a unit vector, and the residual equals A with its columns scaled
// by E.scales.
Verification VerifyEmbedding(const Embedding& e, const ExactMatrix& a);

// For subsets S of the input columns (all of them when 2^n <= budget, else
// `budget` random ones drawn with `seed`): rank(V_S ∪ R) - rank(R) must
// equal rank(A_S). Also requires R independent and V ∪ R distinct nonzero
// 0/1 vectors.
bool MinorMatroidCheck(const Embedding& e, const ExactMatrix& a,
                       uint64_t sample_budget = 4096, uint64_t seed = 1);

// Matrix file: a line "r n", then r lines of n entries. Entries are
// integers or fractions p/q. Lines starting with '#' and blank lines are
// ignored. Throws ValidationError with the offending line number.
ExactMatrix ParseMatrix(std::istream& in);

// N, the decompositions, layout, V and R as bitstrings, and, when given,
// the pivot sequence and verification outcome. Numbers that may exceed 64
// bits are decimal strings.
nlohmann::ordered_json CertificateJson(const Embedding& e,
                                       const Verification* verification);

// Reads back the embedding part of a certificate. Throws ValidationError on
// missing fields, malformed labels or bitstrings of the wrong length.
Embedding EmbeddingFromCertificate(const nlohmann::json& j);

}  // namespace resonance

#endif  // RESONANCE_UNIVERSALITY_H_
