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

#ifndef RESONANCE_TABLE1_H_
#define RESONANCE_TABLE1_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resonance/guards.h"

namespace resonance {

// The known values of b_i(A_n), 1 <= i <= 4, and of R_n, for n <= 9,
// compiled in from data/table1.json. Unknown entries are nullopt.
class GoldenTable {
 public:
  static const GoldenTable& Get();

  int n_max() const { return static_cast<int>(regions_.size()); }
  int i_max() const { return static_cast<int>(betti_.size()); }
  // nullopt for unknown entries; throws ValidationError outside the table.
  std::optional<mpz_class> Betti(int i, int n) const;
  std::optional<mpz_class> Regions(int n) const;

 private:
  GoldenTable();

  std::vector<std::vector<std::optional<mpz_class>>> betti_;  // [i-1][n-1]
  std::vector<std::optional<mpz_class>> regions_;
};

enum class CellStatus {
  kMatch,
  kMismatch,
  kUnknown,      // the golden value is unknown; nothing is computed
  kNotComputed,  // every method is outside the configured guards
};

std::string ToString(CellStatus s);

struct Table1Cell {
  // i in 1..4 for b_i; 0 for the chamber count R_n.
  int i = 0;
  int n = 0;
  std::optional<mpz_class> golden;
  std::vector<std::pair<std::string, mpz_class>> computed;  // method, value
  CellStatus status = CellStatus::kNotComputed;

  std::string Name() const;  // "b_2(A_5)" or "R_5"
};

struct Table1Report {
  std::vector<Table1Cell> cells;

  int Count(CellStatus s) const;
  bool ok() const { return Count(CellStatus::kMismatch) == 0; }
};

// Recomputes every cell with n <= n_max and i <= i_max (plus R_n when
// `with_regions`) by each method the guards allow: closed forms for
// b_1..b_3, circuit census and prototypes for b_3 and below, NBC
// enumeration, and for R_n the full characteristic polynomial by NBC and
// by finite fields. Cells whose golden value is unknown are skipped.
Table1Report BuildTable1Report(int n_max, int i_max, bool with_regions,
                               const Guards& guards = {}, int threads = 1);

}  // namespace resonance

#endif  // RESONANCE_TABLE1_H_
