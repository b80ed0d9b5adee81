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

#include "resonance/table1.h"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "resonance/arrangement.h"
#include "resonance/errors.h"
#include "resonance/nbc.h"
#include "resonance/prototype.h"
#include "resonance/quad_circuits.h"
#include "resonance/stirling.h"
#include "resonance/table1_data.h"

namespace resonance {
namespace {

std::optional<mpz_class> ParseCell(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  return mpz_class(v.get<std::string>());
}

}  // namespace

GoldenTable::GoldenTable() {
  const nlohmann::json j = nlohmann::json::parse(internal::kTable1Json);
  for (const auto& v : j.at("regions")) regions_.push_back(ParseCell(v));
  for (int i = 1; j.at("betti").contains(std::to_string(i)); ++i) {
    std::vector<std::optional<mpz_class>> row;
    for (const auto& v : j.at("betti").at(std::to_string(i))) {
      row.push_back(ParseCell(v));
    }
    betti_.push_back(std::move(row));
  }
}

const GoldenTable& GoldenTable::Get() {
  static const GoldenTable table;
  return table;
}

std::optional<mpz_class> GoldenTable::Betti(int i, int n) const {
  if (i < 1 || i > i_max() || n < 1 || n > n_max()) {
    throw ValidationError("b_" + std::to_string(i) + "(A_" +
                          std::to_string(n) + ") is outside the table");
  }
  return betti_[i - 1][n - 1];
}

std::optional<mpz_class> GoldenTable::Regions(int n) const {
  if (n < 1 || n > n_max()) {
    throw ValidationError("R_" + std::to_string(n) + " is outside the table");
  }
  return regions_[n - 1];
}

std::string ToString(CellStatus s) {
  switch (s) {
    case CellStatus::kMatch:
      return "MATCH";
    case CellStatus::kMismatch:
      return "MISMATCH";
    case CellStatus::kUnknown:
      return "UNKNOWN";
    case CellStatus::kNotComputed:
      return "NOT_COMPUTED";
  }
  return "?";
}

std::string Table1Cell::Name() const {
  if (i == 0) return "R_" + std::to_string(n);
  return "b_" + std::to_string(i) + "(A_" + std::to_string(n) + ")";
}

int Table1Report::Count(CellStatus s) const {
  int count = 0;
  for (const Table1Cell& c : cells) count += (c.status == s);
  return count;
}

Table1Report BuildTable1Report(int n_max, int i_max, bool with_regions,
                               const Guards& guards, int threads) {
  const GoldenTable& golden = GoldenTable::Get();
  if (n_max < 1 || n_max > golden.n_max() || i_max < 1 ||
      i_max > golden.i_max()) {
    throw ValidationError("the table covers 1 <= n <= " +
                          std::to_string(golden.n_max()) + " and 1 <= i <= " +
                          std::to_string(golden.i_max()));
  }
  std::map<int, StirlingCombination> prototypes;
  auto prototype_value = [&](int i, int n) -> std::optional<mpz_class> {
    if (!prototypes.count(i)) {
      try {
        prototypes[i] = Coefficients(i, guards);
      } catch (const GuardError&) {
        return std::nullopt;
      }
    }
    return prototypes[i].Evaluate(n);
  };

  Table1Report report;
  for (int n = 1; n <= n_max; ++n) {
    // One NBC run per n, deep enough for every requested known cell.
    int deepest = 0;
    for (int i = 1; i <= i_max; ++i) {
      if (golden.Betti(i, n)) deepest = i;
    }
    std::optional<std::vector<mpz_class>> nbc;
    if (deepest > 0) {
      try {
        nbc = BettiViaNbc(n, std::min(deepest, n), guards, threads);
      } catch (const GuardError&) {
      }
    }

    for (int i = 1; i <= i_max; ++i) {
      Table1Cell cell;
      cell.i = i;
      cell.n = n;
      cell.golden = golden.Betti(i, n);
      if (!cell.golden) {
        cell.status = CellStatus::kUnknown;
        report.cells.push_back(std::move(cell));
        continue;
      }
      if (i == 1) {
        cell.computed.emplace_back("closed-form", (mpz_class(1) << n) - 1);
      } else if (i == 2) {
        cell.computed.emplace_back("closed-form", B2Closed(n));
      } else if (i == 3) {
        cell.computed.emplace_back("closed-form", B3Closed(n));
        cell.computed.emplace_back("circuits", B3ViaCircuits(n));
      }
      if (i <= 3) {
        if (auto v = prototype_value(i, n)) {
          cell.computed.emplace_back("prototypes", *v);
        }
      }
      if (nbc && i <= deepest) {
        cell.computed.emplace_back(
            "nbc", i < static_cast<int>(nbc->size()) ? (*nbc)[i]
                                                     : mpz_class(0));
      }
      report.cells.push_back(std::move(cell));
    }

    if (with_regions) {
      Table1Cell cell;
      cell.n = n;
      cell.golden = golden.Regions(n);
      if (!cell.golden) {
        cell.status = CellStatus::kUnknown;
        report.cells.push_back(std::move(cell));
        continue;
      }
      try {
        cell.computed.emplace_back(
            "nbc", RegionCount(CharPolyViaNbc(n, guards, threads)));
      } catch (const GuardError&) {
      }
      try {
        cell.computed.emplace_back(
            "finite-field",
            RegionCount(FiniteFieldCharPoly(n, guards, threads)));
      } catch (const GuardError&) {
      }
      report.cells.push_back(std::move(cell));
    }
  }

  for (Table1Cell& cell : report.cells) {
    if (cell.status == CellStatus::kUnknown) continue;
    if (cell.computed.empty()) {
      cell.status = CellStatus::kNotComputed;
      continue;
    }
    cell.status = CellStatus::kMatch;
    for (const auto& [method, value] : cell.computed) {
      if (value != *cell.golden) cell.status = CellStatus::kMismatch;
    }
  }
  return report;
}

}  // namespace resonance
