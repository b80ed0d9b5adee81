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

#include "resonance/universality.h"

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <istream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resonance/errors.h"

namespace resonance {
namespace {

constexpr long kMaxEntry = 4096;

std::string Bits(const ZeroOneVector& v) {
  std::string s;
  for (uint8_t b : v) s += b ? '1' : '0';
  return s;
}

std::string RoleSuffix(VectorRole role) {
  switch (role) {
    case VectorRole::kMinus:
      return "-";
    case VectorRole::kPlus:
      return "+";
    case VectorRole::kPlusPlus:
      return "++";
    case VectorRole::kV:
      break;
  }
  return "";
}

// Empty when V ∪ R are distinct nonzero 0/1 vectors of length N.
std::string StructuralProblem(const Embedding& e) {
  std::set<ZeroOneVector> seen;
  for (const EmbeddedColumn& c : e.columns) {
    if (static_cast<int>(c.bits.size()) != e.N) {
      return c.Label() + " has the wrong length";
    }
    bool nonzero = false;
    for (uint8_t b : c.bits) {
      if (b > 1) return c.Label() + " is not a 0/1 vector";
      nonzero |= (b == 1);
    }
    if (!nonzero) return c.Label() + " is zero";
    if (!seen.insert(c.bits).second) return c.Label() + " repeats a vector";
  }
  return "";
}

ExactMatrix ScaledInput(const Embedding& e, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (int c = 0; c < a.cols(); ++c) {
    for (int r = 0; r < a.rows(); ++r) out(r, c) *= e.scales[c];
  }
  return out;
}

ExactMatrix ColumnsToMatrix(const std::vector<const ZeroOneVector*>& cols,
                            int rows) {
  ExactMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = (*cols[c])[r];
  }
  return m;
}

// "v_3" or "r^{3,++}_2".
bool ParseLabel(const std::string& label, EmbeddedColumn* out) {
  int column = 0, index = 0;
  char sign[3] = {0, 0, 0};
  int consumed = 0;
  if (std::sscanf(label.c_str(), "v_%d%n", &column, &consumed) == 1 &&
      consumed == static_cast<int>(label.size())) {
    out->role = VectorRole::kV;
    out->column = column;
    out->index = 0;
    return column >= 1;
  }
  if (std::sscanf(label.c_str(), "r^{%d,%2[+-]}_%d%n", &column, sign, &index,
                  &consumed) == 3 &&
      consumed == static_cast<int>(label.size())) {
    const std::string s = sign;
    if (s == "-") {
      out->role = VectorRole::kMinus;
    } else if (s == "+") {
      out->role = VectorRole::kPlus;
    } else if (s == "++") {
      out->role = VectorRole::kPlusPlus;
    } else {
      return false;
    }
    out->column = column;
    out->index = index;
    return column >= 1 && index >= 1;
  }
  return false;
}

}  // namespace

ColumnDecomposition DecomposeColumn(std::span<const long> a) {
  long top = 0, bottom = 0;
  for (long x : a) {
    top = std::max(top, x);
    bottom = std::max(bottom, -x);
  }
  ColumnDecomposition d;
  for (long j = 1; j <= top; ++j) {
    std::vector<int> rows;
    for (size_t r = 0; r < a.size(); ++r) {
      if (a[r] >= j) rows.push_back(static_cast<int>(r) + 1);
    }
    d.positive.push_back(std::move(rows));
  }
  for (long k = 1; k <= bottom; ++k) {
    std::vector<int> rows;
    for (size_t r = 0; r < a.size(); ++r) {
      if (a[r] <= -k) rows.push_back(static_cast<int>(r) + 1);
    }
    d.negative.push_back(std::move(rows));
  }
  return d;
}

std::vector<long> Reconstruct(const ColumnDecomposition& d, int rows) {
  std::vector<long> a(rows, 0);
  for (const auto& p : d.positive) {
    for (int r : p) a.at(r - 1) += 1;
  }
  for (const auto& q : d.negative) {
    for (int r : q) a.at(r - 1) -= 1;
  }
  return a;
}

std::string EmbeddedColumn::Label() const {
  if (role == VectorRole::kV) return "v_" + std::to_string(column);
  return "r^{" + std::to_string(column) + "," + RoleSuffix(role) + "}_" +
         std::to_string(index);
}

std::vector<const EmbeddedColumn*> Embedding::V() const {
  std::vector<const EmbeddedColumn*> out;
  for (const EmbeddedColumn& c : columns) {
    if (c.role == VectorRole::kV) out.push_back(&c);
  }
  return out;
}

std::vector<const EmbeddedColumn*> Embedding::R() const {
  std::vector<const EmbeddedColumn*> out;
  for (const EmbeddedColumn& c : columns) {
    if (c.role != VectorRole::kV) out.push_back(&c);
  }
  return out;
}

ExactMatrix Embedding::Assemble() const {
  std::vector<const ZeroOneVector*> cols;
  for (const EmbeddedColumn& c : columns) cols.push_back(&c.bits);
  return ColumnsToMatrix(cols, N);
}

Embedding Embed(const ExactMatrix& a) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw ValidationError("matrix must have at least one row and column");
  }
  Embedding e;
  e.r = a.rows();
  e.n = a.cols();
  std::vector<std::vector<long>> integral(e.n);
  for (int c = 0; c < e.n; ++c) {
    mpz_class lcd = 1;
    bool zero = true;
    for (int r = 0; r < e.r; ++r) {
      mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), a(r, c).get_den_mpz_t());
      zero &= (a(r, c) == 0);
    }
    if (zero) {
      throw ValidationError("column " + std::to_string(c + 1) +
                            " is zero; loops are not supported");
    }
    e.scales.push_back(lcd);
    for (int r = 0; r < e.r; ++r) {
      const mpq_class scaled = a(r, c) * lcd;
      const mpz_class& v = scaled.get_num();
      if (abs(v) > kMaxEntry) {
        throw ValidationError("entry " + v.get_str() + " of column " +
                              std::to_string(c + 1) + " exceeds " +
                              std::to_string(kMaxEntry) + " after scaling");
      }
      integral[c].push_back(v.get_si());
    }
    e.decompositions.push_back(DecomposeColumn(integral[c]));
  }

  // Layout: e_1..e_r, then per column the -, + and ++ blocks.
  e.layout.push_back({"e", 0, e.r});
  int next = e.r;
  std::vector<int> minus_at(e.n), plus_at(e.n), plusplus_at(e.n);
  for (int i = 0; i < e.n; ++i) {
    const ColumnDecomposition& d = e.decompositions[i];
    const std::string col = std::to_string(i + 1);
    minus_at[i] = next;
    e.layout.push_back({"e^{" + col + ",-}", next, d.m_minus()});
    next += d.m_minus();
    plus_at[i] = next;
    e.layout.push_back({"e^{" + col + ",+}", next, d.m_plus()});
    next += d.m_plus();
    plusplus_at[i] = next;
    e.layout.push_back({"e^{" + col + ",++}", next, d.m_plus()});
    next += d.m_plus();
  }
  e.N = next;

  auto chi = [&](const std::vector<int>& rows) {
    ZeroOneVector v(e.N, 0);
    for (int r : rows) v[r - 1] = 1;
    return v;
  };
  for (int i = 0; i < e.n; ++i) {
    const ColumnDecomposition& d = e.decompositions[i];
    EmbeddedColumn v{VectorRole::kV, i + 1, 0, ZeroOneVector(e.N, 0)};
    for (int j = 0; j < d.m_plus(); ++j) v.bits[plusplus_at[i] + j] = 1;
    for (int k = 0; k < d.m_minus(); ++k) v.bits[minus_at[i] + k] = 1;
    e.columns.push_back(std::move(v));
    for (int k = 0; k < d.m_minus(); ++k) {
      EmbeddedColumn rk{VectorRole::kMinus, i + 1, k + 1, chi(d.negative[k])};
      rk.bits[minus_at[i] + k] = 1;
      e.columns.push_back(std::move(rk));
    }
    for (int j = 0; j < d.m_plus(); ++j) {
      EmbeddedColumn rj{VectorRole::kPlus, i + 1, j + 1, chi(d.positive[j])};
      rj.bits[plus_at[i] + j] = 1;
      e.columns.push_back(std::move(rj));
    }
    for (int j = 0; j < d.m_plus(); ++j) {
      EmbeddedColumn rj{VectorRole::kPlusPlus, i + 1, j + 1,
                        ZeroOneVector(e.N, 0)};
      rj.bits[plus_at[i] + j] = 1;
      rj.bits[plusplus_at[i] + j] = 1;
      e.columns.push_back(std::move(rj));
    }
  }
  return e;
}

Verification VerifyEmbedding(const Embedding& e, const ExactMatrix& a) {
  Verification out;
  if (a.rows() != e.r || a.cols() != e.n ||
      static_cast<int>(e.scales.size()) != e.n ||
      static_cast<int>(e.decompositions.size()) != e.n) {
    out.failure = "embedding was built for a different shape";
    return out;
  }
  if (const std::string p = StructuralProblem(e); !p.empty()) {
    out.failure = p;
    return out;
  }
  // Row of the pivot for each R column, following the layout.
  auto block_start = [&](int column, VectorRole role) {
    const std::string name = "e^{" + std::to_string(column) + "," +
                             RoleSuffix(role) + "}";
    for (const CoordinateBlock& b : e.layout) {
      if (b.name == name) return b.begin;
    }
    throw InvariantError("layout lacks block " + name);
  };
  std::vector<std::pair<int, int>> schedule;
  for (int i = 1; i <= e.n; ++i) {
    std::vector<std::pair<int, int>> minus, plus;
    for (int c = 0; c < static_cast<int>(e.columns.size()); ++c) {
      const EmbeddedColumn& col = e.columns[c];
      if (col.column != i || col.role == VectorRole::kV) continue;
      const int row = block_start(i, col.role) + col.index - 1;
      if (col.role == VectorRole::kMinus) {
        minus.emplace_back(row, c);
      } else {
        // + and ++ interleave by j: sort key (j, role).
        plus.emplace_back(col.index * 2 + (col.role == VectorRole::kPlusPlus),
                          c);
      }
    }
    std::sort(minus.begin(), minus.end());
    std::sort(plus.begin(), plus.end());
    for (const auto& [row, c] : minus) schedule.emplace_back(row, c);
    for (const auto& [key, c] : plus) {
      const EmbeddedColumn& col = e.columns[c];
      schedule.emplace_back(block_start(i, col.role) + col.index - 1, c);
    }
  }

  ExactMatrix m = e.Assemble();
  for (const auto& [row, c] : schedule) {
    if (m(row, c) == 0) {
      out.failure = "zero pivot at row " + std::to_string(row) + ", column " +
                    e.columns[c].Label();
      out.pivoted = m;
      return out;
    }
    m = Pivot(m, row, c);
    out.pivots.emplace_back(row, c);
  }
  out.pivoted = m;

  std::set<int> pivot_rows;
  for (const auto& [row, c] : schedule) {
    for (int r = 0; r < m.rows(); ++r) {
      if (m(r, c) != (r == row ? 1 : 0)) {
        out.failure = e.columns[c].Label() + " is not a unit vector";
        return out;
      }
    }
    pivot_rows.insert(row);
  }
  for (int r = 0; r < e.r; ++r) {
    if (pivot_rows.count(r)) {
      out.failure = "a pivot landed in the first r rows";
      return out;
    }
  }

  std::vector<int> v_cols;
  for (int c = 0; c < static_cast<int>(e.columns.size()); ++c) {
    if (e.columns[c].role == VectorRole::kV) v_cols.push_back(c);
  }
  out.residual = m.SelectColumns(v_cols).TopRows(e.r);
  if (!(out.residual == ScaledInput(e, a))) {
    out.failure = "residual differs from the input matrix";
    return out;
  }
  out.ok = true;
  return out;
}

bool MinorMatroidCheck(const Embedding& e, const ExactMatrix& a,
                       uint64_t sample_budget, uint64_t seed) {
  if (a.rows() != e.r || a.cols() != e.n) return false;
  if (!StructuralProblem(e).empty()) return false;
  const std::vector<const EmbeddedColumn*> v = e.V();
  const std::vector<const EmbeddedColumn*> rs = e.R();
  if (static_cast<int>(v.size()) != e.n) return false;

  std::vector<const ZeroOneVector*> r_bits;
  for (const EmbeddedColumn* c : rs) r_bits.push_back(&c->bits);
  const int rank_r = Rank(ColumnsToMatrix(r_bits, e.N));
  if (rank_r != static_cast<int>(rs.size())) return false;

  auto agrees = [&](uint64_t subset) {
    std::vector<const ZeroOneVector*> cols = r_bits;
    std::vector<int> picked;
    for (int i = 0; i < e.n; ++i) {
      if ((subset >> i) & 1) {
        cols.push_back(&v[i]->bits);
        picked.push_back(i);
      }
    }
    const int big = Rank(ColumnsToMatrix(cols, e.N)) - rank_r;
    return big == Rank(a.SelectColumns(picked));
  };

  if (e.n < 64 && (uint64_t{1} << e.n) <= sample_budget) {
    for (uint64_t s = 0; s < (uint64_t{1} << e.n); ++s) {
      if (!agrees(s)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  const uint64_t mask = e.n >= 64 ? ~uint64_t{0} : (uint64_t{1} << e.n) - 1;
  for (uint64_t t = 0; t < sample_budget; ++t) {
    if (!agrees(rng() & mask)) return false;
  }
  return true;
}

ExactMatrix ParseMatrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string* out) {
    while (std::getline(in, line)) {
      ++line_no;
      const size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      *out = line;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw ValidationError("matrix file line " + std::to_string(line_no) +
                          ": " + what);
  };

  std::string header;
  if (!next_line(&header)) fail("missing \"r n\" header");
  std::istringstream hs(header);
  long r = 0, n = 0;
  std::string extra;
  if (!(hs >> r >> n) || (hs >> extra)) fail("expected \"r n\"");
  if (r < 1 || n < 1 || r > 64 || n > 64) {
    fail("dimensions must lie in [1, 64]");
  }
  ExactMatrix m(static_cast<int>(r), static_cast<int>(n));
  for (int row = 0; row < r; ++row) {
    std::string text;
    if (!next_line(&text)) fail("expected " + std::to_string(r) + " rows");
    std::istringstream ls(text);
    std::string token;
    int col = 0;
    while (ls >> token) {
      if (col >= n) fail("too many entries");
      mpq_class value;
      if (value.set_str(token, 10) != 0 || value.get_den() == 0) {
        fail("bad entry \"" + token + "\"");
      }
      value.canonicalize();
      m(row, col++) = value;
    }
    if (col != n) fail("expected " + std::to_string(n) + " entries");
  }
  std::string rest;
  if (next_line(&rest)) fail("unexpected extra content");
  return m;
}

nlohmann::ordered_json CertificateJson(const Embedding& e,
                                       const Verification* verification) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["r"] = e.r;
  j["n"] = e.n;
  j["N"] = e.N;
  ordered_json scales = ordered_json::array();
  for (const mpz_class& s : e.scales) scales.push_back(s.get_str());
  j["column_scales"] = scales;
  j["decomposition"] = "level sets";
  ordered_json decs = ordered_json::array();
  for (const ColumnDecomposition& d : e.decompositions) {
    decs.push_back({{"P", d.positive}, {"N", d.negative}});
  }
  j["decompositions"] = decs;
  ordered_json layout = ordered_json::array();
  for (const CoordinateBlock& b : e.layout) {
    layout.push_back({{"name", b.name}, {"begin", b.begin}, {"size", b.size}});
  }
  j["layout"] = layout;
  ordered_json vs = ordered_json::array(), rs = ordered_json::array();
  for (const EmbeddedColumn* c : e.V()) {
    vs.push_back({{"label", c->Label()}, {"bits", Bits(c->bits)}});
  }
  for (const EmbeddedColumn* c : e.R()) {
    rs.push_back({{"label", c->Label()}, {"bits", Bits(c->bits)}});
  }
  j["V"] = vs;
  j["R"] = rs;
  if (verification) {
    ordered_json pivots = ordered_json::array();
    for (const auto& [row, col] : verification->pivots) {
      pivots.push_back({{"row", row}, {"column", e.columns[col].Label()}});
    }
    j["pivots"] = pivots;
    j["verified"] = verification->ok;
    if (!verification->ok) j["failure"] = verification->failure;
  }
  return j;
}

Embedding EmbeddingFromCertificate(const nlohmann::json& j) {
  Embedding e;
  try {
    e.r = j.at("r").get<int>();
    e.n = j.at("n").get<int>();
    e.N = j.at("N").get<int>();
    for (const auto& s : j.at("column_scales")) {
      e.scales.emplace_back(s.get<std::string>());
    }
    for (const auto& d : j.at("decompositions")) {
      ColumnDecomposition cd;
      cd.positive = d.at("P").get<std::vector<std::vector<int>>>();
      cd.negative = d.at("N").get<std::vector<std::vector<int>>>();
      e.decompositions.push_back(std::move(cd));
    }
    for (const auto& b : j.at("layout")) {
      e.layout.push_back({b.at("name").get<std::string>(),
                          b.at("begin").get<int>(), b.at("size").get<int>()});
    }
    std::vector<EmbeddedColumn> all;
    for (const char* part : {"V", "R"}) {
      for (const auto& c : j.at(part)) {
        EmbeddedColumn col;
        const std::string label = c.at("label").get<std::string>();
        if (!ParseLabel(label, &col)) {
          throw ValidationError("bad column label \"" + label + "\"");
        }
        const std::string bits = c.at("bits").get<std::string>();
        if (static_cast<int>(bits.size()) != e.N) {
          throw ValidationError(label + " does not have N bits");
        }
        for (char ch : bits) {
          if (ch != '0' && ch != '1') {
            throw ValidationError(label + " is not a bitstring");
          }
          col.bits.push_back(ch == '1');
        }
        all.push_back(std::move(col));
      }
    }
    // Block-matrix order: v_i, then the r-vectors of column i as listed.
    std::stable_sort(all.begin(), all.end(),
                     [](const EmbeddedColumn& a, const EmbeddedColumn& b) {
                       if (a.column != b.column) return a.column < b.column;
                       return a.role == VectorRole::kV &&
                              b.role != VectorRole::kV;
                     });
    e.columns = std::move(all);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed certificate: ") + ex.what());
  }
  if (static_cast<int>(e.scales.size()) != e.n ||
      static_cast<int>(e.decompositions.size()) != e.n) {
    throw ValidationError("certificate lists the wrong number of columns");
  }
  return e;
}

}  // namespace resonance
