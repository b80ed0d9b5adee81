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

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <vector>

#include "oracles.h"
#include "resonance/errors.h"
#include "resonance/exact_matrix.h"
#include "resonance/universality.h"

namespace resonance {
namespace {

ExactMatrix SmallExample() {
  return ExactMatrix::FromRows({{1, -1}, {-2, 0}, {-1, -1}});
}

ExactMatrix RandomIntegerMatrix(std::mt19937_64& rng, int rows, int cols,
                                int bound) {
  ExactMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    bool zero = true;
    while (zero) {
      for (int r = 0; r < rows; ++r) {
        m(r, c) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
        zero &= m(r, c) == 0;
      }
    }
  }
  return m;
}

oracle::Rows Columns(const std::vector<const ZeroOneVector*>& cols) {
  oracle::Rows rows;
  for (const ZeroOneVector* v : cols) {
    rows.emplace_back(v->begin(), v->end());
  }
  return rows;
}

// Contraction identity checked with the reference rank.
bool OracleMinorCheck(const Embedding& e, const ExactMatrix& a) {
  std::vector<const ZeroOneVector*> r;
  for (const EmbeddedColumn* c : e.R()) r.push_back(&c->bits);
  const int rank_r = oracle::Rank(Columns(r));
  if (rank_r != static_cast<int>(r.size())) return false;
  const auto v = e.V();
  for (uint32_t s = 0; s < (1u << e.n); ++s) {
    std::vector<const ZeroOneVector*> cols = r;
    oracle::Rows a_cols;
    for (int i = 0; i < e.n; ++i) {
      if ((s >> i) & 1) {
        cols.push_back(&v[i]->bits);
        a_cols.push_back(a.Column(i));
      }
    }
    if (oracle::Rank(Columns(cols)) - rank_r != oracle::Rank(a_cols)) {
      return false;
    }
  }
  return true;
}

TEST(DecomposeTest, Examples) {
  const std::vector<long> a1 = {1, -2, -1};
  const ColumnDecomposition d1 = DecomposeColumn(a1);
  EXPECT_EQ(d1.positive, (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(d1.negative, (std::vector<std::vector<int>>{{2, 3}, {2}}));
  const std::vector<long> a2 = {-1, 0, -1};
  const ColumnDecomposition d2 = DecomposeColumn(a2);
  EXPECT_TRUE(d2.positive.empty());
  EXPECT_EQ(d2.negative, (std::vector<std::vector<int>>{{1, 3}}));
  const std::vector<long> zero = {0, 0, 0};
  EXPECT_EQ(DecomposeColumn(zero), ColumnDecomposition{});
}

TEST(DecomposeTest, ReconstructionIsIdentity) {
  for (int dim = 1; dim <= 3; ++dim) {
    std::vector<long> a(dim, -10);
    for (;;) {
      ASSERT_EQ(Reconstruct(DecomposeColumn(a), dim), a);
      int j = 0;
      while (j < dim && a[j] == 10) a[j++] = -10;
      if (j == dim) break;
      ++a[j];
    }
  }
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const int dim = 4 + rng() % 6;
    std::vector<long> a(dim);
    for (long& x : a) x = static_cast<long>(rng() % 21) - 10;
    ASSERT_EQ(Reconstruct(DecomposeColumn(a), dim), a);
  }
}

TEST(EmbedTest, SmallExampleMatchesKnownPivots) {
  const ExactMatrix a = SmallExample();
  const Embedding e = Embed(a);
  EXPECT_EQ(e.N, 8);
  std::vector<std::string> labels;
  for (const EmbeddedColumn& c : e.columns) labels.push_back(c.Label());
  EXPECT_EQ(labels, (std::vector<std::string>{"v_1", "r^{1,-}_1", "r^{1,-}_2",
                                              "r^{1,+}_1", "r^{1,++}_1", "v_2",
                                              "r^{2,-}_1"}));
  const ExactMatrix before = ExactMatrix::FromRows({
      {0, 0, 0, 1, 0, 0, 1},
      {0, 1, 1, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 1, 1, 0, 0},
      {1, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 1},
  });
  EXPECT_EQ(e.Assemble(), before);
  const Verification v = VerifyEmbedding(e, a);
  ASSERT_TRUE(v.ok) << v.failure;
  const ExactMatrix after = ExactMatrix::FromRows({
      {1, 0, 0, 0, 0, -1, 0},
      {-2, 0, 0, 0, 0, 0, 0},
      {-1, 0, 0, 0, 0, -1, 0},
      {1, 1, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0},
      {-1, 0, 0, 1, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 1},
  });
  EXPECT_EQ(v.pivoted, after);
  EXPECT_EQ(v.residual, a);
  EXPECT_TRUE(MinorMatroidCheck(e, a));
  EXPECT_TRUE(OracleMinorCheck(e, a));
}

TEST(EmbedTest, SmallExamples) {
  const ExactMatrix id = ExactMatrix::Identity(2);
  const Embedding e = Embed(id);
  EXPECT_EQ(e.N, 6);
  EXPECT_EQ(e.R().size(), 4u);
  EXPECT_TRUE(VerifyEmbedding(e, id).ok);
  const ExactMatrix one = ExactMatrix::FromRows({{1}});
  const Embedding f = Embed(one);
  EXPECT_EQ(f.N, 3);
  EXPECT_EQ(f.V().size(), 1u);
  EXPECT_EQ(f.R().size(), 2u);
  EXPECT_TRUE(VerifyEmbedding(f, one).ok);
}

TEST(EmbedTest, RejectsZeroColumnsAndHugeEntries) {
  EXPECT_THROW(Embed(ExactMatrix::FromRows({{1, 0}, {2, 0}})), ValidationError);
  EXPECT_THROW(Embed(ExactMatrix::FromRows({{5000}})), ValidationError);
  EXPECT_THROW(Embed(ExactMatrix()), ValidationError);
}

TEST(EmbedTest, RationalColumnsAreScaled) {
  ExactMatrix a = ExactMatrix::FromRows({{1, 2}, {0, 1}});
  a(0, 0) = mpq_class(1, 2);
  a(1, 0) = mpq_class(-1, 3);
  const Embedding e = Embed(a);
  EXPECT_EQ(e.scales[0], 6);
  EXPECT_EQ(e.scales[1], 1);
  const Verification v = VerifyEmbedding(e, a);
  EXPECT_TRUE(v.ok) << v.failure;
  EXPECT_TRUE(MinorMatroidCheck(e, a));
}

TEST(VerifyTest, TamperedEmbeddingFails) {
  const ExactMatrix a = SmallExample();
  Embedding e = Embed(a);
  e.columns[1].bits[0] ^= 1;  // one bit of r^{1,-}_1
  EXPECT_FALSE(VerifyEmbedding(e, a).ok);
}

TEST(VerifyTest, DuplicateVectorFailsMinorCheck) {
  const ExactMatrix a = SmallExample();
  Embedding e = Embed(a);
  e.columns[0].bits = e.columns[1].bits;  // v_1 := r^{1,-}_1
  EXPECT_FALSE(MinorMatroidCheck(e, a));
  EXPECT_FALSE(VerifyEmbedding(e, a).ok);
}

TEST(VerifyTest, RandomThreeByFour) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const ExactMatrix a = RandomIntegerMatrix(rng, 3, 4, 3);
    const Embedding e = Embed(a);
    ASSERT_TRUE(MinorMatroidCheck(e, a)) << a.ToString();
    ASSERT_TRUE(OracleMinorCheck(e, a)) << a.ToString();
  }
}

TEST(VerifyTest, HundredRandomMatrices) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + rng() % 4, n = 1 + rng() % 6;
    const ExactMatrix a = RandomIntegerMatrix(rng, r, n, 4);
    const Embedding e = Embed(a);
    int expected_n = r;
    for (const ColumnDecomposition& d : e.decompositions) {
      expected_n += d.m_minus() + 2 * d.m_plus();
    }
    ASSERT_EQ(e.N, expected_n);
    std::vector<const ZeroOneVector*> rs;
    for (const EmbeddedColumn* c : e.R()) rs.push_back(&c->bits);
    ASSERT_EQ(oracle::Rank(Columns(rs)), static_cast<int>(rs.size()));
    const Verification v = VerifyEmbedding(e, a);
    ASSERT_TRUE(v.ok) << v.failure << "\n" << a.ToString();
    ASSERT_TRUE(MinorMatroidCheck(e, a)) << a.ToString();
  }
}

TEST(VerifyTest, SampledMinorCheckIsDeterministic) {
  std::mt19937_64 rng(54);
  const ExactMatrix a = RandomIntegerMatrix(rng, 4, 6, 4);
  const Embedding e = Embed(a);
  EXPECT_TRUE(MinorMatroidCheck(e, a, 16, 9));
  EXPECT_TRUE(MinorMatroidCheck(e, a, 16, 10));
}

TEST(ParseMatrixTest, AcceptsCommentsAndFractions) {
  std::istringstream in("# example\n\n2 2\n1 -1/2\n  0 3\n");
  const ExactMatrix m = ParseMatrix(in);
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m(0, 1), mpq_class(-1, 2));
  EXPECT_EQ(m(1, 1), 3);
}

TEST(ParseMatrixTest, RejectsMalformedInput) {
  for (const char* text : {"", "2\n1 2\n", "1 2\n1\n", "1 2\n1 2 3\n",
                           "1 1\nx\n", "1 1\n1/0\n", "2 1\n1\n",
                           "1 1\n1\n2\n", "0 1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(ParseMatrix(in), ValidationError) << text;
  }
}

TEST(CertificateTest, RoundTrip) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix a =
        RandomIntegerMatrix(rng, 1 + rng() % 4, 1 + rng() % 5, 4);
    const Embedding e = Embed(a);
    const Verification v = VerifyEmbedding(e, a);
    const nlohmann::ordered_json cert = CertificateJson(e, &v);
    EXPECT_TRUE(cert["verified"].get<bool>());
    const nlohmann::json parsed = nlohmann::json::parse(cert.dump());
    const Embedding back = EmbeddingFromCertificate(parsed);
    EXPECT_EQ(back.Assemble(), e.Assemble());
    EXPECT_EQ(back.scales, e.scales);
    EXPECT_EQ(back.decompositions, e.decompositions);
    EXPECT_TRUE(VerifyEmbedding(back, a).ok);
  }
}

TEST(CertificateTest, RejectsMalformedCertificates) {
  const Embedding e = Embed(SmallExample());
  nlohmann::json cert = nlohmann::json::parse(CertificateJson(e, nullptr).dump());
  nlohmann::json bad_label = cert;
  bad_label["V"][0]["label"] = "w_1";
  EXPECT_THROW(EmbeddingFromCertificate(bad_label), ValidationError);
  nlohmann::json short_bits = cert;
  short_bits["R"][0]["bits"] = "0101";
  EXPECT_THROW(EmbeddingFromCertificate(short_bits), ValidationError);
  nlohmann::json missing = cert;
  missing.erase("layout");
  EXPECT_THROW(EmbeddingFromCertificate(missing), ValidationError);
}

}  // namespace
}  // namespace resonance
