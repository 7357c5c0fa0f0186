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

#include "twoarr/invariants.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "generators.h"
#include "twoarr/error.h"
#include "twoarr/presentation.h"

namespace twoarr {
namespace {

using testing::LoadFixture;
using testing::UniformInt;

IndexSet S(std::initializer_list<int> members) {
  IndexSet s;
  for (int m : members) s = s.With(m - 1);
  return s;
}

Matrix Swap() { return Matrix::FromRows({{0, 1}, {1, 0}}); }

// Random positive-determinant 2x2 integer matrix.
Matrix RandomPositive(std::mt19937& rng) {
  Matrix m = testing::RandomInvertible(rng, 2, 3);
  if (Sign(Determinant(m)) < 0) {
    m(0, 0) = -m(0, 0);
    m(0, 1) = -m(0, 1);
  }
  return m;
}

TEST(KappaTest, FixtureRanks) {
  EXPECT_EQ(KappaRank(Kappa(LoadFixture("four-lines.arr"))), 0u);
  EXPECT_EQ(KappaRank(Kappa(LoadFixture("four-lines-twisted.arr"))), 2u);
  EXPECT_EQ(KappaRank(Kappa(testing::RestrictedFivePlanes(false))), 2u);
  EXPECT_EQ(KappaRank(Kappa(testing::RestrictedFivePlanes(true))), 0u);

  const KappaForm big = Kappa(LoadFixture("five-planes.arr"));
  EXPECT_TRUE(big.extension());
  EXPECT_TRUE(big.basis.empty());
  EXPECT_EQ(KappaRank(big), 0u);
}

TEST(KappaTest, ScalarGramIsSymmetric) {
  const KappaForm kappa = Kappa(LoadFixture("four-lines-twisted.arr"));
  EXPECT_FALSE(kappa.extension());
  ASSERT_EQ(kappa.basis.size(), 3u);
  const auto gram = kappa.ScalarGram();
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) EXPECT_EQ(gram[i][j], gram[j][i]);
  }
  EXPECT_EQ(KappaRank(kappa), 2u);
}

TEST(KappaProperties, RankIgnoresBasisAndLabels) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, 2);
    const KappaForm kappa = Kappa(arr);
    const std::size_t rank = KappaRank(kappa);

    const std::size_t k = kappa.basis.size();
    if (k > 0) {
      const Matrix t = testing::RandomInvertible(rng, static_cast<int>(k), 2);
      std::vector<ExtElement> changed(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          changed[i] += Integer(numerator(t(i, j))) * kappa.basis[j];
        }
      }
      EXPECT_EQ(KappaRank(KappaFromBasis(changed, arr.size())), rank);
    }

    std::vector<int> perm(arr.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(KappaRank(Kappa(testing::Relabel(arr, perm))), rank);
  }
}

TEST(KappaProperties, VanishesForComplexLines) {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomComplexArrangement(rng, 4, 2);
    EXPECT_EQ(KappaRank(Kappa(arr)), 0u);
  }
}

TEST(LinkingTest, FourLines) {
  const SignMatrix twisted = PairwiseLinking(LoadFixture("four-lines-twisted.arr"));
  EXPECT_EQ(twisted[0][1], 1);
  EXPECT_EQ(twisted[1][3], -1);
  EXPECT_EQ(twisted[3][1], -1);
  EXPECT_EQ(twisted[2][2], 0);

  const SignMatrix complex = PairwiseLinking(LoadFixture("four-lines.arr"));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) EXPECT_EQ(complex[a][b], a == b ? 0 : 1);
  }

  const TripleMap triples = TripleCoefficients(LoadFixture("four-lines-twisted.arr"));
  EXPECT_EQ(triples.at(S({1, 2, 3})), 1);
  EXPECT_EQ(triples.at(S({1, 2, 4})), -1);
  EXPECT_EQ(triples.at(S({1, 3, 4})), -1);
  EXPECT_EQ(triples.at(S({2, 3, 4})), 1);
  for (const auto& [members, sign] : TripleCoefficients(LoadFixture("four-lines.arr"))) {
    EXPECT_EQ(sign, 1) << members.ToString();
  }
}

TEST(LinkingTest, NeedsFourDimensions) {
  try {
    TripleCoefficients(LoadFixture("five-planes.arr"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionNot4);
  }
  EXPECT_THROW(PairwiseLinking(LoadFixture("five-planes.arr")), Error);
}

TEST(LinkingProperties, SwappingAPairFlipsOneRow) {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, 2);
    const int n = arr.size();
    const int a = UniformInt(rng, 0, n - 1);
    std::vector<Matrix> m(n, Matrix::Identity(2));
    m[a] = Swap();
    const Arrangement swapped = testing::RecombinePairs(arr, m);
    const SignMatrix before = PairwiseLinking(arr);
    const SignMatrix after = PairwiseLinking(swapped);
    int flips = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) flips += before[i][j] != after[i][j];
    }
    EXPECT_EQ(flips, n - 1);
    EXPECT_EQ(TripleCoefficients(swapped), TripleCoefficients(arr));
  }
}

TEST(LinkingProperties, PositiveRecombinationKeepsSigns) {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, 2);
    std::vector<Matrix> m;
    for (int a = 0; a < arr.size(); ++a) m.push_back(RandomPositive(rng));
    const Arrangement other = testing::RecombinePairs(arr, m);
    EXPECT_EQ(PairwiseLinking(other), PairwiseLinking(arr));
    EXPECT_EQ(TripleCoefficients(other), TripleCoefficients(arr));
  }
}

TEST(LinkingProperties, ReversingAmbientOrientationFlipsTriples) {
  std::mt19937 rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, 2);
    Matrix t = Matrix::Identity(4);
    t(0, 0) = -1;
    const TripleMap before = TripleCoefficients(arr);
    const TripleMap after = TripleCoefficients(testing::TransformAmbient(arr, t));
    for (const auto& [members, sign] : before) EXPECT_EQ(after.at(members), -sign);
  }
}

TEST(LinkingProperties, ComplexLinesLinkPositively) {
  std::mt19937 rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomComplexArrangement(rng, UniformInt(rng, 3, 6), 2);
    for (const auto& [members, sign] : TripleCoefficients(arr)) EXPECT_EQ(sign, 1);
  }
}

TEST(CompareTest, FourLinesAreDistinguished) {
  const ComparisonReport r =
      Compare(LoadFixture("four-lines.arr"), LoadFixture("four-lines-twisted.arr"));
  EXPECT_TRUE(r.same_labeled_matroid);
  EXPECT_EQ(r.isomorphic_matroids, true);
  EXPECT_EQ(r.betti[0], r.betti[1]);
  EXPECT_EQ(r.ideal_ranks[0], r.ideal_ranks[1]);
  EXPECT_EQ(r.kappa_rank[0], 0u);
  EXPECT_EQ(r.kappa_rank[1], 2u);
  EXPECT_EQ(r.differences, (std::vector<std::string>{"kappa_rank", "triples"}));
  EXPECT_EQ(r.verdict, Verdict::kDistinguished);
  EXPECT_EQ(VerdictName(r.verdict), "DISTINGUISHED");
}

TEST(CompareTest, RestrictionMatchesTwistedFourLines) {
  const ComparisonReport r =
      Compare(LoadFixture("four-lines-twisted.arr"), testing::RestrictedFivePlanes(false));
  EXPECT_EQ(r.verdict, Verdict::kOtherwiseUnresolved);
  EXPECT_TRUE(r.differences.empty());
  EXPECT_EQ(VerdictName(r.verdict), "OTHERWISE_UNRESOLVED");

  const ComparisonReport twin =
      Compare(testing::RestrictedFivePlanes(false), testing::RestrictedFivePlanes(true));
  EXPECT_EQ(twin.verdict, Verdict::kDistinguished);
}

TEST(CompareTest, WithoutSearchTheMatroidIsNotJudged) {
  CompareOptions options;
  options.permutation_search = false;
  const ComparisonReport r =
      Compare(LoadFixture("four-lines.arr"), LoadFixture("four-lines.arr"), options);
  EXPECT_FALSE(r.isomorphic_matroids.has_value());
  EXPECT_EQ(r.verdict, Verdict::kOtherwiseUnresolved);
}

TEST(CompareTest, SizeMismatch) {
  try {
    Compare(LoadFixture("four-lines.arr"), LoadFixture("five-planes.arr"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeMismatch);
  }
}

TEST(CompareProperties, RelabeledCopiesAreNeverDistinguished) {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, UniformInt(rng, 2, 3));
    std::vector<int> perm(arr.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const ComparisonReport r = Compare(arr, testing::Relabel(arr, perm));
    EXPECT_EQ(r.isomorphic_matroids, true);
    EXPECT_EQ(r.verdict, Verdict::kOtherwiseUnresolved);
  }
}

}  // namespace
}  // namespace twoarr
