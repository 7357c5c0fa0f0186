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

#include "twoarr/presentation.h"

#include <random>

#include <gtest/gtest.h>

#include "generators.h"
#include "twoarr/error.h"

namespace twoarr {
namespace {

using testing::LoadFixture;
using testing::UniformInt;

IndexSet S(std::initializer_list<int> members) {
  IndexSet s;
  for (int m : members) s = s.With(m - 1);  // 1-based in the test source
  return s;
}

ExtElement E(std::initializer_list<int> members, int coefficient = 1) {
  return ExtElement(Monomial(S(members)), coefficient);
}

DependencyCoefficients Coeffs(Rational a, Rational b, Rational c, Rational d) {
  return {a, b, c, d};
}

bool SameCoefficients(const DependencyCoefficients& x, const DependencyCoefficients& y) {
  return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma && x.delta == y.delta;
}

// e_a -> sign_a e_a on every monomial.
ExtElement Twist(const ExtElement& x, const std::vector<int>& signs) {
  ExtElement out;
  for (const auto& [m, c] : x.terms()) {
    int s = 1;
    for (int a : m.indices().Elements()) s *= signs[a];
    out.AddTerm(m, s * c);
  }
  return out;
}

Integer Binomial(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

TEST(DependencyTest, TwistedFourLines) {
  const Arrangement arr = LoadFixture("four-lines-twisted.arr");
  const DependencyPair dep = CircuitDependencies(arr, Circuit{S({1, 2, 4})});
  ASSERT_EQ(dep.coefficients.size(), 3u);
  EXPECT_TRUE(SameCoefficients(dep.coefficients[0], Coeffs(-1, 0, 0, -1)));
  EXPECT_TRUE(SameCoefficients(dep.coefficients[1],
                               Coeffs(Rational(1, 2), 0, 0, Rational(-1, 2))));
  EXPECT_TRUE(SameCoefficients(dep.coefficients[2],
                               Coeffs(Rational(-1, 2), 0, 0, Rational(1, 2))));
}

TEST(DependencyTest, ComplexFourLines) {
  const Arrangement arr = LoadFixture("four-lines.arr");
  const DependencyPair dep = CircuitDependencies(arr, Circuit{S({1, 2, 3})});
  ASSERT_EQ(dep.coefficients.size(), 3u);
  EXPECT_TRUE(SameCoefficients(dep.coefficients[1], Coeffs(1, 0, 0, 1)));
  EXPECT_TRUE(SameCoefficients(dep.coefficients[2], Coeffs(-1, 0, 0, -1)));
}

TEST(DependencyTest, RejectsNonCircuits) {
  const Arrangement arr = LoadFixture("four-lines-twisted.arr");
  for (IndexSet s : {S({1, 2}), S({1, 2, 3, 4}), S({1})}) {
    try {
      CircuitDependencies(arr, Circuit{s});
      ADD_FAILURE() << s.ToString();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kNotACircuit);
    }
  }
}

TEST(RelationTest, TwistedFourLines) {
  const Arrangement arr = LoadFixture("four-lines-twisted.arr");
  const Presentation p = FullPresentation(arr);
  ASSERT_EQ(p.relations.size(), 4u);
  EXPECT_EQ(p.relations[0].circuit.elements, S({1, 2, 3}));
  EXPECT_EQ(p.relations[0].signs, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(p.relations[0].element, E({1, 2}) - E({1, 3}) + E({2, 3}));
  EXPECT_EQ(p.relations[1].signs, (std::vector<int>{1, -1, -1}));
  EXPECT_EQ(p.relations[1].element, -E({1, 2}) + E({1, 4}) + E({2, 4}));
  EXPECT_EQ(p.relations[2].signs, (std::vector<int>{1, -1, -1}));
  EXPECT_EQ(p.relations[2].element, -E({1, 3}) + E({1, 4}) + E({3, 4}));
  EXPECT_EQ(p.relations[3].signs, (std::vector<int>{1, 1, -1}));
  EXPECT_EQ(p.relations[3].element, -E({2, 3}) - E({2, 4}) + E({3, 4}));
  EXPECT_EQ(p.relations[1].element.ToString(), "-e12 +e14 +e24");
}

TEST(RelationTest, ComplexFourLinesAgreeInBothModes) {
  const Arrangement arr = LoadFixture("four-lines.arr");
  const Presentation real = FullPresentation(arr, PresentationMode::kReal);
  const Presentation complex = FullPresentation(arr, PresentationMode::kComplex);
  const std::vector<ExtElement> expected = {
      E({1, 2}) - E({1, 3}) + E({2, 3}), E({1, 2}) - E({1, 4}) + E({2, 4}),
      E({1, 3}) - E({1, 4}) + E({3, 4}), E({2, 3}) - E({2, 4}) + E({3, 4})};
  EXPECT_EQ(real.Elements(), expected);
  EXPECT_EQ(complex.Elements(), expected);
  for (const CircuitRelation& r : real.relations) {
    EXPECT_EQ(r.signs, std::vector<int>(3, 1));
  }
}

TEST(RelationTest, ComplexModeNeedsComplexInput) {
  try {
    FullPresentation(LoadFixture("four-lines-twisted.arr"), PresentationMode::kComplex);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kModeMismatch);
  }
  EXPECT_NO_THROW(FullPresentation(LoadFixture("five-planes-complex.arr"),
                                   PresentationMode::kComplex));
  EXPECT_THROW(FullPresentation(LoadFixture("five-planes.arr"), PresentationMode::kComplex),
               Error);
}

TEST(RelationTest, NormalizeSign) {
  EXPECT_EQ(NormalizeSign(-E({1, 2}) + E({1, 4})), E({1, 2}) - E({1, 4}));
  EXPECT_EQ(NormalizeSign(E({1, 3}) - E({2, 4})), E({1, 3}) - E({2, 4}));
  EXPECT_TRUE(NormalizeSign(ExtElement()).IsZero());
}

TEST(IdealTest, RankProfiles) {
  for (const char* name : {"four-lines.arr", "four-lines-twisted.arr"}) {
    const Presentation p = FullPresentation(LoadFixture(name));
    EXPECT_EQ(IdealRankProfile(p), (std::vector<std::size_t>{0, 3, 4, 1})) << name;
  }
  const Presentation big = FullPresentation(LoadFixture("five-planes.arr"));
  EXPECT_EQ(IdealRankProfile(big), (std::vector<std::size_t>{0, 0, 4, 5, 1}));
  for (const Arrangement& arr : testing::AllFixtures()) EXPECT_TRUE(NbcBasisCheck(arr));
}

TEST(PresentationProperties, DependenciesAreExact) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, UniformInt(rng, 2, 3));
    for (const Circuit& c : Circuits(arr)) {
      const DependencyPair dep = CircuitDependencies(arr, c);
      const std::vector<int> members = c.elements.Elements();
      Vector first(arr.dim()), second(arr.dim());
      for (std::size_t j = 0; j < members.size(); ++j) {
        const DependencyCoefficients& k = dep.coefficients[j];
        EXPECT_NE(k.Determinant(), 0);
        const Vector& l = arr[members[j]].first.coefficients();
        const Vector& lp = arr[members[j]].second.coefficients();
        for (int x = 0; x < arr.dim(); ++x) {
          first[x] += k.alpha * l[x] + k.beta * lp[x];
          second[x] += k.gamma * l[x] + k.delta * lp[x];
        }
      }
      EXPECT_EQ(first, Vector(arr.dim()));
      EXPECT_EQ(second, Vector(arr.dim()));
    }
  }
}

TEST(PresentationProperties, ComplexInputSpecializes) {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomComplexArrangement(rng, UniformInt(rng, 3, 6),
                                                              UniformInt(rng, 2, 3));
    for (const Circuit& c : Circuits(arr)) {
      const DependencyPair dep = CircuitDependencies(arr, c);
      for (const DependencyCoefficients& k : dep.coefficients) {
        EXPECT_EQ(k.gamma, -k.beta);
        EXPECT_EQ(k.delta, k.alpha);
      }
    }
    const Presentation real = FullPresentation(arr);
    for (const CircuitRelation& r : real.relations) {
      EXPECT_EQ(r.signs, std::vector<int>(r.signs.size(), 1));
    }
    EXPECT_EQ(real.Elements(), FullPresentation(arr, PresentationMode::kComplex).Elements());
  }
}

TEST(PresentationProperties, IdealComplementsNbcBasis) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 6, UniformInt(rng, 2, 3));
    const Presentation p = FullPresentation(arr);
    const NbcComplex nbc = NbcSets(arr);
    for (int deg = 1; deg <= arr.size(); ++deg) {
      EXPECT_EQ(Integer(IdealRank(p, deg) + nbc.Count(deg)), Binomial(arr.size(), deg));
    }
    EXPECT_TRUE(NbcBasisCheck(arr));
  }
}

TEST(PresentationProperties, RechoosingFormsTwistsGenerators) {
  std::mt19937 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 5, UniformInt(rng, 2, 3));
    std::vector<Matrix> m;
    std::vector<int> signs;
    for (int a = 0; a < arr.size(); ++a) {
      m.push_back(testing::RandomInvertible(rng, 2, 3));
      signs.push_back(Sign(Determinant(m.back())));
    }
    const Arrangement other = testing::RecombinePairs(arr, m);
    const Presentation p = FullPresentation(arr);
    const Presentation q = FullPresentation(other);
    for (int deg : {2, 3}) {
      const GradedSpan before = DegreeSpanRank(p.Elements(), deg, arr.size());
      const GradedSpan after = DegreeSpanRank(q.Elements(), deg, arr.size());
      std::vector<ExtElement> both = after.basis;
      for (const ExtElement& x : before.basis) both.push_back(Twist(x, signs));
      EXPECT_EQ(before.rank, after.rank);
      EXPECT_EQ(SpanRank(both), after.rank);
    }
  }
}

TEST(PresentationProperties, PositiveScalingChangesNothing) {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const Arrangement arr = testing::RandomAdmissible(rng, 5, UniformInt(rng, 2, 3));
    std::vector<Matrix> m;
    for (int a = 0; a < arr.size(); ++a) {
      const Rational c(UniformInt(rng, 1, 5), UniformInt(rng, 1, 5));
      m.push_back(Matrix::FromRows({{c, 0}, {0, c}}));
    }
    EXPECT_EQ(FullPresentation(testing::RecombinePairs(arr, m)).Elements(),
              FullPresentation(arr).Elements());
  }
}

}  // namespace
}  // namespace twoarr
