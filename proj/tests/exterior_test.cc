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

#include "twoarr/exterior.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "generators.h"
#include "oracles.h"

namespace twoarr {
namespace {

using testing::UniformInt;

// e_{i j ...} with 1-based indices in the test source.
Monomial E(std::initializer_list<int> indices) {
  IndexSet s;
  for (int i : indices) s = s.With(i - 1);
  return Monomial(s);
}

ExtElement RandomHomogeneous(std::mt19937& rng, int n, int degree) {
  ExtElement x;
  const std::vector<Monomial> monomials = MonomialsOfDegree(n, degree);
  const int terms = UniformInt(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    x.AddTerm(monomials[UniformInt(rng, 0, static_cast<int>(monomials.size()) - 1)],
              UniformInt(rng, -3, 3));
  }
  return x;
}

// The four displayed relations of the complex four-line arrangement.
std::vector<ExtElement> FourLineRelations() {
  return {ExtElement(E({1, 2})) - ExtElement(E({1, 3})) + ExtElement(E({2, 3})),
          ExtElement(E({1, 2})) - ExtElement(E({1, 4})) + ExtElement(E({2, 4})),
          ExtElement(E({1, 3})) - ExtElement(E({1, 4})) + ExtElement(E({3, 4})),
          ExtElement(E({2, 3})) - ExtElement(E({2, 4})) + ExtElement(E({3, 4}))};
}

TEST(NormalizeTest, Examples) {
  std::vector<int> a = {0, 1};
  EXPECT_EQ(Normalize(a).monomial, E({1, 2}));
  EXPECT_EQ(Normalize(a).sign, 1);
  std::vector<int> b = {1, 0};
  EXPECT_EQ(Normalize(b).sign, -1);
  std::vector<int> c = {1, 2, 0, 3};
  EXPECT_EQ(Normalize(c).monomial, E({1, 2, 3, 4}));
  EXPECT_EQ(Normalize(c).sign, 1);
  std::vector<int> d = {2, 0, 2};
  EXPECT_EQ(Normalize(d).sign, 0);
}

TEST(NormalizeTest, SignMatchesBubbleSort) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> indices(UniformInt(rng, 0, 8));
    std::iota(indices.begin(), indices.end(), 0);
    std::shuffle(indices.begin(), indices.end(), rng);
    EXPECT_EQ(Normalize(indices).sign, testing::BubbleSortParity(indices));
  }
}

TEST(MonomialTest, LexicographicOrderAndPrinting) {
  const std::vector<Monomial> deg2 = MonomialsOfDegree(4, 2);
  std::vector<std::string> names;
  for (Monomial m : deg2) names.push_back(m.ToString());
  EXPECT_EQ(names, (std::vector<std::string>{"e12", "e13", "e14", "e23", "e24", "e34"}));
  EXPECT_EQ(Monomial().ToString(), "1");
  EXPECT_EQ(E({3, 11}).ToString(), "e[3,11]");

  std::mt19937 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const IndexSet a(static_cast<std::uint32_t>(UniformInt(rng, 0, 255)));
    const IndexSet b(static_cast<std::uint32_t>(UniformInt(rng, 0, 255)));
    EXPECT_EQ(LexLess{}(a, b), a.Elements() < b.Elements());
  }
}

TEST(WedgeTest, Examples) {
  const ExtElement e1 = ExtElement::Generator(0), e2 = ExtElement::Generator(1);
  EXPECT_EQ(Wedge(e1, e2), ExtElement(E({1, 2})));
  EXPECT_EQ(Wedge(e2, e1), ExtElement(E({1, 2}), -1));
  EXPECT_TRUE(Wedge(e1, e1).IsZero());

  const ExtElement x = ExtElement(E({1, 2})) - ExtElement(E({1, 3})) + ExtElement(E({2, 3}));
  const ExtElement y = ExtElement(E({1, 2})) + ExtElement(E({1, 4})) + ExtElement(E({2, 4}));
  EXPECT_EQ(Wedge(x, y), ExtElement(E({1, 2, 3, 4}), 2));

  const ExtElement z = ExtElement(E({1, 2})) + ExtElement(E({3, 4}));
  EXPECT_EQ(Wedge(z, z), ExtElement(E({1, 2, 3, 4}), 2));
}

TEST(ExtElementTest, Printing) {
  const ExtElement x = ExtElement(E({2, 4})) + ExtElement(E({1, 4})) - ExtElement(E({1, 2}));
  EXPECT_EQ(x.ToString(), "-e12 +e14 +e24");
  EXPECT_EQ((Integer(3) * x).ToString(), "-3*e12 +3*e14 +3*e24");
  EXPECT_EQ(ExtElement().ToString(), "0");
  EXPECT_EQ(x.Degree(), 2);
  EXPECT_EQ((x + ExtElement::Generator(0)).Degree(), std::nullopt);
}

TEST(DegreeSpanRankTest, FourLineIdeal) {
  const std::vector<ExtElement> relations = FourLineRelations();
  const GradedSpan deg2 = DegreeSpanRank(relations, 2, 4);
  EXPECT_EQ(deg2.rank, 3u);
  EXPECT_EQ(deg2.basis.size(), 3u);
  EXPECT_EQ(DegreeSpanRank(relations, 3, 4).rank, 4u);
  EXPECT_EQ(DegreeSpanRank(relations, 4, 4).rank, 1u);
  EXPECT_EQ(DegreeSpanRank(relations, 1, 4).rank, 0u);
  EXPECT_EQ(DegreeSpanRank({}, 2, 4).rank, 0u);
  // The echelon basis spans the same space as the generators.
  std::vector<ExtElement> both = relations;
  both.insert(both.end(), deg2.basis.begin(), deg2.basis.end());
  EXPECT_EQ(SpanRank(both), 3u);
}

TEST(ExteriorProperties, WedgeIsAssociativeAndBilinear) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 3, 6);
    const ExtElement x = RandomHomogeneous(rng, n, UniformInt(rng, 0, 3));
    const ExtElement y = RandomHomogeneous(rng, n, UniformInt(rng, 0, 3));
    const ExtElement y2 = RandomHomogeneous(rng, n, UniformInt(rng, 0, 3));
    const ExtElement z = RandomHomogeneous(rng, n, UniformInt(rng, 0, 3));
    EXPECT_EQ(Wedge(Wedge(x, y), z), Wedge(x, Wedge(y, z)));
    EXPECT_EQ(Wedge(x, y + y2), Wedge(x, y) + Wedge(x, y2));
    EXPECT_EQ(Wedge(y + y2, z), Wedge(y, z) + Wedge(y2, z));
    const Integer k = UniformInt(rng, -4, 4);
    EXPECT_EQ(Wedge(k * x, y), k * Wedge(x, y));
  }
}

TEST(ExteriorProperties, GradedCommutativity) {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 2, 6);
    const int p = UniformInt(rng, 0, 3), q = UniformInt(rng, 0, 3);
    const ExtElement x = RandomHomogeneous(rng, n, std::min(p, n));
    const ExtElement y = RandomHomogeneous(rng, n, std::min(q, n));
    const int dx = std::min(p, n), dy = std::min(q, n);
    const Integer sign = (dx * dy) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(Wedge(x, y), sign * Wedge(y, x));
  }
}

}  // namespace
}  // namespace twoarr
