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

// Invariants that can tell apart arrangements with the same intersection
// lattice.

#ifndef TWOARR_INVARIANTS_H_
#define TWOARR_INVARIANTS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoarr/arrangement.h"
#include "twoarr/exterior.h"

namespace twoarr {

// The multiplication pairing I^2 x I^2 -> Lambda^4 on the degree-2 part of
// the relation ideal. Its rank does not depend on the chosen basis of I^2,
// so it is an invariant of the graded ring. With four generators Lambda^4 is
// one-dimensional and the pairing is a symmetric bilinear form; for other n
// the values are vectors over the degree-4 monomials.
struct KappaForm {
  int n = 0;
  std::vector<ExtElement> basis;
  std::vector<Monomial> top_monomials;
  // gram[i][j][m]: coefficient of top_monomials[m] in basis[i] ^ basis[j].
  std::vector<std::vector<std::vector<Integer>>> gram;

  // True when n != 4, where the pairing is not scalar valued.
  bool extension() const { return n != 4; }
  // The scalar Gram matrix; only meaningful when n == 4.
  std::vector<std::vector<Integer>> ScalarGram() const;
};

KappaForm Kappa(const Arrangement& arr);
KappaForm KappaFromBasis(std::vector<ExtElement> basis, int n);

// Rank over Q of the matrix with rows indexed by the basis and columns by
// (basis element, degree-4 monomial).
std::size_t KappaRank(const KappaForm& kappa);

using SignMatrix = std::vector<std::vector<int>>;
using TripleMap = std::map<IndexSet, int, LexLess>;

// Entry (a, b) is the sign of det(l_a; l'_a; l_b; l'_b) with the ambient
// orientation (x_1, y_1, x_2, y_2): the linking number of the two oriented
// great circles in S^3. Diagonal entries are 0. Throws Error(kDimensionNot4).
SignMatrix PairwiseLinking(const Arrangement& arr);

// For each 3-subset, the product of its three pairwise signs; this does not
// depend on the orientations of the members. Throws Error(kDimensionNot4).
TripleMap TripleCoefficients(const Arrangement& arr);

enum class Verdict {
  kDistinguished,
  // Every computed invariant agrees. This never asserts an isomorphism.
  kOtherwiseUnresolved,
};

std::string_view VerdictName(Verdict v);

struct CompareOptions {
  // Search member relabelings (n <= kMaxPermutationSearch) to decide whether
  // the matroids are isomorphic.
  bool permutation_search = true;
};

struct ComparisonReport {
  bool same_labeled_matroid = false;
  // Set when the relabeling search ran.
  std::optional<bool> isomorphic_matroids;
  std::vector<std::size_t> betti[2];
  std::vector<std::size_t> ideal_ranks[2];
  std::size_t kappa_rank[2] = {0, 0};
  bool kappa_extension = false;
  // Sorted triple coefficients; only when both arrangements live in R^4.
  std::optional<std::vector<int>> triple_multiset[2];
  // Names of the invariants that differ.
  std::vector<std::string> differences;
  Verdict verdict = Verdict::kOtherwiseUnresolved;
};

// Throws Error(kSizeMismatch) if the member counts differ.
ComparisonReport Compare(const Arrangement& a1, const Arrangement& a2,
                         const CompareOptions& options = {});

}  // namespace twoarr

#endif  // TWOARR_INVARIANTS_H_
