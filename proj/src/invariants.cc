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

#include "twoarr/error.h"
#include "twoarr/matroid.h"
#include "twoarr/presentation.h"

namespace twoarr {

namespace {

void RequireDim4(const Arrangement& arr) {
  if (arr.dim() != 4) {
    throw Error(ErrorKind::kDimensionNot4,
                "linking data needs an arrangement in R^4, got R^" +
                    std::to_string(arr.dim()));
  }
}

std::vector<int> TripleMultiset(const Arrangement& arr) {
  std::vector<int> signs;
  for (const auto& [triple, sign] : TripleCoefficients(arr)) signs.push_back(sign);
  std::sort(signs.begin(), signs.end());
  return signs;
}

}  // namespace

std::vector<std::vector<Integer>> KappaForm::ScalarGram() const {
  std::vector<std::vector<Integer>> scalar(basis.size(),
                                           std::vector<Integer>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      scalar[i][j] = gram[i][j].empty() ? Integer(0) : gram[i][j].front();
    }
  }
  return scalar;
}

KappaForm KappaFromBasis(std::vector<ExtElement> basis, int n) {
  KappaForm kappa;
  kappa.n = n;
  kappa.basis = std::move(basis);
  kappa.top_monomials = MonomialsOfDegree(n, 4);
  const std::size_t size = kappa.basis.size();
  kappa.gram.assign(size, std::vector<std::vector<Integer>>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const ExtElement product = Wedge(kappa.basis[i], kappa.basis[j]);
      std::vector<Integer>& entry = kappa.gram[i][j];
      for (Monomial m : kappa.top_monomials) entry.push_back(product.Coefficient(m));
    }
  }
  return kappa;
}

KappaForm Kappa(const Arrangement& arr) {
  const Presentation p = FullPresentation(arr);
  return KappaFromBasis(DegreeSpanRank(p.Elements(), 2, arr.size()).basis,
                        arr.size());
}

std::size_t KappaRank(const KappaForm& kappa) {
  const std::size_t size = kappa.basis.size();
  const std::size_t width = kappa.top_monomials.size();
  if (size == 0 || width == 0) return 0;
  Matrix flat(size, size * width);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t m = 0; m < width; ++m) {
        flat(i, j * width + m) = Rational(kappa.gram[i][j][m]);
      }
    }
  }
  return Rank(flat);
}

SignMatrix PairwiseLinking(const Arrangement& arr) {
  RequireDim4(arr);
  const int n = arr.size();
  SignMatrix signs(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const SubspacePair& p = arr[a];
      const SubspacePair& q = arr[b];
      signs[a][b] = DetSign(Matrix::FromRows(
          {p.first.coefficients(), p.second.coefficients(),
           q.first.coefficients(), q.second.coefficients()},
          4));
    }
  }
  return signs;
}

TripleMap TripleCoefficients(const Arrangement& arr) {
  const SignMatrix pairwise = PairwiseLinking(arr);
  const int n = arr.size();
  TripleMap triples;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        triples[IndexSet{a, b, c}] = pairwise[a][b] * pairwise[a][c] * pairwise[b][c];
      }
    }
  }
  return triples;
}

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kDistinguished ? "DISTINGUISHED" : "OTHERWISE_UNRESOLVED";
}

ComparisonReport Compare(const Arrangement& a1, const Arrangement& a2,
                         const CompareOptions& options) {
  ComparisonReport report;
  report.same_labeled_matroid = SameLabeledMatroid(a1, a2);
  if (options.permutation_search && a1.size() <= kMaxPermutationSearch) {
    report.isomorphic_matroids = report.same_labeled_matroid ||
                                 FindMatroidRelabeling(a1, a2).has_value();
  }
  const Arrangement* arrs[2] = {&a1, &a2};
  for (int k = 0; k < 2; ++k) {
    report.betti[k] = BettiVector(*arrs[k]);
    const Presentation p = FullPresentation(*arrs[k]);
    report.ideal_ranks[k] = IdealRankProfile(p);
    report.kappa_rank[k] = KappaRank(
        KappaFromBasis(DegreeSpanRank(p.Elements(), 2, p.n).basis, p.n));
  }
  report.kappa_extension = a1.size() != 4;
  if (a1.dim() == 4 && a2.dim() == 4) {
    report.triple_multiset[0] = TripleMultiset(a1);
    report.triple_multiset[1] = TripleMultiset(a2);
  }

  // Member labels are arbitrary, so differing labeled matroids only count
  // once the relabeling search has ruled out an isomorphism.
  if (report.isomorphic_matroids == false) report.differences.push_back("matroid");
  if (report.betti[0] != report.betti[1]) report.differences.push_back("betti");
  if (report.ideal_ranks[0] != report.ideal_ranks[1]) {
    report.differences.push_back("ideal_ranks");
  }
  if (report.kappa_rank[0] != report.kappa_rank[1]) report.differences.push_back("kappa_rank");
  if (report.triple_multiset[0] && report.triple_multiset[0] != report.triple_multiset[1]) {
    report.differences.push_back("triples");
  }
  report.verdict = report.differences.empty() ? Verdict::kOtherwiseUnresolved
                                              : Verdict::kDistinguished;
  return report;
}

}  // namespace twoarr
