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

#include "twoarr/error.h"

namespace twoarr {

namespace {

void RequireCircuit(const Arrangement& arr, const Circuit& circuit) {
  const RankOracle rank(arr);
  const IndexSet a = circuit.elements;
  const int k = a.size();
  bool ok = k >= 1 && a.IsSubsetOf(IndexSet::Full(arr.size())) && rank(a) == k - 1;
  if (ok) {
    for (int e : a.Elements()) {
      if (rank(a.Without(e)) != k - 1) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) {
    throw Error(ErrorKind::kNotACircuit, a.ToString() + " is not a circuit");
  }
}

std::size_t Binomial(int n, int p) {
  if (p < 0 || p > n) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= p; ++i) c = c * (n - p + i) / i;
  return c;
}

}  // namespace

std::vector<ExtElement> Presentation::Elements() const {
  std::vector<ExtElement> out;
  for (const CircuitRelation& r : relations) out.push_back(r.element);
  return out;
}

DependencyPair CircuitDependencies(const Arrangement& arr, const Circuit& circuit) {
  RequireCircuit(arr, circuit);
  const std::vector<int> members = circuit.elements.Elements();
  const std::size_t k = members.size() - 1;
  Matrix basis(arr.dim(), 2 * k);
  for (std::size_t j = 1; j <= k; ++j) {
    const SubspacePair& s = arr[members[j]];
    for (int r = 0; r < arr.dim(); ++r) {
      basis(r, 2 * (j - 1)) = s.first.coefficients()[r];
      basis(r, 2 * (j - 1) + 1) = s.second.coefficients()[r];
    }
  }
  const SubspacePair& head = arr[members[0]];
  const Vector first = SolveUnique(basis, head.first.coefficients());
  const Vector second = SolveUnique(basis, head.second.coefficients());
  DependencyPair pair{circuit, {}};
  pair.coefficients.push_back({-1, 0, 0, -1});
  for (std::size_t j = 0; j < k; ++j) {
    pair.coefficients.push_back(
        {first[2 * j], first[2 * j + 1], second[2 * j], second[2 * j + 1]});
  }
  return pair;
}

CircuitRelation CircuitRelationFor(const Arrangement& arr, const Circuit& circuit) {
  const DependencyPair deps = CircuitDependencies(arr, circuit);
  const std::vector<int> members = circuit.elements.Elements();
  CircuitRelation relation{circuit, {}, {}};
  for (std::size_t j = 0; j < members.size(); ++j) {
    const int sigma = Sign(deps.coefficients[j].Determinant());
    if (sigma == 0) {
      // Excluded by the even-rank condition on valid input.
      throw Error(ErrorKind::kValidation,
                  "vanishing dependency determinant on circuit " +
                      circuit.elements.ToString());
    }
    relation.signs.push_back(sigma);
    const int parity = j % 2 == 0 ? 1 : -1;
    relation.element.AddTerm(Monomial(circuit.elements.Without(members[j])),
                             parity * sigma);
  }
  return relation;
}

Presentation FullPresentation(const Arrangement& arr, PresentationMode mode) {
  if (mode == PresentationMode::kComplex && !arr.IsComplex()) {
    throw Error(ErrorKind::kModeMismatch,
                "complex mode needs every member given as a complex-linear equation");
  }
  Presentation p;
  p.n = arr.size();
  p.mode = mode;
  for (const Circuit& c : Circuits(arr)) {
    if (mode == PresentationMode::kReal) {
      p.relations.push_back(CircuitRelationFor(arr, c));
      continue;
    }
    const std::vector<int> members = c.elements.Elements();
    CircuitRelation relation{c, std::vector<int>(members.size(), 1), {}};
    for (std::size_t j = 0; j < members.size(); ++j) {
      relation.element.AddTerm(Monomial(c.elements.Without(members[j])),
                               j % 2 == 0 ? 1 : -1);
    }
    p.relations.push_back(std::move(relation));
  }
  return p;
}

ExtElement NormalizeSign(const ExtElement& element) {
  if (element.IsZero() || element.terms().begin()->second > 0) return element;
  return -element;
}

std::size_t IdealRank(const Presentation& p, int degree) {
  return DegreeSpanRank(p.Elements(), degree, p.n).rank;
}

std::vector<std::size_t> IdealRankProfile(const Presentation& p) {
  std::vector<std::size_t> profile;
  for (int degree = 1; degree <= p.n; ++degree) {
    profile.push_back(IdealRank(p, degree));
  }
  return profile;
}

bool NbcBasisCheck(const Arrangement& arr) {
  const Presentation p = FullPresentation(arr);
  const NbcComplex nbc = NbcSets(arr);
  for (int degree = 0; degree <= arr.size(); ++degree) {
    const std::size_t ideal = degree == 0 ? 0 : IdealRank(p, degree);
    if (ideal + nbc.Count(degree) != Binomial(arr.size(), degree)) return false;
  }
  return true;
}

}  // namespace twoarr
