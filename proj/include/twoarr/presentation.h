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

// Signed presentation of the integral cohomology ring of the complement.
//
// For a circuit A = {a_0 < a_1 < ... < a_k} the forms of a_1..a_k are
// linearly independent, so the forms of a_0 have unique expansions
//
//   l_{a_0}  = sum_{j>=1} alpha_j l_{a_j} + beta_j  l'_{a_j}
//   l'_{a_0} = sum_{j>=1} gamma_j l_{a_j} + delta_j l'_{a_j}
//
// and with alpha_0 = delta_0 = -1, beta_0 = gamma_0 = 0 the sums over all
// j vanish. With sigma_j the sign of alpha_j delta_j - beta_j gamma_j the
// circuit contributes the relation
//
//   sum_j (-1)^j sigma_j e_{A \ a_j}
//
// where e_{A \ a_j} is the wedge of the remaining generators in increasing
// order. For complex-linear pairs (l + i l') every sigma_j is +1 and the
// relation is the classical one.

#ifndef TWOARR_PRESENTATION_H_
#define TWOARR_PRESENTATION_H_

#include <cstddef>
#include <vector>

#include "twoarr/arrangement.h"
#include "twoarr/exterior.h"
#include "twoarr/matroid.h"

namespace twoarr {

struct DependencyCoefficients {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;

  Rational Determinant() const { return alpha * delta - beta * gamma; }
};

struct DependencyPair {
  Circuit circuit;
  // One entry per circuit member, in increasing member order; entry 0 is the
  // fixed normalization (-1, 0, 0, -1).
  std::vector<DependencyCoefficients> coefficients;
};

struct CircuitRelation {
  Circuit circuit;
  std::vector<int> signs;  // sigma_j, one per member; signs[0] == +1
  ExtElement element;
};

enum class PresentationMode {
  kReal,     // signs from the dependency determinants
  kComplex,  // all signs +1; requires complex-linear input
};

struct Presentation {
  int n = 0;
  std::vector<CircuitRelation> relations;
  PresentationMode mode = PresentationMode::kReal;

  std::vector<ExtElement> Elements() const;
};

// Throws Error(kNotACircuit) if `circuit` is not a circuit of `arr`.
DependencyPair CircuitDependencies(const Arrangement& arr, const Circuit& circuit);

CircuitRelation CircuitRelationFor(const Arrangement& arr, const Circuit& circuit);

// Throws Error(kModeMismatch) for complex mode on an arrangement with a
// member that was not given as a complex-linear equation.
Presentation FullPresentation(const Arrangement& arr,
                              PresentationMode mode = PresentationMode::kReal);

// Rescales by -1 if needed so the lexicographically first monomial has a
// positive coefficient.
ExtElement NormalizeSign(const ExtElement& element);

std::size_t IdealRank(const Presentation& p, int degree);

// Ranks of the ideal in degrees 1..n.
std::vector<std::size_t> IdealRankProfile(const Presentation& p);

// rank I^p + #NBC_p == C(n, p) for all p.
bool NbcBasisCheck(const Arrangement& arr);

}  // namespace twoarr

#endif  // TWOARR_PRESENTATION_H_
