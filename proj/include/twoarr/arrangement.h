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

// Arrangements of codimension-2 subspaces of R^{2d}, each cut out by an
// ordered pair of real linear forms.
//
// Real coordinates are ordered (x_1, y_1, ..., x_d, y_d) with
// z_j = x_j + i y_j. The order of the two forms of a member fixes the
// orientation of its degree-one cohomology generator; swapping them flips
// the generator's sign.

#ifndef TWOARR_ARRANGEMENT_H_
#define TWOARR_ARRANGEMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoarr/index_set.h"
#include "twoarr/linalg.h"

namespace twoarr {

class LinearForm {
 public:
  // Throws Error(kZeroForm) if every coefficient vanishes.
  explicit LinearForm(Vector coefficients);

  const Vector& coefficients() const { return coefficients_; }
  std::size_t dim() const { return coefficients_.size(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Vector coefficients_;
};

struct ComplexNumber {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexNumber&, const ComplexNumber&) = default;
};

// f = sum_j z[j] * z_j + zbar[j] * conj(z_j).
struct ComplexFormSpec {
  std::vector<ComplexNumber> z;
  std::vector<ComplexNumber> zbar;

  bool IsZero() const;
  // True when no conjugate coordinate appears.
  bool IsComplexLinear() const;

  friend bool operator==(const ComplexFormSpec&,
                         const ComplexFormSpec&) = default;
};

// Real and imaginary parts of the form described by `spec` over C^d.
// Throws Error(kZeroForm) for the zero form and Error(kParse) when the
// coefficient lists do not have length d.
std::pair<LinearForm, LinearForm> FromComplexForm(const ComplexFormSpec& spec,
                                                  int d);

struct SubspacePair {
  std::string name;
  LinearForm first;
  LinearForm second;
  // Present when the pair was produced from a complex equation; kept so that
  // serialization reproduces the input and complex mode can be checked.
  std::optional<ComplexFormSpec> complex_spec;

  friend bool operator==(const SubspacePair&, const SubspacePair&) = default;
};

class Arrangement {
 public:
  // Checks only the shape: even dim, form lengths, member count and label
  // uniqueness (Error(kValidation) otherwise). The geometric conditions are
  // reported by Validate().
  Arrangement(int dim, std::vector<SubspacePair> subspaces);

  int dim() const { return dim_; }
  int complex_dim() const { return dim_ / 2; }
  int size() const { return static_cast<int>(subspaces_.size()); }
  const std::vector<SubspacePair>& subspaces() const { return subspaces_; }
  const SubspacePair& operator[](int i) const { return subspaces_[i]; }

  // Resolves a member name, or failing that a 1-based position.
  // Throws Error(kUnknownLabel).
  int IndexOf(std::string_view label) const;
  IndexSet ResolveLabels(const std::vector<std::string>& labels) const;

  // Forms of the members in `subset`, two rows per member in member order.
  Matrix Forms(IndexSet subset) const;

  // Every member was given as a complex-linear equation.
  bool IsComplex() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int dim_;
  std::vector<SubspacePair> subspaces_;
};

// Real codimension of the intersection of the members in `subset`.
// Throws Error(kUnknownLabel) if `subset` names a nonexistent member.
std::size_t Codim(const Arrangement& arr, IndexSet subset);

// {b : the forms of b lie in the span of the forms of `subset`}.
IndexSet SpanClosure(const Arrangement& arr, IndexSet subset);

enum class ViolationKind {
  kMemberRank,    // a pair of forms that does not have rank 2
  kPairwiseRank,  // two members whose forms do not have rank 4
  kOddRank,       // an intersection of odd codimension
  kNotEssential,  // all forms together do not span the dual space
};

struct Violation {
  ViolationKind kind;
  IndexSet witness;
  std::size_t rank;

  std::string Describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Evenness is checked on the flats of the span closure only: every subset
// spans the same forms as its closure, so it has the same rank.
ValidationReport Validate(const Arrangement& arr);

// Intersects every other member with member `index` and re-expresses the
// result in the coordinates given by KernelBasis of that member's forms.
// Throws Error(kUnknownLabel) or Error(kDegenerateRestriction).
Arrangement Restrict(const Arrangement& arr, int index);

}  // namespace twoarr

#endif  // TWOARR_ARRANGEMENT_H_
