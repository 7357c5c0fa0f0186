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

#include "twoarr/arrangement.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "twoarr/error.h"

namespace twoarr {

LinearForm::LinearForm(Vector coefficients)
    : coefficients_(std::move(coefficients)) {
  if (std::all_of(coefficients_.begin(), coefficients_.end(),
                  [](const Rational& c) { return c == 0; })) {
    throw Error(ErrorKind::kZeroForm, "linear form with all coefficients zero");
  }
}

bool ComplexFormSpec::IsZero() const {
  auto zero = [](const ComplexNumber& c) { return c.re == 0 && c.im == 0; };
  return std::all_of(z.begin(), z.end(), zero) &&
         std::all_of(zbar.begin(), zbar.end(), zero);
}

bool ComplexFormSpec::IsComplexLinear() const {
  return std::all_of(zbar.begin(), zbar.end(), [](const ComplexNumber& c) {
    return c.re == 0 && c.im == 0;
  });
}

std::pair<LinearForm, LinearForm> FromComplexForm(const ComplexFormSpec& spec,
                                                  int d) {
  if (static_cast<int>(spec.z.size()) != d ||
      static_cast<int>(spec.zbar.size()) != d) {
    throw Error(ErrorKind::kParse, "complex form needs " + std::to_string(d) +
                                       " z and zbar coefficients");
  }
  if (spec.IsZero()) {
    throw Error(ErrorKind::kZeroForm, "complex form with all coefficients zero");
  }
  Vector re(2 * d), im(2 * d);
  for (int j = 0; j < d; ++j) {
    const ComplexNumber& p = spec.z[j];
    const ComplexNumber& q = spec.zbar[j];
    // (a+ib)(x+iy) + (c+id)(x-iy)
    re[2 * j] = p.re + q.re;
    re[2 * j + 1] = -p.im + q.im;
    im[2 * j] = p.im + q.im;
    im[2 * j + 1] = p.re - q.re;
  }
  return {LinearForm(std::move(re)), LinearForm(std::move(im))};
}

Arrangement::Arrangement(int dim, std::vector<SubspacePair> subspaces)
    : dim_(dim), subspaces_(std::move(subspaces)) {
  if (dim_ < 0 || dim_ % 2 != 0) {
    throw Error(ErrorKind::kValidation,
                "ambient dimension must be even, got " + std::to_string(dim_));
  }
  if (size() > kMaxMembers) {
    throw Error(ErrorKind::kValidation,
                "at most " + std::to_string(kMaxMembers) + " members supported");
  }
  std::set<std::string> names;
  for (const SubspacePair& s : subspaces_) {
    if (s.first.dim() != static_cast<std::size_t>(dim_) ||
        s.second.dim() != static_cast<std::size_t>(dim_)) {
      throw Error(ErrorKind::kValidation,
                  "member '" + s.name + "' has forms of the wrong length");
    }
    if (!names.insert(s.name).second) {
      throw Error(ErrorKind::kValidation, "duplicate member name '" + s.name + "'");
    }
  }
}

int Arrangement::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (subspaces_[i].name == label) return i;
  }
  if (!label.empty() && label.size() < 4 &&
      std::all_of(label.begin(), label.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int position = std::stoi(std::string(label));
    if (position >= 1 && position <= size()) return position - 1;
  }
  throw Error(ErrorKind::kUnknownLabel, "no member '" + std::string(label) + "'");
}

IndexSet Arrangement::ResolveLabels(const std::vector<std::string>& labels) const {
  IndexSet s;
  for (const std::string& label : labels) s = s.With(IndexOf(label));
  return s;
}

Matrix Arrangement::Forms(IndexSet subset) const {
  std::vector<Vector> rows;
  for (int a : subset.Elements()) {
    rows.push_back(subspaces_[a].first.coefficients());
    rows.push_back(subspaces_[a].second.coefficients());
  }
  return Matrix::FromRows(rows, dim_);
}

bool Arrangement::IsComplex() const {
  return std::all_of(subspaces_.begin(), subspaces_.end(),
                     [](const SubspacePair& s) {
                       return s.complex_spec && s.complex_spec->IsComplexLinear();
                     });
}

std::size_t Codim(const Arrangement& arr, IndexSet subset) {
  if (!subset.IsSubsetOf(IndexSet::Full(arr.size()))) {
    throw Error(ErrorKind::kUnknownLabel,
                "subset " + subset.ToString() + " exceeds the member count");
  }
  return Rank(arr.Forms(subset));
}

IndexSet SpanClosure(const Arrangement& arr, IndexSet subset) {
  if (!subset.IsSubsetOf(IndexSet::Full(arr.size()))) {
    throw Error(ErrorKind::kUnknownLabel,
                "subset " + subset.ToString() + " exceeds the member count");
  }
  const Echelon e = Rref(arr.Forms(subset));
  // A form lies in the row space iff eliminating the pivot columns leaves 0.
  auto in_span = [&](const LinearForm& form) {
    Vector v = form.coefficients();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Rational f = v[e.pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * e.reduced(r, c);
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  };
  IndexSet closure = subset;
  for (int b = 0; b < arr.size(); ++b) {
    if (subset.Contains(b)) continue;
    if (in_span(arr[b].first) && in_span(arr[b].second)) closure = closure.With(b);
  }
  return closure;
}

std::string Violation::Describe() const {
  const std::string r = std::to_string(rank);
  switch (kind) {
    case ViolationKind::kMemberRank:
      return "member " + witness.ToString() + " has form rank " + r +
             " (expected 2)";
    case ViolationKind::kPairwiseRank:
      return "subset " + witness.ToString() + " has rank " + r +
             " (expected 4)";
    case ViolationKind::kOddRank:
      return "subset " + witness.ToString() + " has rank " + r + " (odd)";
    case ViolationKind::kNotEssential:
      return "all forms have rank " + r + " (not essential)";
  }
  return "unknown violation";
}

ValidationReport Validate(const Arrangement& arr) {
  ValidationReport report;
  const int n = arr.size();
  for (int a = 0; a < n; ++a) {
    const std::size_t r = Codim(arr, IndexSet{a});
    if (r != 2) {
      report.violations.push_back({ViolationKind::kMemberRank, IndexSet{a}, r});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::size_t r = Codim(arr, IndexSet{a, b});
      if (r != 4) {
        report.violations.push_back(
            {ViolationKind::kPairwiseRank, IndexSet{a, b}, r});
      }
    }
  }
  // Breadth-first enumeration of the flats of the span closure.
  std::set<std::uint32_t> seen;
  std::deque<IndexSet> queue;
  const IndexSet bottom = SpanClosure(arr, IndexSet{});
  seen.insert(bottom.bits());
  queue.push_back(bottom);
  std::vector<IndexSet> flats;
  while (!queue.empty()) {
    IndexSet flat = queue.front();
    queue.pop_front();
    flats.push_back(flat);
    for (int b = 0; b < n; ++b) {
      if (flat.Contains(b)) continue;
      IndexSet next = SpanClosure(arr, flat.With(b));
      if (seen.insert(next.bits()).second) queue.push_back(next);
    }
  }
  std::sort(flats.begin(), flats.end(), [](IndexSet x, IndexSet y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return LexLess{}(x, y);
  });
  for (IndexSet flat : flats) {
    const std::size_t r = Codim(arr, flat);
    if (r % 2 != 0) {
      report.violations.push_back({ViolationKind::kOddRank, flat, r});
    }
  }
  const std::size_t total = Codim(arr, IndexSet::Full(n));
  if (total != static_cast<std::size_t>(arr.dim())) {
    report.violations.push_back(
        {ViolationKind::kNotEssential, IndexSet::Full(n), total});
  }
  return report;
}

Arrangement Restrict(const Arrangement& arr, int index) {
  if (index < 0 || index >= arr.size()) {
    throw Error(ErrorKind::kUnknownLabel,
                "no member at position " + std::to_string(index + 1));
  }
  const std::vector<Vector> basis = KernelBasis(arr.Forms(IndexSet{index}));
  const int new_dim = static_cast<int>(basis.size());
  auto compose = [&](const LinearForm& form) {
    Vector coefficients(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t c = 0; c < basis[k].size(); ++c) {
        coefficients[k] += form.coefficients()[c] * basis[k][c];
      }
    }
    return coefficients;
  };
  std::vector<SubspacePair> restricted;
  for (int j = 0; j < arr.size(); ++j) {
    if (j == index) continue;
    const SubspacePair& member = arr[j];
    Vector first = compose(member.first);
    Vector second = compose(member.second);
    Matrix stack = Matrix::FromRows({first, second}, basis.size());
    if (Rank(stack) != 2) {
      throw Error(ErrorKind::kDegenerateRestriction,
                  "member '" + member.name + "' does not meet '" +
                      arr[index].name + "' in codimension 2");
    }
    restricted.push_back(SubspacePair{member.name, LinearForm(std::move(first)),
                                      LinearForm(std::move(second)),
                                      std::nullopt});
  }
  return Arrangement(new_dim, std::move(restricted));
}

}  // namespace twoarr
