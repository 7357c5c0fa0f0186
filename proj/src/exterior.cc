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
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace twoarr {

namespace {

// Number of transpositions needed to move every index of `b` past the larger
// indices of `a`.
int WedgeSign(IndexSet a, IndexSet b) {
  if (!a.Intersect(b).empty()) return 0;
  int swaps = 0;
  for (int j : b.Elements()) swaps += std::popcount(a.bits() >> (j + 1));
  return swaps % 2 == 0 ? 1 : -1;
}

Integer Lcm(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Matrix rows to primitive integral elements.
std::vector<ExtElement> RowsToElements(const Matrix& m, std::size_t count,
                                       const std::vector<Monomial>& columns) {
  std::vector<ExtElement> out;
  for (std::size_t r = 0; r < count; ++r) {
    Integer scale = 1;
    for (const Rational& v : m.Row(r)) scale = Lcm(scale, denominator(v));
    Integer content = 0;
    std::vector<Integer> ints;
    for (const Rational& v : m.Row(r)) {
      ints.push_back(numerator(v) * (scale / denominator(v)));
      content = boost::multiprecision::gcd(content, ints.back());
    }
    ExtElement e;
    for (std::size_t c = 0; c < ints.size(); ++c) {
      if (ints[c] != 0) e.AddTerm(columns[c], ints[c] / content);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::string Monomial::ToString() const {
  if (indices_.empty()) return "1";
  const std::vector<int> elements = indices_.Elements();
  if (elements.back() < 9) {
    std::string s = "e";
    for (int i : elements) s += static_cast<char>('1' + i);
    return s;
  }
  std::string s = "e[";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(elements[k] + 1);
  }
  return s + "]";
}

SignedMonomial Normalize(std::span<const int> indices) {
  IndexSet set;
  int inversions = 0;
  bool repeated = false;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (set.Contains(indices[i])) repeated = true;
    set = set.With(indices[i]);
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] > indices[j]) ++inversions;
    }
  }
  if (repeated) return {Monomial(set), 0};
  return {Monomial(set), inversions % 2 == 0 ? 1 : -1};
}

std::vector<Monomial> MonomialsOfDegree(int n, int p) {
  std::vector<Monomial> out;
  if (p < 0 || p > n) return out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) == p) out.emplace_back(IndexSet(m));
  }
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

ExtElement::ExtElement(Monomial m, Integer coefficient) {
  AddTerm(m, coefficient);
}

ExtElement ExtElement::Generator(int i) { return ExtElement(Monomial(IndexSet{i})); }

Integer ExtElement::Coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> ExtElement::Degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

void ExtElement::AddTerm(Monomial m, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& other) {
  for (const auto& [m, c] : other.terms_) AddTerm(m, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& other) {
  for (const auto& [m, c] : other.terms_) AddTerm(m, -c);
  return *this;
}

ExtElement ExtElement::operator-() const {
  ExtElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExtElement operator*(const Integer& k, const ExtElement& x) {
  ExtElement out;
  if (k == 0) return out;
  for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, k * c);
  return out;
}

std::string ExtElement::ToString() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " ";
    s += c < 0 ? "-" : "+";
    const Integer magnitude = c < 0 ? Integer(-c) : c;
    if (magnitude != 1) s += magnitude.str() + "*";
    s += m.ToString();
  }
  return s;
}

ExtElement Wedge(const ExtElement& x, const ExtElement& y) {
  ExtElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const int sign = WedgeSign(mx.indices(), my.indices());
      if (sign == 0) continue;
      out.AddTerm(Monomial(mx.indices().Union(my.indices())),
                  sign > 0 ? Integer(cx * cy) : Integer(-(cx * cy)));
    }
  }
  return out;
}

GradedSpan DegreeSpanRank(const std::vector<ExtElement>& generators, int p, int n) {
  const std::vector<Monomial> columns = MonomialsOfDegree(n, p);
  if (columns.empty()) return {};
  std::unordered_map<std::uint32_t, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    column_of[columns[c].indices().bits()] = c;
  }
  std::vector<Vector> rows;
  for (const ExtElement& g : generators) {
    const std::optional<int> degree = g.Degree();
    if (g.IsZero()) continue;
    if (!degree) throw std::invalid_argument("ideal generators must be homogeneous");
    if (*degree > p) continue;
    for (Monomial m : MonomialsOfDegree(n, p - *degree)) {
      const ExtElement product = Wedge(g, ExtElement(m));
      if (product.IsZero()) continue;
      Vector row(columns.size());
      for (const auto& [mono, c] : product.terms()) {
        row[column_of.at(mono.indices().bits())] = Rational(c);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return {};
  const Echelon e = Rref(Matrix::FromRows(rows, columns.size()));
  GradedSpan span;
  span.rank = e.pivots.size();
  span.basis = RowsToElements(e.reduced, span.rank, columns);
  return span;
}

std::size_t SpanRank(const std::vector<ExtElement>& elements) {
  std::map<Monomial, std::size_t, MonomialLess> column_of;
  for (const ExtElement& x : elements) {
    for (const auto& [m, c] : x.terms()) column_of.emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, col] : column_of) col = next++;
  std::vector<Vector> rows;
  for (const ExtElement& x : elements) {
    Vector row(column_of.size());
    for (const auto& [m, c] : x.terms()) row[column_of.at(m)] = Rational(c);
    rows.push_back(std::move(row));
  }
  if (rows.empty() || column_of.empty()) return 0;
  return Rank(Matrix::FromRows(rows, column_of.size()));
}

}  // namespace twoarr
