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

// The integral exterior algebra on generators e_1, ..., e_n (n <= 16).

#ifndef TWOARR_EXTERIOR_H_
#define TWOARR_EXTERIOR_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twoarr/index_set.h"
#include "twoarr/linalg.h"

namespace twoarr {

// e_{i_1} ^ ... ^ e_{i_k} with i_1 < ... < i_k, stored as the index set.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(IndexSet indices) : indices_(indices) {}

  constexpr IndexSet indices() const { return indices_; }
  constexpr int degree() const { return indices_.size(); }

  // "e12", "e134"; "e[3,11]" once an index exceeds 9; "1" for the unit.
  std::string ToString() const;

  friend constexpr bool operator==(Monomial, Monomial) = default;

 private:
  IndexSet indices_;
};

struct MonomialLess {
  bool operator()(Monomial a, Monomial b) const {
    return LexLess{}(a.indices(), b.indices());
  }
};

struct SignedMonomial {
  Monomial monomial;
  int sign;  // 0 iff an index repeats
};

// Sorts 0-based indices into a monomial and records the permutation parity.
SignedMonomial Normalize(std::span<const int> indices);

// Degree-p monomials over n generators in lexicographic order.
std::vector<Monomial> MonomialsOfDegree(int n, int p);

class ExtElement {
 public:
  using Terms = std::map<Monomial, Integer, MonomialLess>;

  ExtElement() = default;
  ExtElement(Monomial m, Integer coefficient = 1);

  // e_{i+1} for 0-based i.
  static ExtElement Generator(int i);

  const Terms& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  Integer Coefficient(Monomial m) const;
  // The common degree of all terms; nullopt for zero or mixed elements.
  std::optional<int> Degree() const;

  void AddTerm(Monomial m, const Integer& coefficient);

  ExtElement& operator+=(const ExtElement& other);
  ExtElement& operator-=(const ExtElement& other);
  ExtElement operator-() const;
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Integer& k, const ExtElement& x);

  // Signed monomial sum in lexicographic order: "-e12 +e14 +e24", or "0".
  std::string ToString() const;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  Terms terms_;
};

ExtElement Wedge(const ExtElement& x, const ExtElement& y);

struct GradedSpan {
  std::size_t rank = 0;
  // Primitive integral rows of the reduced echelon form, columns ordered by
  // MonomialsOfDegree(n, p).
  std::vector<ExtElement> basis;
};

// The degree-p part of the ideal generated by `generators`: the span of
// g ^ m over generators g and monomials m of complementary degree.
// Generators must be homogeneous.
GradedSpan DegreeSpanRank(const std::vector<ExtElement>& generators, int p, int n);

// Rank over Q of the given elements themselves (no multiplication).
std::size_t SpanRank(const std::vector<ExtElement>& elements);

}  // namespace twoarr

#endif  // TWOARR_EXTERIOR_H_
