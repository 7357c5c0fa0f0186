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

#ifndef TWOARR_INDEX_SET_H_
#define TWOARR_INDEX_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace twoarr {

// Maximum number of subspaces in an arrangement. Subsets of members and
// exterior monomials both pack into one machine word.
inline constexpr int kMaxMembers = 16;

// A set of member indices (0-based) packed into a bitmask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= std::uint32_t{1} << e;
  }
  static IndexSet FromVector(const std::vector<int>& elements) {
    IndexSet s;
    for (int e : elements) s = s.With(e);
    return s;
  }
  static constexpr IndexSet Full(int n) {
    return IndexSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool Contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool IsSubsetOf(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr IndexSet With(int e) const {
    return IndexSet(bits_ | (std::uint32_t{1} << e));
  }
  constexpr IndexSet Without(int e) const {
    return IndexSet(bits_ & ~(std::uint32_t{1} << e));
  }
  constexpr IndexSet Union(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet Intersect(IndexSet o) const {
    return IndexSet(bits_ & o.bits_);
  }
  constexpr IndexSet Minus(IndexSet o) const {
    return IndexSet(bits_ & ~o.bits_);
  }
  // Smallest element; undefined on the empty set.
  constexpr int Min() const { return std::countr_zero(bits_); }

  std::vector<int> Elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // 1-based, comma separated, in braces: {1,2,4}.
  std::string ToString() const {
    std::string s = "{";
    bool first = true;
    for (int e : Elements()) {
      if (!first) s += ",";
      s += std::to_string(e + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic comparison of the increasing element lists, so that
// {1,2} < {1,2,3} < {1,3} < {2}.
struct LexLess {
  bool operator()(IndexSet a, IndexSet b) const {
    if (a == b) return false;
    const std::uint32_t diff = a.bits() ^ b.bits();
    const std::uint32_t low = diff & (~diff + 1);
    // `low` is the first position where the lists disagree; whichever set
    // owns it has the smaller element there, unless the other list has
    // already ended.
    const std::uint32_t above = ~((low << 1) - 1);
    if (a.bits() & low) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
  }
};

}  // namespace twoarr

#endif  // TWOARR_INDEX_SET_H_
