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

// The matroid of an arrangement: rank is half the real codimension.

#ifndef TWOARR_MATROID_H_
#define TWOARR_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twoarr/arrangement.h"
#include "twoarr/index_set.h"

namespace twoarr {

inline constexpr int kMaxPermutationSearch = 8;

class RankOracle {
 public:
  explicit RankOracle(const Arrangement& arr) : arr_(&arr) {}

  int operator()(IndexSet subset) const {
    return static_cast<int>(Codim(*arr_, subset) / 2);
  }
  int size() const { return arr_->size(); }

 private:
  const Arrangement* arr_;
};

struct Flat {
  IndexSet elements;
  int rank;

  friend bool operator==(const Flat&, const Flat&) = default;
};

struct IntersectionLattice {
  // Sorted by rank, then lexicographically by elements. flats[0] is the
  // bottom (the closure of the empty set), flats.back() the top.
  std::vector<Flat> flats;
  // upper_covers[i] lists the flats covering flats[i].
  std::vector<std::vector<std::size_t>> upper_covers;

  int rank() const { return flats.empty() ? 0 : flats.back().rank; }
  std::vector<Flat> FlatsOfRank(int r) const;
};

struct Circuit {
  IndexSet elements;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct NbcComplex {
  // by_size[p] holds the NBC sets of cardinality p, in lexicographic order.
  std::vector<std::vector<IndexSet>> by_size;

  std::size_t Count(std::size_t p) const {
    return p < by_size.size() ? by_size[p].size() : 0;
  }
  bool Contains(IndexSet s) const;
};

IndexSet Closure(const Arrangement& arr, IndexSet subset);

IntersectionLattice Flats(const Arrangement& arr);

// Sorted lexicographically by element list.
std::vector<Circuit> Circuits(const Arrangement& arr);

// `order` lists member indices from least to greatest; empty means
// 0 < 1 < ... < n-1. A broken circuit is a circuit minus its least member.
NbcComplex NbcSets(const Arrangement& arr, const std::vector<int>& order = {});

// b_p = number of NBC sets of size p, for p = 0..d.
std::vector<std::size_t> BettiVector(const Arrangement& arr);

// mu(bottom, F) for every flat F, aligned with lattice.flats.
std::vector<std::int64_t> Mobius(const IntersectionLattice& lattice);

// |Whitney numbers of the first kind| by rank: sum of |mu| over each rank.
std::vector<std::size_t> WhitneyNumbers(const IntersectionLattice& lattice);

// True iff WhitneyNumbers(Flats(arr)) equals the NBC counts.
bool WhitneyCheck(const Arrangement& arr);

// Same circuits under the identity labeling. Throws Error(kSizeMismatch).
bool SameLabeledMatroid(const Arrangement& a1, const Arrangement& a2);

// A permutation p with circuits(a1) mapped onto circuits(a2) by i -> p[i],
// if one exists. Throws Error(kSizeMismatch) for different sizes or more than
// kMaxPermutationSearch members.
std::optional<std::vector<int>> FindMatroidRelabeling(const Arrangement& a1,
                                                      const Arrangement& a2);

}  // namespace twoarr

#endif  // TWOARR_MATROID_H_
