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

#include "twoarr/matroid.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "twoarr/error.h"

namespace twoarr {

namespace {

bool RankThenLex(IndexSet a, int ra, IndexSet b, int rb) {
  if (ra != rb) return ra < rb;
  return LexLess{}(a, b);
}

std::set<std::uint32_t> CircuitBits(const Arrangement& arr) {
  std::set<std::uint32_t> bits;
  for (const Circuit& c : Circuits(arr)) bits.insert(c.elements.bits());
  return bits;
}

IndexSet Permute(IndexSet s, const std::vector<int>& perm) {
  IndexSet out;
  for (int e : s.Elements()) out = out.With(perm[e]);
  return out;
}

}  // namespace

std::vector<Flat> IntersectionLattice::FlatsOfRank(int r) const {
  std::vector<Flat> out;
  for (const Flat& f : flats) {
    if (f.rank == r) out.push_back(f);
  }
  return out;
}

bool NbcComplex::Contains(IndexSet s) const {
  if (static_cast<std::size_t>(s.size()) >= by_size.size()) return false;
  const auto& group = by_size[s.size()];
  return std::find(group.begin(), group.end(), s) != group.end();
}

IndexSet Closure(const Arrangement& arr, IndexSet subset) {
  return SpanClosure(arr, subset);
}

IntersectionLattice Flats(const Arrangement& arr) {
  const RankOracle rank(arr);
  std::set<std::uint32_t> seen;
  std::vector<IndexSet> frontier{Closure(arr, IndexSet{})};
  std::vector<Flat> flats;
  seen.insert(frontier.front().bits());
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (IndexSet f : frontier) {
      flats.push_back({f, rank(f)});
      // With a matroid rank, a member inside a cover already found gives that
      // same cover.
      IndexSet covered = f;
      for (int b = 0; b < arr.size(); ++b) {
        if (covered.Contains(b)) continue;
        IndexSet g = Closure(arr, f.With(b));
        covered = covered.Union(g);
        if (seen.insert(g.bits()).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) {
    return RankThenLex(x.elements, x.rank, y.elements, y.rank);
  });
  IntersectionLattice lattice;
  lattice.upper_covers.resize(flats.size());
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = 0; j < flats.size(); ++j) {
      if (flats[j].rank == flats[i].rank + 1 &&
          flats[i].elements.IsSubsetOf(flats[j].elements)) {
        lattice.upper_covers[i].push_back(j);
      }
    }
  }
  lattice.flats = std::move(flats);
  return lattice;
}

std::vector<Circuit> Circuits(const Arrangement& arr) {
  const RankOracle rank(arr);
  const int n = arr.size();
  std::vector<std::uint32_t> by_size;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) by_size.push_back(m);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return IndexSet(a).size() < IndexSet(b).size();
                   });
  std::vector<Circuit> found;
  for (std::uint32_t m : by_size) {
    const IndexSet s(m);
    bool contains_circuit = false;
    for (const Circuit& c : found) {
      if (c.elements.IsSubsetOf(s)) {
        contains_circuit = true;
        break;
      }
    }
    if (contains_circuit) continue;
    // No smaller circuit inside, so dependent means minimally dependent.
    if (rank(s) < s.size()) found.push_back({s});
  }
  std::sort(found.begin(), found.end(), [](const Circuit& a, const Circuit& b) {
    return LexLess{}(a.elements, b.elements);
  });
  return found;
}

NbcComplex NbcSets(const Arrangement& arr, const std::vector<int>& order) {
  const int n = arr.size();
  std::vector<int> position(n);
  if (order.empty()) {
    std::iota(position.begin(), position.end(), 0);
  } else {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity) {
      throw Error(ErrorKind::kParse, "element order is not a permutation of the members");
    }
    for (int k = 0; k < n; ++k) position[order[k]] = k;
  }
  std::vector<IndexSet> broken;
  for (const Circuit& c : Circuits(arr)) {
    int least = -1;
    for (int e : c.elements.Elements()) {
      if (least < 0 || position[e] < position[least]) least = e;
    }
    broken.push_back(c.elements.Without(least));
  }
  NbcComplex complex;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    const IndexSet s(m);
    bool ok = true;
    for (IndexSet b : broken) {
      if (b.IsSubsetOf(s)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (complex.by_size.size() <= static_cast<std::size_t>(s.size())) {
      complex.by_size.resize(s.size() + 1);
    }
    complex.by_size[s.size()].push_back(s);
  }
  for (auto& group : complex.by_size) std::sort(group.begin(), group.end(), LexLess{});
  return complex;
}

std::vector<std::size_t> BettiVector(const Arrangement& arr) {
  const NbcComplex nbc = NbcSets(arr);
  std::vector<std::size_t> betti(arr.complex_dim() + 1);
  for (std::size_t p = 0; p < betti.size(); ++p) betti[p] = nbc.Count(p);
  return betti;
}

std::vector<std::int64_t> Mobius(const IntersectionLattice& lattice) {
  const auto& flats = lattice.flats;
  std::vector<std::int64_t> mu(flats.size(), 0);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j].elements != flats[i].elements &&
          flats[j].elements.IsSubsetOf(flats[i].elements)) {
        sum += mu[j];
      }
    }
    mu[i] = -sum;
  }
  return mu;
}

std::vector<std::size_t> WhitneyNumbers(const IntersectionLattice& lattice) {
  const std::vector<std::int64_t> mu = Mobius(lattice);
  std::vector<std::size_t> w(lattice.rank() + 1, 0);
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    w[lattice.flats[i].rank] += static_cast<std::size_t>(std::llabs(mu[i]));
  }
  return w;
}

bool WhitneyCheck(const Arrangement& arr) {
  const std::vector<std::size_t> whitney = WhitneyNumbers(Flats(arr));
  const NbcComplex nbc = NbcSets(arr);
  const std::size_t len = std::max(whitney.size(), nbc.by_size.size());
  for (std::size_t p = 0; p < len; ++p) {
    const std::size_t w = p < whitney.size() ? whitney[p] : 0;
    if (w != nbc.Count(p)) return false;
  }
  return true;
}

bool SameLabeledMatroid(const Arrangement& a1, const Arrangement& a2) {
  if (a1.size() != a2.size()) {
    throw Error(ErrorKind::kSizeMismatch, "arrangements have " +
                                              std::to_string(a1.size()) + " and " +
                                              std::to_string(a2.size()) + " members");
  }
  return CircuitBits(a1) == CircuitBits(a2);
}

std::optional<std::vector<int>> FindMatroidRelabeling(const Arrangement& a1,
                                                      const Arrangement& a2) {
  if (a1.size() != a2.size()) {
    throw Error(ErrorKind::kSizeMismatch, "arrangements have " +
                                              std::to_string(a1.size()) + " and " +
                                              std::to_string(a2.size()) + " members");
  }
  if (a1.size() > kMaxPermutationSearch) {
    throw Error(ErrorKind::kSizeMismatch,
                "relabeling search limited to " +
                    std::to_string(kMaxPermutationSearch) + " members");
  }
  const std::set<std::uint32_t> target = CircuitBits(a2);
  std::vector<Circuit> source = Circuits(a1);
  if (source.size() != target.size()) return std::nullopt;
  std::vector<int> perm(a1.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (const Circuit& c : source) {
      if (!target.contains(Permute(c.elements, perm).bits())) {
        match = false;
        break;
      }
    }
    if (match) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace twoarr
