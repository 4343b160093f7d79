/*
Copyright 2026 The pdakit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PDAKIT_INCIDENCE_H_
#define PDAKIT_INCIDENCE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdakit/pda.h"

namespace pdakit {

// (row, column, symbol) of one non-star cell. Coordinates are addressed by
// position so that conjugation can reorder them.
struct IncidenceTriple {
  std::array<std::uint32_t, 3> coord{};

  std::uint32_t row() const { return coord[0]; }
  std::uint32_t col() const { return coord[1]; }
  std::uint32_t symbol() const { return coord[2]; }

  friend constexpr bool operator==(const IncidenceTriple&,
                                   const IncidenceTriple&) = default;
  friend constexpr auto operator<=>(const IncidenceTriple&,
                                    const IncidenceTriple&) = default;
};

// Number of coordinates at which two triples differ.
int HammingDistance(const IncidenceTriple& a, const IncidenceTriple& b);

// A set of triples inside [0,F) x [0,K) x [0,S). Stored sorted and without
// duplicates.
class IncidenceSet {
 public:
  using Dims = std::array<std::size_t, 3>;  // (F, K, S)

  // Throws kDimensionMismatch if a coordinate falls outside dims.
  IncidenceSet(Dims dims, std::vector<IncidenceTriple> triples);

  const Dims& dims() const { return dims_; }
  const std::vector<IncidenceTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

  friend bool operator==(const IncidenceSet&, const IncidenceSet&) = default;

 private:
  Dims dims_;
  std::vector<IncidenceTriple> triples_;
};

// dims are (F, K, symbol_bound).
IncidenceSet ToIncidenceSet(const Pda& p);

// Stars everywhere except at incident cells. Throws kConflictingTriples when
// two triples share a cell, and kMalformedGrid when F or K is zero.
Pda FromIncidenceSet(const IncidenceSet& c);

// Every pair of distinct triples differs in at least two coordinates.
bool CheckP1(const IncidenceSet& c);

// No three triples (i1,j1,a), (i1,j2,b), (i2,j2,a) with i1 != i2, j1 != j2,
// a != b.
bool CheckP2(const IncidenceSet& c);

// A permutation (l0, l1, l2) of {0, 1, 2}: the conjugate's coordinate k is the
// original coordinate l_k.
using CoordinateOrder = std::array<std::uint8_t, 3>;

bool IsPermutation(const CoordinateOrder& order);
CoordinateOrder Inverse(const CoordinateOrder& order);
std::array<CoordinateOrder, 6> AllCoordinateOrders();

// Throws kParameterOutOfRange if order is not a permutation.
IncidenceSet Conjugate(const IncidenceSet& c, const CoordinateOrder& order);

}  // namespace pdakit

#endif  // PDAKIT_INCIDENCE_H_
