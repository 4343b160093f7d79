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

#include "pdakit/incidence.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "pdakit/errors.h"

namespace pdakit {

int HammingDistance(const IncidenceTriple& a, const IncidenceTriple& b) {
  int d = 0;
  for (int k = 0; k < 3; ++k) d += a.coord[k] != b.coord[k];
  return d;
}

IncidenceSet::IncidenceSet(Dims dims, std::vector<IncidenceTriple> triples)
    : dims_(dims), triples_(std::move(triples)) {
  for (const auto& t : triples_) {
    for (int k = 0; k < 3; ++k) {
      if (t.coord[k] >= dims_[k]) {
        throw Error(Errc::kDimensionMismatch,
                    "triple coordinate " + std::to_string(k) + " = " +
                        std::to_string(t.coord[k]) + " outside [0," +
                        std::to_string(dims_[k]) + ")");
      }
    }
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()),
                 triples_.end());
}

IncidenceSet ToIncidenceSet(const Pda& p) {
  std::vector<IncidenceTriple> triples;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Entry e = p.at(r, c);
      if (e.is_symbol()) {
        triples.push_back({{static_cast<std::uint32_t>(r),
                            static_cast<std::uint32_t>(c), e.symbol()}});
      }
    }
  }
  return IncidenceSet({p.rows(), p.cols(), p.symbol_bound()},
                      std::move(triples));
}

Pda FromIncidenceSet(const IncidenceSet& c) {
  const auto [rows, cols, symbols] = c.dims();
  if (rows == 0 || cols == 0) {
    throw Error(Errc::kMalformedGrid, "incidence set has an empty dimension");
  }
  std::vector<Entry> entries(rows * cols, Entry::Star());
  for (const auto& t : c.triples()) {
    Entry& cell = entries[t.row() * cols + t.col()];
    if (cell.is_symbol()) {
      throw Error(Errc::kConflictingTriples,
                  "cell (" + std::to_string(t.row()) + "," +
                      std::to_string(t.col()) + ") holds both " +
                      std::to_string(cell.symbol()) + " and " +
                      std::to_string(t.symbol()));
    }
    cell = Entry::Of(t.symbol());
  }
  return Pda(rows, cols, std::move(entries));
}

bool CheckP1(const IncidenceSet& c) {
  // Distance one means two triples agree on some pair of coordinates.
  static constexpr std::array<std::pair<int, int>, 3> kPairs = {
      {{0, 1}, {0, 2}, {1, 2}}};
  for (auto [a, b] : kPairs) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& t : c.triples()) {
      if (!seen.emplace(t.coord[a], t.coord[b]).second) return false;
    }
  }
  return true;
}

bool CheckP2(const IncidenceSet& c) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
      cell_symbols;
  std::map<std::uint32_t, std::vector<const IncidenceTriple*>> by_symbol;
  for (const auto& t : c.triples()) {
    cell_symbols[{t.row(), t.col()}].push_back(t.symbol());
    by_symbol[t.symbol()].push_back(&t);
  }
  auto holds_other_symbol = [&](std::uint32_t row, std::uint32_t col,
                                std::uint32_t a) {
    auto it = cell_symbols.find({row, col});
    if (it == cell_symbols.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [a](std::uint32_t b) { return b != a; });
  };
  for (const auto& [a, triples] : by_symbol) {
    for (std::size_t x = 0; x < triples.size(); ++x) {
      for (std::size_t y = x + 1; y < triples.size(); ++y) {
        const auto& p = *triples[x];
        const auto& q = *triples[y];
        if (p.row() == q.row() || p.col() == q.col()) continue;
        if (holds_other_symbol(p.row(), q.col(), a) ||
            holds_other_symbol(q.row(), p.col(), a)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool IsPermutation(const CoordinateOrder& order) {
  std::array<bool, 3> seen{};
  for (auto l : order) {
    if (l > 2 || seen[l]) return false;
    seen[l] = true;
  }
  return true;
}

CoordinateOrder Inverse(const CoordinateOrder& order) {
  CoordinateOrder inv{};
  for (std::uint8_t k = 0; k < 3; ++k) inv[order[k]] = k;
  return inv;
}

std::array<CoordinateOrder, 6> AllCoordinateOrders() {
  return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

IncidenceSet Conjugate(const IncidenceSet& c, const CoordinateOrder& order) {
  if (!IsPermutation(order)) {
    throw Error(Errc::kParameterOutOfRange,
                "coordinate order is not a permutation of (0,1,2)");
  }
  IncidenceSet::Dims dims{};
  for (int k = 0; k < 3; ++k) dims[k] = c.dims()[order[k]];
  std::vector<IncidenceTriple> out;
  out.reserve(c.size());
  for (const auto& t : c.triples()) {
    IncidenceTriple u;
    for (int k = 0; k < 3; ++k) u.coord[k] = t.coord[order[k]];
    out.push_back(u);
  }
  return IncidenceSet(dims, std::move(out));
}

}  // namespace pdakit
