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


#ifndef PDAKIT_TESTS_TEST_UTIL_H_
#define PDAKIT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdakit/incidence.h"
#include "pdakit/pda.h"

// Reference implementations written straight from the definitions, kept
// deliberately naive so they share no code with the library.
namespace pdakit::testing {

inline std::filesystem::path Fixture(const std::string& name) {
  return std::filesystem::path(PDAKIT_FIXTURE_DIR) / name;
}

// Grid of ints, -1 for a star.
using Grid = std::vector<std::vector<int>>;

inline Grid ToGrid(const Pda& p) {
  Grid g(p.rows(), std::vector<int>(p.cols(), -1));
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (!p.at(i, j).is_star()) g[i][j] = static_cast<int>(p.at(i, j).symbol());
    }
  }
  return g;
}

inline Pda FromGrid(const Grid& g) {
  std::vector<std::vector<Entry>> rows;
  for (const auto& r : g) {
    std::vector<Entry> row;
    for (int v : r) {
      row.push_back(v < 0 ? Entry::Star()
                          : Entry::Of(static_cast<Symbol>(v)));
    }
    rows.push_back(row);
  }
  return Pda::FromRows(rows);
}

// Condition C1 checked over all ordered pairs of cells, plus a gap-free
// alphabet.
inline bool NaiveIsPda(const Grid& g) {
  const int F = static_cast<int>(g.size());
  const int K = static_cast<int>(g[0].size());
  int max_symbol = -1;
  for (const auto& row : g) {
    for (int v : row) max_symbol = std::max(max_symbol, v);
  }
  for (int s = 0; s <= max_symbol; ++s) {
    bool seen = false;
    for (const auto& row : g) {
      for (int v : row) seen = seen || v == s;
    }
    if (!seen) return false;
  }
  for (int a = 0; a < F * K; ++a) {
    for (int b = 0; b < F * K; ++b) {
      if (a == b) continue;
      const int i1 = a / K, j1 = a % K, i2 = b / K, j2 = b % K;
      if (g[i1][j1] < 0 || g[i1][j1] != g[i2][j2]) continue;
      if (i1 == i2 || j1 == j2) return false;
      if (g[i1][j2] >= 0 || g[i2][j1] >= 0) return false;
    }
  }
  return true;
}

inline bool NaiveP1(const std::vector<IncidenceTriple>& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      int same = 0;
      for (int k = 0; k < 3; ++k) same += c[a].coord[k] == c[b].coord[k];
      if (same > 1) return false;
    }
  }
  return true;
}

// Tries every ordered triple for the forbidden pattern.
inline bool NaiveP2(const std::vector<IncidenceTriple>& c) {
  for (const auto& x : c) {
    for (const auto& y : c) {
      for (const auto& z : c) {
        if (x.row() == y.row() && y.col() == z.col() &&
            x.symbol() == z.symbol() && x.row() != z.row() &&
            x.col() != y.col() && x.symbol() != y.symbol()) {
          return false;
        }
      }
    }
  }
  return true;
}

// Random grid with about `star_percent` stars and symbols below `symbols`.
inline Grid RandomGrid(std::mt19937_64& rng, int F, int K, int symbols,
                       int star_percent) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> sym(0, symbols - 1);
  Grid g(F, std::vector<int>(K, -1));
  for (auto& row : g) {
    for (int& v : row) v = pct(rng) < star_percent ? -1 : sym(rng);
  }
  return g;
}

// Relabels symbols by first appearance, row-major.
inline Grid Canonical(const Grid& g) {
  std::map<int, int> label;
  Grid out = g;
  for (auto& row : out) {
    for (int& v : row) {
      if (v < 0) continue;
      auto it = label.find(v);
      if (it == label.end()) {
        it = label.emplace(v, static_cast<int>(label.size())).first;
      }
      v = it->second;
    }
  }
  return out;
}

// Exhaustive over every grid with exactly Z stars per column and symbols in
// [0, S); returns the least S admitting a PDA. Only for K*F <= 6.
inline std::optional<int> NaiveMinS(int K, int F, int Z) {
  for (int S = 1; S <= (F - Z) * K; ++S) {
    const int cells = F * K;
    std::vector<int> digits(cells, 0);  // 0 = star, v = symbol v-1
    while (true) {
      bool stars_ok = true;
      for (int j = 0; j < K && stars_ok; ++j) {
        int stars = 0;
        for (int i = 0; i < F; ++i) stars += digits[i * K + j] == 0;
        stars_ok = stars == Z;
      }
      if (stars_ok) {
        Grid g(F, std::vector<int>(K));
        for (int c = 0; c < cells; ++c) g[c / K][c % K] = digits[c] - 1;
        if (NaiveIsPda(Canonical(g))) return S;
      }
      int c = 0;
      while (c < cells && ++digits[c] > S) digits[c++] = 0;
      if (c == cells) break;
    }
  }
  return std::nullopt;
}

}  // namespace pdakit::testing

#endif  // PDAKIT_TESTS_TEST_UTIL_H_
