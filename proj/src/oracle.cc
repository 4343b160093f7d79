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


#include "pdakit/oracle.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "pdakit/bounds.h"
#include "pdakit/combinatorics.h"
#include "pdakit/errors.h"

namespace pdakit {
namespace {

constexpr std::uint32_t kStar = std::numeric_limits<std::uint32_t>::max();
constexpr std::int64_t kNoBranch = std::numeric_limits<std::int64_t>::max();

// Column-by-column backtracking. Column 0 is fixed to the stars {0..Z-1},
// later columns take star sets in nondecreasing lexicographic rank, and a new
// symbol is always the next unused label.
class Search {
 public:
  Search(std::uint64_t K, std::uint64_t F, std::uint64_t S,
         const std::vector<std::uint64_t>& masks)
      : K_(K), F_(F), S_(S), masks_(masks), star_mask_(K, 0),
        column_rank_(K, 0), row_star_cols_(F, 0), sym_rows_(S, 0),
        sym_cols_(S, 0), cells_(F * K, kStar) {}

  // Places column 0. Returns false when S is too small for its entries.
  bool PlaceFirstColumn() {
    SetColumn(0, 0);
    const std::uint64_t free = ~masks_[0] & RowMask();
    if (static_cast<std::uint64_t>(std::popcount(free)) > S_) return false;
    for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
      Place(static_cast<std::uint32_t>(std::countr_zero(rest)), 0, used_++);
    }
    return true;
  }

  // Explores every completion whose column 1 has star-set rank `rank`.
  bool RunBranch(std::size_t rank, const std::atomic<std::int64_t>* best) {
    best_ = best;
    branch_ = static_cast<std::int64_t>(rank);
    SetColumn(1, rank);
    return Fill(1, ~masks_[rank] & RowMask());
  }

  bool RunAll() {
    if (K_ == 1) return true;
    return Columns(1, 0);
  }

  Pda Materialize() const {
    std::vector<Entry> entries;
    entries.reserve(cells_.size());
    for (std::uint32_t c : cells_) {
      entries.push_back(c == kStar ? Entry::Star() : Entry::Of(c));
    }
    return RelabelCanonical(Pda(F_, K_, std::move(entries)));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t RowMask() const {
    return F_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << F_) - 1;
  }

  bool Cancelled() const {
    return best_ != nullptr &&
           best_->load(std::memory_order_relaxed) < branch_;
  }

  void SetColumn(std::size_t j, std::size_t rank) {
    star_mask_[j] = masks_[rank];
    column_rank_[j] = rank;
    for (std::uint64_t m = masks_[rank]; m != 0; m &= m - 1) {
      row_star_cols_[std::countr_zero(m)] |= std::uint64_t{1} << j;
    }
  }

  void ClearColumn(std::size_t j) {
    for (std::uint64_t m = star_mask_[j]; m != 0; m &= m - 1) {
      row_star_cols_[std::countr_zero(m)] &= ~(std::uint64_t{1} << j);
    }
    star_mask_[j] = 0;
  }

  void Place(std::uint32_t row, std::size_t col, std::uint32_t s) {
    cells_[row * K_ + col] = s;
    sym_rows_[s] |= std::uint64_t{1} << row;
    sym_cols_[s] |= std::uint64_t{1} << col;
  }

  void Unplace(std::uint32_t row, std::size_t col, std::uint32_t s) {
    cells_[row * K_ + col] = kStar;
    sym_rows_[s] &= ~(std::uint64_t{1} << row);
    sym_cols_[s] &= ~(std::uint64_t{1} << col);
  }

  bool Columns(std::size_t j, std::size_t min_rank) {
    if (j == K_) return true;
    for (std::size_t rank = min_rank; rank < masks_.size(); ++rank) {
      if (Cancelled()) return false;
      SetColumn(j, rank);
      if (Fill(j, ~masks_[rank] & RowMask())) return true;
      ClearColumn(j);
    }
    return false;
  }

  bool Fill(std::size_t j, std::uint64_t rest) {
    ++nodes_;
    if (rest == 0) return Columns(j + 1, column_rank_[j]);
    const auto row = static_cast<std::uint32_t>(std::countr_zero(rest));
    const std::uint64_t next = rest & (rest - 1);
    const std::uint64_t stars_here = star_mask_[j];
    const std::uint64_t stars_in_row = row_star_cols_[row];
    for (std::uint32_t s = 0; s < used_; ++s) {
      // Every earlier occurrence of s must see a star in this column, and
      // this row must hold a star in each column where s already appears.
      if ((sym_rows_[s] & ~stars_here) != 0) continue;
      if ((sym_cols_[s] & ~stars_in_row) != 0) continue;
      Place(row, j, s);
      if (Fill(j, next)) return true;
      Unplace(row, j, s);
    }
    if (used_ < S_) {
      const std::uint32_t s = used_++;
      Place(row, j, s);
      if (Fill(j, next)) return true;
      Unplace(row, j, s);
      --used_;
    }
    return false;
  }

  std::uint64_t K_, F_, S_;
  const std::vector<std::uint64_t>& masks_;
  std::vector<std::uint64_t> star_mask_;
  std::vector<std::size_t> column_rank_;
  std::vector<std::uint64_t> row_star_cols_;
  std::vector<std::uint64_t> sym_rows_;
  std::vector<std::uint64_t> sym_cols_;
  std::vector<std::uint32_t> cells_;
  std::uint32_t used_ = 0;
  std::uint64_t nodes_ = 0;
  const std::atomic<std::int64_t>* best_ = nullptr;
  std::int64_t branch_ = 0;
};

void CheckInputs(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                 std::uint64_t max_cells) {
  if (K == 0 || F == 0 || Z >= F) {
    throw Error(Errc::kDegenerateInput,
                "need K >= 1 and 0 <= Z < F, got K=" + std::to_string(K) +
                    " F=" + std::to_string(F) + " Z=" + std::to_string(Z));
  }
  if (K > 64 || F > 64 || K * F > max_cells) {
    throw Error(Errc::kSearchSpaceTooLarge,
                "K*F = " + std::to_string(K * F) + " exceeds the limit of " +
                    std::to_string(std::min<std::uint64_t>(max_cells, 64)));
  }
}

std::vector<std::uint64_t> StarMasks(std::uint64_t F, std::uint64_t Z) {
  std::vector<std::uint64_t> masks;
  for (const auto& subset : LexSubsets(static_cast<std::uint32_t>(F),
                                       static_cast<std::uint32_t>(Z))) {
    std::uint64_t m = 0;
    for (std::uint32_t r : subset) m |= std::uint64_t{1} << r;
    masks.push_back(m);
  }
  return masks;
}

std::optional<Pda> Find(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                        std::uint64_t S, bool parallel,
                        std::uint64_t* nodes) {
  const std::vector<std::uint64_t> masks = StarMasks(F, Z);
  Search root(K, F, S, masks);
  if (!root.PlaceFirstColumn()) return std::nullopt;
  if (!parallel || K == 1) {
    const bool found = root.RunAll();
    *nodes += root.nodes();
    if (!found) return std::nullopt;
    return root.Materialize();
  }

  // Branch on the star set of column 1 and keep the lowest-rank success, which
  // is the array the serial search returns.
  const auto branches = static_cast<std::int64_t>(masks.size());
  std::atomic<std::int64_t> best{kNoBranch};
  std::vector<std::optional<Pda>> found(masks.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t b = 0; b < branches; ++b) {
    if (best.load(std::memory_order_relaxed) < b) continue;
    Search search = root;
    if (search.RunBranch(static_cast<std::size_t>(b), &best)) {
      found[b] = search.Materialize();
      std::int64_t cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
    total += search.nodes();
  }
  *nodes += total;
  const std::int64_t b = best.load();
  if (b == kNoBranch) return std::nullopt;
  return found[b];
}

OracleResult MinS(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                  const OracleOptions& options, bool parallel) {
  CheckInputs(K, F, Z, options.max_cells);
  OracleResult result;
  result.s_start = 1;
  if (options.start_from_bounds) {
    result.s_start = ToU64(std::max(BoundFirst(K, F, Z).value == 0
                                        ? BigInt(1)
                                        : Ceil(BoundFirst(K, F, Z).value),
                                    BoundSecond(K, F, Z)));
  }
  const std::uint64_t s_max = options.s_max.value_or((F - Z) * K);
  for (std::uint64_t s = result.s_start; s <= s_max; ++s) {
    std::optional<Pda> pda = Find(K, F, Z, s, parallel, &result.nodes);
    if (pda) {
      result.min_s = pda->symbol_bound();
      result.witness = std::move(pda);
      break;
    }
  }
  return result;
}

}  // namespace

OracleResult OracleMinS(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                        const OracleOptions& options) {
  return MinS(K, F, Z, options, true);
}

OracleResult OracleMinSSerial(std::uint64_t K, std::uint64_t F,
                              std::uint64_t Z, const OracleOptions& options) {
  return MinS(K, F, Z, options, false);
}

std::optional<Pda> FindPda(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                           std::uint64_t S, std::uint64_t max_cells) {
  CheckInputs(K, F, Z, max_cells);
  std::uint64_t nodes = 0;
  return Find(K, F, Z, S, true, &nodes);
}

std::optional<Pda> FindPdaSerial(std::uint64_t K, std::uint64_t F,
                                 std::uint64_t Z, std::uint64_t S,
                                 std::uint64_t max_cells) {
  CheckInputs(K, F, Z, max_cells);
  std::uint64_t nodes = 0;
  return Find(K, F, Z, S, false, &nodes);
}

}  // namespace pdakit
