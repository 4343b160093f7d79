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

#ifndef PDAKIT_PDA_H_
#define PDAKIT_PDA_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdakit/rational.h"

namespace pdakit {

using Symbol = std::uint32_t;

// One cell of a placement delivery array: either a star (the column's user
// caches the row's packet) or a delivery symbol.
class Entry {
 public:
  static constexpr Entry Star() { return Entry(kStarTag); }
  static constexpr Entry Of(Symbol s) { return Entry(s); }

  constexpr bool is_star() const { return value_ == kStarTag; }
  constexpr bool is_symbol() const { return value_ != kStarTag; }
  // Precondition: is_symbol().
  constexpr Symbol symbol() const { return value_; }

  friend constexpr bool operator==(Entry, Entry) = default;

 private:
  static constexpr Symbol kStarTag = ~Symbol{0};
  constexpr explicit Entry(Symbol v) : value_(v) {}
  Symbol value_;
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// An F x K grid over {*} and nonnegative symbols, stored row-major. The grid
// itself may hold any labels; Validate() decides whether it is a PDA.
class Pda {
 public:
  // Throws kMalformedGrid unless rows, cols >= 1 and entries has rows * cols
  // elements.
  Pda(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  // Throws kMalformedGrid if the rows have different lengths.
  static Pda FromRows(const std::vector<std::vector<Entry>>& rows);
  static Pda AllStars(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Entry& at(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }
  const Entry& at(Cell c) const { return at(c.row, c.col); }
  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Entry> entries() const { return entries_; }

  // One more than the largest symbol present; zero for an all-star grid.
  std::size_t symbol_bound() const;

  Pda WithEntry(Cell c, Entry e) const;

  friend bool operator==(const Pda&, const Pda&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

// Relabels symbols to 0, 1, ... in order of first appearance (row-major).
Pda RelabelCanonical(const Pda& p);

// Canonical text format: "F K" on the first line, then F lines of K
// space-separated tokens, each "*" or a decimal integer.
Pda ParsePda(std::string_view text);
std::string FormatPda(const Pda& p);
Pda ReadPdaFile(const std::filesystem::path& path);

struct OccupancyStats {
  std::vector<std::size_t> symbol_counts;       // r_s for s in [0, S)
  std::vector<std::size_t> row_counts;          // symbol entries per row
  std::vector<std::size_t> column_star_counts;  // stars per column
  std::vector<std::size_t> row_star_counts;     // stars per row

  std::size_t total_symbols() const;
};

OccupancyStats ComputeStats(const Pda& p);

struct PdaParams {
  std::size_t K = 0;
  std::size_t F = 0;
  std::optional<std::size_t> Z;  // present iff every column has Z stars
  std::size_t S = 0;
  std::size_t n = 0;
  std::optional<std::size_t> g;  // present iff every symbol occurs g times
  std::optional<std::size_t> stars_per_row;
  Rational rate;                          // S / F
  std::optional<Rational> memory_ratio;   // Z / F
};

enum class ViolationKind {
  kSameRowRepeat,
  kSameColumnRepeat,
  kCrossEntryNotStar,
  kAlphabetGap,
  kColumnStarMismatch,
};

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::kSameRowRepeat;
  Symbol symbol = 0;
  // The two equal entries for the C1 kinds.
  std::array<Cell, 2> pair{};
  // The non-star cells of the 2x2 cross for kCrossEntryNotStar.
  std::vector<Cell> cross;
  // kColumnStarMismatch only.
  std::size_t column = 0;
  std::size_t stars = 0;
  std::size_t expected_stars = 0;

  std::string Describe(const Pda& p) const;
};

struct ValidationVerdict {
  std::vector<Violation> violations;  // C1 and alphabet failures
  std::vector<Violation> notes;       // column star mismatches (C2)
  OccupancyStats stats;
  PdaParams params;

  bool ok() const { return violations.empty(); }
  bool c2() const { return notes.empty(); }
};

ValidationVerdict Validate(const Pda& p);

// Validates independent arrays on the OpenMP pool.
std::vector<ValidationVerdict> ValidateAll(std::span<const Pda> pdas);

// "(K=4,F=6,Z=3,S=4) g=3"
std::string DescribeParams(const PdaParams& params);

}  // namespace pdakit

#endif  // PDAKIT_PDA_H_
