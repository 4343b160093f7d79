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

#include "pdakit/pda.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "pdakit/errors.h"

namespace pdakit {

Pda::Pda(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(Errc::kMalformedGrid, "grid must have at least one row and "
                                      "one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(Errc::kMalformedGrid,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

Pda Pda::FromRows(const std::vector<std::vector<Entry>>& rows) {
  if (rows.empty()) throw Error(Errc::kMalformedGrid, "no rows");
  const std::size_t cols = rows.front().size();
  std::vector<Entry> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(Errc::kMalformedGrid,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, row 0 has " +
                      std::to_string(cols));
    }
    entries.insert(entries.end(), rows[r].begin(), rows[r].end());
  }
  return Pda(rows.size(), cols, std::move(entries));
}

Pda Pda::AllStars(std::size_t rows, std::size_t cols) {
  return Pda(rows, cols, std::vector<Entry>(rows * cols, Entry::Star()));
}

std::size_t Pda::symbol_bound() const {
  std::size_t bound = 0;
  for (Entry e : entries_) {
    if (e.is_symbol()) bound = std::max<std::size_t>(bound, e.symbol() + 1);
  }
  return bound;
}

Pda Pda::WithEntry(Cell c, Entry e) const {
  Pda copy = *this;
  copy.entries_.at(c.row * cols_ + c.col) = e;
  return copy;
}

Pda RelabelCanonical(const Pda& p) {
  std::unordered_map<Symbol, Symbol> relabel;
  std::vector<Entry> out;
  out.reserve(p.entries().size());
  for (Entry e : p.entries()) {
    if (e.is_star()) {
      out.push_back(e);
      continue;
    }
    auto [it, inserted] =
        relabel.try_emplace(e.symbol(), static_cast<Symbol>(relabel.size()));
    out.push_back(Entry::Of(it->second));
  }
  return Pda(p.rows(), p.cols(), std::move(out));
}

namespace {

std::vector<std::string_view> SplitWords(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::size_t ParseCount(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  bool digits = !word.empty() &&
                std::all_of(word.begin(), word.end(),
                            [](char ch) { return ch >= '0' && ch <= '9'; });
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(),
                                   value);
  if (!digits || ec != std::errc() || ptr != word.data() + word.size()) {
    throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                       ": bad integer token '" +
                                       std::string(word) + "'");
  }
  return value;
}

}  // namespace

Pda ParsePda(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && SplitWords(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(Errc::kParseError, "empty input");

  auto header = SplitWords(lines[0]);
  if (header.size() != 2) {
    throw Error(Errc::kParseError, "line 1: expected \"F K\"");
  }
  const std::size_t rows = ParseCount(header[0], 1);
  const std::size_t cols = ParseCount(header[1], 1);
  if (lines.size() != rows + 1) {
    throw Error(Errc::kParseError, "expected " + std::to_string(rows) +
                                       " grid rows, found " +
                                       std::to_string(lines.size() - 1));
  }
  std::vector<Entry> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto words = SplitWords(lines[r + 1]);
    if (words.size() != cols) {
      throw Error(Errc::kMalformedGrid,
                  "line " + std::to_string(r + 2) + ": expected " +
                      std::to_string(cols) + " tokens, found " +
                      std::to_string(words.size()));
    }
    for (std::string_view w : words) {
      if (w == "*") {
        entries.push_back(Entry::Star());
        continue;
      }
      std::size_t value = ParseCount(w, r + 2);
      if (value >= ~Symbol{0}) {
        throw Error(Errc::kParseError, "symbol out of range: " +
                                           std::string(w));
      }
      entries.push_back(Entry::Of(static_cast<Symbol>(value)));
    }
  }
  return Pda(rows, cols, std::move(entries));
}

std::string FormatPda(const Pda& p) {
  std::string out = std::to_string(p.rows()) + " " + std::to_string(p.cols()) +
                    "\n";
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (c > 0) out += ' ';
      const Entry e = p.at(r, c);
      out += e.is_star() ? std::string("*") : std::to_string(e.symbol());
    }
    out += '\n';
  }
  return out;
}

Pda ReadPdaFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParsePda(buf.str());
}

std::size_t OccupancyStats::total_symbols() const {
  return std::accumulate(symbol_counts.begin(), symbol_counts.end(),
                         std::size_t{0});
}

OccupancyStats ComputeStats(const Pda& p) {
  OccupancyStats stats;
  stats.symbol_counts.assign(p.symbol_bound(), 0);
  stats.row_counts.assign(p.rows(), 0);
  stats.row_star_counts.assign(p.rows(), 0);
  stats.column_star_counts.assign(p.cols(), 0);
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Entry e = p.at(r, c);
      if (e.is_star()) {
        ++stats.column_star_counts[c];
        ++stats.row_star_counts[r];
      } else {
        ++stats.symbol_counts[e.symbol()];
        ++stats.row_counts[r];
      }
    }
  }
  return stats;
}

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kSameRowRepeat: return "SameRowRepeat";
    case ViolationKind::kSameColumnRepeat: return "SameColumnRepeat";
    case ViolationKind::kCrossEntryNotStar: return "CrossEntryNotStar";
    case ViolationKind::kAlphabetGap: return "AlphabetGap";
    case ViolationKind::kColumnStarMismatch: return "ColumnStarMismatch";
  }
  return "Unknown";
}

namespace {

std::string CellText(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string EntryText(Entry e) {
  return e.is_star() ? "*" : std::to_string(e.symbol());
}

template <typename T>
std::optional<T> Uniform(const std::vector<T>& values) {
  if (values.empty()) return std::nullopt;
  for (const T& v : values) {
    if (v != values.front()) return std::nullopt;
  }
  return values.front();
}

}  // namespace

std::string Violation::Describe(const Pda& p) const {
  std::string out(ViolationName(kind));
  switch (kind) {
    case ViolationKind::kSameRowRepeat:
    case ViolationKind::kSameColumnRepeat:
      out += " symbol=" + std::to_string(symbol) + " at " + CellText(pair[0]) +
             " and " + CellText(pair[1]);
      break;
    case ViolationKind::kCrossEntryNotStar:
      out += " symbol=" + std::to_string(symbol) + " at " + CellText(pair[0]) +
             " and " + CellText(pair[1]) + ";";
      for (Cell c : cross) {
        out += " p" + CellText(c) + "=" + EntryText(p.at(c));
      }
      break;
    case ViolationKind::kAlphabetGap:
      out += " symbol=" + std::to_string(symbol) + " missing";
      break;
    case ViolationKind::kColumnStarMismatch:
      out += " column=" + std::to_string(column) + " stars=" +
             std::to_string(stars) + " expected=" +
             std::to_string(expected_stars);
      break;
  }
  return out;
}

ValidationVerdict Validate(const Pda& p) {
  ValidationVerdict verdict;
  verdict.stats = ComputeStats(p);
  const OccupancyStats& stats = verdict.stats;
  const std::size_t S = stats.symbol_counts.size();

  std::vector<std::vector<Cell>> occurrences(S);
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Entry e = p.at(r, c);
      if (e.is_symbol()) occurrences[e.symbol()].push_back({r, c});
    }
  }

  for (std::size_t s = 0; s < S; ++s) {
    const auto& cells = occurrences[s];
    if (cells.empty()) {
      Violation v;
      v.kind = ViolationKind::kAlphabetGap;
      v.symbol = static_cast<Symbol>(s);
      verdict.violations.push_back(std::move(v));
      continue;
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        const Cell x = cells[a];
        const Cell y = cells[b];
        Violation v;
        v.kind = ViolationKind::kSameRowRepeat;
        v.symbol = static_cast<Symbol>(s);
        v.pair = {x, y};
        if (x.row == y.row) {
          verdict.violations.push_back(std::move(v));
          continue;
        }
        if (x.col == y.col) {
          v.kind = ViolationKind::kSameColumnRepeat;
          verdict.violations.push_back(std::move(v));
          continue;
        }
        for (Cell cross : {Cell{x.row, y.col}, Cell{y.row, x.col}}) {
          if (!p.at(cross).is_star()) v.cross.push_back(cross);
        }
        if (!v.cross.empty()) {
          v.kind = ViolationKind::kCrossEntryNotStar;
          verdict.violations.push_back(std::move(v));
        }
      }
    }
  }

  const std::size_t expected = stats.column_star_counts.front();
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (stats.column_star_counts[c] != expected) {
      Violation v;
      v.kind = ViolationKind::kColumnStarMismatch;
      v.column = c;
      v.stars = stats.column_star_counts[c];
      v.expected_stars = expected;
      verdict.notes.push_back(std::move(v));
    }
  }

  PdaParams& params = verdict.params;
  params.K = p.cols();
  params.F = p.rows();
  params.S = S;
  params.n = stats.total_symbols();
  params.Z = Uniform(stats.column_star_counts);
  params.g = Uniform(stats.symbol_counts);
  params.stars_per_row = Uniform(stats.row_star_counts);
  params.rate = Rational(S, params.F);
  if (params.Z) params.memory_ratio = Rational(*params.Z, params.F);
  return verdict;
}

std::vector<ValidationVerdict> ValidateAll(std::span<const Pda> pdas) {
  std::vector<ValidationVerdict> out(pdas.size());
  const auto count = static_cast<std::int64_t>(pdas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[i] = Validate(pdas[i]);
  }
  return out;
}

std::string DescribeParams(const PdaParams& params) {
  std::string out = "(K=" + std::to_string(params.K) +
                    ",F=" + std::to_string(params.F);
  if (params.Z) out += ",Z=" + std::to_string(*params.Z);
  out += ",S=" + std::to_string(params.S) + ")";
  if (params.g) out += " g=" + std::to_string(*params.g);
  return out;
}

}  // namespace pdakit
