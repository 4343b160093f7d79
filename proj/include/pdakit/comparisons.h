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


#ifndef PDAKIT_COMPARISONS_H_
#define PDAKIT_COMPARISONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdakit/constructions.h"
#include "pdakit/rational.h"

namespace pdakit {

// One family member measured against another at matching K and M/N (and, for
// the grouped comparison, matching R). Ratios are ours / baseline.
struct ComparisonRow {
  std::string pair;  // "p1-mn", "p2-mn", "p2-grouped", "p1-yan", "p1-shang"
  SourceParams source;
  SchemeParams ours;
  SchemeParams baseline;
  Rational ratio_K, ratio_M, ratio_F, ratio_R;
  // The same F and R ratios from their simplified closed forms.
  Rational closed_form_F, closed_form_R;
  bool closed_form_agrees = false;
  // Upper bound on ratio_F from a product estimate, when one applies.
  std::optional<Rational> f_envelope;
  // p1-shang only: K ratio >= 1, M ratio <= 1, F ratio < 1, R ratio < 1.
  std::optional<bool> dominates;
  // p2-grouped only: the group count C(k,t)/k, which need not be an integer.
  std::optional<Rational> group_count;
};

// P1 = (C(k,t+1), C(k,t), C(k,t)-(t+1), k) against the MN scheme with the
// same K and M/N. Requires 0 < t < k-1.
ComparisonRow CompareP1Mn(std::int64_t k, std::int64_t t);
// P2 = (C(k,t), k, t, C(k,t+1)) against the MN scheme with the same K and
// M/N. Requires 0 < t < k-1.
ComparisonRow CompareP2Mn(std::int64_t k, std::int64_t t);
// P2 against grouped MN at equal K, M/N and R. Solving the rate equation
// gives groups of k users, so F2/F' = k/C(k,t). Requires 0 < t < k.
ComparisonRow CompareP2Grouped(std::int64_t k, std::int64_t t);
// P1 against the Yan member with q = C(k,t)/(t+1), m = k-t-1. Throws
// kNoMatchingParameters unless q is an integer >= 2.
ComparisonRow CompareP1Yan(std::int64_t k, std::int64_t t);
// P1 against the Shang member (q, m, l). Requires 0 < t < k-1, q >= 2 and
// 1 <= l <= m.
ComparisonRow CompareP1Shang(std::int64_t k, std::int64_t t, std::int64_t m,
                             std::int64_t q, std::int64_t l);

struct DominanceRanges {
  std::int64_t k_min = 3, k_max = 12;
  std::int64_t m_min = 2, m_max = 5;
  std::int64_t q_max = 10;
  // When set, only l = m - l_offset is scanned; otherwise 1 <= l <= m.
  std::optional<std::int64_t> l_offset;
};

// Every (k, t, m, q, l) in range, 0 < t < k-1, where P1 beats the Shang
// member on all four counts. Sorted by (k, t, m, q, l).
std::vector<ComparisonRow> SearchDominatingParams(const DominanceRanges& r);
std::vector<ComparisonRow> SearchDominatingParamsSerial(
    const DominanceRanges& r);

// The large-k family t = k-6 with 1 < l < m and C(m,l) <= 6. Scans every q
// allowed by K1 >= K4 and M1/N1 <= M4/N4 and keeps the members where P1 also
// wins on F and R. The envelopes 36(k-5)/(k(k-6)) on F1/F4 and
// 36k/((k-5)(k-6)) on R1/R4 are reported alongside.
struct AsymptoticCheck {
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::vector<ComparisonRow> members;  // dominating rows, by (m, l, q)
  std::uint64_t candidates = 0;        // (m, l, q) passing the K and M tests
  Rational f_envelope;
  Rational r_envelope;
  bool found() const { return !members.empty(); }
};
AsymptoticCheck AsymptoticSpotCheck(std::int64_t k);

enum class OutputFormat { kText, kCsv, kMarkdown };
std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

// `digits` decimals for every ratio.
std::string FormatComparisonRows(const std::vector<ComparisonRow>& rows,
                                 OutputFormat format, int digits = 6);

// Published comparison tables, regenerated from the formulas.
enum class TableId { kTk3, kP2T2, kYan, kShang };
std::optional<TableId> ParseTableId(std::string_view name);
std::string_view TableName(TableId id);

struct TableCell {
  std::string column;
  Rational value;        // formula value
  std::string printed;   // as published
  std::string rendered;  // formula value at the published precision
  // The published digits equal the formula value rounded half to even, or
  // cut off (truncated) at the published precision.
  bool matches = false;
  bool truncated = false;  // matched only by truncation
};

struct TableRow {
  std::vector<std::pair<std::string, std::int64_t>> source;
  std::vector<TableCell> cells;
};

struct RegeneratedTable {
  TableId id;
  std::string title;
  std::vector<TableRow> rows;

  // True when every cell of the column matches its published value.
  bool ColumnMatches(std::string_view column) const;
  std::vector<const TableCell*> Mismatches(std::string_view column) const;
};

RegeneratedTable RegenerateTable(TableId id);

// Renders the formula values; mismatching cells carry the published value
// next to them. `digits` overrides the published precision when set.
std::string FormatTable(const RegeneratedTable& table, OutputFormat format,
                        std::optional<int> digits = std::nullopt);

// Renders `value` with the precision of `printed`: the number of decimals for
// fixed notation, or the mantissa decimals for "d.dddde-N".
std::string RenderLike(const Rational& value, std::string_view printed);
// Same precision, digits cut off instead of rounded. Fixed notation only;
// scientific inputs fall back to RenderLike.
std::string TruncateLike(const Rational& value, std::string_view printed);

}  // namespace pdakit

#endif  // PDAKIT_COMPARISONS_H_
