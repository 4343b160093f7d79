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


#include "pdakit/comparisons.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdakit/errors.h"
#include "published_tables.h"

namespace pdakit {
namespace {

void RequireP(std::int64_t k, std::int64_t t) {
  if (k < 3 || t <= 0 || t >= k - 1) {
    throw Error(Errc::kParameterOutOfRange,
                "need 0 < t < k-1, got k=" + std::to_string(k) +
                    " t=" + std::to_string(t));
  }
}

Rational RationalPow(const Rational& base, unsigned e) {
  return Rational(Pow(Numerator(base), e), Pow(Denominator(base), e));
}

std::int64_t ToI64(const BigInt& v) {
  return static_cast<std::int64_t>(ToU64(v));
}

void FillRatios(ComparisonRow& row) {
  const SchemeParams& a = row.ours;
  const SchemeParams& b = row.baseline;
  row.ratio_K = Rational(a.K, b.K);
  row.ratio_M = a.memory_ratio() / b.memory_ratio();
  row.ratio_F = Rational(a.F, b.F);
  row.ratio_R = a.rate() / b.rate();
  row.closed_form_agrees =
      row.ratio_F == row.closed_form_F && row.ratio_R == row.closed_form_R;
}

// The MN scheme with K users and memory ratio mr; K mr must be integral.
SchemeParams MnAt(const BigInt& K, const Rational& mr) {
  const Rational t = mr * Rational(K);
  if (!IsIntegral(t)) {
    throw Error(Errc::kNonIntegralParameter,
                "K M/N = " + ToString(t) + " is not an integer");
  }
  return MnParams(ToI64(K), ToI64(Numerator(t)));
}

}  // namespace

ComparisonRow CompareP1Mn(std::int64_t k, std::int64_t t) {
  RequireP(k, t);
  ComparisonRow row;
  row.pair = "p1-mn";
  row.source.k = k;
  row.source.t = t;
  row.ours = P1Params(k, t);
  row.baseline = MnAt(row.ours.K, row.ours.memory_ratio());
  const BigInt kt = Binomial(k, t);
  const BigInt kt1 = Binomial(k, t + 1);
  row.closed_form_F = Rational(kt, Binomial(kt1, k - t));
  row.closed_form_R = Rational(k, t + 1) - Rational(BigInt(k), kt) +
                      Rational(BigInt(k), kt * (k - t));
  row.f_envelope =
      RationalPow(Rational(BigInt(k), kt1), static_cast<unsigned>(k - t));
  FillRatios(row);
  return row;
}

ComparisonRow CompareP2Mn(std::int64_t k, std::int64_t t) {
  RequireP(k, t);
  ComparisonRow row;
  row.pair = "p2-mn";
  row.source.k = k;
  row.source.t = t;
  row.ours = P2Params(k, t);
  row.baseline = MnAt(row.ours.K, row.ours.memory_ratio());
  const BigInt kt = Binomial(k, t);
  const BigInt c = Binomial(k - 1, t - 1);
  row.closed_form_F = Rational(BigInt(k), Binomial(kt, c));
  row.closed_form_R = Rational(c + 1, t + 1);
  row.f_envelope = Rational(k) * RationalPow(Rational(t, k), ToU64(c));
  FillRatios(row);
  return row;
}

ComparisonRow CompareP2Grouped(std::int64_t k, std::int64_t t) {
  if (k < 2 || t <= 0 || t >= k) {
    throw Error(Errc::kParameterOutOfRange,
                "need 0 < t < k, got k=" + std::to_string(k) +
                    " t=" + std::to_string(t));
  }
  const BigInt kt = Binomial(k, t);
  const BigInt kt1 = Binomial(k, t + 1);
  ComparisonRow row;
  row.pair = "p2-grouped";
  row.source.k = k;
  row.source.t = t;
  row.ours = {kt, k, t, kt1};

  // Equal rates: (k-t) C(k,t) / (k (1+t)) = (k-t) C(k,t) / (k + K' t).
  const Rational group_size = (Rational(k) * (1 + t) - k) / t;
  const Rational grouped_rate =
      Rational((k - t) * kt) / (Rational(k) + group_size * t);
  if (!IsIntegral(group_size) || grouped_rate != row.ours.rate()) {
    throw Error(Errc::kNoMatchingParameters,
                "no grouped MN scheme matches the rate");
  }
  const std::int64_t kp = ToI64(Numerator(group_size));
  row.group_count = Rational(kt) / group_size;
  const Rational S = *row.group_count * Rational(Binomial(kp, t + 1));
  if (!IsIntegral(S)) {
    throw Error(Errc::kNonIntegralParameter,
                "grouped symbol count " + ToString(S) + " is not an integer");
  }
  row.baseline = {kt, Binomial(kp, t), Binomial(kp - 1, t - 1),
                  Numerator(S)};
  row.closed_form_F = Rational(BigInt(k), kt);
  row.closed_form_R = 1;
  FillRatios(row);
  return row;
}

ComparisonRow CompareP1Yan(std::int64_t k, std::int64_t t) {
  RequireP(k, t);
  const BigInt kt = Binomial(k, t);
  const Rational q = Rational(kt, t + 1);
  if (!IsIntegral(q) || q < 2) {
    throw Error(Errc::kNoMatchingParameters,
                "q = C(k,t)/(t+1) = " + ToString(q) +
                    " is not an integer >= 2");
  }
  const std::int64_t qi = ToI64(Numerator(q));
  const std::int64_t m = k - t - 1;
  ComparisonRow row;
  row.pair = "p1-yan";
  row.source.k = k;
  row.source.t = t;
  row.source.m = m;
  row.source.q = qi;
  row.ours = P1Params(k, t);
  row.baseline = YanParams(qi, m);
  row.closed_form_F = Rational(kt, Pow(qi, static_cast<unsigned>(m)) *
                                       (qi - 1));
  row.closed_form_R = Rational(k, t + 1) - Rational(BigInt(k), kt);
  FillRatios(row);
  return row;
}

ComparisonRow CompareP1Shang(std::int64_t k, std::int64_t t, std::int64_t m,
                             std::int64_t q, std::int64_t l) {
  RequireP(k, t);
  const BigInt kt = Binomial(k, t);
  const BigInt q1l = Pow(q - 1, static_cast<unsigned>(l));
  ComparisonRow row;
  row.pair = "p1-shang";
  row.source = {k, t, m, q, l};
  row.ours = P1Params(k, t);
  row.baseline = ShangParams(q, m, l);
  row.closed_form_F =
      Rational(kt, Pow(q, static_cast<unsigned>(m)) * q1l);
  row.closed_form_R = Rational(BigInt(k) * q1l, kt);
  FillRatios(row);
  row.dominates = row.ratio_K >= 1 && row.ratio_M <= 1 && row.ratio_F < 1 &&
                  row.ratio_R < 1;
  return row;
}

namespace {

std::vector<ComparisonRow> ScanK(const DominanceRanges& r, std::int64_t k) {
  std::vector<ComparisonRow> out;
  for (std::int64_t t = 1; t <= k - 2; ++t) {
    for (std::int64_t m = std::max<std::int64_t>(r.m_min, 1); m <= r.m_max;
         ++m) {
      for (std::int64_t q = 2; q <= r.q_max; ++q) {
        std::int64_t l_lo = 1, l_hi = m;
        if (r.l_offset) l_lo = l_hi = m - *r.l_offset;
        for (std::int64_t l = std::max<std::int64_t>(l_lo, 1); l <= l_hi;
             ++l) {
          ComparisonRow row = CompareP1Shang(k, t, m, q, l);
          if (*row.dominates) out.push_back(std::move(row));
        }
      }
    }
  }
  return out;
}

std::vector<ComparisonRow> Search(const DominanceRanges& r, bool parallel) {
  const std::int64_t k0 = std::max<std::int64_t>(r.k_min, 3);
  const std::int64_t count = std::max<std::int64_t>(r.k_max - k0 + 1, 0);
  std::vector<std::vector<ComparisonRow>> per_k(count);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) per_k[i] = ScanK(r, k0 + i);
  std::vector<ComparisonRow> out;
  for (auto& rows : per_k) {
    for (auto& row : rows) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<ComparisonRow> SearchDominatingParams(const DominanceRanges& r) {
  return Search(r, true);
}

std::vector<ComparisonRow> SearchDominatingParamsSerial(
    const DominanceRanges& r) {
  return Search(r, false);
}

AsymptoticCheck AsymptoticSpotCheck(std::int64_t k) {
  AsymptoticCheck check;
  check.k = k;
  check.t = k - 6;
  RequireP(k, check.t);
  const BigInt kt = Binomial(k, check.t);
  const BigInt kt1 = Binomial(k, check.t + 1);
  check.f_envelope = Rational(36 * (k - 5), k * (k - 6));
  check.r_envelope = Rational(36 * k, (k - 5) * (k - 6));
  // C(m,l) <= k - t = 6 with 1 < l < m leaves m <= 6.
  for (std::int64_t m = 3; m <= 6; ++m) {
    for (std::int64_t l = 2; l < m; ++l) {
      const BigInt cml = Binomial(m, l);
      if (cml > 6) continue;
      const auto le = static_cast<unsigned>(l);
      // Smallest q with q^l (t+1) >= C(k,t), i.e. M1/N1 <= M4/N4.
      auto q = static_cast<std::int64_t>(std::pow(
          ToDouble(Rational(kt, check.t + 1)), 1.0 / static_cast<double>(l)));
      q = std::max<std::int64_t>(q - 1, 2);
      while (q > 2 && Pow(q - 1, le) * (check.t + 1) >= kt) --q;
      while (Pow(q, le) * (check.t + 1) < kt) ++q;
      // K1 >= K4 caps q from above.
      for (; cml * Pow(q, le) <= kt1; ++q) {
        ++check.candidates;
        ComparisonRow row = CompareP1Shang(k, check.t, m, q, l);
        if (*row.dominates) check.members.push_back(std::move(row));
      }
    }
  }
  return check;
}

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "markdown" || name == "md") return OutputFormat::kMarkdown;
  return std::nullopt;
}

namespace {

std::string RenderGrid(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& body,
                       OutputFormat format) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells,
                  const std::vector<std::size_t>& widths) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      switch (format) {
        case OutputFormat::kCsv:
          out << (c ? "," : "") << cells[c];
          break;
        case OutputFormat::kMarkdown:
          out << "| " << cells[c] << " ";
          break;
        case OutputFormat::kText: {
          std::string cell = cells[c];
          if (c + 1 < cells.size()) cell.resize(widths[c] + 2, ' ');
          out << cell;
          break;
        }
      }
    }
    if (format == OutputFormat::kMarkdown) out << "|";
    out << "\n";
  };
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& row : body) widths[c] = std::max(widths[c], row[c].size());
  }
  line(header, widths);
  if (format == OutputFormat::kMarkdown) {
    line(std::vector<std::string>(header.size(), "---"), widths);
  }
  for (const auto& row : body) line(row, widths);
  return out.str();
}

std::string Yes(bool b) { return b ? "yes" : "no"; }

// Small ratios switch to scientific notation so they keep their digits.
std::string Ratio(const Rational& v, int digits) {
  if (v != 0 && v < Rational(1, 1000)) {
    return ToScientific(v, std::max(digits - 1, 1)).str();
  }
  return ToDecimal(v, digits);
}

}  // namespace

std::string FormatComparisonRows(const std::vector<ComparisonRow>& rows,
                                 OutputFormat format, int digits) {
  std::vector<std::string> header = {"pair", "k", "t", "m", "q", "l",
                                     "ours (K,F,Z,S)", "baseline (K,F,Z,S)",
                                     "K ratio", "M/N ratio", "F ratio",
                                     "R ratio", "closed form", "F envelope",
                                     "dominates"};
  std::vector<std::vector<std::string>> body;
  auto opt = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  auto params = [&](const SchemeParams& p) {
    std::string s = ToString(p);
    if (format == OutputFormat::kCsv) std::replace(s.begin(), s.end(), ',', ' ');
    return s;
  };
  for (const auto& r : rows) {
    std::string envelope = "-";
    if (r.f_envelope) {
      envelope = r.ratio_F <= *r.f_envelope ? "within" : "EXCEEDED";
    }
    body.push_back({r.pair, opt(r.source.k), opt(r.source.t), opt(r.source.m),
                    opt(r.source.q), opt(r.source.l), params(r.ours),
                    params(r.baseline), ToDecimal(r.ratio_K, digits),
                    ToDecimal(r.ratio_M, digits),
                    Ratio(r.ratio_F, digits),
                    ToDecimal(r.ratio_R, digits),
                    r.closed_form_agrees ? "agrees" : "DIFFERS", envelope,
                    r.dominates ? Yes(*r.dominates) : "-"});
  }
  return RenderGrid(header, body, format);
}

std::optional<TableId> ParseTableId(std::string_view name) {
  if (name == "tk3") return TableId::kTk3;
  if (name == "p2t2") return TableId::kP2T2;
  if (name == "yan") return TableId::kYan;
  if (name == "shang") return TableId::kShang;
  return std::nullopt;
}

std::string_view TableName(TableId id) {
  switch (id) {
    case TableId::kTk3: return "tk3";
    case TableId::kP2T2: return "p2t2";
    case TableId::kYan: return "yan";
    case TableId::kShang: return "shang";
  }
  return "";
}

std::string RenderLike(const Rational& value, std::string_view printed) {
  const auto e = printed.find('e');
  const auto dot = printed.find('.');
  if (e != std::string_view::npos) {
    const int places =
        dot == std::string_view::npos ? 0 : static_cast<int>(e - dot - 1);
    return ToScientific(value, places).str();
  }
  const int places = dot == std::string_view::npos
                         ? 0
                         : static_cast<int>(printed.size() - dot - 1);
  return ToDecimal(value, places);
}

std::string TruncateLike(const Rational& value, std::string_view printed) {
  if (printed.find('e') != std::string_view::npos || value < 0) {
    return RenderLike(value, printed);
  }
  const auto dot = printed.find('.');
  const int places = dot == std::string_view::npos
                         ? 0
                         : static_cast<int>(printed.size() - dot - 1);
  const BigInt scale = Pow(10, static_cast<unsigned>(places));
  return ToDecimal(Rational(Floor(value * Rational(scale)), scale), places);
}

bool RegeneratedTable::ColumnMatches(std::string_view column) const {
  return Mismatches(column).empty();
}

std::vector<const TableCell*> RegeneratedTable::Mismatches(
    std::string_view column) const {
  std::vector<const TableCell*> out;
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      if (cell.column == column && !cell.matches) out.push_back(&cell);
    }
  }
  return out;
}

namespace {

TableCell MakeCell(std::string column, const Rational& value,
                   std::string printed) {
  TableCell cell;
  cell.column = std::move(column);
  cell.value = value;
  cell.rendered = RenderLike(value, printed);
  cell.matches = cell.rendered == printed;
  if (!cell.matches && TruncateLike(value, printed) == printed) {
    cell.matches = cell.truncated = true;
  }
  cell.printed = std::move(printed);
  return cell;
}

}  // namespace

RegeneratedTable RegenerateTable(TableId id) {
  RegeneratedTable table{id, "", {}};
  switch (id) {
    case TableId::kTk3:
      table.title = "P1 vs MN, t = k-3";
      for (const auto& col : published::Tk3()) {
        const ComparisonRow r = CompareP1Mn(col.k, col.k - 3);
        table.rows.push_back(
            {{{"k", col.k}, {"t", col.k - 3}},
             {MakeCell("K", Rational(r.ours.K), col.K),
              MakeCell("F/F_MN", r.ratio_F, col.F_ratio),
              MakeCell("R/R_MN", r.ratio_R, col.R_ratio)}});
      }
      break;
    case TableId::kP2T2:
      table.title = "P2 vs MN, t = 2";
      for (const auto& col : published::P2T2()) {
        const ComparisonRow r = CompareP2Mn(col.k, 2);
        table.rows.push_back({{{"k", col.k}, {"t", 2}},
                              {MakeCell("F/F_MN", r.ratio_F, col.F_ratio),
                               MakeCell("R/R_MN", r.ratio_R, col.R_ratio)}});
      }
      break;
    case TableId::kYan:
      table.title = "P1 vs Yan, K and M/N matched";
      for (const auto& p : published::Yan()) {
        const ComparisonRow r = CompareP1Yan(p.k, p.t);
        if (*r.source.m != p.m || *r.source.q != p.q) {
          throw Error(Errc::kNoMatchingParameters,
                      "published (m, q) disagrees with the matched family");
        }
        table.rows.push_back(
            {{{"k", p.k}, {"t", p.t}, {"m", p.m}, {"q", p.q}},
             {MakeCell("F1/F3", r.ratio_F, p.F_ratio),
              MakeCell("R1/R3", r.ratio_R, p.R_ratio)}});
      }
      break;
    case TableId::kShang:
      table.title = "P1 vs Shang, l = m-1";
      for (const auto& p : published::Shang()) {
        const ComparisonRow r = CompareP1Shang(p.k, p.t, p.m, p.q, p.m - 1);
        table.rows.push_back(
            {{{"k", p.k}, {"t", p.t}, {"m", p.m}, {"q", p.q}},
             {MakeCell("K1/K4", r.ratio_K, p.K_ratio),
              MakeCell("M1/M4", r.ratio_M, p.M_ratio),
              MakeCell("F1/F4", r.ratio_F, p.F_ratio),
              MakeCell("R1/R4", r.ratio_R, p.R_ratio)}});
      }
      break;
  }
  return table;
}

std::string FormatTable(const RegeneratedTable& table, OutputFormat format,
                        std::optional<int> digits) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> body;
  if (!table.rows.empty()) {
    for (const auto& [name, v] : table.rows.front().source) {
      header.push_back(name);
    }
    for (const auto& cell : table.rows.front().cells) {
      header.push_back(cell.column);
      if (format == OutputFormat::kCsv) {
        header.push_back(cell.column + " printed");
      }
    }
  }
  std::size_t mismatches = 0;
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const auto& [name, v] : row.source) line.push_back(std::to_string(v));
    for (const auto& cell : row.cells) {
      std::string shown = cell.rendered;
      if (digits) {
        shown = cell.printed.find('e') != std::string::npos
                    ? ToScientific(cell.value, *digits).str()
                    : ToDecimal(cell.value, *digits);
      }
      if (format == OutputFormat::kCsv) {
        line.push_back(shown);
        line.push_back(cell.printed);
      } else {
        if (!cell.matches) shown += " (printed " + cell.printed + ")";
        if (cell.truncated) {
          shown += " (printed truncated " + cell.printed + ")";
        }
        line.push_back(shown);
      }
      if (!cell.matches) ++mismatches;
    }
    body.push_back(std::move(line));
  }
  std::string out;
  if (format != OutputFormat::kCsv) {
    out = table.title + "\n";
    if (format == OutputFormat::kMarkdown) out = "**" + table.title + "**\n\n";
  }
  out += RenderGrid(header, body, format);
  if (format != OutputFormat::kCsv && mismatches > 0) {
    out += "\n" + std::to_string(mismatches) +
           " cell(s) differ from the published table; formula values shown.\n";
  }
  return out;
}

}  // namespace pdakit
