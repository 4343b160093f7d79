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

#include "pdakit/bounds.h"

#include <algorithm>
#include <sstream>

#include "pdakit/errors.h"

namespace pdakit {
namespace {

void RequireKfz(std::uint64_t K, std::uint64_t F, std::uint64_t Z) {
  if (K == 0 || F == 0 || Z >= F) {
    throw Error(Errc::kDegenerateInput,
                "need K >= 1 and 0 <= Z < F, got K=" + std::to_string(K) +
                    " F=" + std::to_string(F) + " Z=" + std::to_string(Z));
  }
}

std::string Pad(const std::string& label) {
  std::string out = label;
  if (out.size() < 18) out.resize(18, ' ');
  return out;
}

}  // namespace

FirstBound BoundFirst(std::uint64_t K, std::uint64_t F, std::uint64_t Z) {
  RequireKfz(K, F, Z);
  const BigInt n = BigInt(F - Z) * K;
  FirstBound b;
  b.numerator = n * F;
  b.denominator = BigInt(K) * F + F - n;
  b.value = Rational(b.numerator, b.denominator);
  return b;
}

bool FirstBoundTight(const OccupancyStats& stats) {
  const std::size_t n = stats.total_symbols();
  const std::size_t S = stats.symbol_counts.size();
  const std::size_t F = stats.row_counts.size();
  if (n == 0 || S == 0 || F == 0 || n % F != 0 || n % S != 0) return false;
  auto all_equal = [](const std::vector<std::size_t>& v, std::size_t x) {
    return std::all_of(v.begin(), v.end(),
                       [x](std::size_t y) { return y == x; });
  };
  return all_equal(stats.row_counts, n / F) &&
         all_equal(stats.symbol_counts, n / S);
}

std::vector<BigInt> BoundSecondTerms(std::uint64_t K, std::uint64_t F,
                                     std::uint64_t Z) {
  RequireKfz(K, F, Z);
  std::vector<BigInt> terms;
  terms.reserve(F - Z);
  terms.push_back(CeilDiv(BigInt(F - Z) * K, F));
  for (std::uint64_t r = 0; r + 1 < F - Z; ++r) {
    terms.push_back(CeilDiv(terms.back() * (F - Z - 1 - r), F - 1 - r));
  }
  return terms;
}

BigInt BoundSecond(std::uint64_t K, std::uint64_t F, std::uint64_t Z) {
  BigInt sum = 0;
  for (const BigInt& a : BoundSecondTerms(K, F, Z)) sum += a;
  return sum;
}

RateBound BoundRateTradeoff(std::uint64_t K, std::uint64_t F,
                            const Rational& memory_ratio) {
  if (K == 0 || F == 0 || memory_ratio <= 0 || memory_ratio >= 1) {
    throw Error(Errc::kParameterOutOfRange,
                "need K, F >= 1 and 0 < M/N < 1");
  }
  const Rational Z = memory_ratio * F;
  if (!IsIntegral(Z)) {
    throw Error(Errc::kNonIntegralZ,
                "F * M/N = " + ToString(Z) + " is not an integer");
  }
  RateBound b;
  b.value = Rational(K) * (1 - memory_ratio) / (Z + 1);
  b.loose_since_f_exceeds_k = F > K;
  return b;
}

BigInt BoundRowsForRegular(std::uint64_t K, const Rational& memory_ratio) {
  const Rational t = memory_ratio * K;
  if (!IsIntegral(t)) {
    throw Error(Errc::kNonIntegralParameter,
                "K Z / F = " + ToString(t) + " is not an integer");
  }
  return Binomial(K, Numerator(t));
}

BigInt BoundRowsForRegular(std::uint64_t K, std::uint64_t F, std::uint64_t Z) {
  if (F == 0) throw Error(Errc::kDegenerateInput, "F must be positive");
  return BoundRowsForRegular(K, Rational(Z, F));
}

bool MeetsRowBound(std::uint64_t K, std::uint64_t F, std::uint64_t Z) {
  return BigInt(F) >= BoundRowsForRegular(K, F, Z);
}

BoundReport MakeBoundReport(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                            std::optional<std::uint64_t> achievable_S) {
  BoundReport r;
  r.K = K;
  r.F = F;
  r.Z = Z;
  r.bound1 = BoundFirst(K, F, Z);
  r.n = (F - Z) * K;
  r.bound1_ceiling = Ceil(r.bound1.value);
  r.bound2_terms = BoundSecondTerms(K, F, Z);
  r.bound2 = BoundSecond(K, F, Z);
  if (Z > 0) r.rate_bound = BoundRateTradeoff(K, F, Rational(Z, F));
  if (Z > 0 && (BigInt(K) * Z) % F == 0) {
    r.rows_for_regular = BoundRowsForRegular(K, F, Z);
  }
  r.achievable_S = achievable_S;
  return r;
}

std::string FormatBoundReport(const BoundReport& r) {
  std::ostringstream out;
  out << Pad("K F Z") << r.K << " " << r.F << " " << r.Z << "\n";
  out << Pad("n") << r.n << "\n";
  out << Pad("bound1") << r.bound1.numerator << "/" << r.bound1.denominator;
  if (!IsIntegral(r.bound1.value) ||
      r.bound1.denominator != 1) {
    out << " = " << ToString(r.bound1.value);
  }
  out << " ~ " << ToDecimal(r.bound1.value, 6) << "\n";
  out << Pad("bound1 ceiling") << r.bound1_ceiling << "\n";
  out << Pad("bound2");
  for (std::size_t i = 0; i < r.bound2_terms.size(); ++i) {
    out << (i ? " + " : "") << r.bound2_terms[i];
  }
  out << " = " << r.bound2 << "\n";
  out << Pad("S lower bound")
      << std::max(r.bound1_ceiling, r.bound2) << "\n";
  if (r.rate_bound) {
    out << Pad("rate bound") << ToString(r.rate_bound->value) << " ~ "
        << ToDecimal(r.rate_bound->value, 6);
    if (r.rate_bound->loose_since_f_exceeds_k) out << "  (not tight: F > K)";
    out << "\n";
  }
  if (r.rows_for_regular) {
    out << Pad("regular rows >=") << *r.rows_for_regular << "\n";
  }
  if (r.achievable_S) out << Pad("achievable S") << *r.achievable_S << "\n";
  return out.str();
}

std::string FormatBoundReportCsv(const BoundReport& r) {
  std::ostringstream out;
  out << "K,F,Z,n,bound1,bound1_ceiling,bound2,rate_bound,rate_bound_loose,"
         "rows_for_regular,achievable_S\n";
  out << r.K << "," << r.F << "," << r.Z << "," << r.n << ","
      << ToString(r.bound1.value) << "," << r.bound1_ceiling << ","
      << r.bound2 << ",";
  if (r.rate_bound) {
    out << ToString(r.rate_bound->value) << ","
        << (r.rate_bound->loose_since_f_exceeds_k ? "true" : "false");
  } else {
    out << ",";
  }
  out << ",";
  if (r.rows_for_regular) out << *r.rows_for_regular;
  out << ",";
  if (r.achievable_S) out << *r.achievable_S;
  out << "\n";
  return out.str();
}

bool Certificate::holds() const {
  return !lines.empty() &&
         std::all_of(lines.begin(), lines.end(),
                     [](const CertificateLine& l) { return l.holds; });
}

std::string Certificate::Format() const {
  std::ostringstream out;
  for (const auto& l : lines) {
    out << (l.holds ? "[ok]   " : "[FAIL] ") << l.statement << ": "
        << ToString(l.lhs) << " " << l.relation << " " << ToString(l.rhs)
        << "\n";
  }
  return out.str();
}

namespace {

CertificateLine Compare(std::string statement, const Rational& lhs,
                        const std::string& relation, const Rational& rhs) {
  bool holds = false;
  if (relation == ">") holds = lhs > rhs;
  if (relation == ">=") holds = lhs >= rhs;
  if (relation == "==") holds = lhs == rhs;
  if (relation == "<") holds = lhs < rhs;
  if (relation == "<=") holds = lhs <= rhs;
  return {std::move(statement), lhs, rhs, relation, holds};
}

}  // namespace

Certificate ParetoCheckP1(std::int64_t k, std::int64_t t) {
  if (k < 3 || t <= 0 || t >= k - 1) {
    throw Error(Errc::kParameterOutOfRange,
                "need 0 < t < k-1, got k=" + std::to_string(k) +
                    " t=" + std::to_string(t));
  }
  const BigInt rows = Binomial(k, t);       // F of the array
  const BigInt users = Binomial(k, t + 1);  // K of the array
  const std::uint64_t rows64 = ToU64(rows);
  const std::uint64_t users64 = ToU64(users);
  const Rational rate = Rational(k) / Rational(rows);
  Certificate cert;

  // Fewer rows at the same K and M/N force a strictly larger rate.
  for (std::uint64_t f = 1; f < rows64; ++f) {
    if ((BigInt(f) * (t + 1)) % rows != 0) continue;
    const BigInt x = BigInt(f) * (t + 1) / rows;
    const std::uint64_t z = f - ToU64(x);
    const BigInt s_floor = BoundSecond(users64, f, z);
    const std::string where =
        "F'=" + std::to_string(f) + " Z'=" + std::to_string(z);
    cert.lines.push_back(Compare(where + ": bound2 >= k-t-1+F'(t+1)/C(k,t)",
                                 Rational(s_floor), ">=",
                                 Rational(k - t - 1) + Rational(x)));
    cert.lines.push_back(Compare(where + ": rate >= bound2/F' > k/C(k,t)",
                                 Rational(s_floor, f), ">", rate));
  }

  // A lower rate with at most C(k,t) rows is impossible: the (0,2,1)
  // conjugate of such an array would be an S' x F' grid holding
  // n = F'(k-t) symbols drawn from C(k,t+1) values.
  for (std::uint64_t f = 1; f <= rows64; ++f) {
    if ((BigInt(f) * (t + 1)) % rows != 0) continue;
    const BigInt n = BigInt(f) * (k - t);
    for (std::uint64_t s = 1; BigInt(s) * rows < BigInt(k) * f; ++s) {
      const std::string where =
          "F'=" + std::to_string(f) + " S'=" + std::to_string(s);
      if (n > BigInt(s) * f) {
        cert.lines.push_back(Compare(where + ": entries exceed grid cells",
                                     Rational(n), ">", Rational(BigInt(s) * f)));
        continue;
      }
      const Rational bound1 = Rational(n * f, BigInt(s) * f + f - n);
      cert.lines.push_back(Compare(
          where + ": first bound on conjugate exceeds C(k,t+1)", bound1, ">",
          Rational(users)));
    }
  }
  return cert;
}

Certificate ParetoCheckP2(std::int64_t k, std::int64_t t) {
  if (k < 3 || t <= 0 || t >= k - 1) {
    throw Error(Errc::kParameterOutOfRange,
                "need 0 < t < k-1, got k=" + std::to_string(k) +
                    " t=" + std::to_string(t));
  }
  const std::uint64_t users = ToU64(Binomial(k, t));
  const Rational ratio(t, k);
  const Rational rate = Rational(Binomial(k, t + 1), k);
  Certificate cert;
  cert.lines.push_back(Compare("F = k <= K = C(k,t)", Rational(k), "<=",
                               Rational(users)));
  cert.lines.push_back(
      Compare("rate tradeoff at F=k equals C(k,t+1)/k",
              BoundRateTradeoff(users, k, ratio).value, "==", rate));
  for (std::int64_t f = 1; f < k; ++f) {
    if (!IsIntegral(ratio * f)) continue;
    cert.lines.push_back(Compare(
        "F'=" + std::to_string(f) + ": rate tradeoff exceeds C(k,t+1)/k",
        BoundRateTradeoff(users, f, ratio).value, ">", rate));
  }
  return cert;
}

}  // namespace pdakit
