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

#ifndef PDAKIT_BOUNDS_H_
#define PDAKIT_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdakit/pda.h"
#include "pdakit/rational.h"

namespace pdakit {

// Lower bounds on the number of symbols S of a (K, F, Z, S) array. All
// arithmetic is exact. Inputs must satisfy K >= 1 and 0 <= Z < F; otherwise
// kDegenerateInput (there are no symbol entries to bound).

// nF / (KF + F - n) with n = (F - Z) K, as the unreduced numerator and
// denominator plus the reduced value.
struct FirstBound {
  BigInt numerator;
  BigInt denominator;
  Rational value;
};
FirstBound BoundFirst(std::uint64_t K, std::uint64_t F, std::uint64_t Z);

// The first bound is met with equality iff every row holds n/F symbols and
// every symbol occurs n/S times.
bool FirstBoundTight(const OccupancyStats& stats);

// Terms a_0 = ceil((F-Z)K/F), a_{r+1} = ceil(a_r (F-Z-1-r) / (F-1-r)) of the
// recursive bound; there are F - Z of them.
std::vector<BigInt> BoundSecondTerms(std::uint64_t K, std::uint64_t F,
                                     std::uint64_t Z);
BigInt BoundSecond(std::uint64_t K, std::uint64_t F, std::uint64_t Z);

struct RateBound {
  Rational value;  // K (1 - M/N) / (F M/N + 1)
  // The bound is below the uncoded-placement optimum whenever F > K.
  bool loose_since_f_exceeds_k = false;
};
// Requires 0 < memory_ratio < 1 and F * memory_ratio integral (kNonIntegralZ).
RateBound BoundRateTradeoff(std::uint64_t K, std::uint64_t F,
                            const Rational& memory_ratio);

// C(K, K Z/F): the fewest rows of a (KZ/F + 1)-regular array. Throws
// kNonIntegralParameter unless K Z / F is an integer.
BigInt BoundRowsForRegular(std::uint64_t K, std::uint64_t F, std::uint64_t Z);
BigInt BoundRowsForRegular(std::uint64_t K, const Rational& memory_ratio);
bool MeetsRowBound(std::uint64_t K, std::uint64_t F, std::uint64_t Z);

struct BoundReport {
  std::uint64_t K = 0, F = 0, Z = 0, n = 0;
  FirstBound bound1;
  BigInt bound1_ceiling;
  std::vector<BigInt> bound2_terms;
  BigInt bound2;
  std::optional<RateBound> rate_bound;  // absent when Z == 0
  std::optional<BigInt> rows_for_regular;  // present when KZ/F is integral
  std::optional<std::uint64_t> achievable_S;
};

BoundReport MakeBoundReport(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                            std::optional<std::uint64_t> achievable_S =
                                std::nullopt);
std::string FormatBoundReport(const BoundReport& report);
std::string FormatBoundReportCsv(const BoundReport& report);

// One verified (or refuted) inequality of an optimality certificate.
struct CertificateLine {
  std::string statement;
  Rational lhs;
  Rational rhs;
  std::string relation;  // ">", ">=", "==", "<", "<="
  bool holds = false;
};

struct Certificate {
  std::vector<CertificateLine> lines;
  bool holds() const;
  std::string Format() const;
};

// Rate/subpacketization optimality of the (C(k,t+1), C(k,t), C(k,t)-(t+1), k)
// array, for 0 < t < k-1. Part one: every F' < C(k,t) with an integral star
// count is forced above rate k/C(k,t) by the recursive bound. Part two: every
// (F', S') with F' <= C(k,t) and S'/F' < k/C(k,t) is ruled out by the first
// bound on the (0,2,1) conjugate.
Certificate ParetoCheckP1(std::int64_t k, std::int64_t t);

// The (C(k,t), k, t, C(k,t+1)) array meets the rate tradeoff with equality.
Certificate ParetoCheckP2(std::int64_t k, std::int64_t t);

}  // namespace pdakit

#endif  // PDAKIT_BOUNDS_H_
