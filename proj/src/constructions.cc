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

#include "pdakit/constructions.h"

#include <algorithm>
#include <string>
#include <vector>

#include "pdakit/combinatorics.h"
#include "pdakit/errors.h"

namespace pdakit {
namespace {

constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 26;

void RequireMn(std::int64_t k, std::int64_t t) {
  if (k < 2 || t <= 0 || t >= k) {
    throw Error(Errc::kParameterOutOfRange,
                "MN parameters need 0 < t < k, got k=" + std::to_string(k) +
                    " t=" + std::to_string(t));
  }
}

void RequireVariant(std::int64_t k, std::int64_t t) {
  if (k < 3 || t <= 0 || t >= k - 1) {
    throw Error(Errc::kParameterOutOfRange,
                "conjugate variants need 0 < t < k-1, got k=" +
                    std::to_string(k) + " t=" + std::to_string(t));
  }
}

void RequireBuildable(std::uint64_t rows, std::uint64_t cols) {
  if (rows > kMaxCells || cols > kMaxCells || rows * cols > kMaxCells) {
    throw Error(Errc::kParameterOutOfRange,
                "array of " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " is too large to materialise");
  }
}

std::int64_t Need(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) {
    throw Error(Errc::kParameterOutOfRange,
                std::string("missing source parameter ") + name);
  }
  return *v;
}

}  // namespace

Pda BuildMn(const MnSpec& spec) {
  RequireMn(spec.k, spec.t);
  const std::uint32_t k = spec.k;
  const std::uint32_t t = spec.t;
  const auto rows = LexSubsets(k, t);
  RequireBuildable(rows.size(), k);
  std::vector<Entry> entries;
  entries.reserve(rows.size() * k);
  std::vector<std::uint32_t> extended(t + 1);
  for (const auto& subset : rows) {
    for (std::uint32_t u = 0; u < k; ++u) {
      if (std::binary_search(subset.begin(), subset.end(), u)) {
        entries.push_back(Entry::Star());
        continue;
      }
      std::merge(subset.begin(), subset.end(), &u, &u + 1, extended.begin());
      entries.push_back(
          Entry::Of(static_cast<Symbol>(RankSubset(extended, k))));
    }
  }
  return Pda(rows.size(), k, std::move(entries));
}

Pda BuildGroupedMn(std::uint32_t k, std::uint32_t t, std::uint32_t m) {
  RequireMn(k, t);
  if (m == 0) {
    throw Error(Errc::kParameterOutOfRange, "group count m must be >= 1");
  }
  const Pda base = BuildMn({k, t});
  RequireBuildable(base.rows(), std::uint64_t{k} * m);
  const auto shift = static_cast<Symbol>(BinomialU64(k, t + 1));
  std::vector<Entry> entries;
  entries.reserve(base.rows() * k * m);
  for (std::size_t r = 0; r < base.rows(); ++r) {
    for (std::uint32_t group = 0; group < m; ++group) {
      for (Entry e : base.row(r)) {
        entries.push_back(e.is_star() ? e : Entry::Of(e.symbol() +
                                                      group * shift));
      }
    }
  }
  return Pda(base.rows(), std::size_t{k} * m, std::move(entries));
}

std::optional<Variant> ParseVariant(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (name[0]) {
    case 'a': return Variant::kA;
    case 'b': return Variant::kB;
    case 'c': return Variant::kC;
    case 'd': return Variant::kD;
    case 'e': return Variant::kE;
    case 'f': return Variant::kF;
    default: return std::nullopt;
  }
}

char VariantLetter(Variant v) {
  return static_cast<char>('a' + static_cast<int>(v));
}

// Coordinate orders applied to the MN incidence set (rows, users, symbols):
//   b (2,1,0): rows <- symbols, symbols <- rows
//   c (0,2,1): columns <- symbols, symbols <- users
//   d (1,2,0): rows <- users, columns <- symbols
//   e (2,0,1): rows <- symbols, columns <- rows
//   f (1,0,2): transpose
CoordinateOrder VariantOrder(Variant v) {
  switch (v) {
    case Variant::kA: return {0, 1, 2};
    case Variant::kB: return {2, 1, 0};
    case Variant::kC: return {0, 2, 1};
    case Variant::kD: return {1, 2, 0};
    case Variant::kE: return {2, 0, 1};
    case Variant::kF: return {1, 0, 2};
  }
  return {0, 1, 2};
}

Pda BuildVariant(const MnSpec& spec, Variant which) {
  RequireVariant(spec.k, spec.t);
  const Pda mn = BuildMn(spec);
  const IncidenceSet conjugate =
      Conjugate(ToIncidenceSet(mn), VariantOrder(which));
  return RelabelCanonical(FromIncidenceSet(conjugate));
}

Pda BuildP1(const MnSpec& spec) { return BuildVariant(spec, Variant::kC); }
Pda BuildP2(const MnSpec& spec) { return BuildVariant(spec, Variant::kF); }

std::string ToString(const SchemeParams& p) {
  return "(K=" + p.K.str() + ",F=" + p.F.str() + ",Z=" + p.Z.str() +
         ",S=" + p.S.str() + ")";
}

std::string_view FamilyName(Family f) {
  switch (f) {
    case Family::kMn: return "mn";
    case Family::kGrouped: return "grouped";
    case Family::kYan: return "yan";
    case Family::kShang: return "shang";
    case Family::kP1: return "p1";
    case Family::kP2: return "p2";
    case Family::kVariant: return "variant";
  }
  return "unknown";
}

SchemeParams MnParams(std::int64_t k, std::int64_t t) {
  RequireMn(k, t);
  return {k, Binomial(k, t), Binomial(k - 1, t - 1), Binomial(k, t + 1)};
}

SchemeParams GroupedParams(std::int64_t k, std::int64_t t, std::int64_t m) {
  RequireMn(k, t);
  if (m < 1) {
    throw Error(Errc::kParameterOutOfRange, "group count m must be >= 1");
  }
  return {BigInt(m) * k, Binomial(k, t), Binomial(k - 1, t - 1),
          BigInt(m) * Binomial(k, t + 1)};
}

SchemeParams YanParams(std::int64_t q, std::int64_t m) {
  if (q < 2 || m < 1) {
    throw Error(Errc::kParameterOutOfRange,
                "Yan family needs q >= 2 and m >= 1");
  }
  const BigInt qm = Pow(q, static_cast<unsigned>(m));
  return {BigInt(q) * (m + 1), (q - 1) * qm,
          BigInt(q - 1) * (q - 1) * Pow(q, static_cast<unsigned>(m - 1)), qm};
}

SchemeParams ShangParams(std::int64_t q, std::int64_t m, std::int64_t l) {
  if (q < 2 || l < 1 || m < l) {
    throw Error(Errc::kParameterOutOfRange,
                "Shang family needs q >= 2 and 1 <= l <= m");
  }
  const BigInt qm = Pow(q, static_cast<unsigned>(m));
  const BigInt ql = Pow(q, static_cast<unsigned>(l));
  const BigInt q1l = Pow(q - 1, static_cast<unsigned>(l));
  return {Binomial(m, l) * ql, qm * q1l,
          (qm - Pow(q, static_cast<unsigned>(m - l))) * q1l, qm};
}

SchemeParams VariantParams(std::int64_t k, std::int64_t t, Variant v) {
  RequireVariant(k, t);
  const BigInt kt = Binomial(k, t);
  const BigInt kt1 = Binomial(k, t + 1);
  switch (v) {
    case Variant::kA: return {k, kt, Binomial(k - 1, t - 1), kt1};
    case Variant::kB: return {k, kt1, Binomial(k - 1, t + 1), kt};
    case Variant::kC: return {kt1, kt, kt - (t + 1), k};
    case Variant::kD: return {kt1, k, k - (t + 1), kt};
    case Variant::kE: return {kt, kt1, kt1 - (k - t), k};
    case Variant::kF: return {kt, k, t, kt1};
  }
  return {};
}

SchemeParams P1Params(std::int64_t k, std::int64_t t) {
  return VariantParams(k, t, Variant::kC);
}

SchemeParams P2Params(std::int64_t k, std::int64_t t) {
  return VariantParams(k, t, Variant::kF);
}

FamilyParams GetFamilyParams(Family family, const SourceParams& source,
                             std::optional<Variant> variant) {
  FamilyParams out{family, variant, source, {}};
  switch (family) {
    case Family::kMn:
      out.params = MnParams(Need(source.k, "k"), Need(source.t, "t"));
      break;
    case Family::kGrouped:
      out.params = GroupedParams(Need(source.k, "k"), Need(source.t, "t"),
                                 Need(source.m, "m"));
      break;
    case Family::kYan:
      out.params = YanParams(Need(source.q, "q"), Need(source.m, "m"));
      break;
    case Family::kShang:
      out.params = ShangParams(Need(source.q, "q"), Need(source.m, "m"),
                               Need(source.l, "l"));
      break;
    case Family::kP1:
      out.params = P1Params(Need(source.k, "k"), Need(source.t, "t"));
      break;
    case Family::kP2:
      out.params = P2Params(Need(source.k, "k"), Need(source.t, "t"));
      break;
    case Family::kVariant:
      if (!variant) {
        throw Error(Errc::kParameterOutOfRange, "missing variant letter");
      }
      out.params =
          VariantParams(Need(source.k, "k"), Need(source.t, "t"), *variant);
      break;
  }
  return out;
}

}  // namespace pdakit
