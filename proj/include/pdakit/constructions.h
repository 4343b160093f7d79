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

#ifndef PDAKIT_CONSTRUCTIONS_H_
#define PDAKIT_CONSTRUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pdakit/incidence.h"
#include "pdakit/pda.h"
#include "pdakit/rational.h"

namespace pdakit {

// k users, t = KM/N. Requires 0 < t < k.
struct MnSpec {
  std::uint32_t k = 0;
  std::uint32_t t = 0;
};

// Rows are the t-subsets of [0,k) in lexicographic order, columns the users.
// Entry (T, u) is a star when u is in T, otherwise the lexicographic rank of
// T + {u} among the (t+1)-subsets.
Pda BuildMn(const MnSpec& spec);

// m side-by-side copies of BuildMn(k, t) over a shared row set; copy j has its
// symbols shifted by j * C(k, t+1).
Pda BuildGroupedMn(std::uint32_t k, std::uint32_t t, std::uint32_t m);

// The six arrays obtained from the MN array by permuting incidence
// coordinates. kA is the MN array itself.
enum class Variant { kA, kB, kC, kD, kE, kF };

std::optional<Variant> ParseVariant(std::string_view name);
char VariantLetter(Variant v);
CoordinateOrder VariantOrder(Variant v);

// Requires 0 < t < k - 1. Symbols are relabelled by first appearance.
Pda BuildVariant(const MnSpec& spec, Variant which);

// (C(k,t+1), C(k,t), C(k,t)-(t+1), k): variant (c).
Pda BuildP1(const MnSpec& spec);
// (C(k,t), k, t, C(k,t+1)): variant (f).
Pda BuildP2(const MnSpec& spec);

// (K, F, Z, S) of a scheme family member, kept exact.
struct SchemeParams {
  BigInt K, F, Z, S;

  Rational rate() const { return Rational(S, F); }
  Rational memory_ratio() const { return Rational(Z, F); }
  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

std::string ToString(const SchemeParams& p);

enum class Family { kMn, kGrouped, kYan, kShang, kP1, kP2, kVariant };

std::string_view FamilyName(Family f);

struct SourceParams {
  std::optional<std::int64_t> k, t, m, q, l;
};

struct FamilyParams {
  Family family;
  std::optional<Variant> variant;
  SourceParams source;
  SchemeParams params;
};

// Closed-form parameters. Yan and Shang members are described by parameters
// only; no array is built for them. Throws kParameterOutOfRange when the
// source parameters are missing or outside the family's range.
FamilyParams GetFamilyParams(Family family, const SourceParams& source,
                             std::optional<Variant> variant = std::nullopt);

SchemeParams MnParams(std::int64_t k, std::int64_t t);
SchemeParams GroupedParams(std::int64_t k, std::int64_t t, std::int64_t m);
SchemeParams YanParams(std::int64_t q, std::int64_t m);
SchemeParams ShangParams(std::int64_t q, std::int64_t m, std::int64_t l);
SchemeParams VariantParams(std::int64_t k, std::int64_t t, Variant v);
SchemeParams P1Params(std::int64_t k, std::int64_t t);
SchemeParams P2Params(std::int64_t k, std::int64_t t);

}  // namespace pdakit

#endif  // PDAKIT_CONSTRUCTIONS_H_
