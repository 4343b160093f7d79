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


#ifndef PDAKIT_ORACLE_H_
#define PDAKIT_ORACLE_H_

#include <cstdint>
#include <optional>

#include "pdakit/pda.h"

namespace pdakit {

// Exhaustive search for the fewest symbols of a (K, F, Z, S) array, for tiny
// sizes only. Rows and columns are limited to 64 each.
struct OracleOptions {
  // Largest S to try. Defaults to (F - Z) K, where a solution always exists.
  std::optional<std::uint64_t> s_max;
  // Refuse searches with K * F above this (kSearchSpaceTooLarge).
  std::uint64_t max_cells = 24;
  // Start at max(ceil(bound1), bound2) instead of S = 1. Turning this off
  // makes the result independent of the bounds.
  bool start_from_bounds = true;
};

struct OracleResult {
  std::optional<std::uint64_t> min_s;  // empty: nothing found up to s_max
  std::optional<Pda> witness;          // canonical relabelling
  std::uint64_t s_start = 0;
  std::uint64_t nodes = 0;  // search nodes visited; schedule-dependent
};

OracleResult OracleMinS(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                        const OracleOptions& options = {});
OracleResult OracleMinSSerial(std::uint64_t K, std::uint64_t F,
                              std::uint64_t Z,
                              const OracleOptions& options = {});

// A (K, F, Z, S') array with S' <= S and exactly Z stars per column, if any.
// The parallel and serial versions return the same array.
std::optional<Pda> FindPda(std::uint64_t K, std::uint64_t F, std::uint64_t Z,
                           std::uint64_t S, std::uint64_t max_cells = 24);
std::optional<Pda> FindPdaSerial(std::uint64_t K, std::uint64_t F,
                                 std::uint64_t Z, std::uint64_t S,
                                 std::uint64_t max_cells = 24);

}  // namespace pdakit

#endif  // PDAKIT_ORACLE_H_
