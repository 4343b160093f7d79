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

#include "pdakit/combinatorics.h"

#include <limits>
#include <string>

#include "pdakit/errors.h"

namespace pdakit {

std::uint64_t BinomialU64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n - k < k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(Errc::kParameterOutOfRange,
                  "C(" + std::to_string(n) + "," + std::to_string(k) +
                      ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t RankSubset(std::span<const std::uint32_t> subset,
                         std::uint32_t n) {
  const auto r = static_cast<std::uint32_t>(subset.size());
  std::uint64_t rank = 0;
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t x = next; x < subset[i]; ++x) {
      rank += BinomialU64(n - 1 - x, r - 1 - i);
    }
    next = subset[i] + 1;
  }
  return rank;
}

std::vector<std::uint32_t> UnrankSubset(std::uint64_t rank, std::uint32_t n,
                                        std::uint32_t r) {
  if (r > n || rank >= BinomialU64(n, r)) {
    throw Error(Errc::kParameterOutOfRange, "subset rank out of range");
  }
  std::vector<std::uint32_t> subset;
  subset.reserve(r);
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (;; ++x) {
      const std::uint64_t block = BinomialU64(n - 1 - x, r - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    subset.push_back(x++);
  }
  return subset;
}

std::vector<std::vector<std::uint32_t>> LexSubsets(std::uint32_t n,
                                                   std::uint32_t r) {
  std::vector<std::vector<std::uint32_t>> out;
  if (r > n) return out;
  std::vector<std::uint32_t> cur(r);
  for (std::uint32_t i = 0; i < r; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    // Advance the rightmost element that still has room.
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && cur[i] == n - r + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::uint32_t j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace pdakit
