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

#ifndef PDAKIT_COMBINATORICS_H_
#define PDAKIT_COMBINATORICS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace pdakit {

// C(n, k) in 64 bits. Throws kParameterOutOfRange on overflow.
std::uint64_t BinomialU64(std::uint64_t n, std::uint64_t k);

// Lexicographic rank of a strictly increasing r-subset of [0, n) among all
// r-subsets of [0, n).
std::uint64_t RankSubset(std::span<const std::uint32_t> subset, std::uint32_t n);
std::vector<std::uint32_t> UnrankSubset(std::uint64_t rank, std::uint32_t n,
                                        std::uint32_t r);

// All r-subsets of [0, n) in lexicographic order.
std::vector<std::vector<std::uint32_t>> LexSubsets(std::uint32_t n,
                                                   std::uint32_t r);

}  // namespace pdakit

#endif  // PDAKIT_COMBINATORICS_H_
