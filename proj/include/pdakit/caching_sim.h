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


#ifndef PDAKIT_CACHING_SIM_H_
#define PDAKIT_CACHING_SIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdakit/pda.h"
#include "pdakit/rational.h"

namespace pdakit {

using Bytes = std::vector<std::uint8_t>;

// N files of F packets, each packet B bytes.
class FileLibrary {
 public:
  FileLibrary(std::size_t files, std::size_t packets, std::size_t packet_bytes,
              Bytes data);
  static FileLibrary Random(std::size_t files, std::size_t packets,
                            std::size_t packet_bytes = 64,
                            std::uint64_t seed = 0);

  std::size_t files() const { return files_; }
  std::size_t packets() const { return packets_; }
  std::size_t packet_bytes() const { return packet_bytes_; }
  std::span<const std::uint8_t> packet(std::size_t file,
                                       std::size_t index) const;

 private:
  std::size_t files_;
  std::size_t packets_;
  std::size_t packet_bytes_;
  Bytes data_;
};

// What each user stores after placement: packet j of every file whenever
// column k has a star in row j.
class CacheContents {
 public:
  CacheContents(std::vector<std::vector<std::size_t>> rows,
                std::vector<std::vector<Bytes>> data, std::size_t files,
                std::size_t packets);

  std::size_t users() const { return rows_.size(); }
  bool Has(std::size_t user, std::size_t file, std::size_t packet) const;
  // Empty span when the packet is not cached.
  std::span<const std::uint8_t> Get(std::size_t user, std::size_t file,
                                    std::size_t packet) const;
  // Cached packet indices of one user, ascending.
  const std::vector<std::size_t>& rows(std::size_t user) const {
    return rows_[user];
  }
  // Number of cached packets, N times the user's star count.
  std::size_t size(std::size_t user) const;

 private:
  std::vector<std::vector<std::size_t>> rows_;
  // data_[user][file * packets + packet]; empty when not cached.
  std::vector<std::vector<Bytes>> data_;
  std::size_t files_;
  std::size_t packets_;
};

// Does not check the array: invalid arrays are allowed through so that
// decoding failures can be observed. Throws kDimensionMismatch if the
// library's packet count differs from the row count.
CacheContents Place(const Pda& p, const FileLibrary& lib);

struct SlotTerm {
  std::size_t user = 0;
  std::size_t row = 0;
  std::size_t file = 0;  // d_user
  friend bool operator==(const SlotTerm&, const SlotTerm&) = default;
};

struct SimulationTranscript {
  std::vector<Bytes> signals;                // one per slot
  std::vector<std::vector<SlotTerm>> terms;  // per slot, users ascending
  std::size_t packets_per_file = 0;

  std::size_t delivered_packet_count() const { return signals.size(); }
  Rational rate() const;
};

// Slot s carries the XOR of W_{d_k, j} over all cells (j, k) holding s.
// Throws kDimensionMismatch for a demand of the wrong length and
// kParameterOutOfRange for a file index outside the library.
SimulationTranscript Deliver(const Pda& p, const FileLibrary& lib,
                             std::span<const std::size_t> demand);

// "s: W_{i,j}⊕W_{i,j}⊕..." per slot, one line each.
std::string RenderSymbolic(const SimulationTranscript& transcript);

struct DecodeFailure {
  std::size_t user = 0;
  std::size_t packet = 0;
  std::string reason;
  std::string Describe() const;
};

struct DecodeResult {
  std::vector<Bytes> files;  // the file each user reassembled
  std::vector<DecodeFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Each user rebuilds its file from its cache and the signals alone.
DecodeResult Decode(const Pda& p, const CacheContents& caches,
                    const SimulationTranscript& transcript,
                    std::span<const std::size_t> demand);

// Compares the decoded files with the library and appends a failure per
// mismatching packet.
void CheckAgainstLibrary(const FileLibrary& lib,
                         std::span<const std::size_t> demand,
                         DecodeResult& result);

// Demand-free check: every other term of every slot is cached by each user
// that needs the slot. When this returns nothing, decoding succeeds for every
// library and every demand vector.
std::vector<DecodeFailure> VerifyDecodability(const Pda& p);

enum class SweepMode { kExhaustive, kSampled };

struct SweepOptions {
  SweepMode mode = SweepMode::kExhaustive;
  std::uint64_t samples = 200;       // sampled mode only
  std::uint64_t seed = 0;            // library bytes and sampled demands
  std::size_t packet_bytes = 64;
  std::uint64_t max_demands = 4096;  // exhaustive guard on N^K
};

struct SweepSummary {
  std::uint64_t demands = 0;
  std::uint64_t failed_demands = 0;
  std::optional<std::vector<std::size_t>> first_failed_demand;
  std::optional<DecodeFailure> first_failure;
  // Every demand used the same number of slots.
  bool constant_slot_count = true;
  std::size_t slots = 0;
  Rational rate;  // slots / F
};

// Runs place, deliver, decode and the library comparison over every demand in
// [0, N)^K, or over `samples` pseudo-random demands. Throws kSweepTooLarge
// when an exhaustive sweep exceeds max_demands.
SweepSummary DemandSweep(const Pda& p, std::size_t files,
                         const SweepOptions& options = {});
SweepSummary DemandSweepSerial(const Pda& p, std::size_t files,
                               const SweepOptions& options = {});

// Parses "exhaustive" or "sampled:COUNT".
SweepOptions ParseSweepMode(const std::string& text);

}  // namespace pdakit

#endif  // PDAKIT_CACHING_SIM_H_
