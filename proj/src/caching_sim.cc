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


#include "pdakit/caching_sim.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>

#include "pdakit/errors.h"

namespace pdakit {
namespace {

void XorInto(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src) {
  for (std::size_t b = 0; b < dst.size(); ++b) dst[b] ^= src[b];
}

std::mt19937_64 StreamFor(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

FileLibrary::FileLibrary(std::size_t files, std::size_t packets,
                         std::size_t packet_bytes, Bytes data)
    : files_(files), packets_(packets), packet_bytes_(packet_bytes),
      data_(std::move(data)) {
  if (files == 0 || packets == 0 || packet_bytes == 0) {
    throw Error(Errc::kDegenerateInput, "N, F and B must be positive");
  }
  if (data_.size() != files * packets * packet_bytes) {
    throw Error(Errc::kDimensionMismatch, "library holds " +
                                              std::to_string(data_.size()) +
                                              " bytes, expected N*F*B");
  }
}

FileLibrary FileLibrary::Random(std::size_t files, std::size_t packets,
                                std::size_t packet_bytes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes data(files * packets * packet_bytes);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : data) b = static_cast<std::uint8_t>(byte(rng));
  return FileLibrary(files, packets, packet_bytes, std::move(data));
}

std::span<const std::uint8_t> FileLibrary::packet(std::size_t file,
                                                  std::size_t index) const {
  return std::span<const std::uint8_t>(data_).subspan(
      (file * packets_ + index) * packet_bytes_, packet_bytes_);
}

CacheContents::CacheContents(std::vector<std::vector<std::size_t>> rows,
                             std::vector<std::vector<Bytes>> data,
                             std::size_t files, std::size_t packets)
    : rows_(std::move(rows)), data_(std::move(data)), files_(files),
      packets_(packets) {}

bool CacheContents::Has(std::size_t user, std::size_t file,
                        std::size_t packet) const {
  return !data_[user][file * packets_ + packet].empty();
}

std::span<const std::uint8_t> CacheContents::Get(std::size_t user,
                                                 std::size_t file,
                                                 std::size_t packet) const {
  return data_[user][file * packets_ + packet];
}

std::size_t CacheContents::size(std::size_t user) const {
  return rows_[user].size() * files_;
}

CacheContents Place(const Pda& p, const FileLibrary& lib) {
  if (lib.packets() != p.rows()) {
    throw Error(Errc::kDimensionMismatch,
                "library has " + std::to_string(lib.packets()) +
                    " packets per file but the array has " +
                    std::to_string(p.rows()) + " rows");
  }
  const std::size_t N = lib.files(), F = p.rows();
  std::vector<std::vector<std::size_t>> rows(p.cols());
  std::vector<std::vector<Bytes>> data(p.cols(),
                                       std::vector<Bytes>(N * F));
  for (std::size_t k = 0; k < p.cols(); ++k) {
    for (std::size_t j = 0; j < F; ++j) {
      if (!p.at(j, k).is_star()) continue;
      rows[k].push_back(j);
      for (std::size_t i = 0; i < N; ++i) {
        auto src = lib.packet(i, j);
        data[k][i * F + j].assign(src.begin(), src.end());
      }
    }
  }
  return CacheContents(std::move(rows), std::move(data), N, F);
}

Rational SimulationTranscript::rate() const {
  return Rational(signals.size()) / Rational(packets_per_file);
}

SimulationTranscript Deliver(const Pda& p, const FileLibrary& lib,
                             std::span<const std::size_t> demand) {
  if (demand.size() != p.cols()) {
    throw Error(Errc::kDimensionMismatch,
                "demand has " + std::to_string(demand.size()) +
                    " entries for " + std::to_string(p.cols()) + " users");
  }
  if (lib.packets() != p.rows()) {
    throw Error(Errc::kDimensionMismatch,
                "library packet count differs from the array's rows");
  }
  for (std::size_t d : demand) {
    if (d >= lib.files()) {
      throw Error(Errc::kParameterOutOfRange,
                  "demanded file " + std::to_string(d) + " of " +
                      std::to_string(lib.files()));
    }
  }
  const std::size_t S = p.symbol_bound();
  SimulationTranscript t;
  t.packets_per_file = p.rows();
  t.signals.assign(S, Bytes(lib.packet_bytes(), 0));
  t.terms.resize(S);
  for (std::size_t k = 0; k < p.cols(); ++k) {
    for (std::size_t j = 0; j < p.rows(); ++j) {
      const Entry e = p.at(j, k);
      if (e.is_star()) continue;
      XorInto(t.signals[e.symbol()], lib.packet(demand[k], j));
      t.terms[e.symbol()].push_back({k, j, demand[k]});
    }
  }
  return t;
}

std::string RenderSymbolic(const SimulationTranscript& transcript) {
  std::ostringstream out;
  for (std::size_t s = 0; s < transcript.terms.size(); ++s) {
    out << s << ": ";
    const auto& terms = transcript.terms[s];
    if (terms.empty()) out << "0";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out << (i ? "⊕" : "") << "W_{" << terms[i].file << ","
          << terms[i].row << "}";
    }
    out << "\n";
  }
  return out.str();
}

std::string DecodeFailure::Describe() const {
  return "user " + std::to_string(user) + " packet " + std::to_string(packet) +
         ": " + reason;
}

DecodeResult Decode(const Pda& p, const CacheContents& caches,
                    const SimulationTranscript& transcript,
                    std::span<const std::size_t> demand) {
  const std::size_t F = p.rows();
  DecodeResult result;
  result.files.resize(p.cols());
  for (std::size_t k = 0; k < p.cols(); ++k) {
    const std::size_t want = demand[k];
    const std::size_t B =
        transcript.signals.empty() ? caches.Get(k, want, 0).size()
                                   : transcript.signals.front().size();
    Bytes& file = result.files[k];
    file.assign(F * B, 0);
    for (std::size_t j = 0; j < F; ++j) {
      std::span<std::uint8_t> out(file.data() + j * B, B);
      if (caches.Has(k, want, j)) {
        auto src = caches.Get(k, want, j);
        std::copy(src.begin(), src.end(), out.begin());
        continue;
      }
      const Entry e = p.at(j, k);
      if (e.is_star() || e.symbol() >= transcript.signals.size()) {
        result.failures.push_back({k, j, "packet neither cached nor sent"});
        continue;
      }
      const Bytes& signal = transcript.signals[e.symbol()];
      std::copy(signal.begin(), signal.end(), out.begin());
      for (const SlotTerm& term : transcript.terms[e.symbol()]) {
        if (term.user == k && term.row == j) continue;
        if (!caches.Has(k, term.file, term.row)) {
          result.failures.push_back(
              {k, j,
               "slot " + std::to_string(e.symbol()) + " needs uncached W_{" +
                   std::to_string(term.file) + "," +
                   std::to_string(term.row) + "}"});
          break;
        }
        XorInto(out, caches.Get(k, term.file, term.row));
      }
    }
  }
  return result;
}

void CheckAgainstLibrary(const FileLibrary& lib,
                         std::span<const std::size_t> demand,
                         DecodeResult& result) {
  const std::size_t B = lib.packet_bytes();
  for (std::size_t k = 0; k < result.files.size(); ++k) {
    for (std::size_t j = 0; j < lib.packets(); ++j) {
      const bool already = std::any_of(
          result.failures.begin(), result.failures.end(),
          [&](const DecodeFailure& f) { return f.user == k && f.packet == j; });
      if (already) continue;
      auto want = lib.packet(demand[k], j);
      if (!std::equal(want.begin(), want.end(),
                      result.files[k].begin() + j * B)) {
        result.failures.push_back({k, j, "decoded bytes differ from file"});
      }
    }
  }
}

std::vector<DecodeFailure> VerifyDecodability(const Pda& p) {
  std::vector<std::vector<Cell>> slots(p.symbol_bound());
  for (std::size_t j = 0; j < p.rows(); ++j) {
    for (std::size_t k = 0; k < p.cols(); ++k) {
      if (!p.at(j, k).is_star()) slots[p.at(j, k).symbol()].push_back({j, k});
    }
  }
  std::vector<DecodeFailure> failures;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (const Cell& mine : slots[s]) {
      for (const Cell& other : slots[s]) {
        if (other == mine) continue;
        // User mine.col must hold packet other.row of any file.
        if (!p.at(other.row, mine.col).is_star()) {
          failures.push_back(
              {mine.col, mine.row,
               "slot " + std::to_string(s) + " needs packet " +
                   std::to_string(other.row) + " of user " +
                   std::to_string(other.col) + "'s file, not cached"});
          break;
        }
      }
    }
  }
  return failures;
}

namespace {

std::uint64_t DemandCount(std::size_t files, std::size_t users,
                          std::uint64_t limit) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < users; ++k) {
    if (count > limit / files) return std::numeric_limits<std::uint64_t>::max();
    count *= files;
  }
  return count;
}

std::vector<std::size_t> DemandAt(const SweepOptions& options,
                                  std::size_t files, std::size_t users,
                                  std::uint64_t index) {
  std::vector<std::size_t> d(users);
  if (options.mode == SweepMode::kExhaustive) {
    for (std::size_t k = users; k-- > 0;) {
      d[k] = index % files;
      index /= files;
    }
  } else {
    std::mt19937_64 rng = StreamFor(options.seed + 1, index);
    std::uniform_int_distribution<std::size_t> pick(0, files - 1);
    for (auto& x : d) x = pick(rng);
  }
  return d;
}

struct DemandOutcome {
  std::optional<DecodeFailure> failure;
  std::size_t slots = 0;
};

DemandOutcome RunDemand(const Pda& p, const FileLibrary& lib,
                        const CacheContents& caches,
                        const std::vector<std::size_t>& d) {
  SimulationTranscript t = Deliver(p, lib, d);
  DecodeResult r = Decode(p, caches, t, d);
  CheckAgainstLibrary(lib, d, r);
  DemandOutcome out;
  out.slots = t.delivered_packet_count();
  if (!r.ok()) out.failure = r.failures.front();
  return out;
}

SweepSummary Sweep(const Pda& p, std::size_t files,
                   const SweepOptions& options, bool parallel) {
  if (files == 0) throw Error(Errc::kDegenerateInput, "N must be positive");
  std::uint64_t total = options.samples;
  if (options.mode == SweepMode::kExhaustive) {
    total = DemandCount(files, p.cols(), options.max_demands);
    if (total > options.max_demands) {
      throw Error(Errc::kSweepTooLarge,
                  "N^K exceeds the limit of " +
                      std::to_string(options.max_demands) + " demands");
    }
  }
  const FileLibrary lib = FileLibrary::Random(files, p.rows(),
                                              options.packet_bytes,
                                              options.seed);
  const CacheContents caches = Place(p, lib);
  const std::size_t expected_slots = p.symbol_bound();

  SweepSummary summary;
  summary.demands = total;
  summary.slots = expected_slots;
  summary.rate = Rational(expected_slots) / Rational(p.rows());
  std::uint64_t failed = 0;
  std::uint64_t first_index = std::numeric_limits<std::uint64_t>::max();
  bool constant = true;
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64) if (parallel) \
    reduction(+ : failed) reduction(&& : constant)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    const auto d = DemandAt(options, files, p.cols(), index);
    DemandOutcome out = RunDemand(p, lib, caches, d);
    constant = constant && out.slots == expected_slots;
    if (!out.failure) continue;
    ++failed;
#pragma omp critical(pdakit_sweep_first_failure)
    if (index < first_index) {
      first_index = index;
      summary.first_failed_demand = d;
      summary.first_failure = out.failure;
    }
  }
  summary.failed_demands = failed;
  summary.constant_slot_count = constant;
  return summary;
}

}  // namespace

SweepSummary DemandSweep(const Pda& p, std::size_t files,
                         const SweepOptions& options) {
  return Sweep(p, files, options, true);
}

SweepSummary DemandSweepSerial(const Pda& p, std::size_t files,
                               const SweepOptions& options) {
  return Sweep(p, files, options, false);
}

SweepOptions ParseSweepMode(const std::string& text) {
  SweepOptions options;
  if (text == "exhaustive") return options;
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string count = text.substr(prefix.size());
    std::uint64_t n = 0;
    auto [ptr, ec] =
        std::from_chars(count.data(), count.data() + count.size(), n);
    if (ec == std::errc() && ptr == count.data() + count.size() && n > 0) {
      options.mode = SweepMode::kSampled;
      options.samples = n;
      return options;
    }
  }
  throw Error(Errc::kParseError,
              "sweep mode must be 'exhaustive' or 'sampled:COUNT', got '" +
                  text + "'");
}

}  // namespace pdakit
