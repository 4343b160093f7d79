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


// pdatool: build, check, bound and simulate placement delivery arrays.
//
// Exit status: 0 success, 1 validation / decoding / parse failure, 2 usage or
// parameter error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdakit/bounds.h"
#include "pdakit/caching_sim.h"
#include "pdakit/comparisons.h"
#include "pdakit/constructions.h"
#include "pdakit/errors.h"
#include "pdakit/oracle.h"
#include "pdakit/pda.h"

namespace {

using namespace pdakit;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

int ExitCodeFor(Errc code) {
  switch (code) {
    case Errc::kMalformedGrid:
    case Errc::kParseError:
    case Errc::kConflictingTriples:
      return kFailure;
    default:
      return kUsage;
  }
}

std::vector<std::size_t> ParseDemand(const std::string& text) {
  std::vector<std::size_t> d;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) {
      throw Error(Errc::kParameterOutOfRange,
                  "bad demand entry '" + item + "'");
    }
    d.push_back(static_cast<std::size_t>(v));
  }
  return d;
}

OutputFormat FormatOrThrow(const std::string& name) {
  auto f = ParseOutputFormat(name);
  if (!f) {
    throw Error(Errc::kParameterOutOfRange,
                "format must be text, csv or markdown, got '" + name + "'");
  }
  return *f;
}

// Prints violations to stderr; returns false when the array is invalid.
bool ReportValidity(const Pda& p, const ValidationVerdict& v,
                    std::ostream& out) {
  for (const auto& violation : v.violations) {
    out << "violation: " << violation.Describe(p) << "\n";
  }
  for (const auto& note : v.notes) {
    out << "note: " << note.Describe(p) << "\n";
  }
  return v.ok();
}

struct ConstructArgs {
  std::string family;
  std::int64_t k = 0, t = 0, m = 1;
  std::string variant;
  std::string output;
  bool describe = false;
};

int RunConstruct(const ConstructArgs& a) {
  const MnSpec spec{static_cast<std::uint32_t>(a.k),
                    static_cast<std::uint32_t>(a.t)};
  if (a.k <= 0 || a.t <= 0 || a.k > 64 || a.t > 64) {
    throw Error(Errc::kParameterOutOfRange, "need positive k and t");
  }
  std::optional<Pda> p;
  if (a.family == "mn") {
    p = BuildMn(spec);
  } else if (a.family == "grouped") {
    p = BuildGroupedMn(spec.k, spec.t, static_cast<std::uint32_t>(a.m));
  } else if (a.family == "variant") {
    auto v = ParseVariant(a.variant);
    if (!v) {
      throw Error(Errc::kParameterOutOfRange,
                  "variant must be one of a..f, got '" + a.variant + "'");
    }
    p = BuildVariant(spec, *v);
  } else if (a.family == "p1") {
    p = BuildP1(spec);
  } else {
    p = BuildP2(spec);
  }
  if (a.describe) {
    std::cout << DescribeParams(Validate(*p).params) << "\n";
    return kOk;
  }
  const std::string text = FormatPda(*p);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write " << a.output << "\n";
      return kUsage;
    }
  }
  return kOk;
}

int RunVerify(const std::string& path) {
  const Pda p = ReadPdaFile(path);
  const ValidationVerdict v = Validate(p);
  if (!ReportValidity(p, v, std::cout)) {
    std::cout << "invalid: " << v.violations.size() << " violation(s)\n";
    return kFailure;
  }
  std::cout << "ok: " << DescribeParams(v.params) << "\n";
  return kOk;
}

struct BoundsArgs {
  std::uint64_t K = 0, F = 0, Z = 0;
  std::optional<std::uint64_t> achievable;
  bool csv = false;
};

int RunBounds(const BoundsArgs& a) {
  const BoundReport r = MakeBoundReport(a.K, a.F, a.Z, a.achievable);
  std::cout << (a.csv ? FormatBoundReportCsv(r) : FormatBoundReport(r));
  return kOk;
}

struct OracleArgs {
  std::uint64_t K = 0, F = 0, Z = 0;
  std::optional<std::uint64_t> s_max;
  std::uint64_t max_cells = 24;
  bool from_one = false;
  bool serial = false;
};

int RunOracle(const OracleArgs& a) {
  OracleOptions options;
  options.s_max = a.s_max;
  options.max_cells = a.max_cells;
  options.start_from_bounds = !a.from_one;
  const OracleResult r = a.serial ? OracleMinSSerial(a.K, a.F, a.Z, options)
                                  : OracleMinS(a.K, a.F, a.Z, options);
  std::cout << "search started at S = " << r.s_start << " (" << r.nodes
            << " nodes)\n";
  if (!r.min_s) {
    std::cout << "not found within S <= "
              << options.s_max.value_or((a.F - a.Z) * a.K) << "\n";
    return kFailure;
  }
  std::cout << "min S = " << *r.min_s << "\n" << FormatPda(*r.witness);
  return kOk;
}

struct SimulateArgs {
  std::string pda;
  std::size_t files = 0;
  std::uint64_t seed = 0;
  std::string demand;
  std::string sweep;
  std::size_t bytes = 64;
  std::uint64_t max_demands = 4096;
  bool serial = false;
};

int RunSimulate(const SimulateArgs& a) {
  const Pda p = ReadPdaFile(a.pda);
  const ValidationVerdict v = Validate(p);
  if (!ReportValidity(p, v, std::cerr)) {
    std::cerr << "warning: array is not a valid PDA; decoding may fail\n";
  }
  if (a.files == 0) {
    throw Error(Errc::kParameterOutOfRange, "--files must be positive");
  }
  if (!a.sweep.empty()) {
    SweepOptions options = ParseSweepMode(a.sweep);
    options.seed = a.seed;
    options.packet_bytes = a.bytes;
    options.max_demands = a.max_demands;
    const SweepSummary s = a.serial ? DemandSweepSerial(p, a.files, options)
                                    : DemandSweep(p, a.files, options);
    std::cout << "demands:  " << s.demands << "\n"
              << "failed:   " << s.failed_demands << "\n"
              << "slots:    " << s.slots
              << (s.constant_slot_count ? "" : " (varies)") << "\n"
              << "rate:     " << ToString(s.rate) << "\n";
    if (s.first_failure) {
      std::cout << "first failure: d = (";
      for (std::size_t i = 0; i < s.first_failed_demand->size(); ++i) {
        std::cout << (i ? "," : "") << (*s.first_failed_demand)[i];
      }
      std::cout << ") " << s.first_failure->Describe() << "\n";
    }
    return s.failed_demands == 0 ? kOk : kFailure;
  }

  std::vector<std::size_t> d;
  if (a.demand.empty()) {
    for (std::size_t k = 0; k < p.cols(); ++k) d.push_back(k % a.files);
  } else {
    d = ParseDemand(a.demand);
  }
  const FileLibrary lib =
      FileLibrary::Random(a.files, p.rows(), a.bytes, a.seed);
  const CacheContents caches = Place(p, lib);
  const SimulationTranscript t = Deliver(p, lib, d);
  DecodeResult r = Decode(p, caches, t, d);
  CheckAgainstLibrary(lib, d, r);
  std::cout << RenderSymbolic(t) << "rate: " << ToString(t.rate()) << "\n";
  for (const auto& f : r.failures) {
    std::cout << "decode failure: " << f.Describe() << "\n";
  }
  std::cout << (r.ok() ? "all users decoded\n" : "decoding failed\n");
  return r.ok() ? kOk : kFailure;
}

struct CompareArgs {
  std::string pair;
  std::int64_t k = 0, t = 0, m = 0, q = 0, l = 0;
  bool scan = false;
  DominanceRanges ranges;
  std::int64_t l_offset = -1;
  std::string format = "text";
  int digits = 6;
};

int RunCompare(const CompareArgs& a) {
  const OutputFormat format = FormatOrThrow(a.format);
  std::vector<ComparisonRow> rows;
  if (a.pair == "p1-mn") {
    rows.push_back(CompareP1Mn(a.k, a.t));
  } else if (a.pair == "p2-mn") {
    rows.push_back(CompareP2Mn(a.k, a.t));
  } else if (a.pair == "p2-grouped") {
    rows.push_back(CompareP2Grouped(a.k, a.t));
  } else if (a.pair == "p1-yan") {
    rows.push_back(CompareP1Yan(a.k, a.t));
  } else if (a.scan) {
    DominanceRanges r = a.ranges;
    if (a.l_offset >= 0) r.l_offset = a.l_offset;
    rows = SearchDominatingParams(r);
  } else {
    rows.push_back(CompareP1Shang(a.k, a.t, a.m, a.q, a.l));
  }
  std::cout << FormatComparisonRows(rows, format, a.digits);
  return kOk;
}

int RunCompareTable(const std::string& name, const std::string& format,
                    std::optional<int> digits) {
  const auto id = ParseTableId(name);
  if (!id) {
    throw Error(Errc::kParameterOutOfRange, "unknown table '" + name + "'");
  }
  std::cout << FormatTable(RegenerateTable(*id), FormatOrThrow(format),
                           digits);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Placement delivery array toolkit"};
  app.require_subcommand(1);
  int status = kOk;

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build an array and print it");
  c->add_option("family", construct.family, "mn, grouped, variant, p1, p2")
      ->required()
      ->check(CLI::IsMember({"mn", "grouped", "variant", "p1", "p2"}));
  c->add_option("-k,--k", construct.k, "Base user count k")->required();
  c->add_option("-t,--t", construct.t, "Base memory parameter t")->required();
  c->add_option("-m,--m", construct.m, "Copies for grouped")
      ->check(CLI::PositiveNumber);
  c->add_option("--variant", construct.variant, "Conjugate variant a..f");
  c->add_option("-o,--output", construct.output, "Write to a file");
  c->add_flag("--describe", construct.describe,
              "Print the parameters instead of the array");
  c->callback([&] { status = RunConstruct(construct); });

  std::string verify_path;
  auto* v = app.add_subcommand("verify", "Validate an array file");
  v->add_option("file", verify_path, "Array file")->required();
  v->callback([&] { status = RunVerify(verify_path); });

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Lower bounds on S for (K, F, Z)");
  b->add_option("K", bounds.K)->required();
  b->add_option("F", bounds.F)->required();
  b->add_option("Z", bounds.Z)->required();
  b->add_option("--achievable", bounds.achievable, "Known achievable S");
  b->add_flag("--csv", bounds.csv, "CSV output");
  b->callback([&] { status = RunBounds(bounds); });

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exhaustive minimum S search");
  o->add_option("K", oracle.K)->required();
  o->add_option("F", oracle.F)->required();
  o->add_option("Z", oracle.Z)->required();
  o->add_option("--smax", oracle.s_max, "Largest S to try");
  o->add_option("--max-cells", oracle.max_cells, "Limit on K*F")
      ->capture_default_str();
  o->add_flag("--from-one", oracle.from_one,
              "Start at S = 1 instead of the lower bounds");
  o->add_flag("--serial", oracle.serial, "Single-threaded search");
  o->callback([&] { status = RunOracle(oracle); });

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run the caching scheme");
  s->add_option("--pda", sim.pda, "Array file")->required();
  s->add_option("--files", sim.files, "Library size N")->required();
  s->add_option("--seed", sim.seed, "Library and sampling seed");
  auto* demand =
      s->add_option("--demand", sim.demand, "Comma-separated demand vector");
  s->add_option("--sweep", sim.sweep, "exhaustive or sampled:COUNT")
      ->excludes(demand);
  s->add_option("--bytes", sim.bytes, "Packet size in bytes")
      ->check(CLI::PositiveNumber);
  s->add_option("--max-demands", sim.max_demands,
                "Exhaustive sweep limit on N^K")
      ->capture_default_str();
  s->add_flag("--serial", sim.serial, "Single-threaded sweep");
  s->callback([&] { status = RunSimulate(sim); });

  CompareArgs cmp;
  auto* cm = app.add_subcommand("compare", "Compare two scheme families");
  cm->add_option("pair", cmp.pair)
      ->required()
      ->check(CLI::IsMember(
          {"p1-mn", "p2-mn", "p2-grouped", "p1-yan", "p1-shang"}));
  cm->add_option("-k,--k", cmp.k);
  cm->add_option("-t,--t", cmp.t);
  cm->add_option("-m,--m", cmp.m);
  cm->add_option("-q,--q", cmp.q);
  cm->add_option("-l,--l", cmp.l);
  cm->add_flag("--scan", cmp.scan,
               "p1-shang: list every dominating member in the ranges");
  cm->add_option("--k-min", cmp.ranges.k_min)->capture_default_str();
  cm->add_option("--k-max", cmp.ranges.k_max)->capture_default_str();
  cm->add_option("--m-min", cmp.ranges.m_min)->capture_default_str();
  cm->add_option("--m-max", cmp.ranges.m_max)->capture_default_str();
  cm->add_option("--q-max", cmp.ranges.q_max)->capture_default_str();
  cm->add_option("--l-offset", cmp.l_offset, "Scan only l = m - offset");
  cm->add_option("--format", cmp.format, "text, csv or markdown")
      ->capture_default_str();
  cm->add_option("--digits", cmp.digits, "Decimals for ratios")
      ->capture_default_str();
  cm->callback([&] { status = RunCompare(cmp); });

  std::string table_name;
  std::string table_format = "text";
  std::optional<int> table_digits;
  auto* ct = app.add_subcommand("compare-table",
                                "Regenerate a published comparison table");
  ct->add_option("table", table_name, "tk3, p2t2, yan, shang")->required();
  ct->add_option("--format", table_format, "text, csv or markdown")
      ->capture_default_str();
  ct->add_option("--digits", table_digits,
                 "Override the published precision");
  ct->callback([&] {
    status = RunCompareTable(table_name, table_format, table_digits);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
