// Copyright 2026 The Mertens Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mw/moebius.hpp"
#include "mw/record.hpp"
#include "mw/rough_sets.hpp"
#include "mw/strategy.hpp"

namespace mw {

inline constexpr std::string_view kArtifactVersion = "0.3.0";

enum class OutputFormat { csv, json };

struct PrimeFilter {
  enum class Mode { all, odd, list } mode = Mode::all;
  std::vector<std::uint64_t> list;

  bool admits(std::uint64_t p) const;
  /// "all", "odd", or a comma list "3,5,7" (empty list admits nothing).
  static PrimeFilter parse(std::string_view text);
  std::string str() const;
};

struct ScanCaps {
  std::uint64_t sieve = kDefaultSieveCap;
  std::size_t subsets = kDefaultSubsetPrimeCap;
  std::uint64_t enumeration = kDefaultEnumerationCap;

  /// "sieve=N,subsets=K,enum=E", any subset of keys.
  static ScanCaps parse(std::string_view text);
};

struct ScanConfig {
  HalfOdd x_start = HalfOdd::from_twice(21);
  HalfOdd x_end = HalfOdd::from_twice(21);
  std::int64_t x_step = 1;
  PrimeFilter primes;
  std::vector<Claim> claims;
  OutputFormat format = OutputFormat::csv;
  unsigned jobs = 1;
  ScanCaps caps;
  bool timing = false;
  StrategyPolicy policy;
  PrimeSelector selector = PrimeSelector::adjacent;
  std::uint64_t bk_cap_multiplier = 1;

  /// x_start, x_start + step, ... <= x_end. Throws DomainError on step <= 0.
  std::vector<HalfOdd> grid() const;
  nlohmann::ordered_json to_json() const;
};

struct ScanResult {
  std::vector<VerificationRecord> records;  // deterministic (claim, x, p, q, k, a) order
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;
};

/// Runs every requested claim over the grid. Operational failures (capacity,
/// domain) propagate as exceptions; measured failures are records with pass = false.
ScanResult run_scan(const ScanConfig& config);

void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, OutputFormat format,
                   bool with_timing);

/// Version, config echo, timestamps, per-claim pass/fail counts.
nlohmann::ordered_json make_manifest(const ScanConfig& config, const ScanResult& result);

}  // namespace mw
