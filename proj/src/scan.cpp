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

#include "mw/scan.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "mw/errors.hpp"
#include "mw/verifiers.hpp"

namespace mw {

namespace {

using Task = std::function<std::vector<VerificationRecord>()>;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return std::stoull(std::string(s));
}

std::string iso_time(std::chrono::system_clock::time_point t) {
  std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Runs tasks on `jobs` threads; results keep task order.
std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<VerificationRecord> out;
  for (auto& batch : results) {
    for (auto& r : batch) out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::uint64_t> admitted_primes(HalfOdd x, const PrimeFilter& filter, std::uint64_t sieve_cap) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_below(x.value(), sieve_cap).primes) {
    if (filter.admits(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

bool PrimeFilter::admits(std::uint64_t p) const {
  switch (mode) {
    case Mode::all: return true;
    case Mode::odd: return p % 2 == 1;
    case Mode::list: return std::find(list.begin(), list.end(), p) != list.end();
  }
  return false;
}

PrimeFilter PrimeFilter::parse(std::string_view text) {
  if (text == "all") return {Mode::all, {}};
  if (text == "odd") return {Mode::odd, {}};
  PrimeFilter f{Mode::list, {}};
  if (text.empty() || text == "none") return f;
  for (auto part : split(text, ',')) {
    std::uint64_t p = parse_u64(part);
    if (!is_prime(p)) throw DomainError("prime filter entry " + std::string(part) + " is not prime");
    f.list.push_back(p);
  }
  return f;
}

std::string PrimeFilter::str() const {
  switch (mode) {
    case Mode::all: return "all";
    case Mode::odd: return "odd";
    case Mode::list: break;
  }
  std::string s;
  for (std::uint64_t p : list) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s.empty() ? "none" : s;
}

ScanCaps ScanCaps::parse(std::string_view text) {
  ScanCaps caps;
  if (text.empty()) return caps;
  for (auto part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw DomainError("cap must be key=value, got '" + std::string(part) + "'");
    auto key = part.substr(0, eq);
    std::uint64_t value = parse_u64(part.substr(eq + 1));
    if (key == "sieve") {
      caps.sieve = value;
    } else if (key == "subsets") {
      caps.subsets = static_cast<std::size_t>(value);
    } else if (key == "enum") {
      caps.enumeration = value;
    } else {
      throw DomainError("unknown cap '" + std::string(key) + "'");
    }
  }
  return caps;
}

std::vector<HalfOdd> ScanConfig::grid() const {
  if (x_step <= 0) throw DomainError("x step must be a positive integer");
  std::vector<HalfOdd> out;
  for (std::int64_t t = x_start.twice(); t <= x_end.twice(); t += 2 * x_step) out.push_back(HalfOdd::from_twice(t));
  return out;
}

nlohmann::ordered_json ScanConfig::to_json() const {
  nlohmann::ordered_json j;
  j["x_start"] = x_start.str();
  j["x_end"] = x_end.str();
  j["x_step"] = x_step;
  j["primes"] = primes.str();
  auto claims_json = nlohmann::ordered_json::array();
  for (Claim c : claims) claims_json.push_back(claim_name(c));
  j["claims"] = claims_json;
  j["format"] = format == OutputFormat::csv ? "csv" : "json";
  j["jobs"] = jobs;
  j["caps"] = {{"sieve", caps.sieve}, {"subsets", caps.subsets}, {"enum", caps.enumeration}};
  j["timing"] = timing;
  j["policy"] = policy.tag();
  j["selector"] = selector == PrimeSelector::adjacent ? "adjacent" : "best";
  j["bk_cap_multiplier"] = bk_cap_multiplier;
  return j;
}

ScanResult run_scan(const ScanConfig& config) {
  ScanResult result;
  result.started = std::chrono::system_clock::now();

  std::vector<Claim> claims = config.claims;
  std::sort(claims.begin(), claims.end());
  claims.erase(std::unique(claims.begin(), claims.end()), claims.end());
  const std::vector<HalfOdd> grid = config.grid();

  const bool needs_table = std::any_of(claims.begin(), claims.end(), [](Claim c) {
    return c == Claim::theorem || c == Claim::strategy || c == Claim::correction || c == Claim::mertens;
  });
  MobiusTable table;
  if (needs_table && !grid.empty()) table = mobius_table_for(grid.back().value(), config.caps.sieve);

  std::map<std::int64_t, SquarefreeFamily> families;
  if (std::find(claims.begin(), claims.end(), Claim::lemma2) != claims.end()) {
    for (HalfOdd x : grid) {
      if (!admitted_primes(x, config.primes, config.caps.sieve).empty()) {
        families.emplace(x.twice(), squarefree_family(x, config.caps.subsets));
      }
    }
  }

  std::vector<Task> tasks;
  // strategy and correction share one exponent scan per x
  auto exponent_task = [&](HalfOdd x, Claim claim) {
    tasks.push_back([&table, &config, x, claim] {
      std::vector<VerificationRecord> out;
      for (const ExponentRow& row : exponent_scan(table, {x}, config.selector, config.policy)) {
        if (!config.primes.admits(row.report.p) || !config.primes.admits(row.report.q)) continue;
        out.push_back(claim == Claim::strategy ? strategy_record(row.report) : correction_record(row));
      }
      return out;
    });
  };

  for (Claim claim : claims) {
    for (HalfOdd x : grid) {
      if (claim == Claim::mertens) {
        tasks.push_back([&table, x] { return std::vector{check_mertens(table, x)}; });
        continue;
      }
      if (claim == Claim::strategy || claim == Claim::correction) {
        exponent_task(x, claim);
        continue;
      }
      for (std::uint64_t p : admitted_primes(x, config.primes, config.caps.sieve)) {
        switch (claim) {
          case Claim::theorem:
            tasks.push_back([&table, x, p] {
              TheoremCheck t = check_theorem(table, x, p);
              std::vector<VerificationRecord> out{t.mprime_side};
              if (t.s_side) out.push_back(*t.s_side);
              return out;
            });
            break;
          case Claim::lemma3:
            for (std::uint64_t k = 1; k < p; ++k) {
              tasks.push_back([x, p, k] {
                std::vector<VerificationRecord> out;
                for (std::uint64_t a : lemma3_candidates(x, p)) out.push_back(check_lemma3(a, p, k, x));
                return out;
              });
            }
            break;
          default:
            for (std::uint64_t k = 1; k < p; ++k) {
              tasks.push_back([&, claim, x, p, k]() -> std::vector<VerificationRecord> {
                switch (claim) {
                  case Claim::lemma1: return {check_lemma1(x, p, k)};
                  case Claim::corollary1: return {check_corollary1(x, p, k)};
                  case Claim::lemma2: return {check_lemma2(x, p, k, families.at(x.twice()))};
                  case Claim::bk_bridge: return {check_bk_bridge(x, p, k, config.bk_cap_multiplier)};
                  default: return {};
                }
              });
            }
        }
      }
    }
  }

  result.records = run_tasks(tasks, config.jobs);
  result.finished = std::chrono::system_clock::now();
  return result;
}

void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, OutputFormat format,
                   bool with_timing) {
  if (format == OutputFormat::csv) {
    os << csv_header() << '\n';
    for (const auto& r : records) os << to_csv_row(r, with_timing) << '\n';
  } else {
    for (const auto& r : records) os << to_json(r, with_timing).dump() << '\n';
  }
}

nlohmann::ordered_json make_manifest(const ScanConfig& config, const ScanResult& result) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& r : result.records) {
    auto& c = counts[std::string(claim_name(r.claim))];
    if (c.is_null()) c = {{"pass", 0}, {"fail", 0}};
    c[r.pass ? "pass" : "fail"] = c[r.pass ? "pass" : "fail"].get<std::uint64_t>() + 1;
  }
  nlohmann::ordered_json m;
  m["artifact"] = "mertens-workbench";
  m["version"] = kArtifactVersion;
  m["config"] = config.to_json();
  m["started"] = iso_time(result.started);
  m["finished"] = iso_time(result.finished);
  m["records"] = result.records.size();
  m["counts"] = counts;
  return m;
}

}  // namespace mw
