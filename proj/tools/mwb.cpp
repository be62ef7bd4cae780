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

// mwb: command-line front end for the workbench.
//
// Exit status: 0 every check passed, 1 some measured check failed,
// 2 usage, domain or capacity error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mw/errors.hpp"
#include "mw/scan.hpp"
#include "mw/verifiers.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct XRange {
  mw::HalfOdd first = mw::HalfOdd::from_twice(21);
  mw::HalfOdd last = mw::HalfOdd::from_twice(21);
};

XRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto x = mw::HalfOdd::parse(text);
    return {x, x};
  }
  XRange r{mw::HalfOdd::parse(text.substr(0, dots)), mw::HalfOdd::parse(text.substr(dots + 2))};
  if (r.last < r.first) throw mw::DomainError("empty x range " + text);
  return r;
}

struct Options {
  std::string x = "10.5";
  std::optional<std::uint64_t> p, q, k, a;
  std::string format = "csv";
  std::string out;
  std::string caps;
  std::string primes = "all";
  std::vector<std::string> claims;
  std::int64_t step = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;
  std::string policy = "gaps-neg/leftover-mp";
  std::string selector = "adjacent";
  std::uint64_t bk_cap = 1;
  std::vector<std::string> interval;
  std::optional<std::uint64_t> coprime_to, divisible_by;
  std::optional<std::string> below;
  std::string method = "oracle";
  std::string config;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Expands `--config FILE` into flags placed after the subcommand. Keys already
// present on the command line are skipped; '#' starts a comment line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || it + 1 == args.end() || args.size() < 2) return args;
  const std::string path = *(it + 1);
  args.erase(it, it + 2);
  std::ifstream in(path);
  if (!in) throw mw::CapacityError("cannot read config " + path);
  std::vector<std::string> extra;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw mw::DomainError(path + ":" + std::to_string(n) + ": expected key=value");
    const std::string flag = "--" + trim(line.substr(0, eq));
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    const std::string value = trim(line.substr(eq + 1));
    if (value == "true") {
      extra.push_back(flag);
    } else if (value != "false") {
      extra.push_back(flag + "=" + value);
    }
  }
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

mw::OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return mw::OutputFormat::csv;
  if (s == "json") return mw::OutputFormat::json;
  throw mw::DomainError("unknown format " + s);
}

mw::PrimeSelector parse_selector(const std::string& s) {
  if (s == "adjacent") return mw::PrimeSelector::adjacent;
  if (s == "best") return mw::PrimeSelector::best;
  throw mw::DomainError("unknown selector " + s);
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw mw::DomainError(std::string("missing ") + flag);
  return *v;
}

int print_records(const std::vector<mw::VerificationRecord>& records, bool timing) {
  bool ok = true;
  for (const auto& r : records) {
    std::cout << mw::to_json(r, timing).dump() << '\n';
    ok = ok && r.pass;
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o) {
  const mw::Claim claim = mw::parse_claim(o.claims.empty() ? "" : o.claims.front());
  const mw::HalfOdd x = mw::HalfOdd::parse(o.x);
  const mw::ScanCaps caps = mw::ScanCaps::parse(o.caps);
  auto table = [&] { return mw::mobius_table_for(x.value(), caps.sieve); };
  switch (claim) {
    case mw::Claim::lemma1: return print_records({mw::check_lemma1(x, need(o.p, "--p"), need(o.k, "--k"))}, o.timing);
    case mw::Claim::corollary1:
      return print_records({mw::check_corollary1(x, need(o.p, "--p"), need(o.k, "--k"))}, o.timing);
    case mw::Claim::lemma2: {
      auto family = mw::squarefree_family(x, caps.subsets);
      return print_records({mw::check_lemma2(x, need(o.p, "--p"), need(o.k, "--k"), family)}, o.timing);
    }
    case mw::Claim::lemma3:
      return print_records({mw::check_lemma3(need(o.a, "--a"), need(o.p, "--p"), need(o.k, "--k"), x)}, o.timing);
    case mw::Claim::bk_bridge:
      return print_records({mw::check_bk_bridge(x, need(o.p, "--p"), need(o.k, "--k"), o.bk_cap)}, o.timing);
    case mw::Claim::theorem: {
      auto t = mw::check_theorem(table(), x, need(o.p, "--p"));
      std::vector<mw::VerificationRecord> out{t.mprime_side};
      if (t.s_side) out.push_back(*t.s_side);
      return print_records(out, o.timing);
    }
    case mw::Claim::strategy: {
      auto report = mw::strategy_decomposition(table(), x, need(o.p, "--p"), need(o.q, "--q"),
                                               mw::StrategyPolicy::parse(o.policy));
      return print_records({mw::strategy_record(report)}, o.timing);
    }
    case mw::Claim::mertens: return print_records({mw::check_mertens(table(), x)}, o.timing);
    case mw::Claim::correction: {
      auto rows = mw::exponent_scan(table(), {x}, parse_selector(o.selector), mw::StrategyPolicy::parse(o.policy));
      if (rows.empty()) throw mw::DomainError("no prime pair q < p < x < q^2 for x = " + x.str());
      return print_records({mw::correction_record(rows.front())}, o.timing);
    }
  }
  return kExitError;
}

mw::ScanConfig scan_config(const Options& o) {
  mw::ScanConfig c;
  const XRange range = parse_range(o.x);
  c.x_start = range.first;
  c.x_end = range.last;
  c.x_step = o.step;
  c.primes = mw::PrimeFilter::parse(o.primes);
  for (const auto& name : o.claims) c.claims.push_back(mw::parse_claim(name));
  if (c.claims.empty()) throw mw::DomainError("scan needs --claims");
  c.format = parse_format(o.format);
  c.jobs = o.jobs;
  if (c.jobs == 0) throw mw::DomainError("--jobs must be at least 1");
  c.caps = mw::ScanCaps::parse(o.caps);
  c.timing = o.timing;
  c.policy = mw::StrategyPolicy::parse(o.policy);
  c.selector = parse_selector(o.selector);
  c.bk_cap_multiplier = o.bk_cap;
  return c;
}

std::string default_out(const mw::ScanConfig& c) {
  const char* dir = std::getenv("MW_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return (std::filesystem::path(dir) / (c.format == mw::OutputFormat::csv ? "scan.csv" : "scan.jsonl")).string();
}

int cmd_scan(const Options& o) {
  const mw::ScanConfig c = scan_config(o);
  const std::string path = o.out.empty() ? default_out(c) : o.out;
  const mw::ScanResult result = mw::run_scan(c);
  if (path.empty()) {
    mw::write_records(std::cout, result.records, c.format, c.timing);
  } else {
    std::ofstream data(path, std::ios::binary);
    if (!data) throw mw::CapacityError("cannot write " + path);
    mw::write_records(data, result.records, c.format, c.timing);
    std::ofstream manifest(path + ".manifest.json", std::ios::binary);
    if (!manifest) throw mw::CapacityError("cannot write " + path + ".manifest.json");
    manifest << mw::make_manifest(c, result).dump(2) << '\n';
    if (!data || !manifest) throw mw::CapacityError("write failed for " + path);
  }
  for (const auto& r : result.records) {
    if (!r.pass) return kExitFail;
  }
  return kExitPass;
}

mw::OpenInterval parse_interval(const std::vector<std::string>& v) {
  return mw::OpenInterval(mw::Rational::parse(v.at(0)), mw::Rational::parse(v.at(1)));
}

int cmd_mertens(const Options& o) {
  const mw::ScanCaps caps = mw::ScanCaps::parse(o.caps);
  if (o.interval.empty()) {
    const mw::Rational x = mw::Rational::parse(o.x);
    const auto table = mw::mobius_table_for(x, caps.sieve);
    std::cout << mw::mertens(table, x) << '\n';
    return kExitPass;
  }
  const mw::OpenInterval iv = parse_interval(o.interval);
  const auto table = mw::mobius_table_for(iv.hi(), caps.sieve);
  if (o.coprime_to && o.divisible_by) throw mw::DomainError("--coprime-to and --divisible-by are exclusive");
  if (o.coprime_to) {
    std::cout << mw::mertens_p_prime(table, iv, *o.coprime_to) << '\n';
  } else if (o.divisible_by) {
    std::optional<mw::Rational> below;
    if (o.below) below = mw::Rational::parse(*o.below);
    std::cout << mw::mertens_p_divisible(table, iv, *o.divisible_by, below) << '\n';
  } else {
    std::cout << mw::mertens_interval(table, iv) << '\n';
  }
  return kExitPass;
}

int cmd_rough(const Options& o) {
  if (o.interval.empty()) throw mw::DomainError("rough needs --interval LO HI");
  const mw::OpenInterval iv = parse_interval(o.interval);
  const mw::HalfOdd x = mw::HalfOdd::parse(o.x);
  const mw::ScanCaps caps = mw::ScanCaps::parse(o.caps);
  nlohmann::ordered_json j;
  j["interval"] = {iv.lo().str(), iv.hi().str()};
  j["threshold"] = x.str();
  if (o.method == "oracle") {
    auto s = mw::rough_count_oracle(iv, x, caps.enumeration);
    j["method"] = "oracle";
    j["count"] = s.count();
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto& m : s.members) members.push_back(m.str());
    j["members"] = members;
  } else if (o.method == "sieve") {
    j["method"] = "sieve";
    j["count"] = mw::rough_count_sieve(iv, mw::squarefree_family(x, caps.subsets)).str();
  } else {
    throw mw::DomainError("unknown method " + o.method);
  }
  std::cout << j.dump() << '\n';
  return kExitPass;
}

int cmd_strategy(const Options& o) {
  const mw::ScanCaps caps = mw::ScanCaps::parse(o.caps);
  const mw::StrategyPolicy policy = mw::StrategyPolicy::parse(o.policy);
  const XRange range = parse_range(o.x);
  const auto table = mw::mobius_table_for(range.last.value(), caps.sieve);
  if (o.p || o.q) {
    if (range.first != range.last) throw mw::DomainError("--p/--q need a single --x");
    auto r = mw::strategy_decomposition(table, range.first, need(o.p, "--p"), need(o.q, "--q"), policy);
    nlohmann::ordered_json j;
    j["x"] = r.x.str();
    j["p"] = r.p;
    j["q"] = r.q;
    j["policy"] = r.policy.tag();
    j["regime_holds"] = r.regime_holds;
    j["mprime_x"] = r.mprime_x;
    j["term_main"] = r.term_main;
    j["term_gaps"] = r.term_gaps;
    j["term_leftover"] = r.term_leftover;
    j["total"] = r.total;
    j["expected"] = r.expected;
    j["correction"] = mw::correction_magnitude(r).str();
    j["pass"] = r.pass();
    std::cout << j.dump() << '\n';
    return r.pass() ? kExitPass : kExitFail;
  }
  mw::ScanConfig grid_config;
  grid_config.x_start = range.first;
  grid_config.x_end = range.last;
  grid_config.x_step = o.step;
  std::vector<mw::VerificationRecord> records;
  for (const auto& row : mw::exponent_scan(table, grid_config.grid(), parse_selector(o.selector), policy)) {
    records.push_back(mw::strategy_record(row.report));
    records.push_back(mw::correction_record(row));
  }
  mw::write_records(std::cout, records, parse_format(o.format), false);
  for (const auto& r : records) {
    if (!r.pass) return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for Mertens-function identities"};
  app.set_version_flag("--version", std::string(mw::kArtifactVersion));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "key=value file; command-line flags take precedence");
    sub->add_option("--caps", o.caps, "sieve=N,subsets=K,enum=E");
    sub->add_flag("--timing", o.timing, "fill elapsed_ms");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--x", o.x, "half-odd threshold, e.g. 10.5");
    sub->add_option("--p", o.p);
    sub->add_option("--q", o.q);
    sub->add_option("--k", o.k);
    sub->add_option("--a", o.a);
  };

  auto* verify = app.add_subcommand("verify", "run one check and print its record as JSON");
  verify->add_option("claim", o.claims, "lemma1|corollary1|lemma2|lemma3|bk_bridge|theorem|strategy|mertens|correction")
      ->required()
      ->expected(1);
  params(verify);
  verify->add_option("--policy", o.policy);
  verify->add_option("--selector", o.selector, "adjacent|best");
  verify->add_option("--bk-cap", o.bk_cap, "B_k enumeration bound in multiples of px");
  common(verify);

  auto* scan = app.add_subcommand("scan", "sweep a grid of x and write records plus a manifest");
  scan->add_option("--x", o.x, "X or X1..X2");
  scan->add_option("--step", o.step);
  scan->add_option("--claims", o.claims)->delimiter(',');
  scan->add_option("--primes", o.primes, "all|odd|comma list");
  scan->add_option("--format", o.format, "csv|json");
  scan->add_option("--out", o.out, "output path (default: $MW_OUT_DIR/scan.csv, else stdout)");
  scan->add_option("--jobs", o.jobs);
  scan->add_option("--policy", o.policy);
  scan->add_option("--selector", o.selector, "adjacent|best");
  scan->add_option("--bk-cap", o.bk_cap);
  common(scan);

  auto* mertens = app.add_subcommand("mertens", "print M(x) or a restricted Mobius sum over an open interval");
  mertens->add_option("--x", o.x);
  mertens->add_option("--interval", o.interval)->expected(2);
  mertens->add_option("--coprime-to", o.coprime_to);
  mertens->add_option("--divisible-by", o.divisible_by);
  mertens->add_option("--below", o.below, "with --divisible-by: largest prime factor below this bound");
  common(mertens);

  auto* rough = app.add_subcommand("rough", "integers in an interval with no prime factor below x");
  rough->add_option("--x", o.x);
  rough->add_option("--interval", o.interval)->expected(2)->required();
  rough->add_option("--method", o.method, "oracle|sieve");
  common(rough);

  auto* strategy = app.add_subcommand("strategy", "two-prime decomposition or the exponent table");
  strategy->add_option("--x", o.x, "X or X1..X2");
  strategy->add_option("--step", o.step);
  strategy->add_option("--p", o.p);
  strategy->add_option("--q", o.q);
  strategy->add_option("--policy", o.policy);
  strategy->add_option("--selector", o.selector, "adjacent|best");
  strategy->add_option("--format", o.format, "csv|json");
  common(strategy);

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const std::exception& e) {
    std::cerr << "mwb: " << e.what() << '\n';
    return kExitError;
  }
  // CLI11 takes the arguments in reverse order
  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);

  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*scan) return cmd_scan(o);
    if (*mertens) return cmd_mertens(o);
    if (*rough) return cmd_rough(o);
    if (*strategy) return cmd_strategy(o);
  } catch (const std::exception& e) {
    std::cerr << "mwb: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
