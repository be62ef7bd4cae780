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

#include "mw/strategy.hpp"

#include <string>

#include "mw/errors.hpp"
#include "mw/verifiers.hpp"

namespace mw {

namespace {

void require_prime_below(std::uint64_t p, HalfOdd x) {
  if (!is_prime(p) || !x.exceeds(p)) {
    throw DomainError("need a prime below x = " + x.str() + ", got " + std::to_string(p));
  }
}

std::uint64_t next_prime(std::uint64_t n) {
  do {
    ++n;
  } while (!is_prime(n));
  return n;
}

// q^2 > x  <=>  2 q^2 > 2x
bool square_exceeds(std::uint64_t q, HalfOdd x) { return !x.exceeds(BigInt(q) * q); }

}  // namespace

RowDiagram build_row_diagram(HalfOdd x, std::uint64_t p) {
  const IntervalGrid grid = build_interval_grid(x, p);
  const OpenInterval universe(Rational(0), x.value());
  RowDiagram d{x, p, grid.m, {}, {}};
  d.rows.reserve(p - 1);
  d.gaps.reserve(p - 1);
  for (std::uint64_t i = 1; i < p; ++i) {
    std::vector<OpenInterval> cells;
    cells.reserve(grid.m);
    for (std::uint64_t n = 1; n <= grid.m; ++n) cells.push_back(grid.cell(n, i));
    IntervalSet row = IntervalSet::from_parts(std::move(cells));
    IntervalSet gap = complement_within(row, universe);
    if (row.count_integers() + gap.count_integers() != x.floor()) {
      throw DomainError("row " + std::to_string(i) + " and its gap do not partition 1.." + std::to_string(x.floor()));
    }
    d.rows.push_back(std::move(row));
    d.gaps.push_back(std::move(gap));
  }
  return d;
}

std::int64_t mprime_over(const MobiusTable& table, const IntervalSet& set, std::uint64_t measure) {
  std::int64_t total = 0;
  for (const auto& part : set.parts()) total += mertens_p_prime(table, part, measure);
  return total;
}

std::int64_t row_sum(const MobiusTable& table, const RowDiagram& d, std::uint64_t i) {
  return mprime_over(table, d.row(i), d.p);
}

std::int64_t gap_sum(const MobiusTable& table, const RowDiagram& d, std::uint64_t i) {
  return mprime_over(table, d.gap(i), d.p);
}

std::string StrategyPolicy::tag() const {
  std::string t = gap_sign == GapSign::negative ? "gaps-neg" : "gaps-pos";
  t += leftover == LeftoverMeasure::p_measure ? "/leftover-mp" : "/leftover-mq";
  return t;
}

StrategyPolicy StrategyPolicy::parse(std::string_view tag) {
  for (GapSign s : {GapSign::negative, GapSign::positive}) {
    for (LeftoverMeasure m : {LeftoverMeasure::p_measure, LeftoverMeasure::q_measure}) {
      StrategyPolicy policy{s, m};
      if (policy.tag() == tag) return policy;
    }
  }
  throw DomainError("unknown strategy policy '" + std::string(tag) + "'");
}

StrategyReport strategy_decomposition(const MobiusTable& table, HalfOdd x, std::uint64_t p, std::uint64_t q,
                                      StrategyPolicy policy) {
  require_prime_below(p, x);
  require_prime_below(q, x);
  if (q > p) throw DomainError("strategy needs q <= p");

  StrategyReport r{x, p, q, policy, q < p && square_exceeds(q, x), 0, 0, 0, 0, 0, 0};
  r.expected = -static_cast<std::int64_t>(p - q);
  r.mprime_x = mertens_p_prime(table, OpenInterval(Rational(0), x.value()), p);
  if (q == p) return r;

  const RowDiagram dp = build_row_diagram(x, p);
  const RowDiagram dq = build_row_diagram(x, q);
  r.term_main = static_cast<std::int64_t>(p - q) * r.mprime_x;

  std::int64_t gaps = 0;
  for (std::uint64_t i = q; i < p; ++i) gaps += gap_sum(table, dp, i);
  r.term_gaps = policy.gap_sign == GapSign::negative ? -gaps : gaps;

  const std::uint64_t measure = policy.leftover == LeftoverMeasure::p_measure ? p : q;
  for (std::uint64_t i = 1; i < q; ++i) {
    r.term_leftover += row_sum(table, dp, i) - mprime_over(table, dq.row(i), measure);
  }
  r.total = r.term_main + r.term_gaps + r.term_leftover;
  return r;
}

Rational correction_magnitude(const StrategyReport& report) {
  if (report.p == report.q) return Rational(0);
  return Rational(BigInt(report.term_gaps + report.term_leftover)).abs() /
         Rational(static_cast<std::int64_t>(report.p - report.q));
}

bool within_sqrt_bound(const Rational& correction, HalfOdd x) { return correction * correction <= x.value(); }

std::vector<ExponentRow> exponent_scan(const MobiusTable& table, const std::vector<HalfOdd>& grid,
                                       PrimeSelector selector, StrategyPolicy policy) {
  std::vector<ExponentRow> out;
  for (HalfOdd x : grid) {
    std::optional<ExponentRow> best;
    auto consider = [&](std::uint64_t p, std::uint64_t q) {
      StrategyReport rep = strategy_decomposition(table, x, p, q, policy);
      Rational c = correction_magnitude(rep);
      if (!best || c < best->correction) {
        bool ok = within_sqrt_bound(c, x);
        best = ExponentRow{std::move(rep), std::move(c), ok};
      }
    };
    std::uint64_t q = 2;
    while (!square_exceeds(q, x)) q = next_prime(q);
    if (selector == PrimeSelector::adjacent) {
      std::uint64_t p = next_prime(q);
      if (x.exceeds(p)) consider(p, q);
    } else {
      for (; x.exceeds(q); q = next_prime(q)) {
        for (std::uint64_t p = next_prime(q); x.exceeds(p); p = next_prime(p)) consider(p, q);
      }
    }
    if (best) out.push_back(std::move(*best));
  }
  return out;
}

VerificationRecord strategy_record(const StrategyReport& report) {
  std::string tag = report.policy.tag() + (report.regime_holds ? "+regime" : "+outside-regime");
  return make_record(Claim::strategy, {report.x, report.p, report.q, std::nullopt, std::nullopt},
                     Rational(report.total), Rational(report.expected), std::move(tag));
}

VerificationRecord correction_record(const ExponentRow& row) {
  VerificationRecord r{Claim::correction,
                       {row.report.x, row.report.p, row.report.q, std::nullopt, std::nullopt},
                       row.correction,
                       std::nullopt,
                       row.within_sqrt,
                       {},
                       row.report.policy.tag()};
  return r;
}

}  // namespace mw
