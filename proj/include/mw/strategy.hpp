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

/**
 * @file strategy.hpp
 * @brief Two-prime row/gap decomposition of the double sum.
 *
 * For a prime p, row i (1 <= i <= p-1) is the union over n = 1..m of the cells
 * (x/(np), x/(np - i)); gap i is its complement inside (0, x). Subtracting the
 * q-series from the p-series row by row leaves
 *
 *   (p - q) M'_p(0, x)  +  gap term (rows q..p-1)  +  leftover term (rows 1..q-1)
 *
 * which is compared against -(p - q). How the gap and leftover terms are
 * measured is a StrategyPolicy; every report carries the policy tag.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mw/interval.hpp"
#include "mw/moebius.hpp"
#include "mw/rational.hpp"
#include "mw/record.hpp"

namespace mw {

struct RowDiagram {
  HalfOdd x;
  std::uint64_t p;
  std::uint64_t m;
  std::vector<IntervalSet> rows;  // rows[i - 1] is row i
  std::vector<IntervalSet> gaps;  // gaps[i - 1] = (0, x) \ row i

  const IntervalSet& row(std::uint64_t i) const { return rows.at(i - 1); }
  const IntervalSet& gap(std::uint64_t i) const { return gaps.at(i - 1); }
};

/// Throws DomainError unless p is a prime below x. Each row/gap pair is checked
/// to split the integers 1..floor(x) exactly.
RowDiagram build_row_diagram(HalfOdd x, std::uint64_t p);

/// Sum of M'_measure over an interval set; `measure` defaults to the set's own prime.
std::int64_t mprime_over(const MobiusTable& table, const IntervalSet& set, std::uint64_t measure);

/// sum over n of M'_p on the cells of row i.
std::int64_t row_sum(const MobiusTable& table, const RowDiagram& d, std::uint64_t i);
/// M'_p over gap i.
std::int64_t gap_sum(const MobiusTable& table, const RowDiagram& d, std::uint64_t i);

enum class GapSign { negative, positive };
enum class LeftoverMeasure { p_measure, q_measure };

struct StrategyPolicy {
  GapSign gap_sign = GapSign::negative;
  LeftoverMeasure leftover = LeftoverMeasure::p_measure;

  /// e.g. "gaps-neg/leftover-mp"
  std::string tag() const;
  /// Inverse of tag(); throws DomainError.
  static StrategyPolicy parse(std::string_view tag);
};

struct StrategyReport {
  HalfOdd x;
  std::uint64_t p;
  std::uint64_t q;
  StrategyPolicy policy;
  bool regime_holds;  // q < p < x < q^2
  std::int64_t mprime_x;       // M'_p(0, x)
  std::int64_t term_main;      // (p - q) M'_p(0, x)
  std::int64_t term_gaps;      // +/- sum_{i=q}^{p-1} M'_p(gap i)
  std::int64_t term_leftover;  // sum_{i<q} [row_p(i) - row_q(i)], q rows under the policy's measure
  std::int64_t total;
  std::int64_t expected;  // -(p - q)

  bool pass() const { return total == expected; }
};

/// Requires primes q <= p < x. The regime is recorded, not enforced.
StrategyReport strategy_decomposition(const MobiusTable& table, HalfOdd x, std::uint64_t p, std::uint64_t q,
                                      StrategyPolicy policy = {});

/// |term_gaps + term_leftover| / (p - q); 0 when p == q.
Rational correction_magnitude(const StrategyReport& report);
/// correction^2 <= x, exactly.
bool within_sqrt_bound(const Rational& correction, HalfOdd x);

enum class PrimeSelector {
  /// q = smallest prime with q^2 > x, p = next prime after q
  adjacent,
  /// every regime pair q < p < x < q^2; keep the smallest correction
  best,
};

struct ExponentRow {
  StrategyReport report;
  Rational correction;
  bool within_sqrt;
};

/// One row per x that admits a pair under the selector, in grid order.
std::vector<ExponentRow> exponent_scan(const MobiusTable& table, const std::vector<HalfOdd>& grid,
                                       PrimeSelector selector = PrimeSelector::adjacent, StrategyPolicy policy = {});

VerificationRecord strategy_record(const StrategyReport& report);
VerificationRecord correction_record(const ExponentRow& row);

}  // namespace mw
