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
 * @file verifiers.hpp
 * @brief Executable checks of the shifted-primorial Mertens identity and its lemmas.
 *
 * Notation used below, for a half-odd threshold x and a prime p < x:
 *
 *   N_p       product of the primes below x other than p
 *   S(u, v)   integers in (u, v) divisible by no prime below x
 *   Delta_k   |S(kN_p - x, kN_p)| - |S(0, x)|,   1 <= k <= p - 1
 *
 * Every check returns a VerificationRecord instead of asserting, so scans can
 * catalogue exactly where each claimed identity holds.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "mw/interval.hpp"
#include "mw/moebius.hpp"
#include "mw/rational.hpp"
#include "mw/record.hpp"
#include "mw/rough_sets.hpp"

namespace mw {

/// Oracle |S(kN_p - x, kN_p)| against [log_p x] + 1. The tag records whether
/// the member set equals {kN_p - p^j : p^j < x} (`set_match` / `set_mismatch`).
VerificationRecord check_lemma1(HalfOdd x, std::uint64_t p, std::uint64_t k);

/// Oracle Delta_k against [log_p x]; the tag carries the value under the
/// alternative [log_x p] reading.
VerificationRecord check_corollary1(HalfOdd x, std::uint64_t p, std::uint64_t k);

/// Oracle Delta_k against the alternating residual sum
///   sum_k (-1)^k sum_{a in A_k} [R(0, x/a) - R((kN_p - x)/a, kN_p/a)].
VerificationRecord check_lemma2(HalfOdd x, std::uint64_t p, std::uint64_t k, const SquarefreeFamily& family);

/// R(0, x/a) - R((kN_p - x)/a, kN_p/a) evaluated directly.
Rational lemma3_residual_difference(std::uint64_t a, std::uint64_t p, std::uint64_t k, HalfOdd x);

struct Lemma3Case {
  enum class Kind { one_pdiv_rgt, zero_pdiv_rle, zero_pnotdiv };

  std::uint64_t a;
  std::uint64_t p;
  std::uint64_t k;
  Kind kind;
  int value;  // 1 iff kind == one_pdiv_rgt
};

/// Requires a squarefree with every prime factor below x (DomainError otherwise).
Lemma3Case classify_lemma3(std::uint64_t a, std::uint64_t p, std::uint64_t k, HalfOdd x);
VerificationRecord check_lemma3(std::uint64_t a, std::uint64_t p, std::uint64_t k, HalfOdd x);

/// Squarefree a <= cap_multiplier * p * x whose prime factors are all below x,
/// ascending (a = 1 included).
std::vector<std::uint64_t> lemma3_candidates(HalfOdd x, std::uint64_t p, std::uint64_t cap_multiplier = 1);

/// B_k: candidates divisible by p with R(0, x/a) > R(0, kN_p/a).
std::vector<std::uint64_t> build_bk(HalfOdd x, std::uint64_t p, std::uint64_t k, std::uint64_t cap_multiplier = 1);

/// sum of mu over B_k against the oracle Delta_k.
VerificationRecord check_bk_bridge(HalfOdd x, std::uint64_t p, std::uint64_t k, std::uint64_t cap_multiplier = 1);

/// R(0, kN_p/a) for k = 1 .. p-1.
std::vector<Rational> kn_residuals(std::uint64_t a, std::uint64_t p, HalfOdd x);
/// The residuals above are, as a multiset, {i/p : i = 1 .. p-1}.
bool residual_permutation_holds(std::uint64_t a, std::uint64_t p, HalfOdd x);

/// The cells (x/(np), x/(np - i)), n = 1..m, i = 1..p-1, with m = [x/p] + 2.
struct IntervalGrid {
  HalfOdd x;
  std::uint64_t p;
  std::uint64_t m;

  OpenInterval cell(std::uint64_t n, std::uint64_t i) const;
};

IntervalGrid build_interval_grid(HalfOdd x, std::uint64_t p);

/// True when the cells for n = m+1 .. m+extra contain no integer.
bool grid_tail_empty(const IntervalGrid& grid, std::uint64_t extra);

/// sum_{n=1}^{m} sum_{i=1}^{p-1} M'_p(x/(np), x/(np - i)).
std::int64_t theorem_double_sum(const MobiusTable& table, HalfOdd x, std::uint64_t p);

struct TheoremCheck {
  /// double sum against -[log_p x](p - 1)
  VerificationRecord mprime_side;
  /// sum_k Delta_k by the oracle against +[log_p x](p - 1); absent when the
  /// primorial of x leaves the 128-bit range.
  std::optional<VerificationRecord> s_side;
};

TheoremCheck check_theorem(const MobiusTable& table, HalfOdd x, std::uint64_t p);

/// Mertens oracle record: sieve M(x) against direct per-integer summation.
VerificationRecord check_mertens(const MobiusTable& table, HalfOdd x);

}  // namespace mw
