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
 * @file moebius.hpp
 * @brief Segmented Möbius / smallest-prime-factor sieve and Mertens-sum variants.
 *
 * All sums are over positive integers strictly inside an OpenInterval:
 *
 *   mertens_interval   sum of mu(a)
 *   mertens_p_prime    sum of mu(a) over a not divisible by p        (M'_p)
 *   mertens_p_divisible sum of mu(a) over a divisible by p, optionally
 *                      restricted to largest prime factor < cap       (M_p, M_p^x)
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mw/interval.hpp"
#include "mw/rational.hpp"

namespace mw {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;
inline constexpr std::uint64_t kDefaultSegmentSize = 1u << 16;

struct PrimeList {
  Rational bound;
  std::vector<std::uint64_t> primes;  // every prime < bound, ascending

  std::size_t pi() const { return primes.size(); }
};

/// All primes p < x. Throws CapacityError if x exceeds the sieve cap.
PrimeList primes_below(const Rational& x, std::uint64_t sieve_cap = kDefaultSieveCap);

/// mu and smallest prime factor over [lo, hi], with running Mertens sums.
class MobiusTable {
 public:
  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }
  bool covers(std::uint64_t n) const { return n >= lo_ && n <= hi_; }

  int mu(std::uint64_t n) const { return mu_[index(n)]; }
  /// 0 for n == 1 (no prime factor).
  std::uint64_t spf(std::uint64_t n) const { return spf_[index(n)]; }
  /// Number of distinct prime factors, by refactorization.
  int omega(std::uint64_t n) const;

  /// Sum of mu over the inclusive range [first, last] (both inside the table).
  std::int64_t mu_sum(std::uint64_t first, std::uint64_t last) const;

  std::span<const std::int8_t> mu_values() const { return mu_; }
  std::span<const std::uint64_t> spf_values() const { return spf_; }

 private:
  friend MobiusTable mobius_range(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t);
  std::size_t index(std::uint64_t n) const;

  std::uint64_t lo_ = 1;
  std::uint64_t hi_ = 0;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint64_t> spf_;
  std::vector<std::int64_t> prefix_;  // prefix_[i] = sum of mu over [lo, lo + i)
};

/// Segmented sieve over [lo, hi], 1 <= lo <= hi <= sieve_cap. The result does
/// not depend on segment_size.
MobiusTable mobius_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size = kDefaultSegmentSize,
                         std::uint64_t sieve_cap = kDefaultSieveCap);

/// Convenience: table over [1, ceil(x)].
MobiusTable mobius_table_for(const Rational& x, std::uint64_t sieve_cap = kDefaultSieveCap);

bool is_prime(std::uint64_t n);
/// m(a). Throws DomainError for a < 2.
std::uint64_t largest_prime_factor(std::uint64_t a);
/// s(a). Throws DomainError for a < 2.
std::uint64_t smallest_prime_factor(std::uint64_t a);
/// mu(a) by trial division, independent of any table.
int mobius_by_factorization(std::uint64_t a);

/// M(x) = sum of mu(a) for 1 <= a <= x.
std::int64_t mertens(const MobiusTable& table, const Rational& x);
std::int64_t mertens_interval(const MobiusTable& table, const OpenInterval& iv);
/// M'_p over iv. p must be prime.
std::int64_t mertens_p_prime(const MobiusTable& table, const OpenInterval& iv, std::uint64_t p);
/// M_p over iv (no cap) or M_p^x with largest prime factor < x_cap.
std::int64_t mertens_p_divisible(const MobiusTable& table, const OpenInterval& iv, std::uint64_t p,
                                 const std::optional<Rational>& x_cap = std::nullopt);

}  // namespace mw
