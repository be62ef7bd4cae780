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
 * @file rough_sets.hpp
 * @brief Rough numbers S_x(u, v): integers in (u, v) with no prime factor below x.
 *
 * Two independent counting routes: trial division of every candidate by every
 * prime below x (the oracle), and Legendre inclusion-exclusion over the
 * squarefree family A_0 .. A_pi(x) (the sieve).
 */

#include <cstdint>
#include <vector>

#include "mw/interval.hpp"
#include "mw/rational.hpp"

namespace mw {

inline constexpr std::size_t kDefaultSubsetPrimeCap = 20;

/// N_p: product of all primes below x except p.
struct Primorial {
  HalfOdd x;
  std::uint64_t excluded;
  u128 value;
};

/// Throws DomainError unless p is a prime below x, and CapacityError when the
/// full primorial of x leaves the 128-bit range (the message names the largest
/// supported x).
Primorial primorial_excluding(HalfOdd x, std::uint64_t p);

/// Largest x for which the product of all primes < x fits in 128 bits.
HalfOdd max_primorial_threshold();

/// [log_p x]: the largest n >= 0 with p^n < x.
int log_floor(std::uint64_t p, HalfOdd x);

enum class RoughMethod { oracle, sieve };

struct RoughCount {
  OpenInterval interval;
  HalfOdd threshold;
  std::vector<BigInt> members;  // ascending
  RoughMethod method;

  std::size_t count() const { return members.size(); }
};

/// S_x(iv) by trial division: the integers of iv divisible by no prime < x.
/// Membership is decided by divisibility, so 1 and -1 always qualify and 0
/// never does once a prime lies below x; this is the set the inclusion-exclusion
/// sieve counts.
RoughCount rough_count_oracle(const OpenInterval& iv, HalfOdd x, std::uint64_t cap = kDefaultEnumerationCap);

/// {kN_p - p^j : p^j < x}, in the order j = 0, 1, ...
std::vector<BigInt> lemma1_predicted_set(std::uint64_t k, std::uint64_t p, HalfOdd x);

/// The open interval (kN_p - x, kN_p).
OpenInterval shifted_window(std::uint64_t k, const Primorial& np);

class SquarefreeFamily {
 public:
  HalfOdd x() const { return x_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  /// A_k: squarefree integers with exactly k prime factors, all below x,
  /// in lexicographic order of their prime subsets.
  const std::vector<u128>& stratum(std::size_t k) const { return strata_.at(k); }
  std::size_t strata() const { return strata_.size(); }

 private:
  friend SquarefreeFamily squarefree_family(HalfOdd, std::size_t);
  HalfOdd x_ = HalfOdd::from_twice(1);
  std::vector<std::uint64_t> primes_;
  std::vector<std::vector<u128>> strata_;
};

/// A_0 .. A_pi(x). Throws CapacityError when pi(x) > prime_cap.
SquarefreeFamily squarefree_family(HalfOdd x, std::size_t prime_cap = kDefaultSubsetPrimeCap);

/// |S_x(iv)| by inclusion-exclusion: sum over k of (-1)^k sum over a in A_k of N(iv / a).
BigInt rough_count_sieve(const OpenInterval& iv, const SquarefreeFamily& family);

}  // namespace mw
