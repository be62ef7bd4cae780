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

#include "mw/rough_sets.hpp"

#include <string>

#include "mw/errors.hpp"
#include "mw/moebius.hpp"

namespace mw {

namespace {

std::vector<std::uint64_t> primes_under(HalfOdd x) { return primes_below(x.value()).primes; }

bool checked_mul(u128 a, u128 b, u128& out) { return !__builtin_mul_overflow(a, b, &out); }

bool no_small_factor(u128 magnitude, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t q : primes) {
    if (magnitude % q == 0) return false;
  }
  return true;
}

}  // namespace

HalfOdd max_primorial_threshold() {
  u128 product = 1;
  std::uint64_t n = 2;
  for (;; ++n) {
    if (!is_prime(n)) continue;
    if (!checked_mul(product, n, product)) break;
  }
  // x may go up to just below the first prime that overflows
  return HalfOdd::from_twice(2 * static_cast<std::int64_t>(n) - 1);
}

Primorial primorial_excluding(HalfOdd x, std::uint64_t p) {
  if (!is_prime(p) || !x.exceeds(p)) {
    throw DomainError("N_p needs a prime p < x, got p = " + std::to_string(p) + ", x = " + x.str());
  }
  u128 full = 1;
  u128 value = 1;
  for (std::uint64_t q : primes_under(x)) {
    if (!checked_mul(full, q, full)) {
      throw CapacityError("primorial of x = " + x.str() + " exceeds 128 bits; largest supported x is " +
                          max_primorial_threshold().str());
    }
    if (q != p) value *= q;
  }
  return Primorial{x, p, value};
}

int log_floor(std::uint64_t p, HalfOdd x) {
  if (p < 2) throw DomainError("log base must be >= 2");
  int n = 0;
  BigInt power = p;
  while (x.exceeds(power)) {
    ++n;
    power *= p;
  }
  return n;
}

RoughCount rough_count_oracle(const OpenInterval& iv, HalfOdd x, std::uint64_t cap) {
  const std::vector<std::uint64_t> primes = primes_under(x);
  RoughCount out{iv, x, {}, RoughMethod::oracle};
  auto span = integer_span(iv);
  if (!span) return out;
  if (span->last - span->first + 1 > cap) {
    throw EnumerationError("rough-count window exceeds enumeration cap " + std::to_string(cap));
  }
  for (BigInt v = span->first; v <= span->last; ++v) {
    if (no_small_factor(to_u128(boost::multiprecision::abs(v)), primes)) out.members.push_back(v);
  }
  return out;
}

std::vector<BigInt> lemma1_predicted_set(std::uint64_t k, std::uint64_t p, HalfOdd x) {
  if (k < 1 || k >= p) throw DomainError("predicted set needs 1 <= k <= p - 1");
  const Primorial np = primorial_excluding(x, p);
  const BigInt kn = to_bigint(np.value) * k;
  std::vector<BigInt> out;
  for (BigInt power = 1; x.exceeds(power); power *= p) out.push_back(kn - power);
  return out;
}

OpenInterval shifted_window(std::uint64_t k, const Primorial& np) {
  Rational kn(to_bigint(np.value) * k);
  return OpenInterval(kn - np.x.value(), kn);
}

SquarefreeFamily squarefree_family(HalfOdd x, std::size_t prime_cap) {
  SquarefreeFamily f;
  f.x_ = x;
  f.primes_ = primes_under(x);
  if (f.primes_.size() > prime_cap) {
    throw CapacityError("pi(" + x.str() + ") = " + std::to_string(f.primes_.size()) +
                        " exceeds the subset prime cap " + std::to_string(prime_cap));
  }
  f.strata_.resize(f.primes_.size() + 1);

  // depth-first over subsets, lexicographic in prime index
  struct Frame {
    std::size_t next;
    std::size_t size;
    u128 product;
  };
  std::vector<Frame> stack{{0, 0, 1}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    f.strata_[fr.size].push_back(fr.product);
    // push in reverse so the smallest next prime is expanded first
    for (std::size_t i = f.primes_.size(); i-- > fr.next;) {
      stack.push_back({i + 1, fr.size + 1, fr.product * f.primes_[i]});
    }
  }
  return f;
}

BigInt rough_count_sieve(const OpenInterval& iv, const SquarefreeFamily& family) {
  BigInt total = 0;
  for (std::size_t k = 0; k < family.strata(); ++k) {
    BigInt stratum_sum = 0;
    for (u128 a : family.stratum(k)) stratum_sum += count_integers(iv.divided_by(to_bigint(a)));
    total += (k % 2 == 0) ? stratum_sum : BigInt(-stratum_sum);
  }
  return total;
}

}  // namespace mw
