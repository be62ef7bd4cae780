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

#include "mw/moebius.hpp"

#include <algorithm>
#include <string>

#include "mw/errors.hpp"

namespace mw {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  std::uint64_t bit = std::uint64_t{1} << 31;
  while (bit != 0) {
    std::uint64_t t = r | bit;
    if (t * t <= n) r = t;
    bit >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

void check_cap(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) {
    throw CapacityError("sieve bound " + std::to_string(n) + " exceeds sieve cap " + std::to_string(cap));
  }
}

std::uint64_t to_u64_checked(const BigInt& v, const char* what) {
  if (v.sign() < 0 || boost::multiprecision::msb(v | 1) >= 63) {
    throw CapacityError(std::string(what) + " out of 64-bit range: " + v.str());
  }
  return static_cast<std::uint64_t>(v);
}

struct U64Span {
  std::uint64_t first;
  std::uint64_t last;
};

// Positive integers strictly inside iv; nullopt when there are none.
std::optional<U64Span> positive_span(const OpenInterval& iv) {
  auto span = integer_span(iv);
  if (!span || span->last < 1) return std::nullopt;
  BigInt first = span->first < 1 ? BigInt(1) : span->first;
  return U64Span{to_u64_checked(first, "interval start"), to_u64_checked(span->last, "interval end")};
}

void require_covered(const MobiusTable& t, std::uint64_t first, std::uint64_t last) {
  if (!t.covers(first) || !t.covers(last)) {
    throw CapacityError("range [" + std::to_string(first) + ", " + std::to_string(last) +
                        "] outside Möbius table [" + std::to_string(t.lo()) + ", " + std::to_string(t.hi()) + "]");
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

// sum of mu(a) over a in [first, last], p not dividing a.
std::int64_t coprime_sum(const MobiusTable& t, std::uint64_t first, std::uint64_t last, std::uint64_t p) {
  std::int64_t total = 0;
  // mu(p b) = -mu(b) if p does not divide b, else 0; so the multiples of p
  // in [first, last] contribute -M'_p over [ceil(first/p), floor(last/p)].
  while (first <= last) {
    total += t.mu_sum(first, last);
    first = (first + p - 1) / p;
    last /= p;
  }
  return total;
}

std::uint64_t table_largest_factor(const MobiusTable& t, std::uint64_t n) {
  std::uint64_t largest = 1;
  while (n > 1) {
    if (!t.covers(n)) return std::max(largest, largest_prime_factor(n));
    std::uint64_t q = t.spf(n);
    largest = std::max(largest, q);
    n /= q;
  }
  return largest;
}

}  // namespace

PrimeList primes_below(const Rational& x, std::uint64_t sieve_cap) {
  PrimeList out{x, {}};
  if (x <= Rational(2)) return out;
  BigInt top = x.ceil() - 1;  // largest integer < x
  std::uint64_t limit = to_u64_checked(top, "prime bound");
  check_cap(limit, sieve_cap);
  out.primes = simple_sieve(limit);
  return out;
}

std::size_t MobiusTable::index(std::uint64_t n) const {
  if (!covers(n)) {
    throw CapacityError(std::to_string(n) + " outside Möbius table [" + std::to_string(lo_) + ", " +
                        std::to_string(hi_) + "]");
  }
  return static_cast<std::size_t>(n - lo_);
}

int MobiusTable::omega(std::uint64_t n) const {
  int count = 0;
  std::uint64_t last = 0;
  while (n > 1) {
    if (!covers(n)) {
      // cofactor fell below the table; finish by trial division
      for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        if (q != last) ++count;
        last = q;
        while (n % q == 0) n /= q;
      }
      if (n > 1 && n != last) ++count;
      return count;
    }
    std::uint64_t q = spf(n);
    if (q != last) ++count;
    last = q;
    n /= q;
  }
  return count;
}

std::int64_t MobiusTable::mu_sum(std::uint64_t first, std::uint64_t last) const {
  if (last < first) return 0;
  std::size_t a = index(first);
  std::size_t b = index(last);
  return prefix_[b + 1] - prefix_[a];
}

MobiusTable mobius_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size, std::uint64_t sieve_cap) {
  if (lo < 1 || hi < lo) {
    throw DomainError("mobius_range needs 1 <= lo <= hi, got [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  check_cap(hi, sieve_cap);
  segment_size = std::max<std::uint64_t>(segment_size, 1);

  MobiusTable t;
  t.lo_ = lo;
  t.hi_ = hi;
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  t.mu_.assign(n, 1);
  t.spf_.assign(n, 0);

  const std::vector<std::uint64_t> base = simple_sieve(isqrt(hi));
  std::vector<std::uint64_t> rem;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += segment_size) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + segment_size - 1);
    const std::size_t len = static_cast<std::size_t>(seg_hi - seg_lo + 1);
    const std::size_t off = static_cast<std::size_t>(seg_lo - lo);
    rem.resize(len);
    for (std::size_t j = 0; j < len; ++j) rem[j] = seg_lo + j;

    for (std::uint64_t q : base) {
      std::uint64_t start = std::max(q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t m = start; m <= seg_hi; m += q) {
        const std::size_t j = static_cast<std::size_t>(m - seg_lo);
        auto& mu = t.mu_[off + j];
        if (t.spf_[off + j] == 0) t.spf_[off + j] = q;
        rem[j] /= q;
        mu = static_cast<std::int8_t>(rem[j] % q == 0 ? 0 : -mu);
      }
    }
    for (std::size_t j = 0; j < len; ++j) {
      if (rem[j] <= 1) continue;
      // one prime factor above sqrt(hi) remains
      t.mu_[off + j] = static_cast<std::int8_t>(-t.mu_[off + j]);
      if (t.spf_[off + j] == 0) t.spf_[off + j] = rem[j];
    }
  }

  t.prefix_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) t.prefix_[i + 1] = t.prefix_[i] + t.mu_[i];
  return t;
}

MobiusTable mobius_table_for(const Rational& x, std::uint64_t sieve_cap) {
  BigInt top = x.ceil();
  if (top < 1) top = 1;
  std::uint64_t hi = to_u64_checked(top, "table bound");
  check_cap(hi, sieve_cap);
  return mobius_range(1, hi, kDefaultSegmentSize, sieve_cap);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

std::uint64_t largest_prime_factor(std::uint64_t a) {
  if (a < 2) throw DomainError("largest prime factor needs a >= 2, got " + std::to_string(a));
  std::uint64_t largest = 1;
  for (std::uint64_t q = 2; q * q <= a; ++q) {
    while (a % q == 0) {
      largest = q;
      a /= q;
    }
  }
  return a > 1 ? std::max(largest, a) : largest;
}

std::uint64_t smallest_prime_factor(std::uint64_t a) {
  if (a < 2) throw DomainError("smallest prime factor needs a >= 2, got " + std::to_string(a));
  for (std::uint64_t q = 2; q * q <= a; ++q) {
    if (a % q == 0) return q;
  }
  return a;
}

int mobius_by_factorization(std::uint64_t a) {
  if (a == 0) throw DomainError("mu(0) is undefined");
  int sign = 1;
  for (std::uint64_t q = 2; q * q <= a; ++q) {
    if (a % q != 0) continue;
    a /= q;
    if (a % q == 0) return 0;
    sign = -sign;
  }
  return a > 1 ? -sign : sign;
}

std::int64_t mertens(const MobiusTable& table, const Rational& x) {
  if (x.sign() <= 0) throw DomainError("mertens needs x > 0");
  // (0, x] holds the same integers as (0, floor(x) + 1/2)
  BigInt top = x.floor();
  if (top < 1) return 0;
  std::uint64_t last = to_u64_checked(top, "mertens bound");
  require_covered(table, 1, last);
  return table.mu_sum(1, last);
}

std::int64_t mertens_interval(const MobiusTable& table, const OpenInterval& iv) {
  auto span = positive_span(iv);
  if (!span) return 0;
  require_covered(table, span->first, span->last);
  return table.mu_sum(span->first, span->last);
}

std::int64_t mertens_p_prime(const MobiusTable& table, const OpenInterval& iv, std::uint64_t p) {
  require_prime(p);
  auto span = positive_span(iv);
  if (!span) return 0;
  require_covered(table, span->first, span->last);
  return coprime_sum(table, span->first, span->last, p);
}

std::int64_t mertens_p_divisible(const MobiusTable& table, const OpenInterval& iv, std::uint64_t p,
                                 const std::optional<Rational>& x_cap) {
  require_prime(p);
  auto span = positive_span(iv);
  if (!span) return 0;
  require_covered(table, span->first, span->last);
  if (!x_cap) return table.mu_sum(span->first, span->last) - coprime_sum(table, span->first, span->last, p);

  std::int64_t total = 0;
  for (std::uint64_t a = (span->first + p - 1) / p * p; a <= span->last; a += p) {
    int mu = table.mu(a);
    if (mu == 0) continue;
    if (Rational(BigInt(table_largest_factor(table, a))) < *x_cap) total += mu;
  }
  return total;
}

}  // namespace mw
