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

#include <random>

#include "doctest.h"
#include "mw/errors.hpp"
#include "mw/moebius.hpp"
#include "oracles.hpp"

using mw::BigInt;
using mw::OpenInterval;
using mw::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
OpenInterval iv(const char* lo, const char* hi) { return OpenInterval(q(lo), q(hi)); }

const mw::MobiusTable& table() {
  static const mw::MobiusTable t = mw::mobius_range(1, 60000);
  return t;
}

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("primes_below") {
  CHECK(mw::primes_below(q("10.5")).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(mw::primes_below(Rational(2)).primes.empty());
  CHECK(mw::primes_below(Rational(3)).primes == std::vector<std::uint64_t>{2});
  auto thirty = mw::primes_below(q("30.5"));
  CHECK(thirty.pi() == 10);
  for (auto p : thirty.primes) CHECK(oracle::prime(static_cast<std::int64_t>(p)));
  CHECK_THROWS_AS(mw::primes_below(q("1000.5"), 100), mw::CapacityError);
}

TEST_CASE("mobius_range small values") {
  auto t = mw::mobius_range(1, 10);
  std::vector<int> mu;
  for (std::uint64_t n = 1; n <= 10; ++n) mu.push_back(t.mu(n));
  CHECK(mu == std::vector<int>{1, -1, -1, 0, -1, 1, -1, 0, 0, 1});
  CHECK(t.mu(4) == 0);
  std::vector<std::uint64_t> spf;
  for (std::uint64_t n = 2; n <= 10; ++n) spf.push_back(t.spf(n));
  CHECK(spf == std::vector<std::uint64_t>{2, 3, 2, 5, 2, 7, 2, 3, 2});
  CHECK(t.spf(1) == 0);
  CHECK(t.omega(30) == 3);
  CHECK(t.omega(8) == 1);
  CHECK_THROWS_AS(t.mu(11), mw::CapacityError);
  CHECK_THROWS_AS(mw::mobius_range(0, 10), mw::DomainError);
  CHECK_THROWS_AS(mw::mobius_range(1, 1000, 64, 999), mw::CapacityError);
}

TEST_CASE("segmented sieve equals naive factorization on random windows") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> start(1, 2'000'000);
  std::uniform_int_distribution<std::uint64_t> width(1, 3000);
  std::uniform_int_distribution<std::uint64_t> seg(1, 700);
  for (int trial = 0; trial < 25; ++trial) {
    std::uint64_t lo = start(rng);
    std::uint64_t hi = lo + width(rng);
    auto t = mw::mobius_range(lo, hi, seg(rng));
    for (std::uint64_t n = lo; n <= hi; ++n) {
      REQUIRE(t.mu(n) == mw::mobius_by_factorization(n));
      if (n >= 2) REQUIRE(t.spf(n) == mw::smallest_prime_factor(n));
    }
  }
  // brute oracle on a prefix
  auto t = mw::mobius_range(1, 3000, 97);
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(t.mu(n) == oracle::mu(static_cast<std::int64_t>(n)));
}

TEST_CASE("segment size does not change the table") {
  auto a = mw::mobius_range(5000, 9000, 1);
  auto b = mw::mobius_range(5000, 9000, 4096);
  CHECK(std::equal(a.mu_values().begin(), a.mu_values().end(), b.mu_values().begin()));
  CHECK(std::equal(a.spf_values().begin(), a.spf_values().end(), b.spf_values().begin()));
}

TEST_CASE("factor helpers") {
  CHECK(mw::largest_prime_factor(30) == 5);
  CHECK(mw::largest_prime_factor(7) == 7);
  CHECK(mw::largest_prime_factor(78) == 13);
  CHECK(mw::largest_prime_factor(1024) == 2);
  CHECK_THROWS_AS(mw::largest_prime_factor(1), mw::DomainError);
  CHECK(mw::smallest_prime_factor(91) == 7);
  CHECK(mw::is_prime(97));
  CHECK_FALSE(mw::is_prime(91));
  CHECK_FALSE(mw::is_prime(1));
}

TEST_CASE("mertens") {
  CHECK(mw::mertens(table(), Rational(1)) == 1);
  CHECK(mw::mertens(table(), q("10.5")) == -1);
  CHECK(mw::mertens(table(), q("100.5")) == 1);
  CHECK(mw::mertens(table(), q("0.5")) == 0);
  CHECK_THROWS_AS(mw::mertens(table(), q("60001.5")), mw::CapacityError);
  CHECK_THROWS_AS(mw::mertens(table(), Rational(0)), mw::DomainError);
}

TEST_CASE("mertens_interval") {
  CHECK(mw::mertens_interval(table(), iv("0", "10.5")) == -1);
  CHECK(mw::mertens_interval(table(), iv("3.5", "3.6")) == 0);
  CHECK(mw::mertens_interval(table(), iv("2.5", "6.5")) == -1);
  CHECK(mw::mertens_interval(table(), iv("-4.5", "2.5")) == 0);
}

TEST_CASE("mertens_p_prime and mertens_p_divisible") {
  CHECK(mw::mertens_p_prime(table(), iv("0", "10.5"), 7) == 0);
  CHECK(mw::mertens_p_prime(table(), iv("6.5", "7.5"), 7) == 0);
  CHECK(mw::mertens_p_prime(table(), iv("0", "23.5"), 5) == -3);  // oracle value
  CHECK(mw::mertens_p_divisible(table(), iv("0", "10.5"), 7) == -1);
  CHECK(mw::mertens_p_divisible(table(), iv("0", "10.5"), 7, q("10.5")) == -1);
  CHECK(mw::mertens_p_divisible(table(), iv("0", "10.5"), 11) == 0);
  // every multiple of 7 has m(a) >= 7 > 6.5
  CHECK(mw::mertens_p_divisible(table(), iv("0", "30.5"), 7, q("6.5")) == 0);
  CHECK_THROWS_AS(mw::mertens_p_prime(table(), iv("0", "10.5"), 9), mw::DomainError);
}

TEST_CASE("Mertens variants against brute force (random intervals)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> num(0, 40000);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 97};
  for (int trial = 0; trial < 150; ++trial) {
    Rational a(BigInt(num(rng)), BigInt(den(rng)));
    Rational b(BigInt(num(rng)), BigInt(den(rng)));
    if (b < a) std::swap(a, b);
    if (b - a > Rational(600)) b = a + Rational(600);
    OpenInterval i(a, b);
    const std::int64_t whole = oracle::mu_sum(a, b);
    REQUIRE(mw::mertens_interval(table(), i) == whole);
    for (auto p : primes) {
      const auto pp = static_cast<std::int64_t>(p);
      const std::int64_t coprime = oracle::mu_sum(a, b, pp);
      REQUIRE(mw::mertens_p_prime(table(), i, p) == coprime);
      // partition by divisibility
      CHECK(mw::mertens_p_prime(table(), i, p) + mw::mertens_p_divisible(table(), i, p) == whole);
    }
  }
}

TEST_CASE("M(x) = M'_p(x) - M'_p(x/p); the plus-sign variant fails") {
  int plus_sign_holds = 0;
  int cases = 0;
  for (std::int64_t twice = 5; twice <= 801; twice += 2) {
    const Rational x = oracle::half_odd(twice);
    for (auto p : mw::primes_below(x).primes) {
      const Rational xp = x / Rational(BigInt(p));
      const std::int64_t m = mw::mertens(table(), x);
      const std::int64_t a = mw::mertens_p_prime(table(), OpenInterval(Rational(0), x), p);
      const std::int64_t b = mw::mertens_p_prime(table(), OpenInterval(Rational(0), xp), p);
      CHECK(m == a - b);
      plus_sign_holds += (m == a + b);
      ++cases;
    }
  }
  // the plus sign agrees only where M'_p(x/p) happens to vanish
  CHECK(plus_sign_holds < cases);
}

TEST_CASE("M_p(u, v) = -M'_p(u/p, v/p) on grid cells") {
  for (std::int64_t twice = 7; twice <= 301; twice += 2) {
    const Rational x = oracle::half_odd(twice);
    for (auto p : mw::primes_below(x).primes) {
      const std::uint64_t m = static_cast<std::uint64_t>(twice) / (2 * p) + 2;
      for (std::uint64_t n = 1; n <= m; ++n) {
        for (std::uint64_t i = 1; i < p; ++i) {
          const Rational np(BigInt(n * p));
          OpenInterval big(x / Rational(BigInt(n)), x / (Rational(BigInt(n)) - Rational(BigInt(i), BigInt(p))));
          OpenInterval small(x / np, x / (np - Rational(BigInt(i))));
          REQUIRE(mw::mertens_p_divisible(table(), big, p) == -mw::mertens_p_prime(table(), small, p));
        }
      }
    }
  }
}

}  // TEST_SUITE
