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
#include "mw/rough_sets.hpp"
#include "oracles.hpp"

using mw::BigInt;
using mw::HalfOdd;
using mw::OpenInterval;
using mw::Rational;

namespace {

HalfOdd hx(const char* s) { return HalfOdd::parse(s); }

std::vector<std::int64_t> as_i64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& b : v) out.push_back(static_cast<std::int64_t>(b));
  return out;
}

// Brute S_x for small windows: integers with no prime divisor below x.
std::vector<std::int64_t> brute_rough(const Rational& lo, const Rational& hi, const Rational& x) {
  std::vector<std::int64_t> out;
  for (std::int64_t a : oracle::integers_between(lo, hi)) {
    bool ok = true;
    for (std::int64_t d = 2; Rational(d) < x; ++d) {
      if (oracle::prime(d) && a % d == 0) ok = false;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_SUITE("rough_sets") {

TEST_CASE("primorial_excluding") {
  CHECK(mw::primorial_excluding(hx("10.5"), 7).value == 30);
  CHECK(mw::primorial_excluding(hx("10.5"), 2).value == 105);
  CHECK(mw::primorial_excluding(hx("10.5"), 5).value == 42);
  CHECK(mw::primorial_excluding(hx("30.5"), 29).value == 223092870);
  CHECK_THROWS_AS(mw::primorial_excluding(hx("10.5"), 11), mw::DomainError);
  CHECK_THROWS_AS(mw::primorial_excluding(hx("10.5"), 9), mw::DomainError);

  // the largest supported threshold sits just below the first prime that overflows 128 bits
  CHECK(mw::max_primorial_threshold() == hx("102.5"));
  CHECK_NOTHROW(mw::primorial_excluding(hx("102.5"), 101));
  try {
    mw::primorial_excluding(hx("103.5"), 3);
    FAIL("expected capacity error");
  } catch (const mw::CapacityError& e) {
    CHECK(std::string(e.what()).find("102.5") != std::string::npos);
  }
}

TEST_CASE("primorial invariants") {
  for (std::int64_t twice = 5; twice <= 161; twice += 2) {
    HalfOdd x = HalfOdd::from_twice(twice);
    for (auto p : mw::primes_below(x.value()).primes) {
      const BigInt n = mw::to_bigint(mw::primorial_excluding(x, p).value);
      CHECK(n % p != 0);
      for (auto q : mw::primes_below(x.value()).primes) {
        if (q != p) CHECK(n % q == 0);
      }
    }
  }
}

TEST_CASE("log_floor") {
  CHECK(mw::log_floor(7, hx("10.5")) == 1);
  CHECK(mw::log_floor(2, hx("10.5")) == 3);
  CHECK(mw::log_floor(3, hx("10.5")) == 2);
  CHECK(mw::log_floor(3, hx("9.5")) == 2);
  CHECK(mw::log_floor(3, hx("8.5")) == 1);
  CHECK(mw::log_floor(11, hx("10.5")) == 0);
}

TEST_CASE("rough_count_oracle") {
  auto base = mw::rough_count_oracle(OpenInterval(Rational(0), hx("10.5").value()), hx("10.5"));
  CHECK(as_i64(base.members) == std::vector<std::int64_t>{1});
  CHECK(base.method == mw::RoughMethod::oracle);

  auto window = mw::rough_count_oracle(OpenInterval(Rational::parse("19.5"), Rational(30)), hx("10.5"));
  CHECK(as_i64(window.members) == std::vector<std::int64_t>{23, 29});

  // threshold 5.5 has the same primes below it as sqrt(30.5)
  auto sqrt_case = mw::rough_count_oracle(OpenInterval(Rational(0), hx("30.5").value()), hx("5.5"));
  CHECK(sqrt_case.count() == 10 - 3 + 1);

  // divisibility decides membership for every integer of the window
  auto straddle = mw::rough_count_oracle(OpenInterval(Rational::parse("-3.5"), Rational(2)), hx("3.5"));
  CHECK(as_i64(straddle.members) == std::vector<std::int64_t>{-1, 1});

  CHECK_THROWS_AS(mw::rough_count_oracle(OpenInterval(Rational(0), Rational(1000)), hx("3.5"), 10),
                  mw::EnumerationError);
}

TEST_CASE("lemma1_predicted_set") {
  CHECK(as_i64(mw::lemma1_predicted_set(1, 7, hx("10.5"))) == std::vector<std::int64_t>{29, 23});
  CHECK(as_i64(mw::lemma1_predicted_set(1, 2, hx("10.5"))) == std::vector<std::int64_t>{104, 103, 101, 97});
  CHECK(as_i64(mw::lemma1_predicted_set(4, 5, hx("10.5"))) == std::vector<std::int64_t>{167, 163});
  CHECK_THROWS_AS(mw::lemma1_predicted_set(7, 7, hx("10.5")), mw::DomainError);
  CHECK_THROWS_AS(mw::lemma1_predicted_set(0, 7, hx("10.5")), mw::DomainError);

  // the p = 2 row: 104 is even, so the oracle holds only three members
  auto s = mw::rough_count_oracle(mw::shifted_window(1, mw::primorial_excluding(hx("10.5"), 2)), hx("10.5"));
  CHECK(as_i64(s.members) == std::vector<std::int64_t>{97, 101, 103});

  // odd p: for k = 4, 4 * 30 - 1 = 119 = 7 * 17 drops out as well
  auto s4 = mw::rough_count_oracle(mw::shifted_window(4, mw::primorial_excluding(hx("10.5"), 7)), hx("10.5"));
  CHECK(as_i64(s4.members) == std::vector<std::int64_t>{113});
  auto s5 = mw::rough_count_oracle(mw::shifted_window(4, mw::primorial_excluding(hx("10.5"), 5)), hx("10.5"));
  CHECK(as_i64(s5.members) == std::vector<std::int64_t>{163, 167});
}

TEST_CASE("squarefree_family") {
  auto f = mw::squarefree_family(hx("10.5"));
  REQUIRE(f.strata() == 5);
  CHECK(f.stratum(0) == std::vector<mw::u128>{1});
  CHECK(f.stratum(1) == std::vector<mw::u128>{2, 3, 5, 7});
  CHECK(f.stratum(2) == std::vector<mw::u128>{6, 10, 14, 15, 21, 35});
  CHECK(f.stratum(4) == std::vector<mw::u128>{210});
  CHECK(mw::squarefree_family(hx("5.5")).stratum(3) == std::vector<mw::u128>{30});
  CHECK_THROWS_AS(mw::squarefree_family(hx("30.5"), 5), mw::CapacityError);

  // |A_k| = C(pi, k), and every member is a squarefree divisor of the primorial
  auto big = mw::squarefree_family(hx("40.5"));
  const std::size_t pi = big.primes().size();
  std::uint64_t binom = 1;
  std::size_t total = 0;
  for (std::size_t k = 0; k <= pi; ++k) {
    CHECK(big.stratum(k).size() == binom);
    total += big.stratum(k).size();
    binom = binom * (pi - k) / (k + 1);
  }
  CHECK(total == (std::size_t{1} << pi));
}

TEST_CASE("rough_count_sieve matches the oracle") {
  CHECK(mw::rough_count_sieve(OpenInterval(Rational(0), hx("10.5").value()), mw::squarefree_family(hx("10.5"))) == 1);
  CHECK(mw::rough_count_sieve(OpenInterval(Rational::parse("19.5"), Rational(30)), mw::squarefree_family(hx("10.5"))) ==
        2);
  CHECK(mw::rough_count_sieve(OpenInterval(Rational(0), hx("30.5").value()), mw::squarefree_family(hx("5.5"))) == 8);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> start(-400, 40000);
  std::uniform_int_distribution<std::int64_t> width(0, 600);
  std::uniform_int_distribution<std::int64_t> thresh(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    HalfOdd x = HalfOdd::from_twice(2 * thresh(rng) + 1);
    Rational lo(BigInt(start(rng)), BigInt(3));
    Rational hi = lo + Rational(BigInt(width(rng)), BigInt(7));
    OpenInterval i(lo, hi);
    auto brute = brute_rough(lo, hi, x.value());
    auto s = mw::rough_count_oracle(i, x);
    REQUIRE(as_i64(s.members) == brute);
    REQUIRE(mw::rough_count_sieve(i, mw::squarefree_family(x)) == BigInt(brute.size()));
  }
}

TEST_CASE("sieve and oracle agree on the primorial windows") {
  for (std::int64_t twice = 5; twice <= 43; twice += 2) {
    HalfOdd x = HalfOdd::from_twice(twice);
    auto family = mw::squarefree_family(x);
    auto base = OpenInterval(Rational(0), x.value());
    CHECK(mw::rough_count_sieve(base, family) == BigInt(mw::rough_count_oracle(base, x).count()));
    for (auto p : family.primes()) {
      auto np = mw::primorial_excluding(x, p);
      for (std::uint64_t k = 1; k < p; ++k) {
        auto w = mw::shifted_window(k, np);
        auto s = mw::rough_count_oracle(w, x);
        REQUIRE(mw::rough_count_sieve(w, family) == BigInt(s.count()));
        for (const auto& m : s.members) {
          for (auto q : family.primes()) REQUIRE(m % q != 0);
        }
      }
    }
  }
}

}  // TEST_SUITE
