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

// Brute-force reference implementations. Nothing here calls into the library's
// sieve, floor/ceil counting, or rough-set code; they only share Rational.

#include <cstdint>
#include <random>
#include <vector>

#include "mw/rational.hpp"

namespace oracle {

// mu by removing each prime factor with repeated division.
inline int mu(std::int64_t n) {
  int factors = 0;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 1) return 0;
    ++factors;
  }
  return factors % 2 == 0 ? 1 : -1;
}

inline std::int64_t mertens(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t a = 1; a <= n; ++a) s += mu(a);
  return s;
}

inline bool prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Integers t with lo < t < hi, found by scanning a window and comparing
// exactly; lo and hi are assumed within +-10^9.
inline std::vector<std::int64_t> integers_between(const mw::Rational& lo, const mw::Rational& hi) {
  std::vector<std::int64_t> out;
  auto start = static_cast<std::int64_t>(lo.num() / lo.den()) - 2;
  auto stop = static_cast<std::int64_t>(hi.num() / hi.den()) + 2;
  for (std::int64_t t = start; t <= stop; ++t) {
    mw::Rational r(t);
    if (lo < r && r < hi) out.push_back(t);
  }
  return out;
}

// sum of mu(a) over positive a in (lo, hi) with p not dividing a (p = 0: no filter).
inline std::int64_t mu_sum(const mw::Rational& lo, const mw::Rational& hi, std::int64_t p = 0) {
  std::int64_t s = 0;
  for (std::int64_t a : integers_between(lo, hi)) {
    if (a >= 1 && (p == 0 || a % p != 0)) s += mu(a);
  }
  return s;
}

inline mw::Rational half_odd(std::int64_t twice) { return mw::Rational(mw::BigInt(twice), mw::BigInt(2)); }

}  // namespace oracle
