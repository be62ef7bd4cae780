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

#include "mw/verifiers.hpp"

#include <algorithm>
#include <string>

#include "mw/errors.hpp"

namespace mw {

namespace {

void require_row(HalfOdd x, std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p) || !x.exceeds(p)) {
    throw DomainError("need a prime p < x, got p = " + std::to_string(p) + ", x = " + x.str());
  }
  if (k < 1 || k >= p) throw DomainError("need 1 <= k <= p - 1, got k = " + std::to_string(k));
}

// |S(kN_p - x, kN_p)| - |S(0, x)| by trial division.
BigInt oracle_delta(HalfOdd x, const Primorial& np, std::uint64_t k) {
  auto shifted = rough_count_oracle(shifted_window(k, np), x);
  auto base = rough_count_oracle(OpenInterval(Rational(0), x.value()), x);
  return BigInt(shifted.count()) - BigInt(base.count());
}

// R(0, x/a) - R((kN - x)/a, kN/a) for one squarefree a.
Rational residual_bracket(HalfOdd x, const BigInt& kn, const BigInt& a) {
  const Rational x_over_a(BigInt(x.twice()), 2 * a);
  const Rational kn_over_a(kn, a);
  return residual(OpenInterval(Rational(0), x_over_a)) - residual(OpenInterval(kn_over_a - x_over_a, kn_over_a));
}

bool all_factors_below(std::uint64_t a, HalfOdd x) { return a == 1 || x.exceeds(largest_prime_factor(a)); }

}  // namespace

VerificationRecord check_lemma1(HalfOdd x, std::uint64_t p, std::uint64_t k) {
  require_row(x, p, k);
  Stopwatch sw;
  const Primorial np = primorial_excluding(x, p);
  const RoughCount s = rough_count_oracle(shifted_window(k, np), x);
  std::vector<BigInt> predicted = lemma1_predicted_set(k, p, x);
  std::sort(predicted.begin(), predicted.end());
  const bool set_match = predicted == s.members;
  auto r = make_record(Claim::lemma1, {x, p, std::nullopt, k, std::nullopt}, Rational(BigInt(s.count())),
                       Rational(log_floor(p, x) + 1), set_match ? "set_match" : "set_mismatch");
  r.elapsed = sw.elapsed();
  return r;
}

VerificationRecord check_corollary1(HalfOdd x, std::uint64_t p, std::uint64_t k) {
  require_row(x, p, k);
  Stopwatch sw;
  const Primorial np = primorial_excluding(x, p);
  // [log_x p] is 0 for every p < x
  auto r = make_record(Claim::corollary1, {x, p, std::nullopt, k, std::nullopt}, Rational(oracle_delta(x, np, k)),
                       Rational(log_floor(p, x)), "alt_log_x_p=0");
  r.elapsed = sw.elapsed();
  return r;
}

VerificationRecord check_lemma2(HalfOdd x, std::uint64_t p, std::uint64_t k, const SquarefreeFamily& family) {
  require_row(x, p, k);
  if (family.x() != x) throw DomainError("squarefree family built for a different x");
  Stopwatch sw;
  const Primorial np = primorial_excluding(x, p);
  const BigInt kn = to_bigint(np.value) * k;
  Rational sum;
  for (std::size_t stratum = 0; stratum < family.strata(); ++stratum) {
    Rational part;
    for (u128 a : family.stratum(stratum)) part += residual_bracket(x, kn, to_bigint(a));
    if (stratum % 2 == 0) {
      sum += part;
    } else {
      sum -= part;
    }
  }
  auto r = make_record(Claim::lemma2, {x, p, std::nullopt, k, std::nullopt}, Rational(oracle_delta(x, np, k)), sum);
  r.elapsed = sw.elapsed();
  return r;
}

Rational lemma3_residual_difference(std::uint64_t a, std::uint64_t p, std::uint64_t k, HalfOdd x) {
  require_row(x, p, k);
  if (a < 1) throw DomainError("a must be positive");
  const Primorial np = primorial_excluding(x, p);
  return residual_bracket(x, to_bigint(np.value) * k, BigInt(a));
}

Lemma3Case classify_lemma3(std::uint64_t a, std::uint64_t p, std::uint64_t k, HalfOdd x) {
  require_row(x, p, k);
  if (a < 1 || mobius_by_factorization(a) == 0) {
    throw DomainError(std::to_string(a) + " is not squarefree");
  }
  if (!all_factors_below(a, x)) {
    throw DomainError(std::to_string(a) + " has a prime factor >= x = " + x.str());
  }
  using Kind = Lemma3Case::Kind;
  if (a % p != 0) return {a, p, k, Kind::zero_pnotdiv, 0};
  const Primorial np = primorial_excluding(x, p);
  const Rational r_x = residual(OpenInterval(Rational(0), Rational(BigInt(x.twice()), BigInt(2 * a))));
  const Rational r_kn = residual(OpenInterval(Rational(0), Rational(to_bigint(np.value) * k, BigInt(a))));
  if (r_x > r_kn) return {a, p, k, Kind::one_pdiv_rgt, 1};
  return {a, p, k, Kind::zero_pdiv_rle, 0};
}

VerificationRecord check_lemma3(std::uint64_t a, std::uint64_t p, std::uint64_t k, HalfOdd x) {
  Stopwatch sw;
  const Lemma3Case c = classify_lemma3(a, p, k, x);
  auto r = make_record(Claim::lemma3, {x, p, std::nullopt, k, a}, lemma3_residual_difference(a, p, k, x),
                       Rational(c.value));
  switch (c.kind) {
    case Lemma3Case::Kind::one_pdiv_rgt: r.tag = "one_pdiv_rgt"; break;
    case Lemma3Case::Kind::zero_pdiv_rle: r.tag = "zero_pdiv_rle"; break;
    case Lemma3Case::Kind::zero_pnotdiv: r.tag = "zero_pnotdiv"; break;
  }
  r.elapsed = sw.elapsed();
  return r;
}

std::vector<std::uint64_t> lemma3_candidates(HalfOdd x, std::uint64_t p, std::uint64_t cap_multiplier) {
  // a <= c p x  <=>  2a <= c p (2x)
  const std::uint64_t bound = cap_multiplier * p * static_cast<std::uint64_t>(x.twice()) / 2;
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a <= bound; ++a) {
    if (mobius_by_factorization(a) != 0 && all_factors_below(a, x)) out.push_back(a);
  }
  return out;
}

std::vector<std::uint64_t> build_bk(HalfOdd x, std::uint64_t p, std::uint64_t k, std::uint64_t cap_multiplier) {
  require_row(x, p, k);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : lemma3_candidates(x, p, cap_multiplier)) {
    if (a % p == 0 && classify_lemma3(a, p, k, x).value == 1) out.push_back(a);
  }
  return out;
}

VerificationRecord check_bk_bridge(HalfOdd x, std::uint64_t p, std::uint64_t k, std::uint64_t cap_multiplier) {
  require_row(x, p, k);
  Stopwatch sw;
  std::int64_t mu_sum = 0;
  for (std::uint64_t a : build_bk(x, p, k, cap_multiplier)) mu_sum += mobius_by_factorization(a);
  const Primorial np = primorial_excluding(x, p);
  auto r = make_record(Claim::bk_bridge, {x, p, std::nullopt, k, std::nullopt}, Rational(mu_sum),
                       Rational(oracle_delta(x, np, k)), "cap=" + std::to_string(cap_multiplier) + "px");
  r.elapsed = sw.elapsed();
  return r;
}

std::vector<Rational> kn_residuals(std::uint64_t a, std::uint64_t p, HalfOdd x) {
  const Primorial np = primorial_excluding(x, p);
  std::vector<Rational> out;
  for (std::uint64_t k = 1; k < p; ++k) {
    out.push_back(residual(OpenInterval(Rational(0), Rational(to_bigint(np.value) * k, BigInt(a)))));
  }
  return out;
}

bool residual_permutation_holds(std::uint64_t a, std::uint64_t p, HalfOdd x) {
  std::vector<Rational> got = kn_residuals(a, p, x);
  std::sort(got.begin(), got.end());
  for (std::uint64_t i = 1; i < p; ++i) {
    if (got[i - 1] != Rational(BigInt(i), BigInt(p))) return false;
  }
  return true;
}

OpenInterval IntervalGrid::cell(std::uint64_t n, std::uint64_t i) const {
  const BigInt twice_x = x.twice();
  return OpenInterval(Rational(twice_x, BigInt(2 * n * p)), Rational(twice_x, BigInt(2 * (n * p - i))));
}

IntervalGrid build_interval_grid(HalfOdd x, std::uint64_t p) {
  if (!is_prime(p) || !x.exceeds(p)) {
    throw DomainError("need a prime p < x, got p = " + std::to_string(p) + ", x = " + x.str());
  }
  // [x/p] = floor(2x / 2p)
  const std::uint64_t m = static_cast<std::uint64_t>(x.twice()) / (2 * p) + 2;
  return IntervalGrid{x, p, m};
}

bool grid_tail_empty(const IntervalGrid& grid, std::uint64_t extra) {
  for (std::uint64_t n = grid.m + 1; n <= grid.m + extra; ++n) {
    for (std::uint64_t i = 1; i < grid.p; ++i) {
      if (count_integers(grid.cell(n, i)) != 0) return false;
    }
  }
  return true;
}

std::int64_t theorem_double_sum(const MobiusTable& table, HalfOdd x, std::uint64_t p) {
  const IntervalGrid grid = build_interval_grid(x, p);
  std::int64_t total = 0;
  for (std::uint64_t n = 1; n <= grid.m; ++n) {
    for (std::uint64_t i = 1; i < p; ++i) total += mertens_p_prime(table, grid.cell(n, i), p);
  }
  return total;
}

TheoremCheck check_theorem(const MobiusTable& table, HalfOdd x, std::uint64_t p) {
  Stopwatch sw;
  const std::int64_t expected = static_cast<std::int64_t>(log_floor(p, x)) * static_cast<std::int64_t>(p - 1);
  TheoremCheck out{make_record(Claim::theorem, {x, p, std::nullopt, std::nullopt, std::nullopt},
                               Rational(theorem_double_sum(table, x, p)), Rational(-expected), "mprime_side"),
                   std::nullopt};
  out.mprime_side.elapsed = sw.elapsed();

  if (x > max_primorial_threshold()) return out;
  Stopwatch sw_s;
  const Primorial np = primorial_excluding(x, p);
  BigInt s_sum = 0;
  for (std::uint64_t k = 1; k < p; ++k) s_sum += oracle_delta(x, np, k);
  out.s_side = make_record(Claim::theorem, {x, p, std::nullopt, std::nullopt, std::nullopt}, Rational(s_sum),
                           Rational(expected), "s_side");
  out.s_side->elapsed = sw_s.elapsed();
  return out;
}

VerificationRecord check_mertens(const MobiusTable& table, HalfOdd x) {
  Stopwatch sw;
  std::int64_t direct = 0;
  for (std::int64_t a = 1; a <= x.floor(); ++a) direct += mobius_by_factorization(static_cast<std::uint64_t>(a));
  auto r = make_record(Claim::mertens, {x, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
                       Rational(mertens(table, x.value())), Rational(direct));
  r.elapsed = sw.elapsed();
  return r;
}

}  // namespace mw
