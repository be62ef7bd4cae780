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
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Rational keeps the canonical form gcd(|num|, den) = 1, den > 0, so equality
 * is structural. HalfOdd is the stand-in for an irrational threshold x: a
 * value n + 1/2, for which x / a is never an integer for any integer a >= 1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mw {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

BigInt to_bigint(u128 v);
/// Throws CapacityError when v is negative or does not fit in 128 bits.
u128 to_u128(const BigInt& v);
std::string to_string(u128 v);

// floor(a / b) and ceil(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit by design of the number tower
  Rational(std::int64_t num) : num_(num), den_(1) {}       // NOLINT
  Rational(int num) : num_(num), den_(1) {}                // NOLINT
  Rational(BigInt num, BigInt den);

  /// Parses "n", "-n", "n/d" or a finite decimal such as "10.5" or "2.8".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }
  /// this - floor(this), in [0, 1).
  Rational frac() const;

  Rational operator-() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", or just "num" when the value is an integer.
  std::string str() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A positive half-odd-integer (2t+1)/2, used where a threshold must never
/// coincide with an integer quotient.
class HalfOdd {
 public:
  /// `twice` is 2x; it must be a positive odd integer.
  static HalfOdd from_twice(std::int64_t twice);
  /// Accepts decimal text ending in ".5", e.g. "10.5"; anything else is a DomainError.
  static HalfOdd parse(std::string_view text);

  std::int64_t twice() const { return twice_; }
  /// floor(x) = (twice - 1) / 2.
  std::int64_t floor() const { return (twice_ - 1) / 2; }
  Rational value() const { return Rational(BigInt(twice_), BigInt(2)); }

  /// Exact comparison of x against an integer.
  bool exceeds(const BigInt& n) const { return BigInt(twice_) > 2 * n; }
  bool exceeds(std::uint64_t n) const { return exceeds(BigInt(n)); }

  /// "10.5" style decimal text.
  std::string str() const;

  friend bool operator==(HalfOdd a, HalfOdd b) { return a.twice_ == b.twice_; }
  friend auto operator<=>(HalfOdd a, HalfOdd b) { return a.twice_ <=> b.twice_; }

 private:
  explicit HalfOdd(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_;
};

}  // namespace mw
