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

#include "mw/rational.hpp"

#include <algorithm>
#include <ostream>

#include "mw/errors.hpp"

namespace mw {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

BigInt to_bigint(u128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

u128 to_u128(const BigInt& v) {
  if (v.sign() < 0 || boost::multiprecision::msb(v | 1) >= 128) {
    throw CapacityError("value does not fit in unsigned 128-bit range");
  }
  const BigInt mask = (BigInt(1) << 64) - 1;
  auto hi = static_cast<std::uint64_t>(v >> 64);
  auto lo = static_cast<std::uint64_t>(v & mask);
  return (static_cast<u128>(hi) << 64) | lo;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r.sign() < 0) --q;  // truncation rounds toward zero
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r.sign() > 0) ++q;
  return q;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 1) return;
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text));
  std::string_view frac = text.substr(dot + 1);
  if (!all_digits(frac)) throw DomainError("malformed decimal: '" + std::string(text) + "'");
  std::string whole(text.substr(0, dot));
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  BigInt w = parse_int(whole);
  BigInt f = parse_int(frac);
  bool neg = text.front() == '-';
  BigInt num = (neg ? BigInt(-w) : w) * scale + f;
  return Rational(neg ? BigInt(-num) : num, scale);
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

HalfOdd HalfOdd::from_twice(std::int64_t twice) {
  if (twice <= 0 || twice % 2 == 0) {
    throw DomainError("threshold must be a positive half-odd integer (n + 0.5), got 2x = " +
                      std::to_string(twice));
  }
  return HalfOdd(twice);
}

HalfOdd HalfOdd::parse(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos || text.substr(dot) != ".5" || !all_digits(text.substr(0, dot))) {
    throw DomainError("x must be written as a decimal ending in .5, got '" + std::string(text) + "'");
  }
  std::int64_t whole = std::stoll(std::string(text.substr(0, dot)));
  return from_twice(2 * whole + 1);
}

std::string HalfOdd::str() const { return std::to_string(floor()) + ".5"; }

}  // namespace mw
