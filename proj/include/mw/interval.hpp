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

#include <cstdint>
#include <optional>
#include <vector>

#include "mw/rational.hpp"

namespace mw {

/// Default bound on how many integers integers_in() will materialize.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// The open interval {t : lo < t < hi}. lo == hi is the empty interval.
class OpenInterval {
 public:
  OpenInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational length() const { return hi_ - lo_; }

  bool contains(const Rational& t) const { return lo_ < t && t < hi_; }
  bool contains(const OpenInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  /// The interval scaled by 1/d, d > 0.
  OpenInterval divided_by(const BigInt& d) const;

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// Inclusive range [first, last] of integers strictly inside an open interval.
struct IntegerSpan {
  BigInt first;
  BigInt last;
};

/// nullopt when the interval holds no integer.
std::optional<IntegerSpan> integer_span(const OpenInterval& iv);

/// N(a, b): the number of integers strictly between lo and hi.
BigInt count_integers(const OpenInterval& iv);

/// R(a, b) = (b - a) - N(a, b). Lies in (0, 1) for (0, b) with b a positive non-integer.
Rational residual(const OpenInterval& iv);

/// The integers strictly inside iv, ascending. Throws EnumerationError above `cap`.
std::vector<BigInt> integers_in(const OpenInterval& iv, std::uint64_t cap = kDefaultEnumerationCap);

/// Finite union of pairwise-disjoint open intervals, sorted by lo.
///
/// Parts sharing an endpoint are merged; a shared endpoint that is an
/// integer would drop that integer from both parts, so it is rejected.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Sorts, drops empty parts, merges touching parts. Overlap is a DomainError.
  static IntervalSet from_parts(std::vector<OpenInterval> parts);

  const std::vector<OpenInterval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  bool contains(const Rational& t) const;
  /// Every point of this set is a point of `other`.
  bool subset_of(const IntervalSet& other) const;

  BigInt count_integers() const;
  std::vector<BigInt> integers_in(std::uint64_t cap = kDefaultEnumerationCap) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<OpenInterval> parts_;
};

/// universe \ cover, as an IntervalSet.
///
/// Every cover part must lie inside the universe (DomainError otherwise), and
/// no cover boundary strictly inside the universe may be an integer, so the
/// integers of the universe split exactly between cover and result.
IntervalSet complement_within(const IntervalSet& cover, const OpenInterval& universe);

}  // namespace mw
