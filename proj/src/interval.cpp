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

#include "mw/interval.hpp"

#include <algorithm>

#include "mw/errors.hpp"

namespace mw {

OpenInterval::OpenInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("open interval with lo > hi: (" + lo_.str() + ", " + hi_.str() + ")");
}

OpenInterval OpenInterval::divided_by(const BigInt& d) const {
  if (d.sign() <= 0) throw DomainError("interval scale must be positive");
  return OpenInterval(Rational(lo_.num(), lo_.den() * d), Rational(hi_.num(), hi_.den() * d));
}

std::optional<IntegerSpan> integer_span(const OpenInterval& iv) {
  BigInt first = floor_div(iv.lo().num(), iv.lo().den()) + 1;
  BigInt last = ceil_div(iv.hi().num(), iv.hi().den()) - 1;
  if (last < first) return std::nullopt;
  return IntegerSpan{std::move(first), std::move(last)};
}

BigInt count_integers(const OpenInterval& iv) {
  auto span = integer_span(iv);
  if (!span) return 0;
  return span->last - span->first + 1;
}

Rational residual(const OpenInterval& iv) { return iv.length() - Rational(count_integers(iv)); }

std::vector<BigInt> integers_in(const OpenInterval& iv, std::uint64_t cap) {
  std::vector<BigInt> out;
  auto span = integer_span(iv);
  if (!span) return out;
  BigInt n = span->last - span->first + 1;
  if (n > cap) {
    throw EnumerationError("interval holds " + n.str() + " integers, above enumeration cap " +
                           std::to_string(cap));
  }
  out.reserve(static_cast<std::size_t>(n));
  for (BigInt v = span->first; v <= span->last; ++v) out.push_back(v);
  return out;
}

IntervalSet IntervalSet::from_parts(std::vector<OpenInterval> parts) {
  std::erase_if(parts, [](const OpenInterval& p) { return p.lo() == p.hi(); });
  std::sort(parts.begin(), parts.end(),
            [](const OpenInterval& a, const OpenInterval& b) { return a.lo() < b.lo(); });
  IntervalSet out;
  for (auto& part : parts) {
    if (out.parts_.empty()) {
      out.parts_.push_back(std::move(part));
      continue;
    }
    const OpenInterval& last = out.parts_.back();
    if (part.lo() < last.hi()) {
      throw DomainError("overlapping interval parts (" + last.lo().str() + ", " + last.hi().str() +
                        ") and (" + part.lo().str() + ", " + part.hi().str() + ")");
    }
    if (part.lo() == last.hi()) {
      if (part.lo().is_integer()) {
        throw DomainError("parts touch at integer boundary " + part.lo().str());
      }
      out.parts_.back() = OpenInterval(last.lo(), part.hi());
    } else {
      out.parts_.push_back(std::move(part));
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& t) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const OpenInterval& p) { return p.contains(t); });
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  // Parts of `other` are disjoint open intervals, so a part of this set is
  // covered only if a single part of `other` contains it.
  return std::all_of(parts_.begin(), parts_.end(), [&](const OpenInterval& p) {
    return std::any_of(other.parts_.begin(), other.parts_.end(),
                       [&](const OpenInterval& q) { return q.contains(p); });
  });
}

BigInt IntervalSet::count_integers() const {
  BigInt total = 0;
  for (const auto& p : parts_) total += mw::count_integers(p);
  return total;
}

std::vector<BigInt> IntervalSet::integers_in(std::uint64_t cap) const {
  std::vector<BigInt> out;
  for (const auto& p : parts_) {
    auto part = mw::integers_in(p, cap - std::min<std::uint64_t>(cap, out.size()));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

IntervalSet complement_within(const IntervalSet& cover, const OpenInterval& universe) {
  std::vector<OpenInterval> gaps;
  Rational cursor = universe.lo();
  for (const auto& part : cover.parts()) {
    if (!universe.contains(part)) {
      throw DomainError("cover part (" + part.lo().str() + ", " + part.hi().str() +
                        ") lies outside universe (" + universe.lo().str() + ", " + universe.hi().str() + ")");
    }
    for (const Rational* b : {&part.lo(), &part.hi()}) {
      if (universe.contains(*b) && b->is_integer()) {
        throw DomainError("cover boundary " + b->str() + " is an integer inside the universe");
      }
    }
    if (cursor < part.lo()) gaps.emplace_back(cursor, part.lo());
    cursor = part.hi();
  }
  if (cursor < universe.hi()) gaps.emplace_back(cursor, universe.hi());
  return IntervalSet::from_parts(std::move(gaps));
}

}  // namespace mw
