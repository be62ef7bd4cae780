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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "mw/rational.hpp"

namespace mw {

enum class Claim { lemma1, corollary1, lemma2, lemma3, bk_bridge, theorem, strategy, mertens, correction };

std::string_view claim_name(Claim c);
/// Throws DomainError on an unknown name.
Claim parse_claim(std::string_view name);

struct RecordParams {
  HalfOdd x;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> a;
};

/// One checked (claim, parameters) instance. For every claim except
/// `correction`, pass == (lhs == rhs).
struct VerificationRecord {
  Claim claim;
  RecordParams params;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  bool pass = false;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::string tag;
};

/// pass := lhs == rhs.
VerificationRecord make_record(Claim claim, RecordParams params, Rational lhs, Rational rhs, std::string tag = {});

/// claim,x_num,x_den,p,q,k,a,lhs,rhs,pass,elapsed_ms,interpretation_tag
std::string_view csv_header();
/// One CSV line without the trailing newline. elapsed_ms is written only when
/// `with_timing` is set, so data rows stay reproducible by default.
std::string to_csv_row(const VerificationRecord& r, bool with_timing = false);
nlohmann::ordered_json to_json(const VerificationRecord& r, bool with_timing = false);

/// Wall-clock timer for filling VerificationRecord::elapsed.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::duration<double, std::milli> elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mw
