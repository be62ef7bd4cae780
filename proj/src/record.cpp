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

#include "mw/record.hpp"

#include <array>
#include <cstdio>
#include <utility>

#include "mw/errors.hpp"

namespace mw {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 9> kClaimNames{{
    {Claim::lemma1, "lemma1"},
    {Claim::corollary1, "corollary1"},
    {Claim::lemma2, "lemma2"},
    {Claim::lemma3, "lemma3"},
    {Claim::bk_bridge, "bk_bridge"},
    {Claim::theorem, "theorem"},
    {Claim::strategy, "strategy"},
    {Claim::mertens, "mertens"},
    {Claim::correction, "correction"},
}};

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }
std::string opt(const std::optional<Rational>& v) { return v ? v->str() : std::string(); }

std::string elapsed_ms(const VerificationRecord& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed.count());
  return buf;
}

}  // namespace

std::string_view claim_name(Claim c) {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == c) return name;
  }
  return "unknown";
}

Claim parse_claim(std::string_view name) {
  for (const auto& [claim, n] : kClaimNames) {
    if (n == name) return claim;
  }
  throw DomainError("unknown claim '" + std::string(name) + "'");
}

VerificationRecord make_record(Claim claim, RecordParams params, Rational lhs, Rational rhs, std::string tag) {
  VerificationRecord r{claim, std::move(params), std::move(lhs), std::move(rhs), false, {}, std::move(tag)};
  r.pass = *r.lhs == *r.rhs;
  return r;
}

std::string_view csv_header() { return "claim,x_num,x_den,p,q,k,a,lhs,rhs,pass,elapsed_ms,interpretation_tag"; }

std::string to_csv_row(const VerificationRecord& r, bool with_timing) {
  std::string line;
  line += claim_name(r.claim);
  line += ',' + std::to_string(r.params.x.twice()) + ",2";
  line += ',' + opt(r.params.p);
  line += ',' + opt(r.params.q);
  line += ',' + opt(r.params.k);
  line += ',' + opt(r.params.a);
  line += ',' + opt(r.lhs);
  line += ',' + opt(r.rhs);
  line += r.pass ? ",true" : ",false";
  line += ',' + (with_timing ? elapsed_ms(r) : std::string());
  line += ',' + r.tag;
  return line;
}

nlohmann::ordered_json to_json(const VerificationRecord& r, bool with_timing) {
  auto field = [](const auto& v) -> nlohmann::ordered_json {
    std::string s = opt(v);
    if (s.empty()) return nullptr;
    return s;
  };
  nlohmann::ordered_json j;
  j["claim"] = claim_name(r.claim);
  j["x_num"] = std::to_string(r.params.x.twice());
  j["x_den"] = "2";
  j["p"] = field(r.params.p);
  j["q"] = field(r.params.q);
  j["k"] = field(r.params.k);
  j["a"] = field(r.params.a);
  j["lhs"] = field(r.lhs);
  j["rhs"] = field(r.rhs);
  j["pass"] = r.pass;
  j["elapsed_ms"] = with_timing ? nlohmann::ordered_json(elapsed_ms(r)) : nlohmann::ordered_json(nullptr);
  j["interpretation_tag"] = r.tag;
  return j;
}

}  // namespace mw
