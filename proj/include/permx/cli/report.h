// Copyright 2026 The permx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMX_CLI_REPORT_H_
#define PERMX_CLI_REPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "permx/classify.h"
#include "permx/formulas.h"

namespace permx::cli {

// Every report renders to JSON and parses back to an equal value; the
// schema is documented in the README and pinned by a golden file.

struct GfReport {
  std::vector<std::string> avoid;
  std::string tau;
  bool closed = true;
  std::string gf;  // closed form, empty for series results
  int order = kDefaultOrder;
  std::vector<std::uint64_t> coefficients;
  std::vector<DerivationStep> derivation;
  std::string note;

  bool operator==(const GfReport&) const = default;
};

struct SeqRow {
  int n = 0;
  bool has_formula = false;
  std::uint64_t formula = 0;
  bool has_oracle = false;
  std::uint64_t oracle = 0;

  bool Matches() const { return has_formula && has_oracle && formula == oracle; }
  bool operator==(const SeqRow&) const = default;
};

struct SeqReport {
  std::vector<std::string> avoid;
  std::string tau;
  std::string source;  // "formula", "oracle" or "both"
  std::vector<SeqRow> rows;

  bool operator==(const SeqReport&) const = default;
};

struct Mismatch {
  std::vector<std::string> avoid;
  std::string tau;
  int n = 0;
  std::uint64_t formula = 0;
  std::uint64_t oracle = 0;
  std::vector<DerivationStep> derivation;

  bool operator==(const Mismatch&) const = default;
};

struct VerifyReport {
  int k_max = 0;
  int n_max = 0;
  int sets = 0;
  int patterns = 0;
  int values = 0;
  std::vector<Mismatch> mismatches;

  bool operator==(const VerifyReport&) const = default;
};

struct ClassifyReport {
  std::vector<std::string> avoid;
  std::string tau;
  bool member = false;
  std::string witness;
  std::vector<std::string> canonical_avoid;
  std::string canonical_tau;
  std::vector<std::string> map;
  std::string family;
  std::string shape;
  std::map<std::string, int> params;
  std::vector<int> blocks;
  std::string rest;
  std::vector<DerivationStep> derivation;
  std::string gf;

  bool operator==(const ClassifyReport&) const = default;
};

struct WilfMember {
  std::string family;  // counting-function letter
  std::vector<std::string> avoid;
  std::string tau;

  bool operator==(const WilfMember&) const = default;
};

struct WilfGroup {
  std::vector<std::uint64_t> counts;
  std::vector<WilfMember> members;

  bool operator==(const WilfGroup&) const = default;
};

struct WilfReport {
  int k = 0;
  int n_max = 0;
  std::vector<WilfGroup> groups;

  bool operator==(const WilfReport&) const = default;
};

void to_json(nlohmann::json& j, const GfReport& r);
void from_json(const nlohmann::json& j, GfReport& r);
void to_json(nlohmann::json& j, const SeqReport& r);
void from_json(const nlohmann::json& j, SeqReport& r);
void to_json(nlohmann::json& j, const VerifyReport& r);
void from_json(const nlohmann::json& j, VerifyReport& r);
void to_json(nlohmann::json& j, const ClassifyReport& r);
void from_json(const nlohmann::json& j, ClassifyReport& r);
void to_json(nlohmann::json& j, const WilfReport& r);
void from_json(const nlohmann::json& j, WilfReport& r);

// Pretty-printed JSON with a trailing newline.
template <typename Report>
std::string RenderJson(const Report& r) {
  nlohmann::json j = r;
  return j.dump(2) + "\n";
}

template <typename Report>
Report ParseJson(const std::string& text) {
  return nlohmann::json::parse(text).get<Report>();
}

std::vector<std::string> PatternStrings(const ForbiddenSet& t);

GfReport BuildGfReport(const ForbiddenSet& t, const Permutation& tau, int order);
// Rows for n_min..n_max; `formula`/`oracle` select the sources.
SeqReport BuildSeqReport(const ForbiddenSet& t, const Permutation& tau, int n_min, int n_max,
                         bool formula, bool oracle, int guard);
// Compares every tau in S_k(t), 1 <= k <= k_max, over 0..n_max.
VerifyReport BuildVerifyReport(const std::vector<ForbiddenSet>& sets, int k_max, int n_max,
                               int guard, int workers);
// A non-member yields member == false and the violating occurrence.
ClassifyReport BuildClassifyReport(const ForbiddenSet& t, const Permutation& tau);
// Oracle sequences of all canonical (T, tau) with |tau| = k, grouped by
// equality. Groups appear in order of their first member; members follow
// CanonicalSets() order, then tau in lexicographic order.
WilfReport BuildWilfReport(int k, int n_max, int guard);

std::string RenderText(const GfReport& r);
std::string RenderText(const SeqReport& r);
std::string RenderCsv(const SeqReport& r);
std::string RenderText(const VerifyReport& r);
std::string RenderText(const ClassifyReport& r);
std::string RenderText(const WilfReport& r);

}  // namespace permx::cli

#endif  // PERMX_CLI_REPORT_H_
