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

#ifndef PERMX_ORACLE_H_
#define PERMX_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permx/classify.h"
#include "permx/perm.h"
#include "permx/series.h"

namespace permx {

enum class CountMode {
  kExactlyOnce,  // avoid T, contain tau exactly once
  kAvoidBoth,    // avoid T and tau
};

std::string_view CountModeName(CountMode mode);  // "EXACTLY_ONCE" / "AVOID_BOTH"

struct SequenceTable {
  ForbiddenSet set;
  Permutation tau;
  CountMode mode = CountMode::kExactlyOnce;
  std::vector<std::uint64_t> counts;  // counts[n] for n = 0..n_max

  TruncatedSeries Series() const { return TruncatedSeries::FromCounts(counts); }
  // Lines "n c_n" from n = 1, preceded by comment lines that record the
  // query and c_0.
  std::string ToBFile() const;
  // {"T": [...], "tau": "...", "mode": "...", "counts": [...]}
  std::string ToJson() const;
  // Throws Error(kInvalidArgument) on malformed input.
  static SequenceTable FromJson(std::string_view text);

  bool operator==(const SequenceTable&) const = default;
};

struct OracleOptions {
  int guard = kDefaultGuard;
  // Worker threads; the search is split by first letter.
  int workers = 1;
  // Occurrence counting stops after this many hits; nullopt counts all.
  std::optional<std::uint64_t> cap = 2;
  bool use_memo = true;
};

// Visits every permutation of [n] avoiding t, in lexicographic order, by
// extending avoiding prefixes one letter at a time. Throws
// Error(kGuardViolation) when n exceeds the guard.
void ForEachAvoider(const ForbiddenSet& t, int n,
                    const std::function<void(const Permutation&)>& visit,
                    int guard = kDefaultGuard);
std::vector<Permutation> GenerateAvoiders(const ForbiddenSet& t, int n,
                                          int guard = kDefaultGuard);

// counts[n] = |{pi in S_n(t) : pi contains tau exactly once}|.
SequenceTable CountSequence(const ForbiddenSet& t, const Permutation& tau, int n_max,
                            const OracleOptions& options = {});
// counts[n] = |S_n(t and tau)|.
SequenceTable AvoidanceSeries(const ForbiddenSet& t, const Permutation& tau, int n_max,
                              const OracleOptions& options = {});

}  // namespace permx

#endif  // PERMX_ORACLE_H_
