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

#ifndef PERMX_FORMULAS_H_
#define PERMX_FORMULAS_H_

#include <string>
#include <variant>
#include <vector>

#include "permx/classify.h"
#include "permx/perm.h"
#include "permx/series.h"

namespace permx {

inline constexpr int kDefaultOrder = 12;

// One applied rule. `locator` is a stable rule id ("pair-123-132/block"),
// `factor` the multiplier contributed by the step and `remainder` what is
// left to evaluate: a pattern, or a restricted count such as
// "once(21; avoid 321)" when the plain cofactor would overcount.
struct DerivationStep {
  std::string rule;
  std::string locator;
  std::string factor;
  std::string remainder;

  bool operator==(const DerivationStep&) const = default;
};

struct GfResult {
  // Closed form, or exact coefficients up to `order` when part of the
  // value comes from enumeration.
  std::variant<RationalGF, TruncatedSeries> value;
  std::vector<DerivationStep> derivation;
  int order = kDefaultOrder;

  bool closed() const { return std::holds_alternative<RationalGF>(value); }
  const RationalGF& gf() const { return std::get<RationalGF>(value); }
  // Throws Error(kInvalidArgument) when a series result is asked for more
  // terms than it holds.
  TruncatedSeries Expand(int order) const;
  // The closed form, or the coefficient list.
  std::string ToString() const;
};

// Closed forms per family; tau must lie in the family's class (otherwise
// Error(kNotInClass)).
GfResult GfPair123_132(const Permutation& tau, int order = kDefaultOrder);
GfResult GfPair132_321(const Permutation& tau);
GfResult GfPair132_213(const Permutation& tau);
GfResult GfPair132_231(const Permutation& tau);
// `t` must be one of the four canonical triples (Error(kUnknownTriple)).
GfResult GfTriple(const ForbiddenSet& t, const Permutation& tau, int order = kDefaultOrder);

// |S_n(t; tau)| for the canonical sets with four or more members.
Integer CountQuadQuint(const ForbiddenSet& t, const Permutation& tau, int n);
GfResult GfQuadQuint(const ForbiddenSet& t, const Permutation& tau);

// Any forbidden set with at least two members. Applies the guards (tau
// containing a forbidden pattern, both 123 and 321 forbidden), maps the
// pair to its canonical representative and evaluates the family rule.
// Throws Error(kUnsupported) for fewer than two forbidden patterns and
// Error(kInvalidArgument) for an empty tau.
GfResult Dispatch(const ForbiddenSet& t, const Permutation& tau, int order = kDefaultOrder);

}  // namespace permx

#endif  // PERMX_FORMULAS_H_
