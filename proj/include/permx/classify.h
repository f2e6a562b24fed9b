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

#ifndef PERMX_CLASSIFY_H_
#define PERMX_CLASSIFY_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permx/perm.h"

namespace permx {

// A nonempty set of length-3 patterns, kept sorted and deduplicated.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  // Throws Error(kInvalidArgument) if empty or if any member is not in S_3.
  explicit ForbiddenSet(std::vector<Permutation> patterns);
  // "123,132" (order-insensitive, duplicates dropped).
  static ForbiddenSet Parse(std::string_view text);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  int size() const { return static_cast<int>(patterns_.size()); }
  bool Has(const Permutation& p) const;
  // True when both 123 and 321 are forbidden; no permutation of length
  // 5 or more then avoids the set.
  bool ForbidsBothMonotone() const;

  // "{123,132}"
  std::string ToString() const;
  // "123,132"
  std::string ToList() const;

  auto operator<=>(const ForbiddenSet&) const = default;
  bool operator==(const ForbiddenSet&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

// All subsets of S_3 of the given size, in lexicographic order.
std::vector<ForbiddenSet> SubsetsOfS3(int size);

enum class Family {
  kPair123_132,
  kPair132_321,
  kPair132_213,
  kPair132_231,
  kTriple123_132_213,
  kTriple123_132_231,
  kTriple123_231_312,
  kTriple132_213_231,
  kQuadOrQuint,
};

// "PAIR_123_132", ...
std::string_view FamilyName(Family f);
// Single-letter name of the counting function for the family ("A".."H"),
// "Q" for the quartet/quintet sets.
std::string_view FamilyLetter(Family f);

// The representative sets handled directly: four pairs, four triples,
// three quartets, one quintet and S_3 itself.
const std::vector<ForbiddenSet>& CanonicalSets();
std::optional<Family> FamilyOf(const ForbiddenSet& t);

bool IsMember(const Permutation& tau, const ForbiddenSet& t);

// An element of the 8-element group generated by reverse, complement and
// inverse, applied as inverse first, then reverse, then complement.
struct SymmetryMap {
  bool inverse = false;
  bool reverse = false;
  bool complement = false;

  Permutation Apply(const Permutation& p) const;
  ForbiddenSet Apply(const ForbiddenSet& t) const;
  SymmetryMap Inverted() const;
  bool IsIdentity() const { return !inverse && !reverse && !complement; }
  // Operation names in application order; empty for the identity.
  std::vector<std::string> Steps() const;
  // "identity" or e.g. "inverse,complement".
  std::string ToString() const;

  // The whole group in a fixed order, identity first.
  static const std::array<SymmetryMap, 8>& All();

  bool operator==(const SymmetryMap&) const = default;
};

struct Canonical {
  ForbiddenSet set;
  Permutation tau;
  SymmetryMap map;
  Family family;
};

// Maps (t, tau) to a representative whose set is one of CanonicalSets().
// Sets that are already canonical keep the identity; otherwise the group
// element giving the smallest image of tau wins, ties broken by group
// order. Throws Error(kUnreducible) when the orbit has no representative.
Canonical Canonicalize(const ForbiddenSet& t, const Permutation& tau);

// Structural parse of tau inside a family. `shape` names the case, `params`
// carries the integer parameters in a fixed order, `blocks` any list-valued
// parameter (block sizes, run boundaries, peel runs) and `rest` the
// remaining pattern. Terminal shapes without parameters keep tau itself in
// `rest`.
struct Decomposition {
  Family family;
  ForbiddenSet set;
  std::string shape;
  std::vector<std::pair<std::string, int>> params;
  std::vector<int> blocks;
  Permutation rest;

  // Throws Error(kInvalidArgument) when `name` is absent.
  int Param(std::string_view name) const;
  bool operator==(const Decomposition&) const = default;
};

// Throws Error(kNotInClass) if tau contains a member of t (the message
// names the occurrence), Error(kInvalidArgument) for empty tau and
// Error(kUnreducible) if t is not one of CanonicalSets().
Decomposition Decompose(const Permutation& tau, const ForbiddenSet& t);
Permutation Reassemble(const Decomposition& d);

// Human-readable reason tau is not in S_k(t), e.g. "contains 132 at
// positions 1,3,4"; empty when it is a member.
std::string MembershipWitness(const Permutation& tau, const ForbiddenSet& t);

}  // namespace permx

#endif  // PERMX_CLASSIFY_H_
