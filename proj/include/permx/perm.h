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

#ifndef PERMX_PERM_H_
#define PERMX_PERM_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permx/error.h"

namespace permx {

// A permutation of {1..n} in one-line notation. The empty permutation is
// the unique permutation of length 0.
class Permutation {
 public:
  Permutation() = default;

  // Throws Error(kInvalidArgument) unless `values` is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  // Accepts a compact digit string ("4231") or a comma-separated list
  // ("10,9,1,2,..."). The empty string and "()" parse to the empty
  // permutation.
  static Permutation Parse(std::string_view text);
  static Permutation Identity(int n);
  static Permutation Decreasing(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  // 0-based position, 1-based value.
  int operator[](int i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  // Digit string for n <= 9, comma-separated otherwise, "()" when empty.
  std::string ToString() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// A finite sequence of distinct positive integers, e.g. a sub-word of a
// permutation before flattening.
class Word {
 public:
  // Throws Error(kInvalidArgument) on duplicate or non-positive entries.
  explicit Word(std::vector<int> entries);
  std::span<const int> entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

 private:
  std::vector<int> entries_;
};

// The unique permutation order-isomorphic to `w`.
Permutation Standardize(const Word& w);
// Standardizes the subsequence of `p` at the given positions.
Permutation Pattern(const Permutation& p, std::span<const int> positions);

// Number of subsequences of `pi` order-isomorphic to `tau`. With a cap the
// search stops once `cap` occurrences are found and returns `cap`.
std::uint64_t Occurrences(const Permutation& pi, const Permutation& tau,
                          std::optional<std::uint64_t> cap = std::nullopt);
bool ContainsExactlyOnce(const Permutation& pi, const Permutation& tau);
bool Contains(const Permutation& pi, const Permutation& tau);
bool Avoids(const Permutation& pi, std::span<const Permutation> patterns);

// Positions (0-based) of the first occurrence of `tau` in `pi`, if any.
std::optional<std::vector<int>> FindOccurrence(const Permutation& pi,
                                               const Permutation& tau);

Permutation Reverse(const Permutation& p);
Permutation Complement(const Permutation& p);
Permutation Inverse(const Permutation& p);

// a ⊖ b: `a` shifted above `b`, placed first.
Permutation SkewSum(const Permutation& a, const Permutation& b);
// a ⊕ b: `b` shifted above `a`, placed last.
Permutation DirectSum(const Permutation& a, const Permutation& b);

inline constexpr int kDefaultGuard = 12;

// Visits all n! permutations of [n] in lexicographic order. Throws
// Error(kGuardViolation) when n > guard.
void ForEachPermutation(int n, const std::function<void(const Permutation&)>& visit,
                        int guard = kDefaultGuard);
std::vector<Permutation> Enumerate(int n, int guard = kDefaultGuard);

// Parses "123,132" style lists; duplicates are kept.
std::vector<Permutation> ParsePatternList(std::string_view text);

}  // namespace permx

#endif  // PERMX_PERM_H_
