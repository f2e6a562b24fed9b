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

#include "permx/classify.h"

#include <algorithm>
#include <map>

#include "permx/error.h"

namespace permx {
namespace {

Permutation Slice(const Permutation& p, int begin, int end) {
  std::vector<int> v(p.values().begin() + begin, p.values().begin() + end);
  return Standardize(Word(std::move(v)));
}

// b_c = (c-1, c-2, ..., 1, c)
Permutation Block(int c) {
  std::vector<int> v;
  for (int i = c - 1; i >= 1; --i) v.push_back(i);
  v.push_back(c);
  return Permutation(std::move(v));
}

void RequireMember(const Permutation& tau, const ForbiddenSet& t) {
  if (tau.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "pattern must be nonempty");
  }
  std::string why = MembershipWitness(tau, t);
  if (!why.empty()) {
    throw Error(ErrorCode::kNotInClass, tau.ToString() + " " + why);
  }
}

Decomposition Make(Family f, const ForbiddenSet& t, std::string shape,
                   std::vector<std::pair<std::string, int>> params,
                   std::vector<int> blocks = {}, Permutation rest = {}) {
  return Decomposition{f, t, std::move(shape), std::move(params), std::move(blocks),
                       std::move(rest)};
}

Decomposition DecomposeA(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  std::vector<int> blocks;
  for (int start = 0; start < k;) {
    int top = start;
    for (int i = start; i < k; ++i) {
      if (tau[i] > tau[top]) top = i;
    }
    blocks.push_back(top - start + 1);
    start = top + 1;
  }
  if (blocks[0] >= 2) {
    return Make(Family::kPair123_132, t, "block", {{"r", blocks[0]}}, blocks,
                Slice(tau, blocks[0], k));
  }
  int m = 0;
  while (m < static_cast<int>(blocks.size()) && blocks[m] == 1) ++m;
  return Make(Family::kPair123_132, t, "descending-prefix", {{"m", m}}, blocks,
              Slice(tau, m, k));
}

Decomposition DecomposeB(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  if (tau == Permutation::Identity(k)) {
    return Make(Family::kPair132_321, t, "identity", {{"k", k}});
  }
  const int d = tau[0] - 1;
  int i = 0;
  while (i + 1 < k && tau[i + 1] == tau[i] + 1) ++i;
  const int m = tau[i] + 1;
  if (m == k + 1) return Make(Family::kPair132_321, t, "rotation", {{"d", d}, {"k", k}});
  return Make(Family::kPair132_321, t, "split-rotation", {{"d", d}, {"m", m}, {"k", k}});
}

Decomposition DecomposeC(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  std::vector<int> boundaries = {k + 1};
  int first_run = 0;
  for (int i = 0; i < k; ++i) {
    if (i == 0 || tau[i] != tau[i - 1] + 1) boundaries.push_back(tau[i]);
    if (boundaries.size() == 2) first_run = i + 1;
  }
  if (boundaries.size() == 2) {
    return Make(Family::kPair132_213, t, "identity", {{"k", k}}, boundaries);
  }
  return Make(Family::kPair132_213, t, "run", {{"r", k - first_run}, {"length", first_run}},
              boundaries, Slice(tau, first_run, k));
}

// 'L' when the current maximum is leftmost, 'R' when rightmost; the final
// single entry contributes no letter.
std::string PeelWord(const Permutation& tau) {
  std::string word;
  int lo = 0, hi = tau.size() - 1;
  for (int v = tau.size(); v > 1; --v) {
    if (tau[lo] == v) {
      word.push_back('L');
      ++lo;
    } else {
      word.push_back('R');
      --hi;
    }
  }
  return word;
}

Decomposition DecomposeD(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  const std::string word = PeelWord(tau);
  std::vector<int> runs;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] != word[i - 1]) runs.push_back(0);
    ++runs.back();
  }
  if (runs.size() <= 1) {
    const bool ascending = !word.empty() && word[0] == 'R';
    return Make(Family::kPair132_231, t, "monotone", {{"k", k}, {"ascending", ascending}},
                runs);
  }
  const int r = runs[0];
  if (word[0] == 'L') {
    return Make(Family::kPair132_231, t, "descending-prefix", {{"r", r}}, runs,
                Slice(tau, r, k - 1));
  }
  return Make(Family::kPair132_231, t, "ascending-suffix", {{"r", r}}, runs,
              Slice(tau, 1, k - r));
}

Decomposition DecomposeE(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  if (k <= 3 || tau == Permutation{4, 2, 3, 1}) {
    return Make(Family::kTriple123_132_213, t, "base", {{"k", k}}, {}, tau);
  }
  if (tau[0] == k - 1) {
    return Make(Family::kTriple123_132_213, t, "pair-prefix", {{"k", k}}, {},
                Slice(tau, 2, k));
  }
  return Make(Family::kTriple123_132_213, t, "max-prefix", {{"k", k}}, {}, Slice(tau, 1, k));
}

Decomposition DecomposeF(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  if (tau == Permutation::Decreasing(k)) {
    return Make(Family::kTriple123_132_231, t, "decreasing", {{"k", k}});
  }
  if (tau[k - 1] == k) return Make(Family::kTriple123_132_231, t, "max-last", {{"k", k}});
  int r = 0;
  while (tau[r] == k - r) ++r;
  return Make(Family::kTriple123_132_231, t, "general", {{"r", r}, {"k", k}});
}

Decomposition DecomposeG(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  if (tau[0] == k) return Make(Family::kTriple123_231_312, t, "decreasing", {{"k", k}});
  return Make(Family::kTriple123_231_312, t, "general", {{"r", tau[0]}, {"k", k}});
}

Decomposition DecomposeH(const Permutation& tau, const ForbiddenSet& t) {
  const int k = tau.size();
  if (tau[0] == 1) return Make(Family::kTriple132_213_231, t, "identity", {{"k", k}});
  int p = 0;
  while (tau[p] != 1) ++p;
  return Make(Family::kTriple132_213_231, t, "general", {{"r", k - p}, {"k", k}});
}

Permutation Concat(std::vector<int> head, std::span<const int> tail, std::vector<int> last = {}) {
  head.insert(head.end(), tail.begin(), tail.end());
  head.insert(head.end(), last.begin(), last.end());
  return Permutation(std::move(head));
}

std::vector<int> Range(int from, int to) {  // inclusive, either direction
  std::vector<int> v;
  if (from <= to) {
    for (int i = from; i <= to; ++i) v.push_back(i);
  } else {
    for (int i = from; i >= to; --i) v.push_back(i);
  }
  return v;
}

}  // namespace

ForbiddenSet::ForbiddenSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "forbidden set must be nonempty");
  }
  for (const auto& p : patterns_) {
    if (p.size() != 3) {
      throw Error(ErrorCode::kInvalidArgument,
                  "forbidden patterns must have length 3, got " + p.ToString());
    }
  }
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

ForbiddenSet ForbiddenSet::Parse(std::string_view text) {
  return ForbiddenSet(ParsePatternList(text));
}

bool ForbiddenSet::Has(const Permutation& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

bool ForbiddenSet::ForbidsBothMonotone() const {
  return Has(Permutation{1, 2, 3}) && Has(Permutation{3, 2, 1});
}

std::string ForbiddenSet::ToString() const { return "{" + ToList() + "}"; }

std::string ForbiddenSet::ToList() const {
  std::string out;
  for (const auto& p : patterns_) {
    if (!out.empty()) out += ",";
    out += p.ToString();
  }
  return out;
}

std::vector<ForbiddenSet> SubsetsOfS3(int size) {
  const std::vector<Permutation> all = Enumerate(3);
  std::vector<ForbiddenSet> out;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<Permutation> members;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1 << i)) members.push_back(all[i]);
    }
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view FamilyName(Family f) {
  switch (f) {
    case Family::kPair123_132: return "PAIR_123_132";
    case Family::kPair132_321: return "PAIR_132_321";
    case Family::kPair132_213: return "PAIR_132_213";
    case Family::kPair132_231: return "PAIR_132_231";
    case Family::kTriple123_132_213: return "TRIPLE_123_132_213";
    case Family::kTriple123_132_231: return "TRIPLE_123_132_231";
    case Family::kTriple123_231_312: return "TRIPLE_123_231_312";
    case Family::kTriple132_213_231: return "TRIPLE_132_213_231";
    case Family::kQuadOrQuint: return "QUAD_OR_QUINT";
  }
  return "?";
}

std::string_view FamilyLetter(Family f) {
  static constexpr std::string_view kLetters[] = {"A", "B", "C", "D", "E", "F", "G", "H", "Q"};
  return kLetters[static_cast<int>(f)];
}

const std::vector<ForbiddenSet>& CanonicalSets() {
  static const std::vector<ForbiddenSet> kSets = [] {
    std::vector<ForbiddenSet> v;
    for (const char* s : {"123,132", "132,321", "132,213", "132,231", "123,132,213",
                          "123,132,231", "123,231,312", "132,213,231", "123,132,213,231",
                          "123,132,231,312", "132,213,231,312", "132,213,231,312,321",
                          "123,132,213,231,312,321"}) {
      v.push_back(ForbiddenSet::Parse(s));
    }
    return v;
  }();
  return kSets;
}

std::optional<Family> FamilyOf(const ForbiddenSet& t) {
  const auto& sets = CanonicalSets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == t) return static_cast<Family>(std::min<std::size_t>(i, 8));
  }
  return std::nullopt;
}

bool IsMember(const Permutation& tau, const ForbiddenSet& t) {
  return Avoids(tau, t.patterns());
}

std::string MembershipWitness(const Permutation& tau, const ForbiddenSet& t) {
  for (const auto& p : t.patterns()) {
    if (auto pos = FindOccurrence(tau, p)) {
      std::string out = "contains " + p.ToString() + " at positions ";
      for (std::size_t i = 0; i < pos->size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string((*pos)[i] + 1);
      }
      return out;
    }
  }
  return "";
}

Permutation SymmetryMap::Apply(const Permutation& p) const {
  Permutation out = p;
  if (inverse) out = Inverse(out);
  if (reverse) out = Reverse(out);
  if (complement) out = Complement(out);
  return out;
}

ForbiddenSet SymmetryMap::Apply(const ForbiddenSet& t) const {
  std::vector<Permutation> out;
  for (const auto& p : t.patterns()) out.push_back(Apply(p));
  return ForbiddenSet(std::move(out));
}

SymmetryMap SymmetryMap::Inverted() const {
  // Reverse and complement commute; moving an inverse past them swaps them.
  if (!inverse) return *this;
  return SymmetryMap{true, complement, reverse};
}

std::vector<std::string> SymmetryMap::Steps() const {
  std::vector<std::string> out;
  if (inverse) out.push_back("inverse");
  if (reverse) out.push_back("reverse");
  if (complement) out.push_back("complement");
  return out;
}

std::string SymmetryMap::ToString() const {
  if (IsIdentity()) return "identity";
  std::string out;
  for (const auto& s : Steps()) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

const std::array<SymmetryMap, 8>& SymmetryMap::All() {
  static const std::array<SymmetryMap, 8> kAll = [] {
    std::array<SymmetryMap, 8> a;
    for (int i = 0; i < 8; ++i) a[i] = SymmetryMap{(i & 4) != 0, (i & 1) != 0, (i & 2) != 0};
    return a;
  }();
  return kAll;
}

Canonical Canonicalize(const ForbiddenSet& t, const Permutation& tau) {
  if (auto f = FamilyOf(t)) return Canonical{t, tau, SymmetryMap{}, *f};
  std::optional<Canonical> best;
  for (const auto& g : SymmetryMap::All()) {
    ForbiddenSet image = g.Apply(t);
    auto f = FamilyOf(image);
    if (!f) continue;
    Permutation tau_image = g.Apply(tau);
    if (!best || tau_image < best->tau) best = Canonical{image, tau_image, g, *f};
  }
  if (!best) {
    throw Error(ErrorCode::kUnreducible,
                "no symmetry maps " + t.ToString() + " to a handled family");
  }
  return *best;
}

int Decomposition::Param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::kInvalidArgument, "decomposition has no parameter " + std::string(name));
}

Decomposition Decompose(const Permutation& tau, const ForbiddenSet& t) {
  auto family = FamilyOf(t);
  if (!family) {
    throw Error(t.size() == 3 ? ErrorCode::kUnknownTriple : ErrorCode::kUnreducible,
                t.ToString() + " is not a canonical forbidden set");
  }
  RequireMember(tau, t);
  switch (*family) {
    case Family::kPair123_132: return DecomposeA(tau, t);
    case Family::kPair132_321: return DecomposeB(tau, t);
    case Family::kPair132_213: return DecomposeC(tau, t);
    case Family::kPair132_231: return DecomposeD(tau, t);
    case Family::kTriple123_132_213: return DecomposeE(tau, t);
    case Family::kTriple123_132_231: return DecomposeF(tau, t);
    case Family::kTriple123_231_312: return DecomposeG(tau, t);
    case Family::kTriple132_213_231: return DecomposeH(tau, t);
    case Family::kQuadOrQuint:
      return Make(Family::kQuadOrQuint, t, "indicator", {{"k", tau.size()}}, {}, tau);
  }
  throw Error(ErrorCode::kUnreducible, "unhandled family");
}

Permutation Reassemble(const Decomposition& d) {
  const std::string& s = d.shape;
  switch (d.family) {
    case Family::kPair123_132:
      if (s == "block") return SkewSum(Block(d.Param("r")), d.rest);
      return SkewSum(Permutation::Decreasing(d.Param("m")), d.rest);
    case Family::kPair132_321: {
      if (s == "identity") return Permutation::Identity(d.Param("k"));
      const int dd = d.Param("d"), k = d.Param("k");
      const int m = s == "rotation" ? k + 1 : d.Param("m");
      std::vector<int> v = Range(dd + 1, m - 1);
      for (int x : Range(1, dd)) v.push_back(x);
      if (m <= k) {
        for (int x : Range(m, k)) v.push_back(x);
      }
      return Permutation(std::move(v));
    }
    case Family::kPair132_213: {
      if (s == "identity") return Permutation::Identity(d.Param("k"));
      const int r = d.Param("r"), len = d.Param("length");
      return Concat(Range(r + 1, r + len), d.rest.values());
    }
    case Family::kPair132_231: {
      if (s == "monotone") {
        const int k = d.Param("k");
        return d.Param("ascending") ? Permutation::Identity(k) : Permutation::Decreasing(k);
      }
      const int r = d.Param("r");
      const int k = d.rest.size() + r + 1;
      if (s == "descending-prefix") return Concat(Range(k, k - r + 1), d.rest.values(), {k - r});
      return Concat({k - r}, d.rest.values(), Range(k - r + 1, k));
    }
    case Family::kTriple123_132_213: {
      if (s == "base") return d.rest;
      const int k = d.Param("k");
      if (s == "pair-prefix") return Concat({k - 1, k}, d.rest.values());
      return Concat({k}, d.rest.values());
    }
    case Family::kTriple123_132_231: {
      const int k = d.Param("k");
      if (s == "decreasing") return Permutation::Decreasing(k);
      if (s == "max-last") return Concat(Range(k - 1, 1), {}, {k});
      const int r = d.Param("r");
      std::vector<int> v;
      if (r > 0) v = Range(k, k - r + 1);
      if (k - r - 1 >= 1) {
        for (int x : Range(k - r - 1, 1)) v.push_back(x);
      }
      v.push_back(k - r);
      return Permutation(std::move(v));
    }
    case Family::kTriple123_231_312: {
      const int k = d.Param("k");
      if (s == "decreasing") return Permutation::Decreasing(k);
      const int r = d.Param("r");
      return Concat(Range(r, 1), {}, Range(k, r + 1));
    }
    case Family::kTriple132_213_231: {
      const int k = d.Param("k");
      if (s == "identity") return Permutation::Identity(k);
      const int r = d.Param("r");
      return Concat(Range(k, r + 1), {}, Range(1, r));
    }
    case Family::kQuadOrQuint:
      return d.rest;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "shape " + s + " of " + std::string(FamilyName(d.family)) +
                  " does not determine the pattern");
}

}  // namespace permx
