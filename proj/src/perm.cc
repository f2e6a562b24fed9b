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

#include "permx/perm.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permx {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kNotInClass:
      return "NOT_IN_CLASS";
    case ErrorCode::kUnreducible:
      return "UNREDUCIBLE";
    case ErrorCode::kUnsupported:
      return "UNSUPPORTED";
    case ErrorCode::kUnknownTriple:
      return "UNKNOWN_TRIPLE";
    case ErrorCode::kGuardViolation:
      return "GUARD_VIOLATION";
  }
  return "UNKNOWN";
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a permutation of 1..n: value " + std::to_string(v));
    }
    seen[v] = true;
  }
}

Permutation Permutation::Parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s == "()" || s == "-") return Permutation();
  std::vector<int> values;
  if (s.find(',') != std::string::npos) {
    std::stringstream in(s);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (token.empty() ||
          !std::all_of(token.begin(), token.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bad permutation entry '" + token + "' in '" + s + "'");
      }
      values.push_back(std::stoi(token));
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kInvalidArgument, "bad permutation '" + s + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::Decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

std::string Permutation::ToString() const {
  if (values_.empty()) return "()";
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "word has duplicate entries");
  }
  if (!sorted.empty() && sorted.front() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "word entries must be positive");
  }
}

Permutation Standardize(const Word& w) {
  auto e = w.entries();
  std::vector<int> order(e.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return e[a] < e[b]; });
  std::vector<int> out(e.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

Permutation Pattern(const Permutation& p, std::span<const int> positions) {
  std::vector<int> w;
  w.reserve(positions.size());
  for (int i : positions) w.push_back(p[i]);
  return Standardize(Word(std::move(w)));
}

namespace {

// For each index j of tau, the earlier index holding the nearest smaller
// value and the nearest larger value (-1 if none). A candidate for slot j
// only has to be compared against those two.
struct Neighbors {
  std::vector<int> below;
  std::vector<int> above;
};

Neighbors ComputeNeighbors(const Permutation& tau) {
  const int k = tau.size();
  Neighbors nb{std::vector<int>(k, -1), std::vector<int>(k, -1)};
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (tau[i] < tau[j] && (nb.below[j] < 0 || tau[i] > tau[nb.below[j]])) {
        nb.below[j] = i;
      }
      if (tau[i] > tau[j] && (nb.above[j] < 0 || tau[i] < tau[nb.above[j]])) {
        nb.above[j] = i;
      }
    }
  }
  return nb;
}

class Matcher {
 public:
  Matcher(const Permutation& pi, const Permutation& tau, std::uint64_t cap)
      : pi_(pi), tau_(tau), nb_(ComputeNeighbors(tau)), cap_(cap),
        chosen_(tau.size()) {}

  std::uint64_t Count() {
    Extend(0, 0);
    return count_;
  }

  std::optional<std::vector<int>> First() {
    cap_ = 1;
    Extend(0, 0);
    if (count_ == 0) return std::nullopt;
    return first_;
  }

 private:
  void Extend(int j, int start) {
    const int k = tau_.size();
    const int n = pi_.size();
    if (j == k) {
      if (count_ == 0) first_ = chosen_;
      ++count_;
      return;
    }
    const int lo = nb_.below[j];
    const int hi = nb_.above[j];
    for (int i = start; i <= n - (k - j) && count_ < cap_; ++i) {
      if (lo >= 0 && pi_[i] < pi_[chosen_[lo]]) continue;
      if (hi >= 0 && pi_[i] > pi_[chosen_[hi]]) continue;
      chosen_[j] = i;
      Extend(j + 1, i + 1);
    }
  }

  const Permutation& pi_;
  const Permutation& tau_;
  Neighbors nb_;
  std::uint64_t cap_;
  std::vector<int> chosen_;
  std::vector<int> first_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t Occurrences(const Permutation& pi, const Permutation& tau,
                          std::optional<std::uint64_t> cap) {
  if (tau.size() > pi.size()) return 0;
  if (cap && *cap == 0) return 0;
  Matcher m(pi, tau, cap.value_or(UINT64_MAX));
  return m.Count();
}

bool ContainsExactlyOnce(const Permutation& pi, const Permutation& tau) {
  return Occurrences(pi, tau, 2) == 1;
}

bool Contains(const Permutation& pi, const Permutation& tau) {
  return Occurrences(pi, tau, 1) == 1;
}

bool Avoids(const Permutation& pi, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& t) { return Contains(pi, t); });
}

std::optional<std::vector<int>> FindOccurrence(const Permutation& pi,
                                               const Permutation& tau) {
  if (tau.size() > pi.size()) return std::nullopt;
  Matcher m(pi, tau, 1);
  return m.First();
}

Permutation Reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation Complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n + 1 - p[i];
  return Permutation(std::move(v));
}

Permutation Inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[p[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

Permutation SkewSum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  for (int x : a.values()) v.push_back(x + b.size());
  for (int x : b.values()) v.push_back(x);
  return Permutation(std::move(v));
}

Permutation DirectSum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  for (int x : a.values()) v.push_back(x);
  for (int x : b.values()) v.push_back(x + a.size());
  return Permutation(std::move(v));
}

void ForEachPermutation(int n, const std::function<void(const Permutation&)>& visit,
                        int guard) {
  if (n < 0 || n > guard) {
    throw Error(ErrorCode::kGuardViolation,
                "n=" + std::to_string(n) + " outside enumeration guard " +
                    std::to_string(guard));
  }
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> Enumerate(int n, int guard) {
  std::vector<Permutation> out;
  ForEachPermutation(n, [&](const Permutation& p) { out.push_back(p); }, guard);
  return out;
}

std::vector<Permutation> ParsePatternList(std::string_view text) {
  std::vector<Permutation> out;
  std::string s(text);
  std::stringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(Permutation::Parse(token));
  }
  return out;
}

}  // namespace permx
