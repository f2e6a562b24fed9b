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

#include "permx/oracle.h"

#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "permx/error.h"

namespace permx {
namespace {

// Index of the pattern of (a, b, c) in the lexicographic list of S_3.
int PatternIndex(int a, int b, int c) {
  if (a < b) {
    if (b < c) return 0;  // 123
    return a < c ? 1 : 3;  // 132 : 231
  }
  if (a < c) return 2;     // 213
  return b < c ? 4 : 5;  // 312 : 321
}

int Mask(const ForbiddenSet& t) {
  static const std::vector<Permutation> kS3 = Enumerate(3);
  int mask = 0;
  for (int i = 0; i < 6; ++i) {
    if (t.Has(kS3[i])) mask |= 1 << i;
  }
  return mask;
}

class Search {
 public:
  Search(int mask, int n, const std::function<void(const Permutation&)>& visit)
      : mask_(mask), n_(n), visit_(visit), word_(n) {}

  void Run(int first) {
    word_[0] = first;
    used_ = 1u << first;
    Extend(1);
  }

 private:
  bool Fits(int len, int v) const {
    for (int j = 1; j < len; ++j) {
      for (int i = 0; i < j; ++i) {
        if (mask_ >> PatternIndex(word_[i], word_[j], v) & 1) return false;
      }
    }
    return true;
  }

  void Extend(int len) {
    if (len == n_) {
      visit_(Permutation(word_));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_ >> v & 1) continue;
      if (!Fits(len, v)) continue;
      word_[len] = v;
      used_ |= 1u << v;
      Extend(len + 1);
      used_ &= ~(1u << v);
    }
  }

  int mask_;
  int n_;
  const std::function<void(const Permutation&)>& visit_;
  std::vector<int> word_;
  unsigned used_ = 0;
};

void CheckGuard(int n, int guard) {
  if (n < 0 || n > guard) {
    throw Error(ErrorCode::kGuardViolation,
                "n=" + std::to_string(n) + " outside 0.." + std::to_string(guard));
  }
}

// Sum of count(pi) over the avoiders of [n], split by first letter.
std::uint64_t CountAvoiders(const ForbiddenSet& t, int n, int workers,
                            const std::function<bool(const Permutation&)>& accept) {
  if (n == 0) return accept(Permutation()) ? 1 : 0;
  const int mask = Mask(t);
  workers = std::max(1, std::min(workers, n));
  std::vector<std::uint64_t> partial(workers, 0);
  auto work = [&](int w) {
    std::uint64_t count = 0;
    std::function<void(const Permutation&)> visit = [&](const Permutation& p) {
      if (accept(p)) ++count;
    };
    Search search(mask, n, visit);
    for (int first = 1 + w; first <= n; first += workers) search.Run(first);
    partial[w] = count;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

using MemoKey = std::tuple<ForbiddenSet, Permutation, CountMode, int>;
std::mutex memo_mu;
std::map<MemoKey, SequenceTable>& Memo() {
  static std::map<MemoKey, SequenceTable> memo;
  return memo;
}

SequenceTable Tabulate(const ForbiddenSet& t, const Permutation& tau, int n_max, CountMode mode,
                       const OracleOptions& options) {
  CheckGuard(n_max, options.guard);
  MemoKey key{t, tau, mode, n_max};
  if (options.use_memo) {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = Memo().find(key);
    if (it != Memo().end()) return it->second;
  }
  SequenceTable table{t, tau, mode, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::function<bool(const Permutation&)> accept;
    if (mode == CountMode::kExactlyOnce) {
      accept = [&](const Permutation& p) { return Occurrences(p, tau, options.cap) == 1; };
    } else {
      accept = [&](const Permutation& p) { return !Contains(p, tau); };
    }
    table.counts.push_back(CountAvoiders(t, n, options.workers, accept));
  }
  if (options.use_memo) {
    std::lock_guard<std::mutex> lock(memo_mu);
    Memo().emplace(key, table);
  }
  return table;
}

}  // namespace

std::string_view CountModeName(CountMode mode) {
  return mode == CountMode::kExactlyOnce ? "EXACTLY_ONCE" : "AVOID_BOTH";
}

void ForEachAvoider(const ForbiddenSet& t, int n,
                    const std::function<void(const Permutation&)>& visit, int guard) {
  CheckGuard(n, guard);
  if (n == 0) {
    visit(Permutation());
    return;
  }
  Search search(Mask(t), n, visit);
  for (int first = 1; first <= n; ++first) search.Run(first);
}

std::vector<Permutation> GenerateAvoiders(const ForbiddenSet& t, int n, int guard) {
  std::vector<Permutation> out;
  ForEachAvoider(t, n, [&](const Permutation& p) { out.push_back(p); }, guard);
  return out;
}

SequenceTable CountSequence(const ForbiddenSet& t, const Permutation& tau, int n_max,
                            const OracleOptions& options) {
  return Tabulate(t, tau, n_max, CountMode::kExactlyOnce, options);
}

SequenceTable AvoidanceSeries(const ForbiddenSet& t, const Permutation& tau, int n_max,
                              const OracleOptions& options) {
  return Tabulate(t, tau, n_max, CountMode::kAvoidBoth, options);
}

std::string SequenceTable::ToBFile() const {
  std::string out = "# avoid " + set.ToString() + ", tau " + tau.ToString() + ", mode " +
                    std::string(CountModeName(mode)) + "\n";
  out += "# c0 = " + std::to_string(counts.empty() ? 0 : counts[0]) + "\n";
  for (std::size_t n = 1; n < counts.size(); ++n) {
    out += std::to_string(n) + " " + std::to_string(counts[n]) + "\n";
  }
  return out;
}

std::string SequenceTable::ToJson() const {
  nlohmann::ordered_json j;
  j["T"] = nlohmann::json::array();
  for (const auto& p : set.patterns()) j["T"].push_back(p.ToString());
  j["tau"] = tau.ToString();
  j["mode"] = CountModeName(mode);
  j["counts"] = counts;
  return j.dump();
}

SequenceTable SequenceTable::FromJson(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<Permutation> patterns;
    for (const auto& p : j.at("T")) patterns.push_back(Permutation::Parse(p.get<std::string>()));
    SequenceTable table;
    table.set = ForbiddenSet(std::move(patterns));
    table.tau = Permutation::Parse(j.at("tau").get<std::string>());
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "EXACTLY_ONCE") {
      table.mode = CountMode::kExactlyOnce;
    } else if (mode == "AVOID_BOTH") {
      table.mode = CountMode::kAvoidBoth;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown mode " + mode);
    }
    table.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad sequence table: ") + e.what());
  }
}

}  // namespace permx
