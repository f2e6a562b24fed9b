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

#include "permx/transfer.h"

#include <thread>

#include "gtest/gtest.h"
#include "permx/oracle.h"

namespace permx {
namespace {

constexpr int kMaxN = 9;

struct ModelCase {
  Model model;
  const char* set;
};

const ModelCase kModels[] = {
    {Model::kBlocks, "123,132"},
    {Model::kBlocksUpTo2, "123,132,213"},
    {Model::kRuns, "132,213"},
    {Model::kEnds, "132,231"},
};

std::vector<Permutation> AllUpTo(int k) {
  std::vector<Permutation> out;
  for (int j = 1; j <= k; ++j) {
    for (auto& p : Enumerate(j)) out.push_back(p);
  }
  return out;
}

TruncatedSeries Brute(const std::vector<std::vector<Permutation>>& members,
                      const std::optional<Permutation>& target,
                      const std::vector<Permutation>& avoid) {
  TruncatedSeries s(kMaxN);
  for (int n = 0; n <= kMaxN; ++n) {
    for (const auto& pi : members[n]) {
      if (!Avoids(pi, avoid)) continue;
      if (target && !ContainsExactlyOnce(pi, *target)) continue;
      s[n] += 1;
    }
  }
  return s;
}

TEST(TransferTest, ModelFor) {
  EXPECT_EQ(ModelFor(Family::kPair123_132), Model::kBlocks);
  EXPECT_EQ(ModelFor(Family::kTriple123_132_213), Model::kBlocksUpTo2);
  EXPECT_EQ(ModelFor(Family::kPair132_213), Model::kRuns);
  EXPECT_EQ(ModelFor(Family::kPair132_231), Model::kEnds);
  EXPECT_FALSE(ModelFor(Family::kPair132_321).has_value());
}

TEST(TransferTest, AvoidAgreesWithBruteForce) {
  for (const auto& m : kModels) {
    TransferSolver& solver = SolverFor(m.model);
    EXPECT_EQ(solver.set(), ForbiddenSet::Parse(m.set));
    std::vector<std::vector<Permutation>> members;
    for (int n = 0; n <= kMaxN; ++n) members.push_back(GenerateAvoiders(solver.set(), n));
    EXPECT_EQ(solver.Avoid({}).Expand(kMaxN), Brute(members, std::nullopt, {}));
    for (const auto& a : AllUpTo(4)) {
      for (const auto& b : AllUpTo(3)) {
        ASSERT_EQ(solver.Avoid({a, b}).Expand(kMaxN), Brute(members, std::nullopt, {a, b}))
            << m.set << " avoid " << a.ToString() << "," << b.ToString();
      }
    }
  }
}

TEST(TransferTest, OnceAgreesWithBruteForce) {
  for (const auto& m : kModels) {
    TransferSolver& solver = SolverFor(m.model);
    std::vector<std::vector<Permutation>> members;
    for (int n = 0; n <= kMaxN; ++n) members.push_back(GenerateAvoiders(solver.set(), n));
    for (const auto& target : AllUpTo(4)) {
      ASSERT_EQ(solver.Once(target, {}).Expand(kMaxN), Brute(members, target, {}))
          << m.set << " once " << target.ToString();
      for (const auto& a : AllUpTo(4)) {
        ASSERT_EQ(solver.Once(target, {a}).Expand(kMaxN), Brute(members, target, {a}))
            << m.set << " once " << target.ToString() << " avoid " << a.ToString();
      }
    }
  }
}

TEST(TransferTest, NormalizeProducesAntichain) {
  for (const auto& m : kModels) {
    TransferSolver& solver = SolverFor(m.model);
    for (const auto& target : AllUpTo(3)) {
      const auto s = solver.Normalize(target, AllUpTo(3));
      for (const auto& a : s.avoid) {
        EXPECT_TRUE(IsMember(a, solver.set())) << a.ToString();
        for (const auto& b : s.avoid) {
          if (a != b) EXPECT_FALSE(Contains(a, b));
        }
      }
    }
  }
  const TransferSolver& runs = SolverFor(Model::kRuns);
  EXPECT_TRUE(runs.Normalize(Permutation{1, 2}, {Permutation{1, 3, 2}}).avoid.empty());
  EXPECT_EQ(runs.Normalize(Permutation{1, 2}, {Permutation{3, 1, 2}}).ToString(),
            "once(12; avoid 312)");
  EXPECT_EQ(runs.Normalize(std::nullopt, {Permutation{3, 2, 1}}).ToString(), "avoid(321)");
}

TEST(TransferTest, ConcurrentUseIsConsistent) {
  const Permutation target{2, 1, 3, 4};
  const std::vector<Permutation> avoid{Permutation{4, 3, 2, 1}};
  const RationalGF expected = TransferSolver(Model::kBlocks).Once(target, avoid);
  std::vector<RationalGF> results(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] { results[i] = SolverFor(Model::kBlocks).Once(target, avoid); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, expected);
}

}  // namespace
}  // namespace permx
