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

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "permx/error.h"
#include "permx/oracle.h"

namespace permx {
namespace {

Permutation P(const char* s) { return Permutation::Parse(s); }
ForbiddenSet T(const char* s) { return ForbiddenSet::Parse(s); }

TEST(ClassifyTest, ForbiddenSetParseAndPrint) {
  EXPECT_EQ(T("132,123,132").ToString(), "{123,132}");
  EXPECT_EQ(T("321,132").ToList(), "132,321");
  EXPECT_TRUE(T("123,321,132").ForbidsBothMonotone());
  EXPECT_FALSE(T("123,132").ForbidsBothMonotone());
  EXPECT_THROW(T(""), Error);
  EXPECT_THROW(T("1234"), Error);
  EXPECT_THROW(T("12"), Error);
}

TEST(ClassifyTest, SubsetCounts) {
  const int kBinomial[] = {1, 6, 15, 20, 15, 6, 1};
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(static_cast<int>(SubsetsOfS3(k).size()), kBinomial[k]);
  }
}

TEST(ClassifyTest, FamilyOfCanonicalSets) {
  const auto& sets = CanonicalSets();
  ASSERT_EQ(sets.size(), 13u);
  const Family kExpected[] = {Family::kPair123_132,       Family::kPair132_321,
                              Family::kPair132_213,       Family::kPair132_231,
                              Family::kTriple123_132_213, Family::kTriple123_132_231,
                              Family::kTriple123_231_312, Family::kTriple132_213_231};
  for (int i = 0; i < 8; ++i) EXPECT_EQ(FamilyOf(sets[i]), kExpected[i]);
  for (std::size_t i = 8; i < sets.size(); ++i) EXPECT_EQ(FamilyOf(sets[i]), Family::kQuadOrQuint);
  EXPECT_FALSE(FamilyOf(T("123,213")).has_value());
  EXPECT_EQ(FamilyName(Family::kPair123_132), "PAIR_123_132");
}

TEST(ClassifyTest, Membership) {
  struct {
    const char* t;
    const char* tau;
    bool member;
    const char* witness;
  } kTestCases[]{
      {"123,132", "45213", true, ""},
      {"123,132", "1243", false, "contains 123 at positions 1,2,3"},
      {"132,231", "1423", false, "contains 132 at positions 1,2,3"},
      {"123,132,213", "51432", false, "contains 132 at positions 2,3,4"},
      {"132,213,231", "3412", false, "contains 231 at positions 1,2,3"},
      {"132,321", "45123", true, ""},
  };
  for (const auto& t : kTestCases) {
    EXPECT_EQ(IsMember(P(t.tau), T(t.t)), t.member) << t.tau;
    if (!t.member) {
      EXPECT_EQ(MembershipWitness(P(t.tau), T(t.t)), t.witness);
      try {
        Decompose(P(t.tau), T(t.t));
        ADD_FAILURE() << "expected NOT_IN_CLASS for " << t.tau;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotInClass);
      }
    }
  }
}

TEST(ClassifyTest, DecomposeExamples) {
  struct {
    const char* t;
    const char* tau;
    const char* shape;
    std::vector<std::pair<std::string, int>> params;
    std::vector<int> blocks;
  } kTestCases[]{
      {"123,132", "45213", "block", {{"r", 2}}, {2, 3}},
      {"123,132", "4321", "descending-prefix", {{"m", 4}}, {1, 1, 1, 1}},
      {"132,321", "3412", "rotation", {{"d", 2}, {"k", 4}}, {}},
      {"132,213", "4123", "run", {{"r", 3}, {"length", 1}}, {5, 4, 1}},
      {"132,213", "1234", "identity", {{"k", 4}}, {5, 1}},
      {"132,231", "3214", "ascending-suffix", {{"r", 1}}, {1, 2}},
      {"132,231", "4321", "monotone", {{"k", 4}, {"ascending", 0}}, {3}},
      {"123,132,213", "4231", "base", {{"k", 4}}, {}},
      {"123,132,231", "3214", "max-last", {{"k", 4}}, {}},
      {"123,231,312", "4321", "decreasing", {{"k", 4}}, {}},
      {"132,213,231", "1234", "identity", {{"k", 4}}, {}},
      {"123,132,213,231", "4312", "indicator", {{"k", 4}}, {}},
  };
  for (const auto& t : kTestCases) {
    const Decomposition d = Decompose(P(t.tau), T(t.t));
    EXPECT_EQ(d.shape, t.shape) << t.tau;
    EXPECT_EQ(d.params, t.params) << t.tau;
    EXPECT_EQ(d.blocks, t.blocks) << t.tau;
    EXPECT_EQ(Reassemble(d), P(t.tau));
  }
}

TEST(ClassifyTest, DecomposeRejectsNonCanonicalSets) {
  try {
    Decompose(P("21"), T("123,213,231"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTriple);
  }
  try {
    Decompose(P("21"), T("123,213"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreducible);
  }
}

// Decompose succeeds exactly on members, and Reassemble inverts it.
TEST(ClassifyTest, DecomposeRoundTripIsExhaustive) {
  for (const auto& t : CanonicalSets()) {
    if (t.ForbidsBothMonotone()) continue;
    for (int k = 1; k <= 7; ++k) {
      int members = 0;
      ForEachPermutation(k, [&](const Permutation& tau) {
        if (!IsMember(tau, t)) {
          EXPECT_THROW(Decompose(tau, t), Error);
          return;
        }
        ++members;
        const Decomposition d = Decompose(tau, t);
        ASSERT_EQ(Reassemble(d), tau) << t.ToString() << " " << tau.ToString();
        EXPECT_EQ(d.set, t);
      });
      EXPECT_EQ(members, static_cast<int>(GenerateAvoiders(t, k).size()));
    }
  }
}

TEST(ClassifyTest, ClassSizes) {
  for (int k = 1; k <= 8; ++k) {
    auto count = [k](const char* t) { return GenerateAvoiders(T(t), k).size(); };
    const std::size_t pow2 = std::size_t{1} << (k - 1);
    EXPECT_EQ(count("123,132"), pow2);
    EXPECT_EQ(count("132,213"), pow2);
    EXPECT_EQ(count("132,231"), pow2);
    EXPECT_EQ(count("132,321"), 1u + k * (k - 1) / 2);
    EXPECT_EQ(count("123,132,231"), static_cast<std::size_t>(k));
    EXPECT_EQ(count("123,231,312"), static_cast<std::size_t>(k));
    EXPECT_EQ(count("132,213,231"), static_cast<std::size_t>(k));
  }
  // Fibonacci.
  std::size_t a = 1, b = 2;
  for (int k = 2; k <= 9; ++k, b += a, a = b - a) {
    EXPECT_EQ(GenerateAvoiders(T("123,132,213"), k).size(), b);
  }
}

TEST(ClassifyTest, SymmetryGroup) {
  const auto& all = SymmetryMap::All();
  EXPECT_TRUE(all[0].IsIdentity());
  EXPECT_EQ(all[0].ToString(), "identity");
  std::set<std::vector<Permutation>> images;
  const Permutation probe = P("13425");
  for (const auto& g : all) {
    ForEachPermutation(5, [&](const Permutation& p) {
      EXPECT_EQ(g.Inverted().Apply(g.Apply(p)), p);
    });
    images.insert(std::vector<Permutation>{g.Apply(probe), g.Apply(P("1342"))});
  }
  EXPECT_EQ(images.size(), 8u);
  EXPECT_EQ((SymmetryMap{true, false, true}).ToString(), "inverse,complement");
  EXPECT_EQ((SymmetryMap{false, true, false}).Apply(P("132")), P("231"));
  EXPECT_EQ((SymmetryMap{false, false, true}).Apply(P("132")), P("312"));
  EXPECT_EQ((SymmetryMap{true, false, false}).Apply(P("231")), P("312"));
}

TEST(ClassifyTest, CanonicalizeExample) {
  const Canonical c = Canonicalize(T("213,312"), P("2134"));
  EXPECT_EQ(c.family, Family::kPair132_231);
  EXPECT_EQ(c.set, T("132,231"));
  EXPECT_FALSE(c.map.IsIdentity());
  EXPECT_EQ(c.map.Apply(P("2134")), c.tau);
  // Already canonical: identity.
  EXPECT_TRUE(Canonicalize(T("132,231"), P("2134")).map.IsIdentity());
  try {
    Canonicalize(T("123,321"), P("1"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreducible);
  }
}

// Every pair except {123,321} and every triple without both monotone
// patterns reaches a handled family, and the counts transport.
TEST(ClassifyTest, CanonicalizeTransportsCounts) {
  for (int size : {2, 3}) {
    for (const auto& t : SubsetsOfS3(size)) {
      if (t.ForbidsBothMonotone()) continue;
      for (int k = 1; k <= 4; ++k) {
        for (const auto& tau : GenerateAvoiders(t, k)) {
          const Canonical c = Canonicalize(t, tau);
          ASSERT_EQ(c.map.Apply(t), c.set);
          ASSERT_EQ(c.map.Apply(tau), c.tau);
          ASSERT_EQ(FamilyOf(c.set), c.family);
          ASSERT_EQ(c.map.Inverted().Apply(c.tau), tau);
          ASSERT_EQ(CountSequence(t, tau, 7).counts, CountSequence(c.set, c.tau, 7).counts)
              << t.ToString() << " " << tau.ToString();
        }
      }
    }
  }
}

}  // namespace
}  // namespace permx
