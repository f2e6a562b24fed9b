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

#include "permx/cli/commands.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "permx/cli/report.h"

namespace permx::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunArgs(std::vector<const char*> args) {
  args.insert(args.begin(), "permx");
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliTest, ExitCodes) {
  struct {
    std::vector<const char*> args;
    int code;
  } kTestCases[]{
      {{"gf", "--avoid", "132,321", "--contain", "123"}, kExitOk},
      {{"gf", "--avoid", "123,132", "--contain", "123"}, kExitOk},
      {{"gf", "--avoid", "12x", "--contain", "1"}, kExitUsage},
      {{"gf", "--avoid", "123", "--contain", "12"}, kExitUsage},
      {{"gf", "--avoid", "123,132"}, kExitUsage},
      {{"seq", "--avoid", "123,132", "--contain", "12", "--n", "14", "--source", "oracle"},
       kExitUsage},
      {{"seq", "--avoid", "123,132", "--contain", "12", "--n", "5..3"}, kExitUsage},
      {{"classify", "--avoid", "132,231", "--contain", "1423"}, kExitNotInClass},
      {{"classify", "--avoid", "132,231", "--contain", "2134"}, kExitOk},
      {{"verify", "--avoid", "pairs", "--k-max", "3", "--n", "7"}, kExitOk},
      {{"wilf", "--k", "2", "--n", "6"}, kExitOk},
      {{"gf", "--avoid", "123,132", "--contain", "21", "--format", "csv"}, kExitUsage},
      {{"frobnicate"}, kExitUsage},
      {{}, kExitUsage},
  };
  for (const auto& t : kTestCases) {
    const Outcome o = RunArgs(t.args);
    EXPECT_EQ(o.code, t.code) << (t.args.empty() ? "" : t.args[0]) << ": " << o.err;
  }
}

TEST(CliTest, GfText) {
  const Outcome closed = RunArgs({"gf", "--avoid", "132,321", "--contain", "123"});
  EXPECT_EQ(closed.out,
            "x^3 + 4x^4 + 2x^5\n"
            "coefficients n=0..12: 0, 0, 0, 1, 4, 2, 0, 0, 0, 0, 0, 0, 0\n");
  const Outcome zero = RunArgs({"gf", "--avoid", "123,132", "--contain", "123", "--order", "4"});
  EXPECT_EQ(zero.out,
            "0\n"
            "coefficients n=0..4: 0, 0, 0, 0, 0\n"
            "note: tau contains a forbidden pattern (contains 123 at positions 1,2,3)\n");
  const Outcome c321 = RunArgs({"gf", "--avoid", "132,213", "--contain", "321"});
  EXPECT_EQ(c321.out.substr(0, c321.out.find('\n')), "x^3");
}

TEST(CliTest, SeqFormats) {
  const Outcome both =
      RunArgs({"seq", "--avoid", "123,231,312", "--contain", "321", "--n", "3..6"});
  EXPECT_EQ(both.out,
            "# avoid {123,231,312}, tau 321, source both\n"
            "n\tformula\toracle\tmatch\n"
            "3\t1\t1\tyes\n4\t2\t2\tyes\n5\t2\t2\tyes\n6\t0\t0\tyes\n");
  const Outcome csv = RunArgs(
      {"seq", "--avoid", "132,213,231", "--contain", "123", "--n", "3..6", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,formula,oracle,match\n3,1,1,true\n4,1,1,true\n5,1,1,true\n6,1,1,true\n");
  const Outcome bfile = RunArgs({"seq", "--avoid", "123,132,213,231", "--contain", "321", "--n",
                                 "4", "--format", "bfile"});
  EXPECT_EQ(bfile.out,
            "# avoid {123,132,213,231}, tau 321, mode EXACTLY_ONCE\n"
            "# c0 = 0\n"
            "1 0\n2 0\n3 1\n4 0\n");
  const Outcome json = RunArgs({"seq", "--avoid", "132,321", "--contain", "123", "--n", "2..5",
                                "--source", "formula", "--format", "json"});
  ASSERT_EQ(json.code, kExitOk);
  const SeqReport r = ParseJson<SeqReport>(json.out);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.source, "formula");
  EXPECT_TRUE(r.rows[1].has_formula);
  EXPECT_FALSE(r.rows[1].has_oracle);
  EXPECT_EQ(r.rows[2].formula, 4u);
}

TEST(CliTest, ClassifyText) {
  const Outcome member = RunArgs({"classify", "--avoid", "123,132,213", "--contain", "4231"});
  EXPECT_EQ(member.out,
            "tau 4231 in S(123,132,213): yes\n"
            "canonical {123,132,213} tau 4231 via identity\n"
            "family TRIPLE_123_132_213, shape base k=4 rest 4231\n"
            "  1. E/base [triple-123-132-213/base] factor x^4 -> ()\n"
            "gf x^4\n");
  const Outcome outsider = RunArgs({"classify", "--avoid", "132,231", "--contain", "1423"});
  EXPECT_EQ(outsider.out, "tau 1423 in S(132,231): no, contains 132 at positions 1,2,3\n");
  const Outcome identity = RunArgs({"classify", "--avoid", "132,231", "--contain", "1234"});
  EXPECT_NE(identity.out.find("gf x^4/(1-x)^3\n"), std::string::npos);
}

TEST(CliTest, GoldenGfJson) {
  const Outcome o =
      RunArgs({"gf", "--avoid", "132,321", "--contain", "123", "--format", "json"});
  EXPECT_EQ(o.out, ReadFile(PERMX_GOLDEN_DIR "/gf_132_321_123.json"));
}

TEST(CliTest, JsonRoundTrips) {
  const ForbiddenSet a = ForbiddenSet::Parse("123,132");
  const GfReport gf = BuildGfReport(a, Permutation::Parse("45213"), 12);
  EXPECT_EQ(ParseJson<GfReport>(RenderJson(gf)), gf);
  const GfReport series = BuildGfReport(ForbiddenSet::Parse("123,321"), Permutation::Parse("21"), 8);
  EXPECT_FALSE(series.closed);
  EXPECT_EQ(ParseJson<GfReport>(RenderJson(series)), series);

  const SeqReport seq = BuildSeqReport(a, Permutation::Parse("213"), 0, 9, true, false, 12);
  EXPECT_EQ(ParseJson<SeqReport>(RenderJson(seq)), seq);
  const SeqReport both = BuildSeqReport(a, Permutation::Parse("213"), 2, 9, true, true, 12);
  EXPECT_EQ(ParseJson<SeqReport>(RenderJson(both)), both);

  VerifyReport verify = BuildVerifyReport({a}, 3, 7, 12, 1);
  EXPECT_TRUE(verify.mismatches.empty());
  verify.mismatches.push_back({{"123", "132"}, "213", 5, 9, 10, gf.derivation});
  EXPECT_EQ(ParseJson<VerifyReport>(RenderJson(verify)), verify);
  EXPECT_NE(RenderText(verify).find("1 mismatches"), std::string::npos);

  for (const char* tau : {"1243", "1423"}) {
    const ClassifyReport c = BuildClassifyReport(ForbiddenSet::Parse("213,312"),
                                                 Permutation::Parse(tau));
    EXPECT_EQ(ParseJson<ClassifyReport>(RenderJson(c)), c);
  }
  const WilfReport wilf = BuildWilfReport(3, 8, 12);
  EXPECT_EQ(ParseJson<WilfReport>(RenderJson(wilf)), wilf);
}

TEST(CliTest, VerifyAcrossTriples) {
  const Outcome o = RunArgs({"verify", "--avoid", "triples", "--k-max", "5", "--n", "9",
                             "--workers", "2", "--format", "json"});
  ASSERT_EQ(o.code, kExitOk);
  const VerifyReport r = ParseJson<VerifyReport>(o.out);
  EXPECT_EQ(r.sets, 4);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(o.out, RunArgs({"verify", "--avoid", "triples", "--k-max", "5", "--n", "9",
                            "--format", "json"}).out);
}

TEST(CliTest, WilfIsDeterministic) {
  const Outcome first = RunArgs({"wilf", "--k", "3", "--n", "10"});
  const Outcome second = RunArgs({"wilf", "--k", "3", "--n", "10"});
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("[0,0,0,1,1,1,1,1,1,1,1] A{123,132}:231 A{123,132}:312 "
                           "B{132,321}:231 B{132,321}:312 C{132,213}:231 C{132,213}:312 "
                           "D{132,231}:213 D{132,231}:312"),
            std::string::npos);
  EXPECT_NE(first.out.find("[0,0,0,1,2,3,4,5,6,7,8] D{132,231}:123 D{132,231}:321\n"),
            std::string::npos);
}

// A longer sampled range only ever splits groups.
TEST(CliTest, WilfRefinement) {
  const WilfReport coarse = BuildWilfReport(3, 5, 12);
  const WilfReport fine = BuildWilfReport(3, 10, 12);
  std::map<std::string, int> group_of;
  auto key = [](const WilfMember& m) {
    std::string s = m.tau;
    for (const auto& p : m.avoid) s += "," + p;
    return s;
  };
  for (std::size_t g = 0; g < coarse.groups.size(); ++g) {
    for (const auto& m : coarse.groups[g].members) group_of[key(m)] = static_cast<int>(g);
  }
  for (const auto& g : fine.groups) {
    for (const auto& m : g.members) {
      EXPECT_EQ(group_of.at(key(m)), group_of.at(key(g.members[0])));
    }
  }
  EXPECT_GE(fine.groups.size(), coarse.groups.size());
}

}  // namespace
}  // namespace permx::cli
