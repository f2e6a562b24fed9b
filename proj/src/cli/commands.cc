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

#include <charconv>
#include <functional>

#include "CLI11.hpp"
#include "permx/cli/report.h"
#include "permx/error.h"
#include "permx/oracle.h"

namespace permx::cli {
namespace {

int ExitCodeFor(const Error& e) {
  return e.code() == ErrorCode::kNotInClass ? kExitNotInClass : kExitUsage;
}

// Runs `body`, turning library errors into a message and an exit code.
int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return ExitCodeFor(e);
  }
}

int ParseInt(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad number '" + std::string(text) + "'");
  }
  return value;
}

// "a..b", or a single bound "b" meaning 0..b.
std::pair<int, int> ParseRange(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) return {0, ParseInt(text)};
  int lo = ParseInt(text.substr(0, dots)), hi = ParseInt(text.substr(dots + 2));
  if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "empty range " + std::string(text));
  return {lo, hi};
}

std::vector<ForbiddenSet> ParseSets(const std::vector<std::string>& items) {
  const auto& canonical = CanonicalSets();
  std::vector<ForbiddenSet> out;
  for (const auto& item : items) {
    if (item == "pairs" || item == "all") out.insert(out.end(), canonical.begin(), canonical.begin() + 4);
    if (item == "triples" || item == "all") {
      out.insert(out.end(), canonical.begin() + 4, canonical.begin() + 8);
    }
    if (item == "quads" || item == "all") {
      out.insert(out.end(), canonical.begin() + 8, canonical.begin() + 12);
    }
    if (item != "pairs" && item != "triples" && item != "quads" && item != "all") {
      out.push_back(ForbiddenSet::Parse(item));
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no forbidden sets given");
  return out;
}

const std::map<std::string, Format> kFormats = {
    {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv},
    {"bfile", Format::kBFile}};
const std::map<std::string, Source> kSources = {
    {"formula", Source::kFormula}, {"oracle", Source::kOracle}, {"both", Source::kBoth}};

void RequireFormat(Format f, std::initializer_list<Format> allowed) {
  for (Format a : allowed) {
    if (a == f) return;
  }
  throw Error(ErrorCode::kInvalidArgument, "output format not supported by this command");
}

}  // namespace

int CmdGf(const QuerySpec& spec, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    RequireFormat(spec.format, {Format::kText, Format::kJson});
    GfReport r = BuildGfReport(spec.set, spec.tau, spec.order);
    out << (spec.format == Format::kJson ? RenderJson(r) : RenderText(r));
    return kExitOk;
  });
}

int CmdSeq(const QuerySpec& spec, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const bool formula = spec.source != Source::kOracle;
    const bool oracle = spec.source != Source::kFormula;
    SeqReport r = BuildSeqReport(spec.set, spec.tau, spec.n_min, spec.n_max, formula, oracle,
                                 spec.guard);
    switch (spec.format) {
      case Format::kText: out << RenderText(r); break;
      case Format::kJson: out << RenderJson(r); break;
      case Format::kCsv: out << RenderCsv(r); break;
      case Format::kBFile: {
        // b-files always start at n=1, whatever range was asked for.
        SequenceTable table{spec.set, spec.tau, CountMode::kExactlyOnce, {}};
        SeqReport full = BuildSeqReport(spec.set, spec.tau, 0, spec.n_max, formula && !oracle,
                                        oracle, spec.guard);
        for (const auto& row : full.rows) table.counts.push_back(oracle ? row.oracle : row.formula);
        out << table.ToBFile();
        break;
      }
    }
    return kExitOk;
  });
}

int CmdVerify(const VerifySpec& spec, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    RequireFormat(spec.format, {Format::kText, Format::kJson});
    VerifyReport r = BuildVerifyReport(spec.sets, spec.k_max, spec.n_max, spec.guard,
                                       spec.workers);
    out << (spec.format == Format::kJson ? RenderJson(r) : RenderText(r));
    return r.mismatches.empty() ? kExitOk : kExitMismatch;
  });
}

int CmdClassify(const QuerySpec& spec, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    RequireFormat(spec.format, {Format::kText, Format::kJson});
    ClassifyReport r = BuildClassifyReport(spec.set, spec.tau);
    out << (spec.format == Format::kJson ? RenderJson(r) : RenderText(r));
    return r.member ? kExitOk : kExitNotInClass;
  });
}

int CmdWilf(const WilfSpec& spec, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    RequireFormat(spec.format, {Format::kText, Format::kJson});
    WilfReport r = BuildWilfReport(spec.k, spec.n_max, spec.guard);
    out << (spec.format == Format::kJson ? RenderJson(r) : RenderText(r));
    return kExitOk;
  });
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts permutations that avoid length-3 patterns and contain a pattern once"};
  app.name("permx");
  app.require_subcommand(1);

  std::string avoid, contain, range = "1..10", format = "text", source = "both";
  std::vector<std::string> sets;
  int order = 12, guard = kDefaultGuard, k_max = 5, k = 3, n_max = -1, workers = 1;

  const std::vector<std::string> kTextJson{"text", "json"};
  auto add_query = [&](CLI::App* cmd, const std::vector<std::string>& formats) {
    cmd->add_option("--avoid", avoid, "forbidden patterns, e.g. 123,132")->required();
    cmd->add_option("--contain", contain, "pattern to contain exactly once")->required();
    cmd->add_option("--format", format, CLI::detail::join(formats, ", "))
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };
  CLI::App* gf = app.add_subcommand("gf", "generating function and its expansion");
  add_query(gf, kTextJson);
  gf->add_option("--order", order, "expansion order")->capture_default_str();

  CLI::App* seq = app.add_subcommand("seq", "count sequence from the formula and/or oracle");
  add_query(seq, {"text", "json", "csv", "bfile"});
  seq->add_option("--n", range, "range a..b, or b for 0..b")->capture_default_str();
  seq->add_option("--source", source, "formula, oracle or both")->capture_default_str();
  seq->add_option("--guard", guard, "largest n the oracle may enumerate")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "compare formula and oracle exhaustively");
  verify->add_option("--avoid", sets, "sets to check (repeatable); or pairs, triples, quads, all")
      ->required();
  verify->add_option("--k-max", k_max, "largest |tau|")->capture_default_str();
  verify->add_option("--n", n_max, "largest n (default 9)");
  verify->add_option("--format", format, "text, json")
      ->check(CLI::IsMember(kTextJson))
      ->capture_default_str();
  verify->add_option("--guard", guard, "largest n the oracle may enumerate")->capture_default_str();
  verify->add_option("--workers", workers, "worker threads")->capture_default_str();

  CLI::App* classify = app.add_subcommand("classify", "membership, symmetry and derivation trace");
  add_query(classify, kTextJson);

  CLI::App* wilf = app.add_subcommand("wilf", "group canonical (T, tau) pairs by sequence");
  wilf->add_option("--k", k, "pattern length")->capture_default_str();
  wilf->add_option("--n", n_max, "largest n (default 10)");
  wilf->add_option("--format", format, "text, json")
      ->check(CLI::IsMember(kTextJson))
      ->capture_default_str();
  wilf->add_option("--guard", guard, "largest n the oracle may enumerate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  return Guarded(err, [&] {
    auto fmt = kFormats.find(format);
    if (fmt == kFormats.end()) throw Error(ErrorCode::kInvalidArgument, "unknown format " + format);
    if (verify->parsed()) {
      VerifySpec spec{ParseSets(sets), k_max, n_max < 0 ? 9 : n_max, fmt->second, guard, workers};
      return CmdVerify(spec, out, err);
    }
    if (wilf->parsed()) return CmdWilf({k, n_max < 0 ? 10 : n_max, fmt->second, guard}, out, err);

    QuerySpec spec;
    spec.set = ForbiddenSet::Parse(avoid);
    spec.tau = Permutation::Parse(contain);
    spec.order = order;
    spec.format = fmt->second;
    spec.guard = guard;
    auto src = kSources.find(source);
    if (src == kSources.end()) throw Error(ErrorCode::kInvalidArgument, "unknown source " + source);
    spec.source = src->second;
    std::tie(spec.n_min, spec.n_max) = ParseRange(range);
    if (gf->parsed()) return CmdGf(spec, out, err);
    if (seq->parsed()) return CmdSeq(spec, out, err);
    return CmdClassify(spec, out, err);
  });
}

}  // namespace permx::cli
