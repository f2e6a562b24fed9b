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

#ifndef PERMX_CLI_COMMANDS_H_
#define PERMX_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "permx/classify.h"
#include "permx/perm.h"

namespace permx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotInClass = 3;
inline constexpr int kExitMismatch = 4;

enum class Source { kFormula, kOracle, kBoth };
enum class Format { kText, kJson, kCsv, kBFile };

struct QuerySpec {
  ForbiddenSet set;
  Permutation tau;
  int n_min = 0;
  int n_max = 10;
  int order = 12;
  Source source = Source::kBoth;
  Format format = Format::kText;
  int guard = kDefaultGuard;
};

struct VerifySpec {
  std::vector<ForbiddenSet> sets;
  int k_max = 5;
  int n_max = 9;
  Format format = Format::kText;
  int guard = kDefaultGuard;
  int workers = 1;
};

struct WilfSpec {
  int k = 3;
  int n_max = 10;
  Format format = Format::kText;
  int guard = kDefaultGuard;
};

// Each command writes its report to `out`, diagnostics to `err`, and
// returns the process exit code.
int CmdGf(const QuerySpec& spec, std::ostream& out, std::ostream& err);
int CmdSeq(const QuerySpec& spec, std::ostream& out, std::ostream& err);
int CmdVerify(const VerifySpec& spec, std::ostream& out, std::ostream& err);
int CmdClassify(const QuerySpec& spec, std::ostream& out, std::ostream& err);
int CmdWilf(const WilfSpec& spec, std::ostream& out, std::ostream& err);

// Parses a command line ("permx seq --avoid 123,132 --contain 321 ...")
// and runs the selected subcommand. Library errors map to exit codes.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permx::cli

#endif  // PERMX_CLI_COMMANDS_H_
