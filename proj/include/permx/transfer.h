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

#ifndef PERMX_TRANSFER_H_
#define PERMX_TRANSFER_H_

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "permx/classify.h"
#include "permx/perm.h"
#include "permx/series.h"

namespace permx {

// Classes whose members factor uniquely into simple components, which
// makes "contains sigma exactly once and avoids a set" a finite-state
// question.
enum class Model {
  kBlocks,       // S(123,132): skew sums of (c-1,...,1,c)
  kBlocksUpTo2,  // S(123,132,213): skew sums of (1) and (1,2)
  kRuns,         // S(132,213): skew sums of increasing runs
  kEnds,         // S(132,231): the maximum sits at one end
};

std::optional<Model> ModelFor(Family f);

// Exact generating functions over one model class.
//
// A state is a target (the pattern that must occur exactly once, or none)
// plus patterns that must not occur at all. Splitting a member into its
// first component and the rest maps a state to successor states; the
// generating function is the solution of the resulting linear system,
// which is triangular up to self-loops.
class TransferSolver {
 public:
  struct State {
    std::optional<Permutation> target;
    std::vector<Permutation> avoid;  // sorted, no member contains another
    bool dead = false;

    auto operator<=>(const State&) const = default;
    bool operator==(const State&) const = default;
    std::string ToString() const;
  };

  explicit TransferSolver(Model model);

  // Members that contain `target` exactly once and avoid every pattern in
  // `avoid`. An empty target means avoidance only.
  RationalGF Once(const Permutation& target, const std::vector<Permutation>& avoid);
  RationalGF Avoid(const std::vector<Permutation>& avoid);

  // Simplified state: drops avoided patterns that can never occur in the
  // class or that are implied by the others or by the target.
  State Normalize(std::optional<Permutation> target, std::vector<Permutation> avoid) const;

  Model model() const { return model_; }
  const ForbiddenSet& set() const { return set_; }

 private:
  enum class Split { kSkewLeft, kDirectRight };
  struct Transition {
    RationalGF weight;
    Permutation piece;
    Split split;
    bool nonempty_rest;
  };

  RationalGF Solve(const State& s, std::vector<State>& active);
  std::vector<Transition> Transitions(const State& s) const;
  State Next(const State& s, const Permutation& piece, Split split) const;
  static bool Satisfies(const Permutation& pi, const State& s);

  Model model_;
  ForbiddenSet set_;
  std::mutex mu_;
  std::map<State, RationalGF> memo_;  // write-once
};

// Shared solver per model; safe for concurrent use.
TransferSolver& SolverFor(Model model);

}  // namespace permx

#endif  // PERMX_TRANSFER_H_
