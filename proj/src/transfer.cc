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

#include <algorithm>
#include <array>
#include <memory>

#include "permx/error.h"

namespace permx {
namespace {

struct Piece {
  Permutation part;       // lies inside the component
  Permutation remainder;  // must be matched by the rest
};

Permutation Block(int c) {
  std::vector<int> v;
  for (int i = c - 1; i >= 1; --i) v.push_back(i);
  v.push_back(c);
  return Permutation(std::move(v));
}

Permutation Standardized(std::span<const int> values) {
  return Standardize(Word(std::vector<int>(values.begin(), values.end())));
}

bool IsPositive(const Permutation& component, const Permutation& part) {
  return part.empty() || Occurrences(component, part, 1) > 0;
}

}  // namespace

std::optional<Model> ModelFor(Family f) {
  switch (f) {
    case Family::kPair123_132: return Model::kBlocks;
    case Family::kTriple123_132_213: return Model::kBlocksUpTo2;
    case Family::kPair132_213: return Model::kRuns;
    case Family::kPair132_231: return Model::kEnds;
    default: return std::nullopt;
  }
}

std::string TransferSolver::State::ToString() const {
  if (dead) return "empty";
  std::string out = target ? "once(" + target->ToString() : "avoid(";
  if (!avoid.empty()) {
    out += target ? "; avoid " : "";
    for (std::size_t i = 0; i < avoid.size(); ++i) {
      if (i > 0) out += ",";
      out += avoid[i].ToString();
    }
  }
  return out + ")";
}

TransferSolver::TransferSolver(Model model) : model_(model) {
  switch (model) {
    case Model::kBlocks: set_ = ForbiddenSet::Parse("123,132"); break;
    case Model::kBlocksUpTo2: set_ = ForbiddenSet::Parse("123,132,213"); break;
    case Model::kRuns: set_ = ForbiddenSet::Parse("132,213"); break;
    case Model::kEnds: set_ = ForbiddenSet::Parse("132,231"); break;
  }
}

TransferSolver::State TransferSolver::Normalize(std::optional<Permutation> target,
                                                std::vector<Permutation> avoid) const {
  State s;
  if (target && target->empty()) target.reset();
  if (target && !Avoids(*target, set_.patterns())) {
    s.dead = true;
    return s;
  }
  std::vector<Permutation> kept;
  for (auto& a : avoid) {
    if (a.empty()) {
      s.dead = true;
      return s;
    }
    // Patterns outside the class never occur in its members.
    if (Avoids(a, set_.patterns())) kept.push_back(std::move(a));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (const auto& a : kept) {
    bool redundant = false;
    for (const auto& b : kept) {
      if (b != a && b.size() <= a.size() && Contains(a, b)) redundant = true;
    }
    if (target) {
      if (Contains(*target, a)) {
        s.dead = true;
        return s;
      }
      // Containing `a` would force two copies of the target.
      if (Occurrences(a, *target, 2) >= 2) redundant = true;
    }
    if (!redundant) s.avoid.push_back(a);
  }
  s.target = std::move(target);
  return s;
}

std::vector<TransferSolver::Transition> TransferSolver::Transitions(const State& s) const {
  int longest = s.target ? s.target->size() : 0;
  for (const auto& a : s.avoid) longest = std::max(longest, a.size());
  // From this size on, which pieces occur in a component, and whether
  // more than once, no longer changes.
  const int stable = longest + 2;
  const Polynomial one_minus_x{1, -1};
  std::vector<Transition> out;
  auto add_components = [&](auto make, int last, bool tail) {
    for (int c = 1; c <= last; ++c) {
      out.push_back({Polynomial::Monomial(1, c), make(c), Split::kSkewLeft, false});
    }
    if (tail) {
      out.push_back({RationalGF(Polynomial::Monomial(1, stable), one_minus_x), make(stable),
                     Split::kSkewLeft, false});
    }
  };
  switch (model_) {
    case Model::kBlocks:
      add_components(Block, stable - 1, true);
      break;
    case Model::kBlocksUpTo2:
      add_components(Block, 2, false);
      break;
    case Model::kRuns:
      add_components(Permutation::Identity, stable - 1, true);
      break;
    case Model::kEnds:
      out.push_back({Polynomial::X(), Permutation{1}, Split::kSkewLeft, true});
      out.push_back({Polynomial::X(), Permutation{1}, Split::kDirectRight, true});
      break;
  }
  return out;
}

TransferSolver::State TransferSolver::Next(const State& s, const Permutation& component,
                                           Split split) const {
  // Ways to write p as (part in the component) combined with (remainder in
  // the rest), ordered by increasing part size.
  auto pieces = [&](const Permutation& p) {
    std::vector<Piece> out;
    const int n = p.size();
    auto v = p.values();
    for (int i = 0; i <= n; ++i) {
      if (split == Split::kSkewLeft) {
        auto head = v.subspan(0, i), tail = v.subspan(i);
        if (!head.empty() && !tail.empty() &&
            *std::min_element(head.begin(), head.end()) <
                *std::max_element(tail.begin(), tail.end())) {
          continue;
        }
        out.push_back({Standardized(head), Standardized(tail)});
      } else {
        auto head = v.subspan(0, n - i), tail = v.subspan(n - i);
        if (!head.empty() && !tail.empty() &&
            *std::max_element(head.begin(), head.end()) >
                *std::min_element(tail.begin(), tail.end())) {
          continue;
        }
        out.push_back({Standardized(tail), Standardized(head)});
      }
    }
    return out;
  };
  State dead;
  dead.dead = true;

  std::vector<Permutation> avoid;
  for (const auto& a : s.avoid) {
    auto ps = pieces(a);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
      if (!IsPositive(component, it->part)) continue;
      // The longest part that fits leaves the shortest remainder, which
      // every other remainder contains.
      if (it->remainder.empty()) return dead;
      avoid.push_back(it->remainder);
      break;
    }
  }
  std::optional<Permutation> target;
  if (s.target) {
    auto ps = pieces(*s.target);
    int longest = -1;
    for (int i = static_cast<int>(ps.size()) - 1; i >= 0; --i) {
      if (IsPositive(component, ps[i].part)) {
        longest = i;
        break;
      }
    }
    const Piece& chosen = ps[longest];
    if (!chosen.part.empty() && Occurrences(component, chosen.part, 2) >= 2) return dead;
    target = chosen.remainder;
    for (int i = 0; i < longest; ++i) {
      if (IsPositive(component, ps[i].part)) avoid.push_back(ps[i].remainder);
    }
  }
  return Normalize(std::move(target), std::move(avoid));
}

bool TransferSolver::Satisfies(const Permutation& pi, const State& s) {
  if (s.dead) return false;
  if (s.target && Occurrences(pi, *s.target, 2) != 1) return false;
  for (const auto& a : s.avoid) {
    if (Contains(pi, a)) return false;
  }
  return true;
}

RationalGF TransferSolver::Solve(const State& s, std::vector<State>& active) {
  if (s.dead) return RationalGF();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
  }
  if (std::find(active.begin(), active.end(), s) != active.end()) {
    throw Error(ErrorCode::kUnsupported, "cyclic transfer state " + s.ToString());
  }
  active.push_back(s);
  auto empty_term = [](const State& st) {
    return RationalGF(Polynomial::Monomial(Satisfies(Permutation(), st) ? 1 : 0, 0));
  };
  RationalGF numer = empty_term(s);
  if (model_ == Model::kEnds && Satisfies(Permutation{1}, s)) numer += Polynomial::X();
  RationalGF loop;
  for (const auto& t : Transitions(s)) {
    State n = Next(s, t.piece, t.split);
    if (n == s) {
      loop += t.weight;
      if (t.nonempty_rest) numer -= t.weight * empty_term(s);
    } else if (!n.dead) {
      RationalGF g = Solve(n, active);
      if (t.nonempty_rest) g -= empty_term(n);
      numer += t.weight * g;
    }
  }
  active.pop_back();
  RationalGF result = numer * (RationalGF(Polynomial::One()) - loop).Reciprocal();
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(s, std::move(result)).first->second;
}

RationalGF TransferSolver::Once(const Permutation& target,
                                const std::vector<Permutation>& avoid) {
  std::vector<State> active;
  return Solve(Normalize(target, avoid), active);
}

RationalGF TransferSolver::Avoid(const std::vector<Permutation>& avoid) {
  std::vector<State> active;
  return Solve(Normalize(std::nullopt, avoid), active);
}

TransferSolver& SolverFor(Model model) {
  static std::array<std::unique_ptr<TransferSolver>, 4> solvers = {
      std::make_unique<TransferSolver>(Model::kBlocks),
      std::make_unique<TransferSolver>(Model::kBlocksUpTo2),
      std::make_unique<TransferSolver>(Model::kRuns),
      std::make_unique<TransferSolver>(Model::kEnds),
  };
  return *solvers[static_cast<int>(model)];
}

}  // namespace permx
