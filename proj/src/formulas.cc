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

#include "permx/formulas.h"

#include <functional>
#include <optional>

#include "permx/error.h"
#include "permx/oracle.h"
#include "permx/transfer.h"

namespace permx {
namespace {

using Steps = std::vector<DerivationStep>;
using Recurse = std::function<RationalGF(const Permutation&, Steps&)>;

const Polynomial kOneMinusX{1, -1};

RationalGF Xk(int k) { return Polynomial::Monomial(1, k); }

// x^r (1-x) / (1 - 2x + x^r)
RationalGF RunFactor(int r) {
  Polynomial den = Polynomial{1, -2} + Polynomial::Monomial(1, r);
  return RationalGF(Polynomial::Monomial(1, r) * kOneMinusX, den);
}

Permutation Tail(const Permutation& p, int from) {
  return Standardize(Word(std::vector<int>(p.values().begin() + from, p.values().end())));
}

const ForbiddenSet& SetOf(Family f) { return CanonicalSets()[static_cast<int>(f)]; }

// What still has to be counted after a peeling step: members containing
// `target` exactly once that also avoid `avoid`. When the avoidance is
// implied the count is the family's own function of `target`.
struct Cofactor {
  Model model;
  Permutation target;
  std::vector<Permutation> avoid;
  bool plain = false;
  std::string text;
};

Cofactor Plan(Family f, Permutation target, std::vector<Permutation> avoid) {
  const Model model = *ModelFor(f);
  auto state = SolverFor(model).Normalize(target, avoid);
  Cofactor c{model, std::move(target), std::move(avoid), false, ""};
  c.plain = !state.dead && state.avoid.empty() && state.target && *state.target == c.target;
  c.text = c.plain ? std::string(FamilyLetter(f)) + "(" + c.target.ToString() + ")"
                   : state.ToString();
  return c;
}

RationalGF Evaluate(const Cofactor& c, Steps& steps, const Recurse& recurse) {
  if (c.plain) return recurse(c.target, steps);
  return SolverFor(c.model).Once(c.target, c.avoid);
}

std::string RuleName(std::string base, const Cofactor& c) {
  return c.plain ? base : base + "+avoid";
}

RationalGF EvalA(const Permutation& tau, Steps& steps) {
  const int k = tau.size();
  if (k == 1) {
    steps.push_back({"A/base", "pair-123-132/base", "x", "()"});
    return Xk(1);
  }
  const Decomposition d = Decompose(tau, SetOf(Family::kPair123_132));
  if (d.shape == "block") {
    const int r = d.Param("r");
    const RationalGF factor = RunFactor(r);
    Cofactor c = d.rest.empty() ? Plan(Family::kPair123_132, Permutation(), {tau})
                                : Plan(Family::kPair123_132, d.rest, {tau});
    steps.push_back({RuleName("A/block", c), "pair-123-132/block", factor.ToString(), c.text});
    return factor * Evaluate(c, steps, EvalA);
  }
  const int m = d.Param("m");
  if (m == 1) {
    // Placing the maximum first only leaves room for tau' in the rest, and
    // tau itself must not appear there.
    Cofactor c = Plan(Family::kPair123_132, d.rest, {tau});
    steps.push_back(
        {RuleName("A/max-first", c) + "+revised", "pair-123-132/max-first", "x", c.text});
    return Xk(1) * Evaluate(c, steps, EvalA);
  }
  RationalGF total;
  for (int j = 1; j <= m; ++j) {
    const Permutation target = Tail(tau, j);
    const Permutation avoid = j == 1 ? tau : Tail(tau, j - 1);
    Cofactor c = Plan(Family::kPair123_132, target, {avoid});
    const int power = j == 1 ? 1 : j + 1;
    steps.push_back({RuleName("A/descending-prefix", c),
                     "pair-123-132/descending-prefix/" + std::to_string(j),
                     Xk(power).ToString(), c.text});
    total += Xk(power) * Evaluate(c, steps, EvalA);
  }
  return total;
}

RationalGF EvalC(const Permutation& tau, Steps& steps) {
  const Decomposition d = Decompose(tau, SetOf(Family::kPair132_213));
  if (d.shape == "identity") {
    const int k = d.Param("k");
    const RationalGF run = RunFactor(k);
    RationalGF value = run * RationalGF(kOneMinusX, Polynomial{1, -2} + Polynomial::Monomial(1, k));
    steps.push_back({"C/identity", "pair-132-213/identity", value.ToString(), "()"});
    return value;
  }
  const int len = d.Param("length");
  const RationalGF factor = RunFactor(len);
  Cofactor c = Plan(Family::kPair132_213, d.rest, {tau});
  steps.push_back({RuleName("C/run", c), "pair-132-213/run", factor.ToString(), c.text});
  return factor * Evaluate(c, steps, EvalC);
}

RationalGF EvalD(const Permutation& tau, Steps& steps) {
  const Decomposition d = Decompose(tau, SetOf(Family::kPair132_231));
  if (d.shape == "monotone") {
    const int k = d.Param("k");
    RationalGF value(Polynomial::Monomial(1, k), Pow(kOneMinusX, k - 1));
    steps.push_back({"D/monotone", "pair-132-231/monotone", value.ToString(), "()"});
    return value;
  }
  const int r = d.Param("r");
  const RationalGF factor(Polynomial::Monomial(1, r + 1), Pow(kOneMinusX, r));
  const bool descending = d.shape == "descending-prefix";
  const Permutation extended =
      descending ? DirectSum(d.rest, Permutation{1}) : SkewSum(Permutation{1}, d.rest);
  Cofactor c = Plan(Family::kPair132_231, d.rest, {extended});
  steps.push_back({RuleName("D/" + d.shape, c), "pair-132-231/" + d.shape, factor.ToString(),
                   c.text});
  return factor * Evaluate(c, steps, EvalD);
}

RationalGF EvalE(const Permutation& tau, Steps& steps) {
  const Decomposition d = Decompose(tau, SetOf(Family::kTriple123_132_213));
  if (d.shape == "base") {
    static const std::vector<std::pair<Permutation, RationalGF>> kBases = {
        {Permutation{1}, Xk(1)},
        {Permutation{1, 2}, RationalGF(Polynomial::Monomial(1, 2), Pow(kOneMinusX, 2))},
        {Permutation{2, 1}, Xk(2)},
        {Permutation{2, 3, 1}, RationalGF(Polynomial::Monomial(1, 3), kOneMinusX)},
        {Permutation{3, 1, 2}, RationalGF(Polynomial::Monomial(1, 3), kOneMinusX)},
        {Permutation{3, 2, 1}, Xk(3)},
        {Permutation{4, 2, 3, 1}, Xk(4)},
    };
    for (const auto& [p, gf] : kBases) {
      if (p == tau) {
        steps.push_back({"E/base", "triple-123-132-213/base", gf.ToString(), "()"});
        return gf;
      }
    }
    throw Error(ErrorCode::kNotInClass, "no base case for " + tau.ToString());
  }
  const bool pair = d.shape == "pair-prefix";
  const RationalGF factor =
      pair ? RationalGF(Polynomial::Monomial(1, 2), kOneMinusX) : RationalGF(Xk(1));
  Cofactor c = Plan(Family::kTriple123_132_213, d.rest, {tau});
  steps.push_back({RuleName("E/" + d.shape, c), "triple-123-132-213/" + d.shape,
                   factor.ToString(), c.text});
  return factor * Evaluate(c, steps, EvalE);
}

GfResult Closed(RationalGF gf, Steps steps, int order = kDefaultOrder) {
  return GfResult{std::move(gf), std::move(steps), order};
}

// Explicit members of S_n(t) for the sets with at least four patterns.
std::vector<Permutation> QuadAvoiders(const ForbiddenSet& t, int n) {
  if (n <= 2) {
    std::vector<Permutation> out;
    for (const auto& p : Enumerate(n)) {
      if (Avoids(p, t.patterns())) out.push_back(p);
    }
    return out;
  }
  const auto& sets = CanonicalSets();
  const Permutation dec = Permutation::Decreasing(n), id = Permutation::Identity(n);
  if (t == sets[8]) return {dec, SkewSum(Permutation::Decreasing(n - 2), Permutation{1, 2})};
  if (t == sets[9]) return {dec, DirectSum(Permutation::Decreasing(n - 1), Permutation{1})};
  if (t == sets[10]) return {dec, id};
  if (t == sets[11]) return {id};
  return {};
}

}  // namespace

TruncatedSeries GfResult::Expand(int n) const {
  if (closed()) return gf().Expand(n);
  const auto& s = std::get<TruncatedSeries>(value);
  if (n > s.order()) {
    throw Error(ErrorCode::kInvalidArgument, "series result only holds " +
                                                 std::to_string(s.order() + 1) + " terms");
  }
  return s.Truncated(n);
}

std::string GfResult::ToString() const {
  return closed() ? gf().ToString() : std::get<TruncatedSeries>(value).ToString();
}

GfResult GfPair123_132(const Permutation& tau, int order) {
  Steps steps;
  RationalGF gf = EvalA(tau, steps);
  return Closed(std::move(gf), std::move(steps), order);
}

GfResult GfPair132_321(const Permutation& tau) {
  const Decomposition d = Decompose(tau, SetOf(Family::kPair132_321));
  const int k = tau.size();
  RationalGF gf;
  if (d.shape == "identity") {
    Polynomial p = Polynomial::Monomial(1, k);
    for (int j = k + 1; j <= 2 * k - 1; ++j) p += Polynomial::Monomial(2 * (2 * k - j), j);
    gf = p;
  } else if (d.shape == "rotation") {
    gf = RationalGF(Polynomial::Monomial(1, k), kOneMinusX);
  } else {
    gf = Xk(k);
  }
  return Closed(gf, {{"B/" + d.shape, "pair-132-321/" + d.shape, gf.ToString(), "()"}});
}

GfResult GfPair132_213(const Permutation& tau) {
  Steps steps;
  RationalGF gf = EvalC(tau, steps);
  return Closed(std::move(gf), std::move(steps));
}

GfResult GfPair132_231(const Permutation& tau) {
  Steps steps;
  RationalGF gf = EvalD(tau, steps);
  return Closed(std::move(gf), std::move(steps));
}

GfResult GfTriple(const ForbiddenSet& t, const Permutation& tau, int order) {
  auto family = FamilyOf(t);
  if (!family || t.size() != 3) {
    throw Error(ErrorCode::kUnknownTriple, t.ToString() + " is not a canonical triple");
  }
  if (*family == Family::kTriple123_132_213) {
    Steps steps;
    RationalGF gf = EvalE(tau, steps);
    return Closed(std::move(gf), std::move(steps), order);
  }
  const Decomposition d = Decompose(tau, t);
  const int k = tau.size();
  const RationalGF xk = Xk(k);
  RationalGF gf = xk;
  std::string locator;
  switch (*family) {
    case Family::kTriple123_132_231:
      locator = "triple-123-132-231/" + d.shape;
      if (d.shape == "decreasing") gf = xk + Xk(k + 1).ScaledBy(Polynomial{k - 1});
      if (d.shape == "max-last") gf = RationalGF(Polynomial::Monomial(1, k), kOneMinusX);
      break;
    case Family::kTriple123_231_312:
      locator = "triple-123-231-312/" + d.shape;
      if (d.shape == "decreasing") {
        // x^k + 2x^(k+1) + ... + 2x^(2k-1): the tail stops once the
        // decreasing run no longer fits twice.
        gf = RationalGF(Polynomial::Monomial(1, k) *
                            (Polynomial{1, 1} - Polynomial::Monomial(2, k)),
                        kOneMinusX);
      }
      break;
    case Family::kTriple132_213_231:
      locator = "triple-132-213-231/" + d.shape;
      if (d.shape == "identity" && k >= 2) gf = RationalGF(Polynomial::Monomial(1, k), kOneMinusX);
      break;
    default:
      break;
  }
  std::string rule = std::string(FamilyLetter(*family)) + "/" + d.shape;
  if (*family == Family::kTriple123_231_312 && d.shape == "decreasing") rule += "+revised";
  return Closed(gf, {{rule, locator, gf.ToString(), "()"}}, order);
}

Integer CountQuadQuint(const ForbiddenSet& t, const Permutation& tau, int n) {
  auto family = FamilyOf(t);
  if (!family || *family != Family::kQuadOrQuint) {
    throw Error(ErrorCode::kInvalidArgument, t.ToString() + " is not a quartet or quintet");
  }
  const int k = tau.size();
  if (k <= 2) {
    // The displayed indicators assume k >= 3; short patterns are counted
    // against the explicit avoiders instead.
    Integer count = 0;
    for (const auto& p : QuadAvoiders(t, n)) {
      if (Occurrences(p, tau, 2) == 1) ++count;
    }
    return count;
  }
  const auto& sets = CanonicalSets();
  const Permutation dec = Permutation::Decreasing(k), id = Permutation::Identity(k);
  if (t == sets[8]) {
    return n == k && (tau == dec || tau == SkewSum(Permutation::Decreasing(k - 2),
                                                   Permutation{1, 2}));
  }
  if (t == sets[9]) {
    if (tau == dec) return n == k || n == k + 1;
    return n == k && tau == DirectSum(Permutation::Decreasing(k - 1), Permutation{1});
  }
  if (t == sets[10]) return n == k && (tau == dec || tau == id);
  if (t == sets[11]) return n == k && tau == id;
  return 0;
}

GfResult GfQuadQuint(const ForbiddenSet& t, const Permutation& tau) {
  const int k = tau.size();
  // Counts are constant from `last` on: the indicator vanishes after k+1
  // and the explicit avoider lists stabilise by then.
  const int last = std::max(k + 2, 6);
  Polynomial p;
  for (int n = 0; n <= last; ++n) p += Polynomial::Monomial(CountQuadQuint(t, tau, n), n);
  RationalGF gf = RationalGF(p) +
                  RationalGF(Polynomial::Monomial(CountQuadQuint(t, tau, last), last + 1),
                             kOneMinusX);
  const std::string how = k <= 2 ? "Q/explicit" : "Q/indicator";
  return Closed(gf, {{how, "quad-quint/" + how.substr(2), gf.ToString(), "()"}});
}

GfResult Dispatch(const ForbiddenSet& t, const Permutation& tau, int order) {
  if (tau.empty()) throw Error(ErrorCode::kInvalidArgument, "pattern must be nonempty");
  if (t.size() <= 1) {
    throw Error(ErrorCode::kUnsupported, "at least two forbidden patterns are required");
  }
  Steps steps;
  if (std::string why = MembershipWitness(tau, t); !why.empty()) {
    steps.push_back({"guard/forbidden-in-tau", "guard/forbidden-in-tau", "0", why});
    return Closed(RationalGF(), std::move(steps), order);
  }
  if (t.ForbidsBothMonotone()) {
    // Nothing of length 7 or more avoids both 123 and 321.
    const int known = std::min(order, 6);
    SequenceTable table = CountSequence(t, tau, known);
    TruncatedSeries series(order);
    for (int n = 0; n <= known; ++n) series[n] = table.counts[n];
    steps.push_back({"guard/monotone-pair", "guard/monotone-pair", "",
                     "enumerated up to n=" + std::to_string(known) + ", zero beyond"});
    return GfResult{std::move(series), std::move(steps), order};
  }
  if (tau.size() == 1) {
    steps.push_back({"singleton", "singleton", "x", "()"});
    return Closed(Xk(1), std::move(steps), order);
  }
  const Canonical c = Canonicalize(t, tau);
  if (!c.map.IsIdentity()) {
    steps.push_back({"symmetry", "symmetry/" + c.map.ToString(), "1",
                     c.set.ToString() + " " + c.tau.ToString()});
  }
  GfResult inner;
  switch (c.family) {
    case Family::kPair123_132: inner = GfPair123_132(c.tau, order); break;
    case Family::kPair132_321: inner = GfPair132_321(c.tau); break;
    case Family::kPair132_213: inner = GfPair132_213(c.tau); break;
    case Family::kPair132_231: inner = GfPair132_231(c.tau); break;
    case Family::kQuadOrQuint: inner = GfQuadQuint(c.set, c.tau); break;
    default: inner = GfTriple(c.set, c.tau, order); break;
  }
  steps.insert(steps.end(), inner.derivation.begin(), inner.derivation.end());
  inner.derivation = std::move(steps);
  inner.order = order;
  return inner;
}

}  // namespace permx
