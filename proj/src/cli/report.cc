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

#include "permx/cli/report.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "permx/error.h"
#include "permx/oracle.h"

namespace permx {

void to_json(nlohmann::json& j, const DerivationStep& s) {
  j = nlohmann::json{{"rule", s.rule},
                     {"paper_locator", s.locator},
                     {"factor", s.factor},
                     {"remainder", s.remainder}};
}

void from_json(const nlohmann::json& j, DerivationStep& s) {
  j.at("rule").get_to(s.rule);
  j.at("paper_locator").get_to(s.locator);
  j.at("factor").get_to(s.factor);
  j.at("remainder").get_to(s.remainder);
}

}  // namespace permx

namespace permx::cli {
namespace {

using nlohmann::json;

std::uint64_t ToU64(const Integer& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient " + v.str() + " does not fit 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> ToU64(const TruncatedSeries& s) {
  std::vector<std::uint64_t> out;
  for (const auto& c : s.coefficients()) out.push_back(ToU64(c));
  return out;
}

json Nullable(bool present, std::uint64_t value) {
  return present ? json(value) : json(nullptr);
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename T>
std::string JoinNumbers(const std::vector<T>& v, const std::string& sep) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return Join(parts, sep);
}

std::string SetText(const std::vector<std::string>& avoid) { return "{" + Join(avoid, ",") + "}"; }

void AppendTrace(std::ostringstream& out, const std::vector<DerivationStep>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out << "  " << i + 1 << ". " << s.rule << " [" << s.locator << "]";
    if (!s.factor.empty()) out << " factor " << s.factor;
    if (!s.remainder.empty()) out << " -> " << s.remainder;
    out << "\n";
  }
}

}  // namespace

std::vector<std::string> PatternStrings(const ForbiddenSet& t) {
  std::vector<std::string> out;
  for (const auto& p : t.patterns()) out.push_back(p.ToString());
  return out;
}

void to_json(json& j, const GfReport& r) {
  j = json{{"avoid", r.avoid},     {"tau", r.tau},
           {"closed", r.closed},   {"gf", r.gf},
           {"order", r.order},     {"coefficients", r.coefficients},
           {"derivation", r.derivation}, {"note", r.note}};
}

void from_json(const json& j, GfReport& r) {
  j.at("avoid").get_to(r.avoid);
  j.at("tau").get_to(r.tau);
  j.at("closed").get_to(r.closed);
  j.at("gf").get_to(r.gf);
  j.at("order").get_to(r.order);
  j.at("coefficients").get_to(r.coefficients);
  j.at("derivation").get_to(r.derivation);
  j.at("note").get_to(r.note);
}

void to_json(json& j, const SeqReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o{{"n", row.n},
           {"formula", Nullable(row.has_formula, row.formula)},
           {"oracle", Nullable(row.has_oracle, row.oracle)}};
    o["match"] = row.has_formula && row.has_oracle ? json(row.Matches()) : json(nullptr);
    rows.push_back(std::move(o));
  }
  j = json{{"avoid", r.avoid}, {"tau", r.tau}, {"source", r.source}, {"rows", rows}};
}

void from_json(const json& j, SeqReport& r) {
  j.at("avoid").get_to(r.avoid);
  j.at("tau").get_to(r.tau);
  j.at("source").get_to(r.source);
  r.rows.clear();
  for (const auto& o : j.at("rows")) {
    SeqRow row;
    o.at("n").get_to(row.n);
    if (!o.at("formula").is_null()) {
      row.has_formula = true;
      o.at("formula").get_to(row.formula);
    }
    if (!o.at("oracle").is_null()) {
      row.has_oracle = true;
      o.at("oracle").get_to(row.oracle);
    }
    r.rows.push_back(row);
  }
}

void to_json(json& j, const VerifyReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back(json{{"avoid", m.avoid},
                              {"tau", m.tau},
                              {"n", m.n},
                              {"formula", m.formula},
                              {"oracle", m.oracle},
                              {"derivation", m.derivation}});
  }
  j = json{{"k_max", r.k_max},       {"n_max", r.n_max},   {"sets", r.sets},
           {"patterns", r.patterns}, {"values", r.values}, {"mismatches", mismatches}};
}

void from_json(const json& j, VerifyReport& r) {
  j.at("k_max").get_to(r.k_max);
  j.at("n_max").get_to(r.n_max);
  j.at("sets").get_to(r.sets);
  j.at("patterns").get_to(r.patterns);
  j.at("values").get_to(r.values);
  r.mismatches.clear();
  for (const auto& o : j.at("mismatches")) {
    Mismatch m;
    o.at("avoid").get_to(m.avoid);
    o.at("tau").get_to(m.tau);
    o.at("n").get_to(m.n);
    o.at("formula").get_to(m.formula);
    o.at("oracle").get_to(m.oracle);
    o.at("derivation").get_to(m.derivation);
    r.mismatches.push_back(std::move(m));
  }
}

void to_json(json& j, const ClassifyReport& r) {
  j = json{{"avoid", r.avoid},
           {"tau", r.tau},
           {"member", r.member},
           {"witness", r.witness},
           {"canonical_avoid", r.canonical_avoid},
           {"canonical_tau", r.canonical_tau},
           {"map", r.map},
           {"family", r.family},
           {"shape", r.shape},
           {"params", r.params},
           {"blocks", r.blocks},
           {"rest", r.rest},
           {"derivation", r.derivation},
           {"gf", r.gf}};
}

void from_json(const json& j, ClassifyReport& r) {
  j.at("avoid").get_to(r.avoid);
  j.at("tau").get_to(r.tau);
  j.at("member").get_to(r.member);
  j.at("witness").get_to(r.witness);
  j.at("canonical_avoid").get_to(r.canonical_avoid);
  j.at("canonical_tau").get_to(r.canonical_tau);
  j.at("map").get_to(r.map);
  j.at("family").get_to(r.family);
  j.at("shape").get_to(r.shape);
  j.at("params").get_to(r.params);
  j.at("blocks").get_to(r.blocks);
  j.at("rest").get_to(r.rest);
  j.at("derivation").get_to(r.derivation);
  j.at("gf").get_to(r.gf);
}

void to_json(json& j, const WilfReport& r) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    json members = json::array();
    for (const auto& m : g.members) {
      members.push_back(json{{"family", m.family}, {"avoid", m.avoid}, {"tau", m.tau}});
    }
    groups.push_back(json{{"counts", g.counts}, {"members", members}});
  }
  j = json{{"k", r.k}, {"n_max", r.n_max}, {"groups", groups}};
}

void from_json(const json& j, WilfReport& r) {
  j.at("k").get_to(r.k);
  j.at("n_max").get_to(r.n_max);
  r.groups.clear();
  for (const auto& o : j.at("groups")) {
    WilfGroup g;
    o.at("counts").get_to(g.counts);
    for (const auto& m : o.at("members")) {
      g.members.push_back(WilfMember{m.at("family").get<std::string>(),
                                     m.at("avoid").get<std::vector<std::string>>(),
                                     m.at("tau").get<std::string>()});
    }
    r.groups.push_back(std::move(g));
  }
}

GfReport BuildGfReport(const ForbiddenSet& t, const Permutation& tau, int order) {
  GfResult result = Dispatch(t, tau, order);
  GfReport r;
  r.avoid = PatternStrings(t);
  r.tau = tau.ToString();
  r.closed = result.closed();
  r.gf = result.closed() ? result.gf().ToString() : "";
  r.order = order;
  r.coefficients = ToU64(result.Expand(order));
  r.derivation = result.derivation;
  if (!r.derivation.empty()) {
    const auto& first = r.derivation.front();
    if (first.rule == "guard/forbidden-in-tau") {
      r.note = "tau contains a forbidden pattern (" + first.remainder + ")";
    } else if (first.rule == "guard/monotone-pair") {
      r.note = "both 123 and 321 are forbidden; counts vanish from n=7 on";
    }
  }
  return r;
}

SeqReport BuildSeqReport(const ForbiddenSet& t, const Permutation& tau, int n_min, int n_max,
                         bool formula, bool oracle, int guard) {
  SeqReport r;
  r.avoid = PatternStrings(t);
  r.tau = tau.ToString();
  r.source = formula && oracle ? "both" : formula ? "formula" : "oracle";
  std::vector<std::uint64_t> f, o;
  // Formula first so a slow enumeration never hides a formula failure.
  if (formula) f = ToU64(Dispatch(t, tau, n_max).Expand(n_max));
  if (oracle) o = CountSequence(t, tau, n_max, {.guard = guard}).counts;
  for (int n = n_min; n <= n_max; ++n) {
    SeqRow row;
    row.n = n;
    if (formula) {
      row.has_formula = true;
      row.formula = f[n];
    }
    if (oracle) {
      row.has_oracle = true;
      row.oracle = o[n];
    }
    r.rows.push_back(row);
  }
  return r;
}

VerifyReport BuildVerifyReport(const std::vector<ForbiddenSet>& sets, int k_max, int n_max,
                               int guard, int workers) {
  struct Job {
    const ForbiddenSet* set;
    Permutation tau;
    std::vector<Mismatch> mismatches;
  };
  std::vector<Job> jobs;
  for (const auto& t : sets) {
    for (int k = 1; k <= k_max; ++k) {
      for (auto& tau : GenerateAvoiders(t, k, guard)) jobs.push_back({&t, std::move(tau), {}});
    }
  }
  auto run = [&](Job& job) {
    GfResult gf = Dispatch(*job.set, job.tau, n_max);
    std::vector<std::uint64_t> f = ToU64(gf.Expand(n_max));
    std::vector<std::uint64_t> o = CountSequence(*job.set, job.tau, n_max, {.guard = guard}).counts;
    for (int n = 0; n <= n_max; ++n) {
      if (f[n] != o[n]) {
        job.mismatches.push_back(
            {PatternStrings(*job.set), job.tau.ToString(), n, f[n], o[n], gf.derivation});
      }
    }
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    for (auto& job : jobs) run(job);
  } else {
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr failure;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= jobs.size() || failure) return;
          i = next++;
        }
        try {
          run(jobs[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  VerifyReport r;
  r.k_max = k_max;
  r.n_max = n_max;
  r.sets = static_cast<int>(sets.size());
  r.patterns = static_cast<int>(jobs.size());
  r.values = r.patterns * (n_max + 1);
  for (auto& job : jobs) {
    for (auto& m : job.mismatches) r.mismatches.push_back(std::move(m));
  }
  return r;
}

ClassifyReport BuildClassifyReport(const ForbiddenSet& t, const Permutation& tau) {
  ClassifyReport r;
  r.avoid = PatternStrings(t);
  r.tau = tau.ToString();
  r.witness = MembershipWitness(tau, t);
  r.member = r.witness.empty();
  if (!r.member) return r;
  GfResult gf = Dispatch(t, tau);
  r.derivation = gf.derivation;
  r.gf = gf.ToString();
  if (t.ForbidsBothMonotone()) {
    r.shape = "guard";
    return r;
  }
  const Canonical c = Canonicalize(t, tau);
  r.canonical_avoid = PatternStrings(c.set);
  r.canonical_tau = c.tau.ToString();
  r.map = c.map.Steps();
  r.family = FamilyName(c.family);
  const Decomposition d = Decompose(c.tau, c.set);
  r.shape = d.shape;
  for (const auto& [name, value] : d.params) r.params[name] = value;
  r.blocks = d.blocks;
  r.rest = d.rest.ToString();
  return r;
}

WilfReport BuildWilfReport(int k, int n_max, int guard) {
  WilfReport r;
  r.k = k;
  r.n_max = n_max;
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (const auto& t : CanonicalSets()) {
    const std::string letter(FamilyLetter(*FamilyOf(t)));
    for (const auto& tau : GenerateAvoiders(t, k, guard)) {
      auto counts = CountSequence(t, tau, n_max, {.guard = guard}).counts;
      auto [it, inserted] = index.emplace(counts, r.groups.size());
      if (inserted) r.groups.push_back(WilfGroup{counts, {}});
      r.groups[it->second].members.push_back(WilfMember{letter, PatternStrings(t), tau.ToString()});
    }
  }
  return r;
}

std::string RenderText(const GfReport& r) {
  std::ostringstream out;
  out << (r.closed ? r.gf : "series (no closed form)") << "\n";
  out << "coefficients n=0.." << r.order << ": " << JoinNumbers(r.coefficients, ", ") << "\n";
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  return out.str();
}

std::string RenderText(const SeqReport& r) {
  std::ostringstream out;
  out << "# avoid " << SetText(r.avoid) << ", tau " << r.tau << ", source " << r.source << "\n";
  const bool both = r.source == "both";
  out << "n";
  if (r.source != "oracle") out << "\tformula";
  if (r.source != "formula") out << "\toracle";
  if (both) out << "\tmatch";
  out << "\n";
  for (const auto& row : r.rows) {
    out << row.n;
    if (row.has_formula) out << "\t" << row.formula;
    if (row.has_oracle) out << "\t" << row.oracle;
    if (both) out << "\t" << (row.Matches() ? "yes" : "NO");
    out << "\n";
  }
  return out.str();
}

std::string RenderCsv(const SeqReport& r) {
  std::ostringstream out;
  out << "n,formula,oracle,match\n";
  for (const auto& row : r.rows) {
    out << row.n << ",";
    if (row.has_formula) out << row.formula;
    out << ",";
    if (row.has_oracle) out << row.oracle;
    out << ",";
    if (row.has_formula && row.has_oracle) out << (row.Matches() ? "true" : "false");
    out << "\n";
  }
  return out.str();
}

std::string RenderText(const VerifyReport& r) {
  std::ostringstream out;
  out << "checked " << r.patterns << " patterns over " << r.sets << " sets, k<=" << r.k_max
      << ", n<=" << r.n_max << " (" << r.values << " values)\n";
  for (const auto& m : r.mismatches) {
    out << "MISMATCH avoid " << SetText(m.avoid) << " tau " << m.tau << " n=" << m.n
        << ": formula " << m.formula << ", oracle " << m.oracle << "\n";
    AppendTrace(out, m.derivation);
  }
  out << r.mismatches.size() << " mismatches\n";
  return out.str();
}

std::string RenderText(const ClassifyReport& r) {
  std::ostringstream out;
  out << "tau " << r.tau << " in S(" << Join(r.avoid, ",") << "): "
      << (r.member ? "yes" : "no, " + r.witness) << "\n";
  if (!r.member) return out.str();
  if (r.shape == "guard") {
    out << "both 123 and 321 are forbidden; counts vanish from n=7 on\n";
  } else {
    out << "canonical " << SetText(r.canonical_avoid) << " tau " << r.canonical_tau << " via "
        << (r.map.empty() ? "identity" : Join(r.map, ",")) << "\n";
    out << "family " << r.family << ", shape " << r.shape;
    for (const auto& [name, value] : r.params) out << " " << name << "=" << value;
    if (!r.blocks.empty()) out << " blocks=[" << JoinNumbers(r.blocks, ",") << "]";
    out << " rest " << r.rest << "\n";
  }
  AppendTrace(out, r.derivation);
  out << "gf " << r.gf << "\n";
  return out.str();
}

std::string RenderText(const WilfReport& r) {
  std::ostringstream out;
  out << "# k=" << r.k << ", n=0.." << r.n_max << ", " << r.groups.size() << " classes\n";
  for (const auto& g : r.groups) {
    std::vector<std::string> names;
    for (const auto& m : g.members) names.push_back(m.family + SetText(m.avoid) + ":" + m.tau);
    out << "[" << JoinNumbers(g.counts, ",") << "] " << Join(names, " ") << "\n";
  }
  return out.str();
}

}  // namespace permx::cli
