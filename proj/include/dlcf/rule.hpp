// Copyright 2026 The dlcf Authors.
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

// Refinement rules, clause tables, rule composition and the lax
// naturality checker.

#ifndef DLCF_RULE_HPP_
#define DLCF_RULE_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlcf/judgment.hpp"
#include "dlcf/state.hpp"
#include "dlcf/theory.hpp"

namespace dlcf {

template <class In, class Out = In>
class Rule {
 public:
  using Fn = std::function<ProofState<Out>(const Context&, const In&)>;

  Rule(std::string name, Fn fn)
      : name_(std::move(name)), fn_(std::make_shared<const Fn>(std::move(fn))) {}

  const std::string& name() const { return name_; }
  ProofState<Out> operator()(const Context& gamma, const In& x) const {
    return (*fn_)(gamma, x);
  }

 private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
};

// Ordered clauses, first match wins, Fail when nothing matches. A table
// for a pattern-sensitive rule must say where it is unsuccessful.
template <class J, class Out = J>
class ClauseTable {
 public:
  using Match =
      std::function<std::optional<ProofState<Out>>(const Context&, const J&)>;
  using Pred = std::function<bool(const J&)>;

  explicit ClauseTable(std::string name) : name_(std::move(name)) {}

  ClauseTable& state(std::string label, Match m) {
    clauses_.push_back({std::move(label), Kind::kState, std::move(m), {}});
    return *this;
  }
  ClauseTable& unsuccess(std::string label, Pred p) {
    clauses_.push_back({std::move(label), Kind::kBot, {}, std::move(p)});
    has_bot_ = true;
    return *this;
  }
  ClauseTable& fail(std::string label, Pred p) {
    clauses_.push_back({std::move(label), Kind::kFail, {}, std::move(p)});
    return *this;
  }
  // The rule never looks inside its payload.
  ClauseTable& insensitive() {
    insensitive_ = true;
    return *this;
  }

  Rule<J, Out> build() const {
    if (!has_bot_ && !insensitive_)
      throw KernelError(ErrorCode::kIllFormed,
                        "rule '" + name_ + "' has no unsuccess clause");
    auto clauses = clauses_;
    return Rule<J, Out>(name_, [clauses](const Context& gamma, const J& x) {
      for (const auto& c : clauses) {
        switch (c.kind) {
          case Kind::kState:
            if (auto s = c.match(gamma, x)) return *s;
            break;
          case Kind::kBot:
            if (c.pred(x)) return ProofState<Out>::bot(Context(output(x)));
            break;
          case Kind::kFail:
            if (c.pred(x)) return ProofState<Out>::fail(Context(output(x)));
            break;
        }
      }
      return ProofState<Out>::fail(Context(output(x)));
    });
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : clauses_) out.push_back(c.label);
    out.push_back("default: fail");
    return out;
  }

 private:
  enum class Kind { kState, kBot, kFail };
  struct Clause {
    std::string label;
    Kind kind;
    Match match;
    Pred pred;
  };
  std::string name_;
  std::vector<Clause> clauses_;
  bool has_bot_ = false;
  bool insensitive_ = false;
};

// On <X, i>: rules[i](X) when in range, eta(X) otherwise.
template <class J>
Rule<Labeled<J>, J> proj_rules(std::vector<Rule<J>> rules) {
  std::string name = "proj[";
  for (std::size_t i = 0; i < rules.size(); ++i)
    name += (i ? ", " : "") + rules[i].name();
  name += "]";
  return Rule<Labeled<J>, J>(
      name, [rules = std::move(rules)](const Context& gamma,
                                       const Labeled<J>& x) {
        if (x.index < rules.size()) return rules[x.index](gamma, x.inner);
        return eta(gamma, x.inner);
      });
}

// mu . map(proj(rest)) . label . first
template <class J0, class J1, class J2>
Rule<J0, J2> rule_seq(Rule<J0, J1> first, std::vector<Rule<J1, J2>> rest) {
  std::string name = first.name() + "; [";
  for (std::size_t i = 0; i < rest.size(); ++i)
    name += (i ? ", " : "") + rest[i].name();
  name += "]";
  Rule<Labeled<J1>, J2> proj = proj_rules(std::move(rest));
  return Rule<J0, J2>(name, [first, proj](const Context& gamma, const J0& x) {
    ProofState<Labeled<J1>> labeled = label_state(first(gamma, x));
    return mu(gamma, map_state(gamma, labeled,
                               [&](const Context& ctx, const Labeled<J1>& g) {
                                 return proj(ctx, g);
                               }));
  });
}

template <class In, class Out>
bool preserves_output(const Rule<In, Out>& rho, const Context& gamma,
                      const In& x) {
  return same_sorts(Context(output(rho(gamma, x))), Context(output(x)));
}

// A substitution gamma_prime -> gamma and a goal over gamma.
template <class J>
struct LaxSample {
  Context gamma_prime;
  Substitution s;
  Context gamma;
  J goal;
};

template <class J, class Out>
struct LaxCounterexample {
  std::size_t index;
  LaxSample<J> sample;
  ProofState<Out> substituted_result;  // rho(X)[s]
  ProofState<Out> result_of_substituted;  // rho(X[s])
};

template <class J, class Out>
struct LaxReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<LaxCounterexample<J, Out>> counterexamples;  // first few
  bool ok() const { return violations == 0; }
};

// rho(X)[s] below rho(X[s]) on every sample.
template <class J, class Out, class Samples>
LaxReport<J, Out> check_lax_naturality(const Rule<J, Out>& rho,
                                       const Samples& samples,
                                       std::size_t keep = 8) {
  LaxReport<J, Out> report;
  for (const LaxSample<J>& smp : samples) {
    ProofState<Out> lhs = state_subst(rho(smp.gamma, smp.goal), smp.s);
    ProofState<Out> rhs = rho(smp.gamma_prime, subst(smp.goal, smp.s));
    if (!approx(lhs, rhs)) {
      if (report.counterexamples.size() < keep)
        report.counterexamples.push_back({report.checked, smp, lhs, rhs});
      ++report.violations;
    }
    ++report.checked;
  }
  return report;
}

}  // namespace dlcf

#endif  // DLCF_RULE_HPP_
