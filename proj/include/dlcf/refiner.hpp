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

// Rule registries, the derivability closure and refiner homomorphisms.

#ifndef DLCF_REFINER_HPP_
#define DLCF_REFINER_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlcf/rule.hpp"
#include "dlcf/state.hpp"
#include "dlcf/theory.hpp"

namespace dlcf {

template <class J>
class Refiner {
 public:
  using name_type = std::string;

  explicit Refiner(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  Refiner& add(Rule<J> rule) {
    if (contains(rule.name()))
      throw KernelError(ErrorCode::kIllFormed,
                        "rule '" + rule.name() + "' already registered");
    names_.push_back(rule.name());
    rules_.push_back(std::move(rule));
    return *this;
  }

  bool contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  const Rule<J>& lookup(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return rules_[i];
    throw KernelError(ErrorCode::kUnknownRuleName,
                      "unknown rule '" + std::string(name) + "'");
  }

  // Registration order.
  const std::vector<std::string>& names() const { return names_; }

  // Declares lo below hi. The order stays a partial order.
  void declare_below(const std::string& lo, const std::string& hi) {
    lookup(lo);
    lookup(hi);
    if (lo != hi && leq(hi, lo))
      throw KernelError(ErrorCode::kIllFormed,
                        "ordering '" + lo + "' below '" + hi +
                            "' would create a cycle");
    below_.insert({lo, hi});
  }

  // Reflexive-transitive closure of the declared pairs; discrete when
  // nothing was declared.
  bool leq(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    std::vector<std::string> todo{a};
    std::set<std::string> seen{a};
    while (!todo.empty()) {
      std::string cur = todo.back();
      todo.pop_back();
      for (const auto& [lo, hi] : below_) {
        if (lo != cur || seen.count(hi)) continue;
        if (hi == b) return true;
        seen.insert(hi);
        todo.push_back(hi);
      }
    }
    return false;
  }

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Rule<J>> rules_;
  std::set<std::pair<std::string, std::string>> below_;
};

// Trees of rule names: a leaf is a rule, a branch composes its root with
// one tree per subgoal.
class RuleTree {
 public:
  static RuleTree leaf(std::string name) {
    RuleTree t;
    t.name_ = std::move(name);
    return t;
  }
  static RuleTree branch(RuleTree root, std::vector<RuleTree> children);

  bool is_leaf() const { return node_ == nullptr; }
  const std::string& name() const { return name_; }
  const RuleTree& root() const;
  const std::vector<RuleTree>& children() const;

  friend bool operator==(const RuleTree& a, const RuleTree& b);
  std::string to_string() const;

 private:
  struct Branch;
  std::string name_;
  std::shared_ptr<const Branch> node_;
};

struct RuleTree::Branch {
  RuleTree root;
  std::vector<RuleTree> children;
};

inline RuleTree RuleTree::branch(RuleTree root,
                                 std::vector<RuleTree> children) {
  RuleTree t;
  t.node_ = std::make_shared<const Branch>(
      Branch{std::move(root), std::move(children)});
  return t;
}

inline const RuleTree& RuleTree::root() const { return node_->root; }
inline const std::vector<RuleTree>& RuleTree::children() const {
  return node_->children;
}

inline bool operator==(const RuleTree& a, const RuleTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.name() == b.name();
  return a.root() == b.root() && a.children() == b.children();
}

inline std::string RuleTree::to_string() const {
  if (is_leaf()) return name_;
  std::string out = "(" + root().to_string() + "; [";
  for (std::size_t i = 0; i < children().size(); ++i)
    out += (i ? ", " : "") + children()[i].to_string();
  return out + "])";
}

template <class J>
Rule<J> interp_closure(const Refiner<J>& ref, const RuleTree& t) {
  if (t.is_leaf()) return ref.lookup(t.name());
  std::vector<Rule<J>> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(interp_closure(ref, c));
  return rule_seq(interp_closure(ref, t.root()), std::move(kids));
}

// The derivability closure viewed as a refiner over rule trees.
template <class J>
class Closure {
 public:
  using name_type = RuleTree;

  explicit Closure(const Refiner<J>& ref) : ref_(&ref) {}

  Rule<J> lookup(const RuleTree& t) const { return interp_closure(*ref_, t); }

  // Leaves by the base order, branches root-and-pointwise.
  bool leq(const RuleTree& a, const RuleTree& b) const {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return ref_->leq(a.name(), b.name());
    if (a.children().size() != b.children().size()) return false;
    if (!leq(a.root(), b.root())) return false;
    for (std::size_t i = 0; i < a.children().size(); ++i)
      if (!leq(a.children()[i], b.children()[i])) return false;
    return true;
  }

 private:
  const Refiner<J>* ref_;
};

// A renaming of source rules into a target (a Refiner or a Closure).
template <class J, class Target>
struct RefinerHom {
  const Refiner<J>* source;
  const Target* target;
  std::function<typename Target::name_type(const std::string&)> rename;
};

template <class J>
RefinerHom<J, Refiner<J>> identity_hom(const Refiner<J>& ref) {
  return {&ref, &ref, [](const std::string& n) { return n; }};
}

template <class J>
RefinerHom<J, Closure<J>> leaf_embedding(const Refiner<J>& ref,
                                         const Closure<J>& closure) {
  return {&ref, &closure, [](const std::string& n) { return RuleTree::leaf(n); }};
}

template <class J>
struct HomSample {
  Context gamma;
  J goal;
};

template <class J>
struct HomCounterexample {
  std::string rule;
  std::size_t sample;
  ProofState<J> source_result;
  ProofState<J> target_result;
};

template <class J>
struct HomReport {
  std::size_t checked = 0;
  std::vector<std::pair<std::string, std::string>> order_violations;
  std::vector<HomCounterexample<J>> counterexamples;
  bool ok() const { return order_violations.empty() && counterexamples.empty(); }
};

// Monotone renaming, and R0(r)(X) below R1(rename r)(X) on every sample.
template <class J, class Target, class Samples>
HomReport<J> check_hom(const RefinerHom<J, Target>& h, const Samples& samples) {
  HomReport<J> report;
  const auto& names = h.source->names();
  for (const auto& a : names)
    for (const auto& b : names)
      if (h.source->leq(a, b) && !h.target->leq(h.rename(a), h.rename(b)))
        report.order_violations.push_back({a, b});
  for (const auto& r : names) {
    const Rule<J>& lhs = h.source->lookup(r);
    Rule<J> rhs = h.target->lookup(h.rename(r));
    std::size_t i = 0;
    for (const HomSample<J>& smp : samples) {
      ProofState<J> a = lhs(smp.gamma, smp.goal);
      ProofState<J> b = rhs(smp.gamma, smp.goal);
      if (!approx(a, b)) report.counterexamples.push_back({r, i, a, b});
      ++report.checked;
      ++i;
    }
  }
  return report;
}

}  // namespace dlcf

#endif  // DLCF_REFINER_HPP_
