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

// Tactic scripts: syntax trees, parser, printer and interpreter.
//
//   t ::= rule | id | t | t | t* | t ; m | ( t )
//   m ::= all(t) | [t, ..., t] | m* | ( m )
//
// '|' is loosest and left-associative, ';' binds tighter and is
// left-associative, postfix '*' binds tightest.

#ifndef DLCF_SCRIPT_HPP_
#define DLCF_SCRIPT_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlcf/refiner.hpp"
#include "dlcf/tactic.hpp"
#include "dlcf/theory.hpp"

namespace dlcf {

class ParseError : public KernelError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : KernelError(ErrorCode::kParse,
                    "at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class MTac;

class Tac {
 public:
  enum class Kind { kRule, kId, kOrElse, kStar, kSeq };

  static Tac rule(std::string name);
  static Tac id();
  static Tac orelse(Tac a, Tac b);
  static Tac star(Tac t);
  static Tac seq(Tac t, MTac m);

  Kind kind() const;
  const std::string& name() const;  // kRule
  const Tac& lhs() const;           // kOrElse, kSeq, kStar
  const Tac& rhs() const;           // kOrElse
  const MTac& multi() const;        // kSeq

  friend bool operator==(const Tac& a, const Tac& b);

 private:
  struct Node;
  explicit Tac(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

class MTac {
 public:
  enum class Kind { kAll, kEach, kStar };

  static MTac all(Tac t);
  static MTac each(std::vector<Tac> ts);
  static MTac star(MTac m);

  Kind kind() const;
  const Tac& body() const;                // kAll
  const std::vector<Tac>& items() const;  // kEach
  const MTac& inner() const;              // kStar

  friend bool operator==(const MTac& a, const MTac& b);

 private:
  struct Node;
  explicit MTac(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

Tac parse_script(std::string_view src);
std::string print(const Tac& t);
std::string print(const MTac& m);
// Debug view of the tree, e.g. Seq(Id, MStar(All(Rule(a)))).
std::string show(const Tac& t);
std::string show(const MTac& m);

// Called after every rule application made by an interpreted script.
template <class J>
using RuleHook = std::function<void(const std::string& rule, const J& goal,
                                    const ProofState<J>& result)>;

template <class J>
class Interpreter {
 public:
  explicit Interpreter(const Refiner<J>& ref, RuleHook<J> hook = {})
      : ref_(&ref), hook_(std::move(hook)) {}

  Tactic<J> tactic(const Tac& t) const {
    switch (t.kind()) {
      case Tac::Kind::kRule:
        return rule_tactic(t.name());
      case Tac::Kind::kId:
        return id_tactic<J>();
      case Tac::Kind::kOrElse:
        return orelse(tactic(t.lhs()), tactic(t.rhs()));
      case Tac::Kind::kStar:
        return repeat(tactic(t.lhs()));
      case Tac::Kind::kSeq:
        return seq(tactic(t.lhs()), multitactic(t.multi()));
    }
    throw KernelError(ErrorCode::kIllFormed, "bad script node");
  }

  Multitactic<J> multitactic(const MTac& m) const {
    switch (m.kind()) {
      case MTac::Kind::kAll:
        return all_mt(tactic(m.body()));
      case MTac::Kind::kEach: {
        std::vector<Tactic<J>> ts;
        for (const auto& t : m.items()) ts.push_back(tactic(t));
        return each_mt(std::move(ts));
      }
      case MTac::Kind::kStar:
        return repeat_mt(multitactic(m.inner()));
    }
    throw KernelError(ErrorCode::kIllFormed, "bad script node");
  }

 private:
  Tactic<J> rule_tactic(const std::string& name) const {
    Rule<J> rho = ref_->lookup(name);
    if (!hook_) return from_rule(std::move(rho));
    auto hook = hook_;
    return Tactic<J>([rho, hook](const Context& gamma, const J& x) {
      ProofState<J> s = rho(gamma, x);
      hook(rho.name(), x, s);
      return now(std::move(s));
    });
  }

  const Refiner<J>* ref_;
  RuleHook<J> hook_;
};

template <class J>
Tactic<J> interp_t(const Refiner<J>& ref, const Tac& t) {
  return Interpreter<J>(ref).tactic(t);
}

template <class J>
Multitactic<J> interp_m(const Refiner<J>& ref, const MTac& m) {
  return Interpreter<J>(ref).multitactic(m);
}

}  // namespace dlcf

#endif  // DLCF_SCRIPT_HPP_
