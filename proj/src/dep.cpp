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

#include <optional>
#include <utility>
#include <vector>

#include "dlcf/logics.hpp"
#include "dlcf/script.hpp"
#include "goal_lexer.hpp"

namespace dlcf {
namespace dep {
namespace {

OperatorRef make_op(std::string name, std::vector<Sort> arity, Sort result,
                    int binder = -1) {
  return std::make_shared<const Operator>(
      Operator{std::move(name), std::move(arity), std::move(result), binder});
}

struct Signature {
  OperatorRef top_op = make_op("top", {}, prop_sort());
  OperatorRef or_op = make_op("or", {prop_sort(), prop_sort()}, prop_sort());
  OperatorRef eq_op = make_op("eq", {exp_sort(), exp_sort()}, prop_sort());
  OperatorRef sig_op =
      make_op("sig", {prop_sort(), exp_sort(), prop_sort()}, prop_sort(), 1);
  OperatorRef tt_op = make_op("tt", {}, exp_sort());
  OperatorRef refl_op = make_op("refl", {}, exp_sort());
  OperatorRef inl_op = make_op("inl", {exp_sort()}, exp_sort());
  OperatorRef pair_op = make_op("pair", {exp_sort(), exp_sort()}, exp_sort());
  JudgmentStructure judgments{"dep"};
  FormRef true_form;

  Signature() {
    true_form =
        judgments.add_form("true", {prop_sort()}, Context{{"e", exp_sort()}});
  }
};

const Signature& signature() {
  static const Signature s;
  return s;
}

using State = ProofState<Judgment>;
using Env = std::vector<std::pair<std::string, std::string>>;

bool true_of(const Judgment& x, std::string_view head) {
  return x.name() == "true" && x.arg(0).is_op(head);
}

bool true_of_var(const Judgment& x) {
  return x.name() == "true" && x.arg(0).is_var();
}

std::string base_of(const std::string& name) {
  return name.substr(0, name.find('#'));
}

std::string show(const Term& t, Env& env) {
  if (t.is_var()) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == t.name()) return it->second;
    return t.name();
  }
  if (t.is_lit() || t.args().empty()) return t.name();
  if (t.is_op("sig")) {
    const std::string& x = t.args()[1].name();
    const Term& body = t.args()[2];
    Context fv = free_vars(body);
    std::string shown = fresh(base_of(x), [&](std::string_view n) {
      for (const auto& b : fv)
        if (b.name != x && b.name == n) return true;
      for (const auto& [from, to] : env)
        if (to == n) return true;
      return false;
    });
    std::string a = show(t.args()[0], env);
    env.emplace_back(x, shown);
    std::string b = show(body, env);
    env.pop_back();
    return "sig(" + shown + ". " + b + ", " + a + ")";
  }
  std::string out = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i)
    out += (i ? ", " : "") + show(t.args()[i], env);
  return out + ")";
}

bool keyword(std::string_view id) {
  return id == "true" || id == "top" || id == "or" || id == "eq" ||
         id == "sig" || id == "tt" || id == "refl" || id == "inl" ||
         id == "pair";
}

class GoalParser {
 public:
  explicit GoalParser(std::string_view src) : lx_(src) {}

  Judgment goal() {
    lx_.expect_word("true");
    Judgment x = is_true(prop());
    lx_.finish();
    return x;
  }

 private:
  Term prop() {
    if (lx_.accept_word("top")) return top();
    if (lx_.accept_word("or")) {
      lx_.expect('(');
      Term p = prop();
      lx_.expect(',');
      Term q = prop();
      lx_.expect(')');
      return or_(p, q);
    }
    if (lx_.accept_word("eq")) {
      lx_.expect('(');
      Term a = exp();
      lx_.expect(',');
      Term b = exp();
      lx_.expect(')');
      return eq(a, b);
    }
    if (lx_.accept_word("sig")) {
      lx_.expect('(');
      if (keyword(lx_.peek_ident())) lx_.error("expected a variable");
      std::string x = lx_.ident();
      lx_.expect('.');
      std::string bound = bound_name(x, counter_++);
      scope_.emplace_back(x, bound);
      Term b = prop();
      scope_.pop_back();
      lx_.expect(',');
      Term a = prop();
      lx_.expect(')');
      return sig(a, bound, b);
    }
    std::string_view id = lx_.peek_ident();
    if (id.empty() || keyword(id)) lx_.error("expected a proposition");
    return prop_var(lx_.ident());
  }

  Term exp() {
    if (lx_.accept_word("tt")) return tt();
    if (lx_.accept_word("refl")) return refl();
    if (lx_.accept_word("inl")) {
      lx_.expect('(');
      Term e = exp();
      lx_.expect(')');
      return inl(e);
    }
    if (lx_.accept_word("pair")) {
      lx_.expect('(');
      Term a = exp();
      lx_.expect(',');
      Term b = exp();
      lx_.expect(')');
      return pair(a, b);
    }
    std::string_view id = lx_.peek_ident();
    if (id.empty() || keyword(id)) lx_.error("expected an expression");
    std::string name = lx_.ident();
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return exp_var(it->second);
    return exp_var(name);
  }

  internal::GoalLexer lx_;
  Env scope_;
  std::size_t counter_ = 0;
};

// Binder for a new subgoal, avoiding the context and the names already
// handed out.
std::string pick(std::string_view base, Context& taken) {
  std::string n = fresh(base, taken);
  taken.push(n, exp_sort());
  return n;
}

Context taken_by(const Context& gamma, const Judgment& x) {
  Context taken = gamma;
  for (const auto& b : free_vars(x))
    if (!taken.contains(b.name)) taken.push(b.name, b.sort);
  return taken;
}

}  // namespace

Sort prop_sort() { return Sort{"prop"}; }
Sort exp_sort() { return Sort{"exp"}; }

Term top() { return Term::apply(signature().top_op, {}); }
Term or_(Term p, Term q) {
  return Term::apply(signature().or_op, {std::move(p), std::move(q)});
}
Term eq(Term a, Term b) {
  return Term::apply(signature().eq_op, {std::move(a), std::move(b)});
}
Term sig(Term a, std::string x, Term b) {
  return Term::apply(signature().sig_op,
                     {std::move(a), exp_var(std::move(x)), std::move(b)});
}
Term tt() { return Term::apply(signature().tt_op, {}); }
Term refl() { return Term::apply(signature().refl_op, {}); }
Term inl(Term e) { return Term::apply(signature().inl_op, {std::move(e)}); }
Term pair(Term a, Term b) {
  return Term::apply(signature().pair_op, {std::move(a), std::move(b)});
}
Term prop_var(std::string name) {
  return Term::var(std::move(name), prop_sort());
}
Term exp_var(std::string name) { return Term::var(std::move(name), exp_sort()); }

std::string bound_name(std::string_view base, std::size_t k) {
  return std::string(base) + "#" + std::to_string(k);
}

Judgment is_true(Term p) {
  return Judgment(signature().true_form, {std::move(p)});
}

Rule<Judgment> or_i1() {
  return ClauseTable<Judgment>("or_i1")
      .state("true or(p, q)",
             [](const Context& gamma,
                const Judgment& x) -> std::optional<State> {
               if (!true_of(x, "or")) return std::nullopt;
               Context taken = taken_by(gamma, x);
               std::string h = pick("x", taken);
               Telescope<Judgment> psi;
               psi.push_back({{h}, is_true(x.arg(0).args()[0])});
               return State::open(std::move(psi), {inl(exp_var(h))},
                                  output(x));
             })
      .unsuccess("true p", true_of_var)
      .build();
}

Rule<Judgment> top_i() {
  return ClauseTable<Judgment>("top_i")
      .state("true top",
             [](const Context&, const Judgment& x) -> std::optional<State> {
               if (!true_of(x, "top")) return std::nullopt;
               return State::open({}, {tt()}, output(x));
             })
      .unsuccess("true p", true_of_var)
      .build();
}

Rule<Judgment> eq_refl() {
  return ClauseTable<Judgment>("eq_refl")
      .state("true eq(a, a)",
             [](const Context&, const Judgment& x) -> std::optional<State> {
               if (!true_of(x, "eq")) return std::nullopt;
               const auto& args = x.arg(0).args();
               if (!alpha_eq(args[0], args[1])) return std::nullopt;
               return State::open({}, {refl()}, output(x));
             })
      .unsuccess("true eq(a, b) with variables",
                 [](const Judgment& x) {
                   if (!true_of(x, "eq")) return false;
                   const auto& args = x.arg(0).args();
                   return has_free_vars(args[0]) || has_free_vars(args[1]);
                 })
      .unsuccess("true p", true_of_var)
      .build();
}

Rule<Judgment> sig_i() {
  return ClauseTable<Judgment>("sig_i")
      .state("true sig(x. b, a)",
             [](const Context& gamma,
                const Judgment& x) -> std::optional<State> {
               if (!true_of(x, "sig")) return std::nullopt;
               const Term& p = x.arg(0);
               const Term& a = p.args()[0];
               const std::string& bound = p.args()[1].name();
               const Term& b = p.args()[2];
               Context taken = taken_by(gamma, x);
               std::string m = pick("m", taken);
               std::string n = pick("n", taken);
               Context fv = free_vars(b);
               Term b_at_m = subst_apply(b, renaming(fv, {{bound, m}}));
               Telescope<Judgment> psi;
               psi.push_back({{m}, is_true(a)});
               psi.push_back({{n}, is_true(b_at_m)});
               return State::open(std::move(psi),
                                  {pair(exp_var(m), exp_var(n))}, output(x));
             })
      .unsuccess("true p", true_of_var)
      .build();
}

}  // namespace dep

const Logic& dep_logic() {
  static const Logic logic = [] {
    Logic l{"dep", dep::signature().judgments, Refiner<Judgment>("dep"), {},
            [](std::string_view src) { return dep::GoalParser(src).goal(); }};
    l.refiner.add(dep::or_i1());
    l.refiner.add(dep::top_i());
    l.refiner.add(dep::eq_refl());
    l.refiner.add(dep::sig_i());
    l.printer.term = [](const Term& t) {
      dep::Env env;
      return dep::show(t, env);
    };
    return l;
  }();
  return logic;
}

}  // namespace dlcf
