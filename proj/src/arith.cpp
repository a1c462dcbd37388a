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

#include "dlcf/logics.hpp"
#include "dlcf/script.hpp"
#include "goal_lexer.hpp"

namespace dlcf {
namespace arith {
namespace {

struct Signature {
  OperatorRef num_op;
  OperatorRef plus_op;
  JudgmentStructure judgments{"arith"};
  FormRef eval_form;
  FormRef add_form;

  Signature() {
    num_op = std::make_shared<const Operator>(
        Operator{"num", {num_sort()}, exp_sort()});
    plus_op = std::make_shared<const Operator>(
        Operator{"plus", {exp_sort(), exp_sort()}, exp_sort()});
    eval_form = judgments.add_form(
        "eval", {exp_sort()}, Context{{"c", num_sort()}, {"v", num_sort()}});
    add_form = judgments.add_form("add", {num_sort(), num_sort()},
                                  Context{{"n", num_sort()}});
  }
};

const Signature& sig() {
  static const Signature s;
  return s;
}

using State = ProofState<Judgment>;

bool is_eval(const Judgment& x) { return x.name() == "eval"; }
bool is_add(const Judgment& x) { return x.name() == "add"; }

std::string show(const Term& t) {
  if (t.is_op("num")) return "num " + show(t.args()[0]);
  if (t.is_op("plus")) {
    const Term& r = t.args()[1];
    return show(t.args()[0]) + " + " +
           (r.is_op("plus") ? "(" + show(r) + ")" : show(r));
  }
  return t.name();
}

Term parse_nat(internal::GoalLexer& lx) {
  if (lx.peek_digit()) return lit(Natural(lx.digits()));
  std::string_view id = lx.peek_ident();
  if (id.empty() || id == "num" || id == "eval" || id == "add")
    lx.error("expected a number");
  return num_var(lx.ident());
}

Term parse_exp(internal::GoalLexer& lx);

Term parse_atom(internal::GoalLexer& lx) {
  if (lx.accept('(')) {
    Term e = parse_exp(lx);
    lx.expect(')');
    return e;
  }
  if (lx.accept_word("num")) return num(parse_nat(lx));
  std::string_view id = lx.peek_ident();
  if (id.empty() || id == "eval" || id == "add")
    lx.error("expected an expression");
  return exp_var(lx.ident());
}

Term parse_exp(internal::GoalLexer& lx) {
  Term e = parse_atom(lx);
  while (lx.accept('+')) e = plus(e, parse_atom(lx));
  return e;
}

Judgment parse_goal(std::string_view src) {
  internal::GoalLexer lx(src);
  if (lx.accept_word("eval")) {
    Judgment x = eval(parse_exp(lx));
    lx.finish();
    return x;
  }
  if (lx.accept_word("add")) {
    Term m = parse_nat(lx);
    Term n = parse_nat(lx);
    lx.finish();
    return add(m, n);
  }
  lx.error("expected 'eval' or 'add'");
}

}  // namespace

Sort num_sort() { return Sort{"num"}; }
Sort exp_sort() { return Sort{"exp"}; }

Term lit(Natural n) { return Term::lit(std::move(n), num_sort()); }
Term num(Term n) { return Term::apply(sig().num_op, {std::move(n)}); }
Term plus(Term a, Term b) {
  return Term::apply(sig().plus_op, {std::move(a), std::move(b)});
}
Term num_var(std::string name) { return Term::var(std::move(name), num_sort()); }
Term exp_var(std::string name) { return Term::var(std::move(name), exp_sort()); }

Judgment eval(Term e) { return Judgment(sig().eval_form, {std::move(e)}); }
Judgment add(Term m, Term n) {
  return Judgment(sig().add_form, {std::move(m), std::move(n)});
}

Rule<Judgment> num_eval() {
  return ClauseTable<Judgment>("num_eval")
      .state("eval (num m)",
             [](const Context&, const Judgment& x) -> std::optional<State> {
               if (!is_eval(x) || !x.arg(0).is_op("num")) return std::nullopt;
               return State::open({}, {lit(0), x.arg(0).args()[0]},
                                  output(x));
             })
      .unsuccess("eval x", [](const Judgment& x) {
        return is_eval(x) && x.arg(0).is_var();
      })
      .build();
}

Rule<Judgment> plus_eval() {
  return ClauseTable<Judgment>("plus_eval")
      .state(
          "eval (e1 + e2)",
          [](const Context& gamma, const Judgment& x) -> std::optional<State> {
            if (!is_eval(x) || !x.arg(0).is_op("plus")) return std::nullopt;
            Context taken = gamma;
            for (const auto& b : free_vars(x))
              if (!taken.contains(b.name)) taken.push(b.name, b.sort);
            auto pick = [&](std::string_view base, const Context& out) {
              auto names = fresh_binder(base, out, [&](std::string_view n) {
                return taken.contains(n);
              });
              for (std::size_t i = 0; i < names.size(); ++i)
                taken.push(names[i], out[i].sort);
              return names;
            };
            const Context& ev = sig().eval_form->output;
            const Context& ad = sig().add_form->output;
            auto xs = pick("x", ev);
            auto ys = pick("y", ev);
            auto zc = pick("zc", ad);
            auto zc1 = pick("zc'", ad);
            auto zv = pick("zv", ad);
            auto var = [](const std::string& n) { return num_var(n); };
            Telescope<Judgment> psi;
            psi.push_back({xs, eval(x.arg(0).args()[0])});
            psi.push_back({ys, eval(x.arg(0).args()[1])});
            psi.push_back({zc, add(var(xs[0]), var(ys[0]))});
            psi.push_back({zc1, add(lit(1), var(zc[0]))});
            psi.push_back({zv, add(var(xs[1]), var(ys[1]))});
            return State::open(std::move(psi), {var(zc1[0]), var(zv[0])},
                               output(x));
          })
      .unsuccess("eval x", [](const Judgment& x) {
        return is_eval(x) && x.arg(0).is_var();
      })
      .build();
}

Rule<Judgment> add_rule() {
  return ClauseTable<Judgment>("add")
      .state("add m n",
             [](const Context&, const Judgment& x) -> std::optional<State> {
               if (!is_add(x) || !x.arg(0).is_lit() || !x.arg(1).is_lit())
                 return std::nullopt;
               return State::open(
                   {}, {lit(x.arg(0).value() + x.arg(1).value())}, output(x));
             })
      .unsuccess("add _ _", [](const Judgment& x) { return is_add(x); })
      .build();
}

Tactic<Judgment> auto_aux() {
  return orelse(orelse(from_rule(num_eval()), from_rule(plus_eval())),
                from_rule(add_rule()));
}

Tactic<Judgment> auto_naive() { return repeat(auto_aux()); }

Tactic<Judgment> auto_tactic() {
  return seq(id_tactic<Judgment>(), repeat_mt(all_mt(auto_aux())));
}

}  // namespace arith

const Logic& arith_logic() {
  static const Logic logic = [] {
    Logic l{"arith", arith::sig().judgments, Refiner<Judgment>("arith"), {},
            arith::parse_goal};
    l.refiner.add(arith::num_eval());
    l.refiner.add(arith::plus_eval());
    l.refiner.add(arith::add_rule());
    l.printer.term = [](const Term& t) { return arith::show(t); };
    l.printer.atomic = [](const Term& t) { return !t.is_op("plus"); };
    return l;
  }();
  return logic;
}

const Logic* find_logic(std::string_view name) {
  if (name == "arith") return &arith_logic();
  if (name == "dep") return &dep_logic();
  return nullptr;
}

}  // namespace dlcf
