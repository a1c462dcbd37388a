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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "dlcf/theory.hpp"

namespace {

using dlcf::Context;
using dlcf::ErrorCode;
using dlcf::KernelError;
using dlcf::Operator;
using dlcf::OperatorRef;
using dlcf::Sort;
using dlcf::Substitution;
using dlcf::Term;

const Sort kS{"s"};
const Sort kN{"n"};

OperatorRef op(std::string name, std::vector<Sort> arity, Sort result,
               int binder = -1) {
  return std::make_shared<const Operator>(
      Operator{std::move(name), std::move(arity), std::move(result), binder});
}

const OperatorRef kF = op("f", {kS, kS}, kS);
const OperatorRef kC = op("c", {}, kS);
const OperatorRef kSucc = op("succ", {kN}, kN);
// lam(x. body)
const OperatorRef kLam = op("lam", {kS, kS}, kS, 0);

Term v(const std::string& n) { return Term::var(n, kS); }
Term f(Term a, Term b) { return Term::apply(kF, {std::move(a), std::move(b)}); }
Term c() { return Term::apply(kC, {}); }
Term lam(const std::string& x, Term body) {
  return Term::apply(kLam, {v(x), std::move(body)});
}

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars,
                 int d) {
  std::uniform_int_distribution<int> k(0, d <= 0 ? 1 : 3);
  switch (k(rng)) {
    case 0:
      return c();
    case 1:
      return v(vars[rng() % vars.size()]);
    default:
      return f(random_term(rng, vars, d - 1), random_term(rng, vars, d - 1));
  }
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const KernelError& e) {
    return e.code();
  }
  FAIL("expected a KernelError");
  return ErrorCode::kIllFormed;
}

}  // namespace

TEST_SUITE("theory") {
  TEST_CASE("contexts keep order and reject duplicates") {
    Context g{{"a", kS}, {"b", kN}};
    CHECK(g.names() == std::vector<std::string>{"a", "b"});
    CHECK(g.find("b")->sort == kN);
    CHECK_FALSE(g.contains("z"));
    CHECK(code_of([&] { g.push("a", kN); }) == ErrorCode::kContextMismatch);
    CHECK(dlcf::same_sorts(g, Context{{"x", kS}, {"y", kN}}));
    CHECK_FALSE(dlcf::same_sorts(g, Context{{"x", kN}, {"y", kS}}));
  }

  TEST_CASE("apply checks arity and sorts") {
    CHECK(code_of([] { Term::apply(kF, {c()}); }) == ErrorCode::kUnsortedTerm);
    CHECK(code_of([] { Term::apply(kSucc, {c()}); }) ==
          ErrorCode::kUnsortedTerm);
    Term t = f(v("a"), c());
    CHECK(t.sort() == kS);
    CHECK(dlcf::to_string(t) == "f(a, c)");
  }

  TEST_CASE("free variables come in order of first occurrence") {
    Term t = f(f(v("b"), v("a")), v("b"));
    CHECK(dlcf::free_vars(t).names() == std::vector<std::string>{"b", "a"});
    CHECK_FALSE(dlcf::has_free_vars(f(c(), c())));
    // Bound occurrences do not count.
    Term l = lam("x", f(v("x"), v("y")));
    CHECK(dlcf::free_vars(l).names() == std::vector<std::string>{"y"});
  }

  TEST_CASE("depth counts leaves as one") {
    CHECK(dlcf::depth(c()) == 1);
    CHECK(dlcf::depth(v("a")) == 1);
    CHECK(dlcf::depth(f(c(), f(c(), v("a")))) == 3);
    CHECK(dlcf::depth(Term::lit(7, kN)) == 1);
  }

  TEST_CASE("alpha equality respects binders") {
    CHECK(dlcf::alpha_eq(lam("x", f(v("x"), v("y"))),
                         lam("z", f(v("z"), v("y")))));
    CHECK_FALSE(dlcf::alpha_eq(lam("x", f(v("x"), v("y"))),
                               lam("y", f(v("y"), v("y")))));
    CHECK_FALSE(dlcf::alpha_eq(v("a"), v("b")));
    CHECK(dlcf::alpha_eq(Term::lit(3, kN), Term::lit(3, kN)));
    CHECK_FALSE(dlcf::alpha_eq(Term::lit(3, kN), Term::lit(4, kN)));
  }

  TEST_CASE("literals are arbitrary precision") {
    dlcf::Natural big("123456789012345678901234567890");
    Term t = Term::lit(big, kN);
    CHECK(t.value() == big);
    CHECK(dlcf::to_string(t) == "123456789012345678901234567890");
  }

  TEST_CASE("substitution is checked and strict") {
    Context src{{"p", kS}};
    Context tgt{{"a", kS}};
    CHECK(code_of([&] { Substitution(src, tgt, {}); }) ==
          ErrorCode::kContextMismatch);
    CHECK(code_of([&] { Substitution(src, tgt, {v("q")}); }) ==
          ErrorCode::kUnsortedTerm);
    CHECK(code_of([&] { Substitution(src, tgt, {Term::lit(1, kN)}); }) ==
          ErrorCode::kUnsortedTerm);
    Substitution s(src, tgt, {f(v("p"), c())});
    CHECK(dlcf::subst_apply(f(v("a"), v("a")), s) ==
          f(f(v("p"), c()), f(v("p"), c())));
    CHECK(code_of([&] { dlcf::subst_apply(v("zz"), s); }) ==
          ErrorCode::kUnsortedTerm);
  }

  TEST_CASE("substitution under a binder avoids capture") {
    // (lam x. f(x, a))[a := x] must not capture the image.
    Context src{{"x", kS}};
    Context tgt{{"a", kS}};
    Substitution s(src, tgt, {v("x")});
    Term out = dlcf::subst_apply(lam("x", f(v("x"), v("a"))), s);
    CHECK(dlcf::alpha_eq(out, lam("z", f(v("z"), v("x")))));
    CHECK_FALSE(dlcf::alpha_eq(out, lam("z", f(v("z"), v("z")))));
  }

  TEST_CASE("identity and composition laws on random terms") {
    std::mt19937_64 rng(7);
    Context a{{"p", kS}, {"q", kS}};
    Context b{{"u", kS}, {"w", kS}};
    Context c3{{"x", kS}, {"y", kS}, {"z", kS}};
    for (int i = 0; i < 300; ++i) {
      Substitution s1(a, b,
                      {random_term(rng, {"p", "q"}, 2),
                       random_term(rng, {"p", "q"}, 2)});
      Substitution s2(b, c3,
                      {random_term(rng, {"u", "w"}, 2),
                       random_term(rng, {"u", "w"}, 2),
                       random_term(rng, {"u", "w"}, 2)});
      Term t = random_term(rng, {"x", "y", "z"}, 3);
      Substitution both = dlcf::subst_compose(s1, s2);
      CHECK(dlcf::alpha_eq(dlcf::subst_apply(t, both),
                           dlcf::subst_apply(dlcf::subst_apply(t, s2), s1)));
      CHECK(dlcf::alpha_eq(dlcf::subst_apply(t, Substitution::identity(c3)),
                           t));
      CHECK(dlcf::alpha_eq(
          dlcf::subst_compose(Substitution::identity(a), s1), s1));
    }
  }

  TEST_CASE("composition needs matching boundaries") {
    Substitution s1 = Substitution::identity(Context{{"a", kS}});
    Substitution s2 = Substitution::identity(Context{{"b", kS}});
    CHECK(code_of([&] { dlcf::subst_compose(s1, s2); }) ==
          ErrorCode::kContextMismatch);
  }

  TEST_CASE("projection, weakening and renaming") {
    Context g{{"a", kS}};
    Context d{{"b", kS}};
    Substitution p = dlcf::projection(g, d);
    CHECK(p.source().names() == std::vector<std::string>{"a", "b"});
    CHECK(p.target().names() == std::vector<std::string>{"b"});
    CHECK(dlcf::subst_apply(v("b"), p) == v("b"));

    Substitution s(g, d, {f(v("a"), c())});
    Substitution w = dlcf::weaken(s, Context{{"extra", kS}});
    CHECK(w.source().names() == std::vector<std::string>{"a", "extra"});
    CHECK(dlcf::subst_apply(v("b"), w) == f(v("a"), c()));

    Substitution r = dlcf::renaming(Context{{"a", kS}, {"b", kS}}, {{"a", "m"}});
    CHECK(r.source().names() == std::vector<std::string>{"m", "b"});
    CHECK(dlcf::subst_apply(f(v("a"), v("b")), r) == f(v("m"), v("b")));
  }

  TEST_CASE("shadowed bindings take the newest image") {
    Substitution s;
    s.add_source("a", kS);
    s.bind("x", v("a"));
    s.bind("x", c());
    CHECK(s.target().size() == 1);
    CHECK(*s.lookup("x") == c());
  }

  TEST_CASE("fresh names") {
    Context avoid{{"x", kS}, {"x1", kS}};
    CHECK(dlcf::fresh("x", avoid) == "x2");
    CHECK(dlcf::fresh("y", avoid) == "y");
    dlcf::NameSupply supply;
    Context joined = dlcf::concat(Context{{"a", kS}}, Context{{"a", kN}}, supply);
    CHECK(joined.size() == 2);
    CHECK(joined[1].name != "a");
    CHECK(joined[1].sort == kN);
    CHECK(supply.counter() == 1);
  }
}
