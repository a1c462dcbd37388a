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

#include <string>
#include <vector>

#include "doctest.h"
#include "dlcf/delay.hpp"
#include "dlcf/logics.hpp"
#include "dlcf/tactic.hpp"
#include "support/generators.hpp"

namespace {

using namespace dlcf;
using namespace dlcf::arith;
using dlcf::testing::State;

Term n(const std::string& name) { return num_var(name); }

Judgment two_plus_three() { return eval(plus(num(lit(2)), num(lit(3)))); }

State resolve(const Tactic<Judgment>& t, const Judgment& x,
              std::size_t fuel = 100000) {
  auto r = run(t(Context{}, x), Fuel{fuel});
  REQUIRE(r.resolved());
  return *r.value;
}

}  // namespace

TEST_SUITE("tactic") {
  TEST_CASE("delayed values count their steps") {
    CHECK(run(now(3), Fuel{0}).steps == 0);
    auto r = run(delay_by(5, 7), Fuel{10});
    CHECK(r.resolved());
    CHECK(*r.value == 7);
    CHECK(r.steps == 5);
    CHECK_FALSE(run(delay_by(5, 7), Fuel{4}).resolved());
    auto nev = run(never<int>(), Fuel{1000});
    CHECK_FALSE(nev.resolved());
    CHECK(nev.steps == 1000);
  }

  TEST_CASE("bind and fmap thread Laters through") {
    auto m = bind(delay_by(2, 3), [](int x) { return delay_by(1, x * 2); });
    auto r = run(m, Fuel{10});
    CHECK(*r.value == 6);
    CHECK(r.steps == 3);
    auto f = run(fmap(delay_by(4, 1), [](int x) { return x + 1; }), Fuel{10});
    CHECK(*f.value == 2);
    CHECK(f.steps == 4);
  }

  TEST_CASE("race takes the first to resolve, left on ties") {
    for (std::size_t k : {0, 1, 5, 40}) {
      auto r = run(race(never<int>(), delay_by(k, 9)), Fuel{100});
      CHECK(*r.value == 9);
      CHECK(r.steps == k);
    }
    CHECK(*run(race(delay_by(2, 1), delay_by(2, 2)), Fuel{10}).value == 1);
    CHECK(*run(race(delay_by(3, 1), delay_by(2, 2)), Fuel{10}).value == 2);
    CHECK_FALSE(run(race(never<int>(), never<int>()), Fuel{500}).resolved());
  }

  TEST_CASE("lub finds a resolving element of the sequence") {
    OmegaSequence<int> f = [](std::size_t i) {
      return i < 3 ? never<int>() : delay_by(2, static_cast<int>(i));
    };
    auto r = run(lub(f), Fuel{100});
    REQUIRE(r.resolved());
    CHECK(*r.value == 3);
    OmegaSequence<int> none = [](std::size_t) { return never<int>(); };
    CHECK_FALSE(run(lub(none), Fuel{2000}).resolved());
  }

  TEST_CASE("orelse falls through on Fail and Bot") {
    Context g{{"m", num_sort()}};
    auto t = orelse(from_rule(num_eval()), from_rule(add_rule()));
    CHECK(resolve(t, add(lit(2), lit(3))).complete());
    auto blocked = run(t(g, add(n("m"), lit(3))), Fuel{10});
    CHECK(blocked.value->is_bot());
    auto again = try_tactic(from_rule(add_rule()));
    State s = *run(again(g, add(n("m"), lit(3))), Fuel{10}).value;
    CHECK(alpha_eq(s, eta(g, add(n("m"), lit(3)))));
  }

  TEST_CASE("then applies the second tactic to every subgoal") {
    auto t = then_(from_rule(plus_eval()), from_rule(num_eval()));
    State s = resolve(t, two_plus_three());
    // Add goals are not Eval goals: num_eval fails on them.
    CHECK(s.is_fail());
    auto u = then_(from_rule(plus_eval()), try_tactic(from_rule(num_eval())));
    State v = resolve(u, two_plus_three());
    REQUIRE(v.is_open());
    CHECK(v.subgoals().size() == 3);
    CHECK(alpha_eq(v.subgoals()[2].goal, add(lit(2), lit(3))));
  }

  TEST_CASE("thenl sees earlier extracts") {
    auto t = thenl(from_rule(plus_eval()),
                   {from_rule(num_eval()), from_rule(num_eval()),
                    from_rule(add_rule()), from_rule(add_rule()),
                    from_rule(add_rule())});
    State s = resolve(t, two_plus_three());
    REQUIRE(s.complete());
    CHECK(s.validation()[0] == lit(1));
    CHECK(s.validation()[1] == lit(5));
  }

  TEST_CASE("each with too few tactics leaves the rest alone") {
    auto t = thenl(from_rule(plus_eval()), {from_rule(num_eval())});
    State s = resolve(t, two_plus_three());
    REQUIRE(s.is_open());
    CHECK(s.subgoals().size() == 4);
    CHECK(alpha_eq(s.subgoals()[0].goal, eval(num(lit(3)))));
  }

  TEST_CASE("depth-first auto stops with blocked subgoals") {
    State s = resolve(auto_naive(), two_plus_three());
    REQUIRE(s.is_open());
    const auto& g = s.subgoals();
    REQUIRE(g.size() == 3);
    CHECK(alpha_eq(g[0].goal, add(lit(0), lit(0))));
    CHECK(alpha_eq(g[1].goal, add(lit(1), n(g[0].binder[0]))));
    CHECK(alpha_eq(g[2].goal, add(lit(2), lit(3))));
  }

  TEST_CASE("breadth-first auto completes") {
    State s = resolve(auto_tactic(), two_plus_three());
    REQUIRE(s.complete());
    CHECK(s.validation()[0] == lit(1));
    CHECK(s.validation()[1] == lit(5));
    State t = resolve(auto_tactic(), eval(num(lit(4))));
    REQUIRE(t.complete());
    CHECK(t.validation()[0] == lit(0));
    CHECK(t.validation()[1] == lit(4));
  }

  TEST_CASE("literal repetition of all(auto_aux) collapses on nested sums") {
    // Each sub-state is repeated on its own, so an Add goal waiting on a
    // sibling that is still open comes back as Bot and the final
    // flattening collapses the lot. One level of + happens to survive
    // because the walk retries blocked goals once.
    auto literal = seq(id_tactic<Judgment>(),
                       repeat<State>(all_mt(auto_aux())));
    CHECK(resolve(literal, two_plus_three()).complete());
    Judgment nested =
        eval(plus(num(lit(1)), plus(num(lit(4)), num(lit(7)))));
    CHECK(resolve(literal, nested).is_bot());
    State s = resolve(auto_tactic(), nested);
    REQUIRE(s.complete());
    CHECK(s.validation()[1] == lit(12));
  }

  TEST_CASE("unsuccessful entries are restored to their goals") {
    Context n1{{"n", num_sort()}};
    Telescope<Judgment> psi;
    psi.push_back({{"x"}, add(lit(1), lit(1))});
    psi.push_back({{"y"}, add(n("x"), lit(1))});
    State s = State::open(psi, {n("y")}, n1);
    Telescope<State> results;
    results.push_back({{"x"}, State::open({}, {lit(2)}, n1)});
    results.push_back({{"y"}, State::bot(n1)});
    auto ss = ProofState<State>::open(results, {n("y")}, n1);
    auto kept = retain_unsuccessful(Context{}, s, ss);
    REQUIRE(kept.is_open());
    CHECK(kept.subgoals()[1].goal.is_open());
    State flat = mu(Context{}, kept);
    REQUIRE(flat.subgoals().size() == 1);
    CHECK(alpha_eq(flat.subgoals()[0].goal, add(lit(2), lit(1))));
  }

  TEST_CASE("fix of the identity tactical never resolves") {
    Tactical<Judgment, Judgment> self = [](Tactic<Judgment> t) { return t; };
    auto t = fix(self);
    for (std::size_t fuel : {0, 1, 10, 1000})
      CHECK_FALSE(run(t(Context{}, add(lit(1), lit(1))), Fuel{fuel}).resolved());
  }

  TEST_CASE("fix agrees with hand-built iterates") {
    Tactical<Judgment, Judgment> t = [](Tactic<Judgment> self) {
      return try_tactic(then_(auto_aux(), std::move(self)));
    };
    auto fixed = fix(t);
    for (const Judgment& x :
         {two_plus_three(), add(lit(4), lit(4)), eval(num(lit(1)))}) {
      auto got = run(fixed(Context{}, x), Fuel{10000});
      auto want = dlcf::testing::iterate_until_stable(t, Context{}, x, 10000);
      REQUIRE(got.resolved());
      REQUIRE(want.has_value());
      CHECK(alpha_eq(*got.value, *want));
    }
  }

  TEST_CASE("iterates are memoized") {
    int calls = 0;
    Iterates<Judgment, Judgment> it([&](Tactic<Judgment> t) {
      ++calls;
      return t;
    });
    it(5);
    it(3);
    it(5);
    CHECK(calls == 5);
  }

  TEST_CASE("await_tele resolves entries in order") {
    std::vector<PendingEntry<int>> es{{{"a"}, delay_by(2, 1)},
                                      {{"b"}, now(2)},
                                      {{"c"}, delay_by(1, 3)}};
    auto r = run(await_tele(es), Fuel{10});
    REQUIRE(r.resolved());
    CHECK(r.value->size() == 3);
    CHECK((*r.value)[2].goal == 3);
    CHECK(r.steps == 3);
  }
}
