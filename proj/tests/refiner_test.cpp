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
#include "dlcf/logics.hpp"
#include "dlcf/refiner.hpp"
#include "support/generators.hpp"

namespace {

using namespace dlcf;
using namespace dlcf::arith;
using dlcf::testing::State;

std::vector<HomSample<Judgment>> few_goals() {
  Context g{{"m", num_sort()}, {"e", exp_sort()}};
  return {{g, eval(plus(num(lit(2)), num(lit(3))))},
          {g, eval(exp_var("e"))},
          {g, add(lit(1), num_var("m"))},
          {g, add(lit(1), lit(2))},
          {g, eval(num(num_var("m")))}};
}

}  // namespace

TEST_SUITE("refiner") {
  TEST_CASE("registry") {
    Refiner<Judgment> r("toy");
    r.add(num_eval()).add(add_rule());
    CHECK(r.name() == "toy");
    CHECK(r.names() == std::vector<std::string>{"num_eval", "add"});
    CHECK(r.contains("add"));
    CHECK_THROWS_AS(r.add(add_rule()), KernelError);
    try {
      r.lookup("plus_eval");
      FAIL("lookup should throw");
    } catch (const KernelError& e) {
      CHECK(e.code() == ErrorCode::kUnknownRuleName);
    }
  }

  TEST_CASE("rule order is a partial order") {
    Refiner<Judgment> r;
    r.add(num_eval()).add(plus_eval()).add(add_rule());
    CHECK(r.leq("add", "add"));
    CHECK_FALSE(r.leq("add", "num_eval"));
    r.declare_below("add", "num_eval");
    r.declare_below("num_eval", "plus_eval");
    CHECK(r.leq("add", "plus_eval"));
    CHECK_FALSE(r.leq("plus_eval", "add"));
    CHECK_THROWS_AS(r.declare_below("plus_eval", "add"), KernelError);
    CHECK_THROWS_AS(r.declare_below("add", "nope"), KernelError);
  }

  TEST_CASE("rule trees") {
    RuleTree t = RuleTree::branch(RuleTree::leaf("plus_eval"),
                                  {RuleTree::leaf("num_eval"),
                                   RuleTree::leaf("num_eval")});
    CHECK_FALSE(t.is_leaf());
    CHECK(t.root() == RuleTree::leaf("plus_eval"));
    CHECK(t.to_string() == "(plus_eval; [num_eval, num_eval])");
    CHECK_FALSE(t == RuleTree::leaf("plus_eval"));
  }

  TEST_CASE("the closure interprets branches as derived rules") {
    const Refiner<Judgment>& ref = arith_logic().refiner;
    Closure<Judgment> cl(ref);
    RuleTree t = RuleTree::branch(RuleTree::leaf("plus_eval"),
                                  {RuleTree::leaf("num_eval"),
                                   RuleTree::leaf("num_eval")});
    Rule<Judgment> manual = rule_seq<Judgment, Judgment, Judgment>(
        plus_eval(), {num_eval(), num_eval()});
    for (const auto& smp : few_goals())
      CHECK(alpha_eq(cl.lookup(t)(smp.gamma, smp.goal),
                     manual(smp.gamma, smp.goal)));
    CHECK(cl.leq(t, t));
    CHECK_FALSE(cl.leq(t, RuleTree::leaf("plus_eval")));
  }

  TEST_CASE("homomorphism checks") {
    const Refiner<Judgment>& ref = arith_logic().refiner;
    Closure<Judgment> cl(ref);
    auto samples = few_goals();
    auto leaf = check_hom(leaf_embedding(ref, cl), samples);
    CHECK(leaf.ok());
    CHECK(leaf.checked == 3 * samples.size());
    CHECK(check_hom(identity_hom(ref), samples).ok());

    RefinerHom<Judgment, Refiner<Judgment>> swap{
        &ref, &ref, [](const std::string& n) {
          return n == "add" ? std::string("num_eval") : n;
        }};
    auto bad = check_hom(swap, samples);
    CHECK_FALSE(bad.ok());
    REQUIRE_FALSE(bad.counterexamples.empty());
    CHECK(bad.counterexamples[0].rule == "add");
  }

  TEST_CASE("a renaming must respect the order") {
    Refiner<Judgment> src;
    src.add(num_eval()).add(add_rule());
    src.declare_below("add", "num_eval");
    Refiner<Judgment> dst;
    dst.add(num_eval()).add(add_rule());
    auto report = check_hom(identity_hom(src), std::vector<HomSample<Judgment>>{});
    CHECK(report.ok());
    RefinerHom<Judgment, Refiner<Judgment>> h{
        &src, &dst, [](const std::string& n) { return n; }};
    auto r = check_hom(h, std::vector<HomSample<Judgment>>{});
    REQUIRE(r.order_violations.size() == 1);
    CHECK(r.order_violations[0].first == "add");
  }
}
