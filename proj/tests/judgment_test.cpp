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
#include "dlcf/judgment.hpp"
#include "dlcf/logics.hpp"

namespace {

using namespace dlcf;
using namespace dlcf::arith;

}  // namespace

TEST_SUITE("judgment") {
  TEST_CASE("forms register once and sort-check their arguments") {
    JudgmentStructure js("toy");
    Sort s{"s"};
    js.add_form("holds", {s}, Context{{"w", s}});
    CHECK_THROWS_AS(js.add_form("holds", {s}, Context{}), KernelError);
    CHECK_THROWS_AS(js.form("missing"), KernelError);
    CHECK_THROWS_AS(js.make("holds", {}), KernelError);
    CHECK_THROWS_AS(js.make("holds", {lit(1)}), KernelError);
    Judgment j = js.make("holds", {Term::var("a", s)});
    CHECK(js.check(Context{{"a", s}}, j));
    CHECK_FALSE(js.check(Context{}, j));
    CHECK(js.approx(j, j));
  }

  TEST_CASE("outputs of the arithmetic forms") {
    CHECK(output(eval(num(lit(1)))).names() ==
          std::vector<std::string>{"c", "v"});
    CHECK(output(add(lit(1), lit(2))).size() == 1);
  }

  TEST_CASE("substitution, free variables and alpha equality") {
    Judgment j = add(num_var("m"), lit(3));
    CHECK(free_vars(j).names() == std::vector<std::string>{"m"});
    Substitution s(Context{}, Context{{"m", num_sort()}}, {lit(2)});
    Judgment k = subst(j, s);
    CHECK(alpha_eq(k, add(lit(2), lit(3))));
    CHECK_FALSE(alpha_eq(j, k));
    CHECK_FALSE(alpha_eq(eval(num(lit(2))), add(lit(2), lit(2))));
  }

  TEST_CASE("rendering uses the logic's printer") {
    const Printer& p = arith_logic().printer;
    CHECK(render(eval(plus(num(lit(2)), num(lit(3)))), p) ==
          "eval (num 2 + num 3)");
    CHECK(render(add(lit(2), num_var("x")), p) == "add 2 x");
    CHECK(render(label(add(lit(2), lit(3)), 4), p) == "<add 2 3, 4>");
  }

  TEST_CASE("labels ride along substitution") {
    Labeled<Judgment> x = label(add(num_var("m"), lit(0)), 1);
    Substitution s(Context{}, Context{{"m", num_sort()}}, {lit(9)});
    Labeled<Judgment> y = subst(x, s);
    CHECK(y.index == 1);
    CHECK(alpha_eq(y.inner, add(lit(9), lit(0))));
    auto [inner, i] = unlabel(y);
    CHECK(i == 1);
    CHECK(alpha_eq(inner, y.inner));
    CHECK_FALSE(alpha_eq(x, label(x.inner, 2)));
  }

  TEST_CASE("binder names") {
    Context two{{"c", num_sort()}, {"v", num_sort()}};
    CHECK(binder_names("x", two) == std::vector<std::string>{"xc", "xv"});
    CHECK(binder_names("x", Context{{"n", num_sort()}}) ==
          std::vector<std::string>{"x"});
  }

  TEST_CASE("judgments satisfy the goal concept") {
    CHECK(Goal<Judgment>);
    CHECK(Goal<Labeled<Judgment>>);
  }
}
