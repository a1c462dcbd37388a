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
#include "dlcf/script.hpp"
#include "support/generators.hpp"

namespace {

using namespace dlcf;

std::size_t error_at(const std::string& src) {
  try {
    parse_script(src);
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.position();
  }
  FAIL("no parse error for: " << src);
  return 0;
}

}  // namespace

TEST_SUITE("script") {
  TEST_CASE("the two auto scripts") {
    CHECK(show(parse_script("id; all(num_eval | plus_eval | add)*")) ==
          "Seq(Id, MStar(All(OrElse(OrElse(Rule(num_eval), "
          "Rule(plus_eval)), Rule(add)))))");
    CHECK(show(parse_script("(num_eval | plus_eval | add)*")) ==
          "Star(OrElse(OrElse(Rule(num_eval), Rule(plus_eval)), Rule(add)))");
  }

  TEST_CASE("precedence and associativity") {
    CHECK(show(parse_script("a | b; [c] | d*")) ==
          "OrElse(OrElse(Rule(a), Seq(Rule(b), Each([Rule(c)]))), "
          "Star(Rule(d)))");
    CHECK(show(parse_script("a; all(b); [c, d]")) ==
          "Seq(Seq(Rule(a), All(Rule(b))), Each([Rule(c), Rule(d)]))");
    CHECK(show(parse_script("a**")) == "Star(Star(Rule(a)))");
    CHECK(show(parse_script("a; (all(b))*")) ==
          "Seq(Rule(a), MStar(All(Rule(b))))");
    CHECK(show(parse_script("a; []")) == "Seq(Rule(a), Each([]))");
    CHECK(show(parse_script("(a; all(b))*")) ==
          "Star(Seq(Rule(a), All(Rule(b))))");
    CHECK(show(parse_script("  idle ")) == "Rule(idle)");
  }

  TEST_CASE("errors carry a position") {
    CHECK(error_at("") == 0);
    CHECK(error_at("a |") == 3);
    CHECK(error_at("a; b") == 3);
    CHECK(error_at("all(a)") == 0);
    CHECK(error_at("(a") == 2);
    CHECK(error_at("a b") == 2);
    CHECK(error_at("a; [b,]") == 6);
    CHECK(error_at("A") == 0);
  }

  TEST_CASE("printing uses as few parentheses as parsing needs") {
    Tac t = Tac::seq(Tac::orelse(Tac::rule("a"), Tac::rule("b")),
                     MTac::star(MTac::all(Tac::id())));
    CHECK(print(t) == "(a | b); all(id)*");
    Tac u = Tac::orelse(Tac::rule("a"),
                        Tac::orelse(Tac::rule("b"), Tac::rule("c")));
    CHECK(print(u) == "a | (b | c)");
    CHECK(print(Tac::star(Tac::seq(Tac::id(), MTac::each({})))) ==
          "(id; [])*");
  }

  TEST_CASE("print then parse on random trees") {
    dlcf::testing::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
      Tac t = dlcf::testing::random_tac(rng, 5);
      std::string text = print(t);
      Tac back = parse_script(text);
      CHECK_MESSAGE(back == t, text);
      CHECK(print(back) == text);
    }
  }

  TEST_CASE("interpretation looks rules up in the refiner") {
    const auto& ref = arith_logic().refiner;
    CHECK_THROWS_AS(interp_t(ref, parse_script("nope")), KernelError);
    auto t = interp_t(ref, parse_script("plus_eval; [num_eval, num_eval]"));
    auto r = run(t(Context{}, arith::eval(arith::plus(
                                  arith::num(arith::lit(2)),
                                  arith::num(arith::lit(3))))),
                 Fuel{100});
    REQUIRE(r.resolved());
    CHECK(r.value->subgoals().size() == 3);
  }

  TEST_CASE("the hook sees every rule application") {
    std::vector<std::string> seen;
    Interpreter<Judgment> in(arith_logic().refiner,
                             [&](const std::string& rule, const Judgment&,
                                 const ProofState<Judgment>& s) {
                               seen.push_back(rule + (s.is_open() ? "+" : "-"));
                             });
    auto t = in.tactic(parse_script("num_eval | add"));
    run(t(Context{}, arith::add(arith::lit(1), arith::lit(1))), Fuel{10});
    CHECK(seen == std::vector<std::string>{"num_eval-", "add+"});
  }
}
