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

// The two shipped logics: arithmetic with cost, and a small dependent
// propositional logic.

#ifndef DLCF_LOGICS_HPP_
#define DLCF_LOGICS_HPP_

#include <functional>
#include <string>
#include <string_view>

#include "dlcf/judgment.hpp"
#include "dlcf/refiner.hpp"
#include "dlcf/rule.hpp"
#include "dlcf/tactic.hpp"
#include "dlcf/theory.hpp"

namespace dlcf {

struct Logic {
  std::string name;
  JudgmentStructure judgments;
  Refiner<Judgment> refiner;
  Printer printer;
  // Throws ParseError.
  std::function<Judgment(std::string_view)> parse_goal;
};

const Logic& arith_logic();
const Logic& dep_logic();
// "arith" or "dep", nullptr otherwise.
const Logic* find_logic(std::string_view name);

namespace arith {

Sort num_sort();
Sort exp_sort();

Term lit(Natural n);
Term num(Term n);
Term plus(Term a, Term b);
Term num_var(std::string name);
Term exp_var(std::string name);

Judgment eval(Term e);
Judgment add(Term m, Term n);

Rule<Judgment> num_eval();
Rule<Judgment> plus_eval();
Rule<Judgment> add_rule();

// num_eval | plus_eval | add
Tactic<Judgment> auto_aux();
// Depth-first: repeat(auto_aux).
Tactic<Judgment> auto_naive();
// Breadth-first: id; all(auto_aux)*.
Tactic<Judgment> auto_tactic();

}  // namespace arith

namespace dep {

Sort prop_sort();
Sort exp_sort();

Term top();
Term or_(Term p, Term q);
Term eq(Term a, Term b);
// Sig(A, x.B); x should be a reserved name (see bound_name).
Term sig(Term a, std::string x, Term b);
Term tt();
Term refl();
Term inl(Term e);
Term pair(Term a, Term b);
Term prop_var(std::string name);
Term exp_var(std::string name);

// Names for sig binders, never valid identifiers in contexts: base#k.
std::string bound_name(std::string_view base, std::size_t k);

Judgment is_true(Term p);

Rule<Judgment> or_i1();
Rule<Judgment> top_i();
Rule<Judgment> eq_refl();
Rule<Judgment> sig_i();

}  // namespace dep

}  // namespace dlcf

#endif  // DLCF_LOGICS_HPP_
