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

#include "dlcf/judgment.hpp"

#include <utility>

namespace dlcf {

Judgment::Judgment(FormRef form, std::vector<Term> args)
    : form_(std::move(form)), args_(std::move(args)) {
  if (args_.size() != form_->arity.size())
    throw KernelError(ErrorCode::kUnsortedTerm,
                      "judgment '" + form_->name + "' expects " +
                          std::to_string(form_->arity.size()) + " arguments");
  for (std::size_t i = 0; i < args_.size(); ++i)
    if (!(args_[i].sort() == form_->arity[i]))
      throw KernelError(ErrorCode::kUnsortedTerm,
                        "argument " + std::to_string(i) + " of '" +
                            form_->name + "' has sort " +
                            args_[i].sort().name);
}

Judgment subst(const Judgment& x, const Substitution& s) {
  std::vector<Term> args;
  args.reserve(x.args().size());
  for (const auto& a : x.args()) args.push_back(subst_apply(a, s));
  return Judgment(x.form_ref(), std::move(args));
}

bool alpha_eq(const Judgment& a, const Judgment& b) {
  if (a.name() != b.name() || a.args().size() != b.args().size())
    return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_eq(a.arg(i), b.arg(i))) return false;
  return true;
}

void collect_free_vars(const Judgment& x, Context& acc) {
  for (const auto& a : x.args()) collect_free_vars(a, acc);
}

Context free_vars(const Judgment& x) {
  Context acc;
  collect_free_vars(x, acc);
  return acc;
}

std::string render(const Judgment& x, const Printer& p) {
  std::string out = x.name();
  for (const auto& a : x.args()) {
    out += ' ';
    if (p.atomic(a))
      out += p.term(a);
    else
      out += "(" + p.term(a) + ")";
  }
  return out;
}

std::vector<std::string> binder_names(std::string_view base,
                                      const Context& out) {
  if (out.size() == 1) return {std::string(base)};
  std::vector<std::string> names;
  for (const auto& b : out) names.push_back(std::string(base) + b.name);
  return names;
}

FormRef JudgmentStructure::add_form(std::string name, std::vector<Sort> arity,
                                    Context output) {
  if (forms_.count(name))
    throw KernelError(ErrorCode::kIllFormed,
                      "judgment form '" + name + "' already registered");
  auto f = std::make_shared<const JudgmentForm>(
      JudgmentForm{name, std::move(arity), std::move(output)});
  forms_.emplace(std::move(name), f);
  return f;
}

const FormRef& JudgmentStructure::form(std::string_view name) const {
  auto it = forms_.find(name);
  if (it == forms_.end())
    throw KernelError(ErrorCode::kIllFormed,
                      "unknown judgment form '" + std::string(name) + "'");
  return it->second;
}

Judgment JudgmentStructure::make(std::string_view form,
                                 std::vector<Term> args) const {
  return Judgment(this->form(form), std::move(args));
}

bool JudgmentStructure::check(const Context& gamma, const Judgment& x) const {
  auto it = forms_.find(x.name());
  if (it == forms_.end() || it->second != x.form_ref()) return false;
  for (const auto& a : x.args())
    if (!well_sorted_in(a, gamma)) return false;
  return true;
}

}  // namespace dlcf
