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

// Judgment structures: goals with a substitution action and an output
// context.

#ifndef DLCF_JUDGMENT_HPP_
#define DLCF_JUDGMENT_HPP_

#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dlcf/theory.hpp"

namespace dlcf {

// How a logic wants its terms shown.
struct Printer {
  std::function<std::string(const Term&)> term = [](const Term& t) {
    return to_string(t);
  };
  // Atomic terms print bare as judgment arguments, others get parentheses.
  std::function<bool(const Term&)> atomic = [](const Term&) { return true; };
};

struct JudgmentForm {
  std::string name;
  std::vector<Sort> arity;
  // Names double as suffixes for binder components.
  Context output;
};

using FormRef = std::shared_ptr<const JudgmentForm>;

class Judgment {
 public:
  // Sort-checks args against the form.
  Judgment(FormRef form, std::vector<Term> args);

  const JudgmentForm& form() const { return *form_; }
  const FormRef& form_ref() const { return form_; }
  const std::string& name() const { return form_->name; }
  const std::vector<Term>& args() const { return args_; }
  const Term& arg(std::size_t i) const { return args_[i]; }

  friend bool operator==(const Judgment& a, const Judgment& b) {
    return a.form_->name == b.form_->name && a.args_ == b.args_;
  }

 private:
  FormRef form_;
  std::vector<Term> args_;
};

inline const Context& output(const Judgment& x) { return x.form().output; }
Judgment subst(const Judgment& x, const Substitution& s);
bool alpha_eq(const Judgment& a, const Judgment& b);
void collect_free_vars(const Judgment& x, Context& acc);
Context free_vars(const Judgment& x);
std::string render(const Judgment& x, const Printer& p);

// The operations the kernel needs from a goal type.
template <class J>
concept Goal = std::copy_constructible<J> &&
    requires(const J& x, const J& y, const Substitution& s, Context& acc,
             const Printer& p) {
  { output(x) } -> std::convertible_to<Context>;
  { subst(x, s) } -> std::same_as<J>;
  { alpha_eq(x, y) } -> std::same_as<bool>;
  collect_free_vars(x, acc);
  { render(x, p) } -> std::convertible_to<std::string>;
};

template <class J>
struct Labeled {
  J inner;
  std::size_t index = 0;
};

template <class J>
Labeled<J> label(J x, std::size_t i) {
  return Labeled<J>{std::move(x), i};
}

template <class J>
std::pair<J, std::size_t> unlabel(const Labeled<J>& x) {
  return {x.inner, x.index};
}

template <class J>
decltype(auto) output(const Labeled<J>& x) {
  return output(x.inner);
}

template <class J>
Labeled<J> subst(const Labeled<J>& x, const Substitution& s) {
  return Labeled<J>{subst(x.inner, s), x.index};
}

template <class J>
bool alpha_eq(const Labeled<J>& a, const Labeled<J>& b) {
  return a.index == b.index && alpha_eq(a.inner, b.inner);
}

template <class J>
void collect_free_vars(const Labeled<J>& x, Context& acc) {
  collect_free_vars(x.inner, acc);
}

template <class J>
std::string render(const Labeled<J>& x, const Printer& p) {
  return "<" + render(x.inner, p) + ", " + std::to_string(x.index) + ">";
}

// Binder component names for a goal with the given output: a single
// component is named base, several get base+suffix (xc, xv).
std::vector<std::string> binder_names(std::string_view base,
                                      const Context& out);

// Registered forms of one logic.
class JudgmentStructure {
 public:
  explicit JudgmentStructure(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  FormRef add_form(std::string name, std::vector<Sort> arity, Context output);
  const FormRef& form(std::string_view name) const;
  Judgment make(std::string_view form, std::vector<Term> args) const;

  // Formation check: registered form, free variables declared in gamma.
  bool check(const Context& gamma, const Judgment& x) const;
  // Discrete by default.
  bool approx(const Judgment& a, const Judgment& b) const {
    return alpha_eq(a, b);
  }

 private:
  std::string name_;
  std::map<std::string, FormRef, std::less<>> forms_;
};

}  // namespace dlcf

#endif  // DLCF_JUDGMENT_HPP_
