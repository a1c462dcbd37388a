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

// Sorted first-order terms, contexts and substitutions.

#ifndef DLCF_THEORY_HPP_
#define DLCF_THEORY_HPP_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dlcf {

using Natural = boost::multiprecision::cpp_int;

enum class ErrorCode {
  kUnsortedTerm,
  kContextMismatch,
  kUnknownRuleName,
  kParse,
  kIllFormed,
};

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Sort {
  std::string name;
  friend bool operator==(const Sort&, const Sort&) = default;
};

struct Binding {
  std::string name;
  Sort sort;
  friend bool operator==(const Binding&, const Binding&) = default;
};

// Ordered list of distinct (name, sort) pairs.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<Binding> entries);
  explicit Context(std::vector<Binding> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Binding& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Binding>& entries() const { return entries_; }

  const Binding* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  // Throws kContextMismatch on a duplicate name.
  Context& push(std::string name, Sort sort);
  Context extended(const Context& more) const;

  std::vector<std::string> names() const;
  std::vector<Sort> sorts() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Binding> entries_;
};

// Same length and sorts, names ignored.
bool same_sorts(const Context& a, const Context& b);

struct Operator {
  std::string name;
  std::vector<Sort> arity;
  Sort result;
  // Index of an argument that is a bound variable scoping over the next
  // argument, or -1.
  int binder = -1;
};

using OperatorRef = std::shared_ptr<const Operator>;

class Term {
 public:
  enum class Kind { kVar, kOp, kLit };

  static Term var(std::string name, Sort sort);
  static Term lit(Natural value, Sort sort);
  // Sort-checks the arguments against the arity.
  static Term apply(OperatorRef op, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::kVar; }
  bool is_op() const { return node_->kind == Kind::kOp; }
  bool is_lit() const { return node_->kind == Kind::kLit; }
  bool is_op(std::string_view name) const {
    return is_op() && node_->name == name;
  }

  // Variable name, or operator name.
  const std::string& name() const { return node_->name; }
  const Sort& sort() const { return node_->sort; }
  const std::vector<Term>& args() const { return node_->args; }
  const Operator& op() const { return *node_->op; }
  const OperatorRef& op_ref() const { return node_->op; }
  const Natural& value() const { return node_->value; }

  // Structural equality, bound names included.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    Sort sort;
    std::vector<Term> args;
    OperatorRef op;
    Natural value;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Free variables in order of first occurrence.
Context free_vars(const Term& t);
void collect_free_vars(const Term& t, Context& acc);
bool has_free_vars(const Term& t);

bool alpha_eq(const Term& a, const Term& b);
std::size_t depth(const Term& t);
std::string to_string(const Term& t);

// Throws kUnsortedTerm unless every free variable of t is in ctx with the
// same sort.
void check_term(const Term& t, const Context& ctx);
bool well_sorted_in(const Term& t, const Context& ctx);

// base, base1, base2, ... the first one not taken.
std::string fresh(std::string_view base,
                  const std::function<bool(std::string_view)>& taken);
std::string fresh(std::string_view base, const Context& avoid);

class NameSupply {
 public:
  explicit NameSupply(std::uint64_t counter = 0) : counter_(counter) {}
  // base'k with k the current counter.
  std::string fresh(std::string_view base);
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t counter_;
};

// s : source -> target, one image per target entry, each well-sorted in
// source.
class Substitution {
 public:
  Substitution() = default;
  Substitution(Context source, Context target, std::vector<Term> images);

  static Substitution identity(const Context& ctx);

  const Context& source() const { return source_; }
  const Context& target() const { return target_; }
  const std::vector<Term>& images() const { return images_; }
  const Term* lookup(std::string_view name) const;

  // Unchecked in-place growth for kernel walkers.
  void add_source(std::string name, Sort sort);
  void bind(std::string name, Term image);

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.images_ == b.images_;
  }

 private:
  Context source_;
  Context target_;
  std::vector<Term> images_;
  std::unordered_map<std::string, std::size_t> index_;
};

Term subst_apply(const Term& t, const Substitution& s);
// s1 : A -> B, s2 : B -> C gives A -> C.
Substitution subst_compose(const Substitution& s1, const Substitution& s2);
// gamma ++ delta -> delta, selecting the suffix.
Substitution projection(const Context& gamma, const Context& delta);
Substitution weaken(const Substitution& s, const Context& xi);
// Entries of delta colliding with gamma are renamed through the supply.
Context concat(const Context& gamma, const Context& delta, NameSupply& supply);

bool alpha_eq(const Substitution& a, const Substitution& b);

// Substitution with target ctx that is the identity except on the listed
// renamings; its source is ctx with those names replaced.
Substitution renaming(const Context& ctx,
                      const std::vector<std::pair<std::string, std::string>>&
                          renames);

}  // namespace dlcf

#endif  // DLCF_THEORY_HPP_
