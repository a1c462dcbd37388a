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

#include "dlcf/theory.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dlcf {

Context::Context(std::initializer_list<Binding> entries) {
  for (const auto& b : entries) push(b.name, b.sort);
}

Context::Context(std::vector<Binding> entries) {
  for (auto& b : entries) push(std::move(b.name), std::move(b.sort));
}

const Binding* Context::find(std::string_view name) const {
  for (const auto& b : entries_)
    if (b.name == name) return &b;
  return nullptr;
}

Context& Context::push(std::string name, Sort sort) {
  if (contains(name))
    throw KernelError(ErrorCode::kContextMismatch,
                      "duplicate variable '" + name + "' in context");
  entries_.push_back({std::move(name), std::move(sort)});
  return *this;
}

Context Context::extended(const Context& more) const {
  Context out = *this;
  for (const auto& b : more) out.push(b.name, b.sort);
  return out;
}

std::vector<std::string> Context::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& b : entries_) out.push_back(b.name);
  return out;
}

std::vector<Sort> Context::sorts() const {
  std::vector<Sort> out;
  out.reserve(entries_.size());
  for (const auto& b : entries_) out.push_back(b.sort);
  return out;
}

bool same_sorts(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].sort == b[i].sort)) return false;
  return true;
}

Term Term::var(std::string name, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVar;
  n->name = std::move(name);
  n->sort = std::move(sort);
  return Term(std::move(n));
}

Term Term::lit(Natural value, Sort sort) {
  if (value < 0)
    throw KernelError(ErrorCode::kIllFormed, "negative literal");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLit;
  n->name = value.str();
  n->sort = std::move(sort);
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::apply(OperatorRef op, std::vector<Term> args) {
  if (args.size() != op->arity.size())
    throw KernelError(ErrorCode::kUnsortedTerm,
                      "operator '" + op->name + "' expects " +
                          std::to_string(op->arity.size()) + " arguments");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!(args[i].sort() == op->arity[i]))
      throw KernelError(ErrorCode::kUnsortedTerm,
                        "argument " + std::to_string(i) + " of '" + op->name +
                            "' has sort " + args[i].sort().name +
                            ", expected " + op->arity[i].name);
  }
  if (op->binder >= 0 && !args[op->binder].is_var())
    throw KernelError(ErrorCode::kIllFormed,
                      "binder slot of '" + op->name + "' must be a variable");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOp;
  n->name = op->name;
  n->sort = op->result;
  n->args = std::move(args);
  n->op = std::move(op);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || !(a.sort() == b.sort()) || a.name() != b.name())
    return false;
  if (a.is_lit()) return a.value() == b.value();
  return a.args() == b.args();
}

namespace {

using Scope = std::vector<std::string>;

bool bound(const Scope& scope, const std::string& name) {
  return std::find(scope.begin(), scope.end(), name) != scope.end();
}

void collect(const Term& t, Scope& scope, Context& acc) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (!bound(scope, t.name()) && !acc.contains(t.name()))
        acc.push(t.name(), t.sort());
      return;
    case Term::Kind::kLit:
      return;
    case Term::Kind::kOp: {
      const int b = t.op().binder;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (static_cast<int>(i) == b) continue;
        if (b >= 0 && static_cast<int>(i) == b + 1) {
          scope.push_back(t.args()[b].name());
          collect(t.args()[i], scope, acc);
          scope.pop_back();
        } else {
          collect(t.args()[i], scope, acc);
        }
      }
      return;
    }
  }
}

bool any_free(const Term& t, Scope& scope) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return !bound(scope, t.name());
    case Term::Kind::kLit:
      return false;
    case Term::Kind::kOp: {
      const int b = t.op().binder;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (static_cast<int>(i) == b) continue;
        bool hit;
        if (b >= 0 && static_cast<int>(i) == b + 1) {
          scope.push_back(t.args()[b].name());
          hit = any_free(t.args()[i], scope);
          scope.pop_back();
        } else {
          hit = any_free(t.args()[i], scope);
        }
        if (hit) return true;
      }
      return false;
    }
  }
  return false;
}

// Pairs of binder names currently in scope, innermost last.
using Pairing = std::vector<std::pair<std::string, std::string>>;

bool alpha(const Term& a, const Term& b, Pairing& env) {
  if (a.kind() != b.kind() || !(a.sort() == b.sort())) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        const bool la = it->first == a.name();
        const bool lb = it->second == b.name();
        if (la || lb) return la && lb;
      }
      return a.name() == b.name();
    case Term::Kind::kLit:
      return a.value() == b.value();
    case Term::Kind::kOp: {
      if (a.name() != b.name()) return false;
      const int bi = a.op().binder;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (static_cast<int>(i) == bi) continue;
        bool ok;
        if (bi >= 0 && static_cast<int>(i) == bi + 1) {
          env.emplace_back(a.args()[bi].name(), b.args()[bi].name());
          ok = alpha(a.args()[i], b.args()[i], env);
          env.pop_back();
        } else {
          ok = alpha(a.args()[i], b.args()[i], env);
        }
        if (!ok) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

Context free_vars(const Term& t) {
  Context acc;
  collect_free_vars(t, acc);
  return acc;
}

void collect_free_vars(const Term& t, Context& acc) {
  Scope scope;
  collect(t, scope, acc);
}

bool has_free_vars(const Term& t) {
  Scope scope;
  return any_free(t, scope);
}

bool alpha_eq(const Term& a, const Term& b) {
  Pairing env;
  return alpha(a, b, env);
}

std::size_t depth(const Term& t) {
  std::size_t d = 0;
  for (const auto& a : t.args()) d = std::max(d, depth(a));
  return d + 1;
}

std::string to_string(const Term& t) {
  if (!t.is_op() || t.args().empty()) return t.name();
  std::string out = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.args()[i]);
  }
  return out + ")";
}

void check_term(const Term& t, const Context& ctx) {
  const Context fv = free_vars(t);
  for (const auto& b : fv) {
    const Binding* found = ctx.find(b.name);
    if (!found)
      throw KernelError(ErrorCode::kUnsortedTerm,
                        "variable '" + b.name + "' not in context");
    if (!(found->sort == b.sort))
      throw KernelError(ErrorCode::kUnsortedTerm,
                        "variable '" + b.name + "' used at sort " +
                            b.sort.name + " but declared " + found->sort.name);
  }
}

bool well_sorted_in(const Term& t, const Context& ctx) {
  try {
    check_term(t, ctx);
    return true;
  } catch (const KernelError&) {
    return false;
  }
}

std::string fresh(std::string_view base,
                  const std::function<bool(std::string_view)>& taken) {
  if (!taken(base)) return std::string(base);
  for (std::size_t i = 1;; ++i) {
    std::string candidate = std::string(base) + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

std::string fresh(std::string_view base, const Context& avoid) {
  return fresh(base, [&](std::string_view n) { return avoid.contains(n); });
}

std::string NameSupply::fresh(std::string_view base) {
  return std::string(base) + "'" + std::to_string(counter_++);
}

Substitution::Substitution(Context source, Context target,
                           std::vector<Term> images)
    : source_(std::move(source)) {
  if (target.size() != images.size())
    throw KernelError(ErrorCode::kContextMismatch,
                      "substitution needs one image per target variable");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i].sort() == target[i].sort))
      throw KernelError(ErrorCode::kUnsortedTerm,
                        "image of '" + target[i].name + "' has wrong sort");
    check_term(images[i], source_);
    bind(target[i].name, images[i]);
  }
}

Substitution Substitution::identity(const Context& ctx) {
  Substitution s;
  for (const auto& b : ctx) {
    s.add_source(b.name, b.sort);
    s.bind(b.name, Term::var(b.name, b.sort));
  }
  return s;
}

const Term* Substitution::lookup(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &images_[it->second];
}

void Substitution::add_source(std::string name, Sort sort) {
  source_.push(std::move(name), std::move(sort));
}

void Substitution::bind(std::string name, Term image) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    // Shadowing: the newer binding wins.
    std::vector<Binding> entries = target_.entries();
    entries[it->second].sort = image.sort();
    target_ = Context(std::move(entries));
    images_[it->second] = std::move(image);
    return;
  }
  target_.push(name, image.sort());
  index_[std::move(name)] = images_.size();
  images_.push_back(std::move(image));
}

namespace {

Term apply_rec(const Term& t, const Substitution& s);

Term apply_under(const Term& t, const Substitution& s) {
  const int b = t.op().binder;
  const Term& x = t.args()[b];
  // Extend s so the binder maps to itself, renaming it if the source
  // already uses the name.
  Substitution inner = s;
  std::string name = x.name();
  if (inner.source().contains(name))
    name = fresh(name, [&](std::string_view n) {
      return inner.source().contains(n) || inner.target().contains(n);
    });
  Term y = Term::var(name, x.sort());
  inner.add_source(name, x.sort());
  inner.bind(x.name(), y);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (static_cast<int>(i) == b)
      args.push_back(y);
    else if (static_cast<int>(i) == b + 1)
      args.push_back(apply_rec(t.args()[i], inner));
    else
      args.push_back(apply_rec(t.args()[i], s));
  }
  return Term::apply(t.op_ref(), std::move(args));
}

Term apply_rec(const Term& t, const Substitution& s) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      const Term* image = s.lookup(t.name());
      if (!image)
        throw KernelError(ErrorCode::kUnsortedTerm,
                          "variable '" + t.name() +
                              "' outside substitution target");
      if (!(image->sort() == t.sort()))
        throw KernelError(ErrorCode::kUnsortedTerm,
                          "variable '" + t.name() + "' has wrong sort");
      return *image;
    }
    case Term::Kind::kLit:
      return t;
    case Term::Kind::kOp: {
      if (t.args().empty()) return t;
      if (t.op().binder >= 0) return apply_under(t, s);
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const auto& a : t.args()) {
        args.push_back(apply_rec(a, s));
        changed = changed || !(args.back() == a);
      }
      if (!changed) return t;
      return Term::apply(t.op_ref(), std::move(args));
    }
  }
  return t;
}

}  // namespace

Term subst_apply(const Term& t, const Substitution& s) {
  return apply_rec(t, s);
}

Substitution subst_compose(const Substitution& s1, const Substitution& s2) {
  if (!(s1.target() == s2.source()))
    throw KernelError(ErrorCode::kContextMismatch,
                      "composition boundary disagrees");
  Substitution out;
  for (const auto& b : s1.source()) out.add_source(b.name, b.sort);
  for (std::size_t i = 0; i < s2.target().size(); ++i)
    out.bind(s2.target()[i].name, subst_apply(s2.images()[i], s1));
  return out;
}

Substitution projection(const Context& gamma, const Context& delta) {
  Substitution out;
  for (const auto& b : gamma.extended(delta)) out.add_source(b.name, b.sort);
  for (const auto& b : delta) out.bind(b.name, Term::var(b.name, b.sort));
  return out;
}

Substitution weaken(const Substitution& s, const Context& xi) {
  Substitution out;
  for (const auto& b : s.source().extended(xi)) out.add_source(b.name, b.sort);
  for (std::size_t i = 0; i < s.target().size(); ++i)
    out.bind(s.target()[i].name, s.images()[i]);
  return out;
}

Context concat(const Context& gamma, const Context& delta,
               NameSupply& supply) {
  Context out = gamma;
  for (const auto& b : delta) {
    std::string name = b.name;
    while (out.contains(name)) name = supply.fresh(b.name);
    out.push(std::move(name), b.sort);
  }
  return out;
}

bool alpha_eq(const Substitution& a, const Substitution& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    return false;
  for (std::size_t i = 0; i < a.images().size(); ++i)
    if (!alpha_eq(a.images()[i], b.images()[i])) return false;
  return true;
}

Substitution renaming(
    const Context& ctx,
    const std::vector<std::pair<std::string, std::string>>& renames) {
  auto renamed = [&](const std::string& n) {
    for (const auto& [from, to] : renames)
      if (from == n) return to;
    return n;
  };
  Substitution out;
  for (const auto& b : ctx) out.add_source(renamed(b.name), b.sort);
  for (const auto& b : ctx) out.bind(b.name, Term::var(renamed(b.name), b.sort));
  return out;
}

}  // namespace dlcf
