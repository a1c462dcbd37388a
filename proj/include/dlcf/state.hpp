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

// Telescopes of dependent subgoals and the proof-state monad.

#ifndef DLCF_STATE_HPP_
#define DLCF_STATE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dlcf/judgment.hpp"
#include "dlcf/theory.hpp"

namespace dlcf {

// One subgoal; binder names the components of output(goal), in order.
template <class J>
struct TeleEntry {
  std::vector<std::string> binder;
  J goal;
};

template <class J>
using Telescope = std::vector<TeleEntry<J>>;

enum class StateKind { kOpen, kFail, kBot };

template <class J>
class ProofState {
 public:
  // validation[i] builds target[i] from the subgoals' evidence.
  static ProofState open(Telescope<J> subgoals, std::vector<Term> validation,
                         Context target) {
    if (validation.size() != target.size())
      throw KernelError(ErrorCode::kContextMismatch,
                        "validation does not match target");
    for (std::size_t i = 0; i < target.size(); ++i)
      if (!(validation[i].sort() == target[i].sort))
        throw KernelError(ErrorCode::kUnsortedTerm,
                          "validation component " + std::to_string(i) +
                              " has sort " + validation[i].sort().name);
    for (const auto& e : subgoals)
      if (e.binder.size() != output(e.goal).size())
        throw KernelError(ErrorCode::kContextMismatch,
                          "binder does not match subgoal output");
    return ProofState(StateKind::kOpen, std::move(subgoals),
                      std::move(validation), std::move(target));
  }
  static ProofState fail(Context target) {
    return ProofState(StateKind::kFail, {}, {}, std::move(target));
  }
  static ProofState bot(Context target) {
    return ProofState(StateKind::kBot, {}, {}, std::move(target));
  }

  StateKind kind() const { return d_->kind; }
  bool is_open() const { return d_->kind == StateKind::kOpen; }
  bool is_fail() const { return d_->kind == StateKind::kFail; }
  bool is_bot() const { return d_->kind == StateKind::kBot; }
  bool complete() const { return is_open() && d_->subgoals.empty(); }

  const Telescope<J>& subgoals() const { return d_->subgoals; }
  const std::vector<Term>& validation() const { return d_->validation; }
  const Context& target() const { return d_->target; }

 private:
  struct Data {
    StateKind kind;
    Telescope<J> subgoals;
    std::vector<Term> validation;
    Context target;
  };
  ProofState(StateKind k, Telescope<J> t, std::vector<Term> v, Context c)
      : d_(std::make_shared<const Data>(
            Data{k, std::move(t), std::move(v), std::move(c)})) {}
  std::shared_ptr<const Data> d_;
};

template <class T>
struct is_state : std::false_type {};
template <class J>
struct is_state<ProofState<J>> : std::true_type {};

template <class J>
const Context& output(const ProofState<J>& s) {
  return s.target();
}

// Rebuild a failed or unsuccessful state at another goal type.
template <class K, class J>
ProofState<K> same_terminal(const ProofState<J>& s) {
  return s.is_fail() ? ProofState<K>::fail(s.target())
                     : ProofState<K>::bot(s.target());
}

// ctx extended by an entry's binder.
template <class J>
void extend_by(Context& ctx, const TeleEntry<J>& e) {
  const auto& out = output(e.goal);
  for (std::size_t i = 0; i < e.binder.size(); ++i)
    ctx.push(e.binder[i], out[i].sort);
}

template <class J>
Context tele_output(const Telescope<J>& psi) {
  Context out;
  for (const auto& e : psi) extend_by(out, e);
  return out;
}

// A binder for a goal of the given output whose components avoid taken.
template <class Taken>
std::vector<std::string> fresh_binder(std::string_view base,
                                      const Context& out, Taken&& taken) {
  std::vector<std::string> names = binder_names(base, out);
  auto clash = [&](const std::vector<std::string>& ns) {
    for (const auto& n : ns)
      if (taken(n)) return true;
    return false;
  };
  for (std::size_t i = 1; clash(names); ++i)
    names = binder_names(std::string(base) + std::to_string(i), out);
  return names;
}

template <class J>
void collect_free_vars(const ProofState<J>& s, Context& acc);

// Applies s (source -> ambient) to a telescope over the ambient context.
// Binders that collide with s.source() are renamed. Returns the new
// telescope and s extended over the binders.
template <class J>
std::pair<Telescope<J>, Substitution> tele_subst(const Telescope<J>& psi,
                                                 Substitution s) {
  Telescope<J> out;
  out.reserve(psi.size());
  for (const auto& e : psi) {
    TeleEntry<J> ne{{}, subst(e.goal, s)};
    const auto& sorts = output(e.goal);
    for (std::size_t i = 0; i < e.binder.size(); ++i) {
      const std::string& b = e.binder[i];
      std::string name = b;
      if (s.source().contains(name))
        name = fresh(b, [&](std::string_view n) {
          return s.source().contains(n);
        });
      s.add_source(name, sorts[i].sort);
      s.bind(b, Term::var(name, sorts[i].sort));
      ne.binder.push_back(std::move(name));
    }
    out.push_back(std::move(ne));
  }
  return {std::move(out), std::move(s)};
}

// Functorial action of substitution on a state.
template <class J>
ProofState<J> state_subst(const ProofState<J>& st, const Substitution& s) {
  if (!st.is_open()) return st;
  auto [psi, ext] = tele_subst(st.subgoals(), s);
  std::vector<Term> v;
  v.reserve(st.validation().size());
  for (const auto& t : st.validation()) v.push_back(subst_apply(t, ext));
  return ProofState<J>::open(std::move(psi), std::move(v), st.target());
}

template <class J>
ProofState<J> subst(const ProofState<J>& st, const Substitution& s) {
  return state_subst(st, s);
}

namespace detail {

// Identity substitution on ctx plus any free variable of the extras not
// already present.
inline Substitution identity_over(Context ctx, const Context& extra) {
  for (const auto& b : extra)
    if (!ctx.contains(b.name)) ctx.push(b.name, b.sort);
  return Substitution::identity(ctx);
}

template <class J>
Context tele_free_vars(const Telescope<J>& psi) {
  Context acc;
  Context bound;
  for (const auto& e : psi) {
    Context fv;
    collect_free_vars(e.goal, fv);
    for (const auto& b : fv)
      if (!bound.contains(b.name) && !acc.contains(b.name))
        acc.push(b.name, b.sort);
    for (const auto& n : e.binder)
      if (!bound.contains(n)) bound.push(n, Sort{});
  }
  return acc;
}

}  // namespace detail

template <class J>
void collect_free_vars(const ProofState<J>& s, Context& acc) {
  if (!s.is_open()) return;
  Context bound;
  for (const auto& e : s.subgoals()) {
    Context fv;
    collect_free_vars(e.goal, fv);
    for (const auto& b : fv)
      if (!bound.contains(b.name) && !acc.contains(b.name))
        acc.push(b.name, b.sort);
    for (const auto& n : e.binder)
      if (!bound.contains(n)) bound.push(n, Sort{});
  }
  for (const auto& t : s.validation()) {
    Context fv = free_vars(t);
    for (const auto& b : fv)
      if (!bound.contains(b.name) && !acc.contains(b.name))
        acc.push(b.name, b.sort);
  }
}

template <class J>
Context free_vars(const ProofState<J>& s) {
  Context acc;
  collect_free_vars(s, acc);
  return acc;
}

// psi ++ rest, where rest lives over the ambient context extended by
// psi's output. Binders of rest are freshened against psi.
template <class J>
Telescope<J> tele_concat(const Telescope<J>& psi, const Telescope<J>& rest) {
  if (rest.empty()) return psi;
  Context scope = detail::tele_free_vars(psi);
  for (const auto& b : tele_output(psi))
    if (!scope.contains(b.name)) scope.push(b.name, b.sort);
  Substitution id = detail::identity_over(scope, detail::tele_free_vars(rest));
  Telescope<J> out = psi;
  for (auto& e : tele_subst(rest, std::move(id)).first)
    out.push_back(std::move(e));
  return out;
}

// Psi |> S: prefix the subgoals of S with psi.
template <class J>
ProofState<J> wk_state(const Telescope<J>& psi, const ProofState<J>& s) {
  if (!s.is_open() || psi.empty()) return s;
  Context scope = detail::tele_free_vars(psi);
  for (const auto& b : tele_output(psi))
    if (!scope.contains(b.name)) scope.push(b.name, b.sort);
  ProofState<J> moved =
      state_subst(s, detail::identity_over(scope, free_vars(s)));
  Telescope<J> out = psi;
  for (const auto& e : moved.subgoals()) out.push_back(e);
  return ProofState<J>::open(std::move(out), moved.validation(), s.target());
}

// eta: <x : X . nil |> x>
template <class J>
ProofState<J> eta(const Context& gamma, const J& x) {
  Context fv;
  collect_free_vars(x, fv);
  const auto& out = output(x);
  std::vector<std::string> names =
      fresh_binder("x", out, [&](std::string_view n) {
        return gamma.contains(n) || fv.contains(n);
      });
  std::vector<Term> v;
  for (std::size_t i = 0; i < names.size(); ++i)
    v.push_back(Term::var(names[i], out[i].sort));
  Telescope<J> psi;
  psi.push_back({names, x});
  return ProofState<J>::open(std::move(psi), std::move(v), Context(out));
}

// mu: flatten a state of states.
template <class J>
ProofState<J> mu(const Context& gamma, const ProofState<ProofState<J>>& ss) {
  if (!ss.is_open()) return same_terminal<J>(ss);
  Substitution sigma = detail::identity_over(gamma, free_vars(ss));
  Telescope<J> hoisted;
  for (const auto& e : ss.subgoals()) {
    ProofState<J> inner = state_subst(e.goal, sigma);
    if (inner.is_fail()) return ProofState<J>::fail(ss.target());
    if (inner.is_bot()) return ProofState<J>::bot(ss.target());
    for (const auto& h : inner.subgoals()) {
      const auto& out = output(h.goal);
      for (std::size_t i = 0; i < h.binder.size(); ++i)
        sigma.add_source(h.binder[i], out[i].sort);
      hoisted.push_back(h);
    }
    for (std::size_t i = 0; i < e.binder.size(); ++i)
      sigma.bind(e.binder[i], inner.validation()[i]);
  }
  std::vector<Term> v;
  v.reserve(ss.validation().size());
  for (const auto& t : ss.validation()) v.push_back(subst_apply(t, sigma));
  return ProofState<J>::open(std::move(hoisted), std::move(v), ss.target());
}

template <class J>
Telescope<Labeled<J>> label_tele(std::size_t i, const Telescope<J>& psi) {
  Telescope<Labeled<J>> out;
  out.reserve(psi.size());
  for (const auto& e : psi) out.push_back({e.binder, Labeled<J>{e.goal, i++}});
  return out;
}

template <class J>
ProofState<Labeled<J>> label_state(const ProofState<J>& s) {
  if (!s.is_open()) return same_terminal<Labeled<J>>(s);
  return ProofState<Labeled<J>>::open(label_tele(0, s.subgoals()),
                                      s.validation(), s.target());
}

// Applies f(ctx, goal) to every subgoal, ctx being the ambient context
// extended by the preceding binders.
template <class J, class F>
auto map_state(const Context& gamma, const ProofState<J>& s, F&& f)
    -> ProofState<std::decay_t<std::invoke_result_t<F&, const Context&, const J&>>> {
  using K = std::decay_t<std::invoke_result_t<F&, const Context&, const J&>>;
  if (!s.is_open()) return same_terminal<K>(s);
  Context ctx = gamma;
  Telescope<K> out;
  out.reserve(s.subgoals().size());
  for (const auto& e : s.subgoals()) {
    K k = f(static_cast<const Context&>(ctx), e.goal);
    if (!same_sorts(Context(output(k)), Context(output(e.goal))))
      throw KernelError(ErrorCode::kContextMismatch,
                        "mapped goal changes its output");
    extend_by(ctx, e);
    out.push_back({e.binder, std::move(k)});
  }
  return ProofState<K>::open(std::move(out), s.validation(), s.target());
}

namespace detail {

// Renames every binder to %k, left to right, skipping names that are free
// in s (an enclosing state's canonical names, when nested).
template <class J>
ProofState<J> canonical(const ProofState<J>& s) {
  if (!s.is_open()) return s;
  const Context fv = free_vars(s);
  Substitution cur = Substitution::identity(fv);
  Telescope<J> psi;
  std::size_t k = 0;
  for (const auto& e : s.subgoals()) {
    TeleEntry<J> ne{{}, subst(e.goal, cur)};
    const auto& out = output(e.goal);
    for (std::size_t i = 0; i < e.binder.size(); ++i) {
      std::string name = "%" + std::to_string(k++);
      while (fv.contains(name)) name = "%" + std::to_string(k++);
      cur.add_source(name, out[i].sort);
      cur.bind(e.binder[i], Term::var(name, out[i].sort));
      ne.binder.push_back(std::move(name));
    }
    psi.push_back(std::move(ne));
  }
  std::vector<Term> v;
  for (const auto& t : s.validation()) v.push_back(subst_apply(t, cur));
  return ProofState<J>::open(std::move(psi), std::move(v), s.target());
}

}  // namespace detail

template <class J>
bool alpha_eq(const ProofState<J>& a, const ProofState<J>& b) {
  if (a.kind() != b.kind() || !same_sorts(a.target(), b.target()))
    return false;
  if (!a.is_open()) return true;
  if (a.subgoals().size() != b.subgoals().size()) return false;
  ProofState<J> ca = detail::canonical(a);
  ProofState<J> cb = detail::canonical(b);
  for (std::size_t i = 0; i < ca.subgoals().size(); ++i) {
    const auto& ea = ca.subgoals()[i];
    const auto& eb = cb.subgoals()[i];
    if (ea.binder != eb.binder || !alpha_eq(ea.goal, eb.goal)) return false;
  }
  for (std::size_t i = 0; i < ca.validation().size(); ++i)
    if (!alpha_eq(ca.validation()[i], cb.validation()[i])) return false;
  return true;
}

// Bot is below everything with the same target; otherwise discrete.
template <class J>
bool approx(const ProofState<J>& a, const ProofState<J>& b) {
  if (a.is_bot()) return same_sorts(a.target(), b.target());
  return alpha_eq(a, b);
}

// Every goal well-formed in its extended context, validation well-sorted
// over all binders.
template <class J>
bool well_formed(const Context& gamma, const ProofState<J>& s) {
  if (!s.is_open()) return true;
  Context ctx = gamma;
  for (const auto& e : s.subgoals()) {
    Context fv;
    collect_free_vars(e.goal, fv);
    for (const auto& b : fv) {
      const Binding* d = ctx.find(b.name);
      if (!d || !(d->sort == b.sort)) return false;
    }
    if constexpr (is_state<J>::value)
      if (!well_formed(ctx, e.goal)) return false;
    for (const auto& n : e.binder)
      if (ctx.contains(n)) return false;
    extend_by(ctx, e);
  }
  for (std::size_t i = 0; i < s.validation().size(); ++i) {
    if (!well_sorted_in(s.validation()[i], ctx)) return false;
    if (!(s.validation()[i].sort() == s.target()[i].sort)) return false;
  }
  return true;
}

inline std::string render_binder(const std::vector<std::string>& b) {
  if (b.size() == 1) return b[0];
  std::string out = "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += b[i];
  }
  return out + "]";
}

inline std::string render_terms(const std::vector<Term>& ts,
                                const Printer& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    out += p.term(ts[i]);
  }
  return out + "]";
}

template <class J>
std::string render(const ProofState<J>& s, const Printer& p) {
  if (s.is_fail()) return "FAIL";
  if (s.is_bot()) return "BOT";
  std::string out;
  for (const auto& e : s.subgoals()) {
    std::string g = render(e.goal, p);
    if constexpr (is_state<J>::value) {
      for (auto& c : g)
        if (c == '\n') c = ' ';
      g = "{ " + g + " }";
    }
    out += render_binder(e.binder) + " : " + g + ".\n";
  }
  return out + "▹ " + render_terms(s.validation(), p);
}

}  // namespace dlcf

#endif  // DLCF_STATE_HPP_
