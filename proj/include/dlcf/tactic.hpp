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

// Tactics, multitactics, tacticals and fixed points.

#ifndef DLCF_TACTIC_HPP_
#define DLCF_TACTIC_HPP_

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlcf/delay.hpp"
#include "dlcf/judgment.hpp"
#include "dlcf/rule.hpp"
#include "dlcf/state.hpp"
#include "dlcf/theory.hpp"

namespace dlcf {

template <class In, class Out = In>
class Tactic {
 public:
  using Result = Delayed<ProofState<Out>>;
  using Fn = std::function<Result(const Context&, const In&)>;

  Tactic() = default;
  explicit Tactic(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  Result operator()(const Context& gamma, const In& x) const {
    return (*fn_)(gamma, x);
  }

 private:
  std::shared_ptr<const Fn> fn_;
};

// A tactic on whole proof states.
template <class J>
using Multitactic = Tactic<ProofState<J>>;

template <class In, class Out>
Tactic<In, Out> from_rule(Rule<In, Out> rho) {
  return Tactic<In, Out>(
      [rho = std::move(rho)](const Context& gamma, const In& x) {
        return now(rho(gamma, x));
      });
}

template <class J>
Tactic<J> id_tactic() {
  return Tactic<J>([](const Context& gamma, const J& x) {
    return now(eta(gamma, x));
  });
}

template <class In, class Out = In>
Tactic<In, Out> never_tactic() {
  return Tactic<In, Out>(
      [](const Context&, const In&) { return never<ProofState<Out>>(); });
}

// First alternative unless it fails or is unsuccessful.
template <class In, class Out>
Tactic<In, Out> orelse(Tactic<In, Out> phi, Tactic<In, Out> psi) {
  return Tactic<In, Out>([phi, psi](const Context& gamma, const In& x) {
    return bind(phi(gamma, x), [psi, gamma, x](const ProofState<Out>& s) {
      if (s.is_open()) return now(s);
      return psi(gamma, x);
    });
  });
}

template <class J>
Tactic<J> try_tactic(Tactic<J> phi) {
  return orelse(std::move(phi), id_tactic<J>());
}

template <class J, class K>
Tactic<Labeled<J>, K> const_tactic(Tactic<J, K> phi) {
  return Tactic<Labeled<J>, K>(
      [phi = std::move(phi)](const Context& gamma, const Labeled<J>& x) {
        return phi(gamma, x.inner);
      });
}

template <class J>
Tactic<Labeled<J>, J> proj_tactics(std::vector<Tactic<J>> phis) {
  return Tactic<Labeled<J>, J>(
      [phis = std::move(phis)](const Context& gamma, const Labeled<J>& x) {
        if (x.index < phis.size()) return phis[x.index](gamma, x.inner);
        return now(eta(gamma, x.inner));
      });
}

template <class K>
struct PendingEntry {
  std::vector<std::string> binder;
  Delayed<K> goal;
};

// Resolves entries left to right.
template <class K>
Delayed<Telescope<K>> await_tele(std::vector<PendingEntry<K>> entries) {
  struct Go {
    static Delayed<Telescope<K>> from(
        std::shared_ptr<const std::vector<PendingEntry<K>>> es, std::size_t i,
        Telescope<K> done) {
      if (i == es->size()) return now(std::move(done));
      return bind((*es)[i].goal, [es, i, done](const K& k) {
        Telescope<K> next = done;
        next.push_back({(*es)[i].binder, k});
        return from(es, i + 1, std::move(next));
      });
    }
  };
  return Go::from(
      std::make_shared<const std::vector<PendingEntry<K>>>(std::move(entries)),
      0, {});
}

namespace detail {

template <class J, class K>
struct Walk {
  Tactic<Labeled<J>, K> chi;
  ProofState<J> state;
};

template <class J, class K>
Delayed<ProofState<ProofState<K>>> walk_from(
    std::shared_ptr<const Walk<J, K>> w, std::size_t i, Context ctx,
    Telescope<ProofState<K>> done, Substitution sigma, bool known);

// Records the result for subgoal i and moves on. sigma maps each earlier
// binder to its extract when that subgoal came back complete, otherwise to
// itself.
template <class J, class K>
Delayed<ProofState<ProofState<K>>> walk_record(
    std::shared_ptr<const Walk<J, K>> w, std::size_t i, Context ctx,
    Telescope<ProofState<K>> done, Substitution sigma, bool known,
    const ProofState<K>& r) {
  const TeleEntry<J>& e = w->state.subgoals()[i];
  const auto& out = output(e.goal);
  const bool resolved = r.complete();
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::string& b = e.binder[j];
    ctx.push(b, out[j].sort);
    Term image = resolved ? subst_apply(r.validation()[j], sigma)
                          : Term::var(b, out[j].sort);
    sigma.add_source(b, out[j].sort);
    sigma.bind(b, std::move(image));
  }
  done.push_back({e.binder, r});
  return walk_from(std::move(w), i + 1, std::move(ctx), std::move(done),
                   std::move(sigma), known || resolved);
}

template <class J, class K>
Delayed<ProofState<ProofState<K>>> walk_from(
    std::shared_ptr<const Walk<J, K>> w, std::size_t i, Context ctx,
    Telescope<ProofState<K>> done, Substitution sigma, bool known) {
  const auto& goals = w->state.subgoals();
  if (i == goals.size())
    return now(ProofState<ProofState<K>>::open(
        std::move(done), w->state.validation(), w->state.target()));
  const J& goal = goals[i].goal;
  return bind(w->chi(ctx, Labeled<J>{goal, i}), [w, i, ctx, done, sigma,
                                                  known](
                                                     const ProofState<K>& r) {
    const J& original = w->state.subgoals()[i].goal;
    if (r.is_bot() && known) {
      // Unsuccessful may only mean "not yet": retry once with the extracts
      // of the earlier complete subgoals substituted in.
      J again = subst(original, sigma);
      if (!alpha_eq(again, original))
        return bind(w->chi(ctx, Labeled<J>{again, i}),
                    [w, i, ctx, done, sigma, known](const ProofState<K>& r2) {
                      return walk_record(w, i, ctx, done, sigma, known, r2);
                    });
    }
    return walk_record(w, i, ctx, done, sigma, known, r);
  });
}

}  // namespace detail

// Lifts a labeled tactic to a multitactic, one subgoal at a time from the
// left.
template <class J, class K>
Tactic<ProofState<J>, ProofState<K>> st_apply(Tactic<Labeled<J>, K> chi) {
  return Tactic<ProofState<J>, ProofState<K>>(
      [chi = std::move(chi)](const Context& gamma, const ProofState<J>& s) {
        if (!s.is_open())
          return now(same_terminal<ProofState<K>>(s));
        auto w = std::make_shared<const detail::Walk<J, K>>(
            detail::Walk<J, K>{chi, s});
        return detail::walk_from<J, K>(
            w, 0, gamma, {}, detail::identity_over(gamma, free_vars(s)),
            false);
      });
}

template <class J, class K>
Tactic<ProofState<J>, ProofState<K>> all_mt(Tactic<J, K> phi) {
  return st_apply(const_tactic(std::move(phi)));
}

template <class J>
Multitactic<J> each_mt(std::vector<Tactic<J>> phis) {
  return st_apply(proj_tactics(std::move(phis)));
}

// Run phi, hand its state to the multitactic, flatten.
template <class J0, class J1, class J2>
Tactic<J0, J2> seq(Tactic<J0, J1> phi,
                   Tactic<ProofState<J1>, ProofState<J2>> psi) {
  return Tactic<J0, J2>([phi, psi](const Context& gamma, const J0& x) {
    return bind(phi(gamma, x), [psi, gamma](const ProofState<J1>& s) {
      return fmap(psi(gamma, s),
                  [gamma](const ProofState<ProofState<J2>>& ss) {
                    return mu(gamma, ss);
                  });
    });
  });
}

template <class J0, class J1, class J2>
Tactic<J0, J2> then_(Tactic<J0, J1> phi, Tactic<J1, J2> psi) {
  return seq(std::move(phi), all_mt(std::move(psi)));
}

template <class J>
Tactic<J> thenl(Tactic<J> phi, std::vector<Tactic<J>> psis) {
  return seq(std::move(phi), each_mt(std::move(psis)));
}

template <class In, class Out>
using Tactical = std::function<Tactic<In, Out>(Tactic<In, Out>)>;

// Remembers the last call. lub asks T^n and then T^(n+1) about the same
// goal, and T^(n+1) usually asks T^n again, so without this forcing the
// n-th iterate costs O(n).
template <class In, class Out>
Tactic<In, Out> remember_last(Tactic<In, Out> phi) {
  if constexpr (!std::equality_comparable<In>) {
    return phi;
  } else {
    struct Memo {
      std::mutex mu;
      std::optional<std::pair<Context, In>> key;
      std::optional<Delayed<ProofState<Out>>> value;
    };
    auto memo = std::make_shared<Memo>();
    return Tactic<In, Out>([phi = std::move(phi), memo](const Context& gamma,
                                                        const In& x) {
      {
        std::lock_guard<std::mutex> lock(memo->mu);
        if (memo->key && memo->key->first == gamma && memo->key->second == x)
          return *memo->value;
      }
      Delayed<ProofState<Out>> r = phi(gamma, x);
      std::lock_guard<std::mutex> lock(memo->mu);
      memo->key.emplace(gamma, x);
      memo->value = r;
      return r;
    });
  }
}

// T^0 = never, T^(n+1) = T(T^n), memoized.
template <class In, class Out>
class Iterates {
 public:
  explicit Iterates(Tactical<In, Out> t) : t_(std::move(t)) {
    powers_.push_back(never_tactic<In, Out>());
  }
  Tactic<In, Out> operator()(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (powers_.size() <= n)
      powers_.push_back(remember_last(t_(powers_.back())));
    return powers_[n];
  }

 private:
  Tactical<In, Out> t_;
  std::vector<Tactic<In, Out>> powers_;
  std::mutex mu_;
};

// fix(T)(X) = lub_n T^n(X).
template <class In, class Out>
Tactic<In, Out> fix(Tactical<In, Out> t) {
  auto iterates = std::make_shared<Iterates<In, Out>>(std::move(t));
  return Tactic<In, Out>([iterates](const Context& gamma, const In& x) {
    return lub<ProofState<Out>>([iterates, gamma, x](std::size_t n) {
      return (*iterates)(n)(gamma, x);
    });
  });
}

template <class J>
Tactic<J> repeat(Tactic<J> phi) {
  return fix<J, J>([phi](Tactic<J> self) {
    return try_tactic(then_(phi, std::move(self)));
  });
}

// Entries of ss on which the multitactic was unsuccessful go back to the
// identity on the original subgoal; everything else is untouched.
template <class J>
ProofState<ProofState<J>> retain_unsuccessful(
    const Context& gamma, const ProofState<J>& s,
    const ProofState<ProofState<J>>& ss) {
  if (!s.is_open() || !ss.is_open() ||
      s.subgoals().size() != ss.subgoals().size())
    return ss;
  Telescope<ProofState<J>> out;
  Context ctx = gamma;
  bool changed = false;
  for (std::size_t i = 0; i < s.subgoals().size(); ++i) {
    const auto& orig = s.subgoals()[i];
    const auto& got = ss.subgoals()[i];
    if (orig.binder != got.binder) return ss;
    if (got.goal.is_bot()) {
      out.push_back({got.binder, eta(ctx, orig.goal)});
      changed = true;
    } else {
      out.push_back(got);
    }
    extend_by(ctx, orig);
  }
  if (!changed) return ss;
  return ProofState<ProofState<J>>::open(std::move(out), ss.validation(),
                                         ss.target());
}

// Breadth-first repetition of a multitactic: each round flattens m's
// result, keeping subgoals m could not act on yet, and the next round
// starts from the flattened state. Stops when a round fails or changes
// nothing.
template <class J>
Multitactic<J> repeat_mt(Multitactic<J> m) {
  return fix<ProofState<J>, ProofState<J>>([m](Multitactic<J> self) {
    return Multitactic<J>([m, self](const Context& gamma,
                                    const ProofState<J>& s) {
      return bind(m(gamma, s), [self, gamma, s](
                                   const ProofState<ProofState<J>>& ss) {
        ProofState<J> flat = mu(gamma, retain_unsuccessful(gamma, s, ss));
        if (flat.is_open() && !alpha_eq(flat, s)) return self(gamma, flat);
        return now(eta(gamma, s));
      });
    });
  });
}

}  // namespace dlcf

#endif  // DLCF_TACTIC_HPP_
