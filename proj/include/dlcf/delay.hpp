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

// Capretta's delay monad, forced under a step budget.

#ifndef DLCF_DELAY_HPP_
#define DLCF_DELAY_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

namespace dlcf {

template <class V>
class Delayed {
 public:
  static Delayed now(V v) {
    auto n = std::make_shared<Node>();
    n->value.emplace(std::move(v));
    return Delayed(std::move(n));
  }
  // Deferred: thunk runs only when this Later is forced.
  static Delayed later(std::function<Delayed()> thunk) {
    auto n = std::make_shared<Node>();
    n->thunk = std::move(thunk);
    return Delayed(std::move(n));
  }

  // The shared node that steps to itself.
  static Delayed never() {
    static const Delayed forever = [] {
      auto n = std::make_shared<Node>();
      n->diverges = true;
      return Delayed(std::move(n));
    }();
    return forever;
  }

  bool resolved() const { return n_->value.has_value(); }
  // True only for never(); other divergent values are not detected.
  bool known_never() const { return n_->diverges; }
  const V& value() const { return *n_->value; }
  // One step. Now is terminal.
  Delayed step() const {
    if (resolved() || known_never()) return *this;
    return n_->thunk();
  }

 private:
  struct Node {
    std::optional<V> value;
    std::function<Delayed()> thunk;
    bool diverges = false;
  };
  explicit Delayed(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

template <class V>
Delayed<V> now(V v) {
  return Delayed<V>::now(std::move(v));
}

template <class V>
Delayed<V> never() {
  return Delayed<V>::never();
}

// Later^k(Now(v)).
template <class V>
Delayed<V> delay_by(std::size_t k, V v) {
  if (k == 0) return now(std::move(v));
  return Delayed<V>::later([k, v] { return delay_by(k - 1, v); });
}

namespace detail {

template <class A, class K>
auto bind_shared(const Delayed<A>& m, std::shared_ptr<const K> k)
    -> std::invoke_result_t<const K&, const A&> {
  using R = std::invoke_result_t<const K&, const A&>;
  if (m.resolved()) return (*k)(m.value());
  if (m.known_never()) return R::never();
  return R::later([m, k] { return bind_shared(m.step(), k); });
}

}  // namespace detail

// Now a => k(a); Later m => Later(bind(m, k)).
template <class A, class K>
auto bind(const Delayed<A>& m, K k) {
  if (m.resolved()) return k(m.value());
  return detail::bind_shared(m, std::make_shared<const K>(std::move(k)));
}

template <class A, class F>
auto fmap(const Delayed<A>& m, F f) {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  return bind(m, [f = std::move(f)](const A& a) { return now<B>(f(a)); });
}

struct Fuel {
  std::size_t budget = 0;
};

template <class V>
struct RunResult {
  std::optional<V> value;  // empty when out of fuel
  std::size_t steps = 0;
  bool resolved() const { return value.has_value(); }
};

// Forces at most fuel.budget Laters.
template <class V>
RunResult<V> run(Delayed<V> m, Fuel fuel) {
  std::size_t steps = 0;
  while (!m.resolved()) {
    if (steps == fuel.budget) return {std::nullopt, steps};
    m = m.step();
    ++steps;
  }
  return {m.value(), steps};
}

// Left-biased; both sides step together. A side that is never() can be
// dropped without changing the value or the step count.
template <class V>
Delayed<V> race(const Delayed<V>& a, const Delayed<V>& b) {
  if (a.resolved()) return a;
  if (b.resolved()) return b;
  if (a.known_never()) return b;
  if (b.known_never()) return a;
  return Delayed<V>::later([a, b] { return race(a.step(), b.step()); });
}

template <class V>
using OmegaSequence = std::function<Delayed<V>(std::size_t)>;

// Each step lets one more element of f join the race.
template <class V>
Delayed<V> search(std::size_t n, OmegaSequence<V> f, const Delayed<V>& x) {
  if (x.resolved()) return x;
  return Delayed<V>::later([n, f = std::move(f), x] {
    return search(n + 1, f, race(x.step(), f(n)));
  });
}

template <class V>
Delayed<V> lub(OmegaSequence<V> f) {
  return search<V>(0, std::move(f), never<V>());
}

}  // namespace dlcf

#endif  // DLCF_DELAY_HPP_
