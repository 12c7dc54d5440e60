#pragma once
// Arc consistency propagators.
//
// ac3: classic AC-3 over binary constraints. The arc queue is seeded in
// (constraint order, forward-then-reverse direction) order, processed FIFO
// with in-queue deduplication. When revising arc (x,y) prunes values from x,
// every arc (z,x) with z != y is re-enqueued. Throws on arity > 2.
//
// gac: generalized arc consistency for any arity >= 2. The queue holds
// (constraint, scope position) pairs seeded in (constraint order, position)
// order. When revising position p of constraint c prunes variable v, every
// pair (c2, q) with c2 != c, v in scope(c2), scope(c2)[q] != v is re-enqueued.
//
// Both stop immediately on a domain wipeout (including an empty domain in the
// input state) and report pruned (variable, value) pairs in prune order. The
// closure itself is order-independent; the fixed orders make traces and
// revision counts deterministic.

#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satcsp/csp.hpp"

namespace satcsp {

struct PropagationResult {
  DomainState state;
  bool wipeout = false;
  std::vector<std::pair<int, int>> pruned;  // (variable, value index) in prune order
  int64_t revisions = 0;
};

namespace detail {

// Does value a of x have a supporting value in y's current domain under c?
inline bool binary_supported(const ExtensionalConstraint& c, int x, int a, int y,
                             const DomainState& state) {
  int px = c.scope_position(x), py = c.scope_position(y);
  std::vector<int> t(2);
  for (int b : state.values(y)) {
    t[static_cast<size_t>(px)] = a;
    t[static_cast<size_t>(py)] = b;
    if (c.permits(t)) return true;
  }
  return false;
}

}  // namespace detail

inline PropagationResult ac3(const Csp& csp, DomainState state) {
  csp.validate();
  if (csp.max_arity() > 2)
    throw std::invalid_argument("ac3 handles binary constraints only; use gac for higher arity");

  PropagationResult r;
  if (state.wiped_out()) {
    r.state = std::move(state);
    r.wipeout = true;
    return r;
  }

  // Arc = (constraint index, direction). Direction 0 revises scope[0] against
  // scope[1]; direction 1 the reverse.
  std::deque<std::pair<int, int>> queue;
  std::set<std::pair<int, int>> queued;
  auto enqueue = [&](int ci, int dir) {
    if (queued.insert({ci, dir}).second) queue.emplace_back(ci, dir);
  };
  for (int ci = 0; ci < csp.num_constraints(); ++ci) {
    enqueue(ci, 0);
    enqueue(ci, 1);
  }

  while (!queue.empty()) {
    auto [ci, dir] = queue.front();
    queue.pop_front();
    queued.erase({ci, dir});
    const ExtensionalConstraint& c = csp.constraints[static_cast<size_t>(ci)];
    int x = c.scope[dir == 0 ? 0 : 1];
    int y = c.scope[dir == 0 ? 1 : 0];
    ++r.revisions;

    std::vector<int> doomed;
    for (int a : state.values(x))
      if (!detail::binary_supported(c, x, a, y, state)) doomed.push_back(a);
    if (doomed.empty()) continue;
    for (int a : doomed) {
      state.remove(x, a);
      r.pruned.emplace_back(x, a);
    }
    if (state.size(x) == 0) {
      r.state = std::move(state);
      r.wipeout = true;
      return r;
    }
    for (int cj = 0; cj < csp.num_constraints(); ++cj) {
      const ExtensionalConstraint& c2 = csp.constraints[static_cast<size_t>(cj)];
      for (int d2 = 0; d2 < 2; ++d2) {
        int tx = c2.scope[d2 == 0 ? 0 : 1];
        int ty = c2.scope[d2 == 0 ? 1 : 0];
        if (ty != x) continue;  // arc must point at the pruned variable
        if (tx == y && cj == ci) continue;  // skip the reverse of the arc just revised
        if (tx == x) continue;
        enqueue(cj, d2);
      }
    }
  }

  r.state = std::move(state);
  return r;
}

namespace detail {

// Does value a at position p of c have a support tuple within current domains?
inline bool gac_supported(const ExtensionalConstraint& c, int p, int a, const DomainState& state) {
  int k = c.arity();
  if (c.semantics == Semantics::allows) {
    for (const std::vector<int>& t : c.tuples) {
      if (t[static_cast<size_t>(p)] != a) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        if (i == p) continue;
        ok = state.has(c.scope[static_cast<size_t>(i)], t[static_cast<size_t>(i)]);
      }
      if (ok) return true;
    }
    return false;
  }
  // forbids: search the cartesian product of current domains (position p
  // pinned to a) for a tuple that is not listed.
  std::vector<int> idx(static_cast<size_t>(k), 0);
  std::vector<int> t(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (i == p) continue;
    if (state.size(c.scope[static_cast<size_t>(i)]) == 0) return false;
  }
  while (true) {
    for (int i = 0; i < k; ++i)
      t[static_cast<size_t>(i)] =
          i == p ? a
                 : state.values(c.scope[static_cast<size_t>(i)])[static_cast<size_t>(
                       idx[static_cast<size_t>(i)])];
    if (!c.lists_tuple(t)) return true;
    int i = k - 1;
    while (i >= 0) {
      if (i == p) {
        --i;
        continue;
      }
      if (idx[static_cast<size_t>(i)] + 1 < state.size(c.scope[static_cast<size_t>(i)])) {
        ++idx[static_cast<size_t>(i)];
        break;
      }
      idx[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return false;
  }
}

}  // namespace detail

inline PropagationResult gac(const Csp& csp, DomainState state) {
  csp.validate();

  PropagationResult r;
  if (state.wiped_out()) {
    r.state = std::move(state);
    r.wipeout = true;
    return r;
  }

  std::deque<std::pair<int, int>> queue;  // (constraint index, scope position)
  std::set<std::pair<int, int>> queued;
  auto enqueue = [&](int ci, int p) {
    if (queued.insert({ci, p}).second) queue.emplace_back(ci, p);
  };
  for (int ci = 0; ci < csp.num_constraints(); ++ci)
    for (int p = 0; p < csp.constraints[static_cast<size_t>(ci)].arity(); ++p) enqueue(ci, p);

  while (!queue.empty()) {
    auto [ci, p] = queue.front();
    queue.pop_front();
    queued.erase({ci, p});
    const ExtensionalConstraint& c = csp.constraints[static_cast<size_t>(ci)];
    int x = c.scope[static_cast<size_t>(p)];
    ++r.revisions;

    std::vector<int> doomed;
    for (int a : state.values(x))
      if (!detail::gac_supported(c, p, a, state)) doomed.push_back(a);
    if (doomed.empty()) continue;
    for (int a : doomed) {
      state.remove(x, a);
      r.pruned.emplace_back(x, a);
    }
    if (state.size(x) == 0) {
      r.state = std::move(state);
      r.wipeout = true;
      return r;
    }
    for (int cj = 0; cj < csp.num_constraints(); ++cj) {
      if (cj == ci) continue;
      const ExtensionalConstraint& c2 = csp.constraints[static_cast<size_t>(cj)];
      if (c2.scope_position(x) < 0) continue;
      for (int q = 0; q < c2.arity(); ++q)
        if (c2.scope[static_cast<size_t>(q)] != x) enqueue(cj, q);
    }
  }

  r.state = std::move(state);
  return r;
}

}  // namespace satcsp
