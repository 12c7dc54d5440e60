#pragma once
// Backtracking CSP search with propagation: forward checking (fc_solve) and
// maintained arc consistency (mac_solve). Binary constraints only.
//
// Branching is d-way over a static plan. Variable selection is
// singleton-first: the first plan variable (in plan order) that is unassigned
// and currently has a one-value domain; if none, the first unassigned plan
// variable. This makes forced assignments happen before free choices, the
// direct analogue of resolving unit clauses before branching. Values are
// tried in the plan's per-variable value order (default: current domain
// order), restricted to the current domain.
//
// Counters:
//   branches        value attempts (every attempt, singleton domains included)
//   nodes           1 + branches
//   choice_branches value attempts on variables with >= 2 values when chosen
//   failed_leaves   attempts (or the root for mac) killed by a domain wipeout
//   revisions       constraint revisions performed by propagation
//
// fc_solve: the plan must cover every variable. After assigning v, each
// binary constraint between v and an unassigned variable is revised once.
//
// mac_solve: runs full arc consistency at the root and after every
// assignment; the root wipeout counts as one failed leaf. The plan may cover
// a subset of variables: once all plan variables are assigned, the remaining
// variables take the first value left in their domains and the combined
// assignment is verified (an exception, not "sat", is raised if that
// verification fails).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "satcsp/arc_consistency.hpp"
#include "satcsp/csp.hpp"

namespace satcsp {

struct CspBranchPlan {
  std::vector<int> order;  // distinct variable ids; branching order
  // Empty, or parallel to `order`: value_order[i] is a permutation of the
  // full domain indices of variable order[i], giving the value try order.
  std::vector<std::vector<int>> value_order;

  static CspBranchPlan ascending(const Csp& csp) {
    CspBranchPlan p;
    for (int v = 0; v < csp.num_vars(); ++v) p.order.push_back(v);
    return p;
  }

  void validate(const Csp& csp, bool must_cover_all) const {
    std::vector<char> seen(static_cast<size_t>(csp.num_vars()), 0);
    for (int v : order) {
      if (v < 0 || v >= csp.num_vars()) throw std::invalid_argument("plan variable out of range");
      if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("plan repeats a variable");
      seen[static_cast<size_t>(v)] = 1;
    }
    if (must_cover_all && static_cast<int>(order.size()) != csp.num_vars())
      throw std::invalid_argument("plan must cover every variable");
    if (!value_order.empty()) {
      if (value_order.size() != order.size())
        throw std::invalid_argument("value_order must parallel the plan order");
      for (size_t i = 0; i < order.size(); ++i) {
        int d = csp.variables[static_cast<size_t>(order[i])].domain_size();
        std::vector<char> vseen(static_cast<size_t>(d), 0);
        if (static_cast<int>(value_order[i].size()) != d)
          throw std::invalid_argument("value_order entry must list the whole domain");
        for (int a : value_order[i]) {
          if (a < 0 || a >= d) throw std::invalid_argument("value_order value out of range");
          if (vseen[static_cast<size_t>(a)]) throw std::invalid_argument("value_order repeats a value");
          vseen[static_cast<size_t>(a)] = 1;
        }
      }
    }
  }
};

struct CspSearchStats {
  int64_t branches = 0;
  int64_t nodes = 0;
  int64_t failed_leaves = 0;
  int64_t revisions = 0;
  int64_t choice_branches = 0;
  bool sat = false;
  std::optional<std::vector<int>> solution;
};

namespace detail {

inline int select_plan_position(const CspBranchPlan& plan, const DomainState& state,
                                const std::vector<char>& assigned) {
  int fallback = -1;
  for (size_t i = 0; i < plan.order.size(); ++i) {
    int v = plan.order[i];
    if (assigned[static_cast<size_t>(v)]) continue;
    if (state.size(v) == 1) return static_cast<int>(i);
    if (fallback < 0) fallback = static_cast<int>(i);
  }
  return fallback;
}

inline std::vector<int> try_order(const CspBranchPlan& plan, int pos, const DomainState& state) {
  int v = plan.order[static_cast<size_t>(pos)];
  if (plan.value_order.empty()) return state.values(v);
  std::vector<int> out;
  for (int a : plan.value_order[static_cast<size_t>(pos)])
    if (state.has(v, a)) out.push_back(a);
  return out;
}

inline bool pair_permitted(const ExtensionalConstraint& c, int u, int a, int w, int b) {
  std::vector<int> t(2);
  t[static_cast<size_t>(c.scope_position(u))] = a;
  t[static_cast<size_t>(c.scope_position(w))] = b;
  return c.permits(t);
}

inline bool fc_node(const Csp& csp, const CspBranchPlan& plan, const DomainState& state,
                    std::vector<char>& assigned, int assigned_count, CspSearchStats& s) {
  if (assigned_count == csp.num_vars()) {
    std::vector<int> sol(static_cast<size_t>(csp.num_vars()));
    for (int v = 0; v < csp.num_vars(); ++v) sol[static_cast<size_t>(v)] = state.values(v).front();
    if (!check_solution(csp, sol))
      throw std::logic_error("forward checking reached an inconsistent full assignment");
    s.solution = std::move(sol);
    return true;
  }
  int pos = select_plan_position(plan, state, assigned);
  int v = plan.order[static_cast<size_t>(pos)];
  bool choice = state.size(v) >= 2;

  for (int a : try_order(plan, pos, state)) {
    ++s.branches;
    ++s.nodes;
    if (choice) ++s.choice_branches;
    DomainState child = state;
    child.assign(v, a);
    bool wiped = false;
    for (const ExtensionalConstraint& c : csp.constraints) {
      int pv = c.scope_position(v);
      if (pv < 0) continue;
      int u = c.scope[static_cast<size_t>(1 - pv)];
      if (u == v || assigned[static_cast<size_t>(u)]) continue;
      ++s.revisions;
      std::vector<int> doomed;
      for (int b : child.values(u))
        if (!pair_permitted(c, v, a, u, b)) doomed.push_back(b);
      for (int b : doomed) child.remove(u, b);
      if (child.size(u) == 0) {
        wiped = true;
        break;
      }
    }
    if (wiped) {
      ++s.failed_leaves;
      continue;
    }
    assigned[static_cast<size_t>(v)] = 1;
    if (fc_node(csp, plan, child, assigned, assigned_count + 1, s)) return true;
    assigned[static_cast<size_t>(v)] = 0;
  }
  return false;
}

inline bool mac_node(const Csp& csp, const CspBranchPlan& plan, const DomainState& state,
                     std::vector<char>& assigned, int assigned_count, CspSearchStats& s) {
  if (assigned_count == static_cast<int>(plan.order.size())) {
    std::vector<int> sol(static_cast<size_t>(csp.num_vars()));
    for (int v = 0; v < csp.num_vars(); ++v) sol[static_cast<size_t>(v)] = state.values(v).front();
    if (!check_solution(csp, sol))
      throw std::logic_error("restricted branch plan cannot certify a solution");
    s.solution = std::move(sol);
    return true;
  }
  int pos = select_plan_position(plan, state, assigned);
  int v = plan.order[static_cast<size_t>(pos)];
  bool choice = state.size(v) >= 2;

  for (int a : try_order(plan, pos, state)) {
    ++s.branches;
    ++s.nodes;
    if (choice) ++s.choice_branches;
    DomainState child = state;
    child.assign(v, a);
    PropagationResult pr = ac3(csp, std::move(child));
    s.revisions += pr.revisions;
    if (pr.wipeout) {
      ++s.failed_leaves;
      continue;
    }
    assigned[static_cast<size_t>(v)] = 1;
    if (mac_node(csp, plan, pr.state, assigned, assigned_count + 1, s)) return true;
    assigned[static_cast<size_t>(v)] = 0;
  }
  return false;
}

}  // namespace detail

inline CspSearchStats fc_solve(const Csp& csp, const CspBranchPlan& plan) {
  csp.validate();
  plan.validate(csp, /*must_cover_all=*/true);
  if (csp.max_arity() > 2)
    throw std::invalid_argument("fc handles arity <= 2 only");

  CspSearchStats s;
  s.nodes = 1;
  DomainState state(csp);
  if (state.wiped_out()) {
    s.failed_leaves = 1;
    return s;
  }
  std::vector<char> assigned(static_cast<size_t>(csp.num_vars()), 0);
  s.sat = detail::fc_node(csp, plan, state, assigned, 0, s);
  if (!s.sat) s.solution.reset();
  return s;
}

inline CspSearchStats fc_solve(const Csp& csp) { return fc_solve(csp, CspBranchPlan::ascending(csp)); }

inline CspSearchStats mac_solve(const Csp& csp, const CspBranchPlan& plan) {
  csp.validate();
  plan.validate(csp, /*must_cover_all=*/false);
  if (csp.max_arity() > 2)
    throw std::invalid_argument("mac handles arity <= 2 only");

  CspSearchStats s;
  s.nodes = 1;
  PropagationResult root = ac3(csp, DomainState(csp));
  s.revisions += root.revisions;
  if (root.wipeout) {
    s.failed_leaves = 1;
    return s;
  }
  std::vector<char> assigned(static_cast<size_t>(csp.num_vars()), 0);
  s.sat = detail::mac_node(csp, plan, root.state, assigned, 0, s);
  if (!s.sat) s.solution.reset();
  return s;
}

inline CspSearchStats mac_solve(const Csp& csp) { return mac_solve(csp, CspBranchPlan::ascending(csp)); }

}  // namespace satcsp
