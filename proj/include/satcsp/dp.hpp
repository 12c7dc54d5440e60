#pragma once
// Davis–Putnam style backtracking search: chronological two-way branching over
// a static variable order, with unit propagation at every node. No pure
// literal rule. Search stops as soon as every clause is satisfied, even if
// variables remain unassigned; the reported model sets those to false.
//
// Counters:
//   decisions_total    branch assignments tried (both polarities counted)
//   nodes              1 + decisions_total (root plus one node per decision)
//   failed_leaves      nodes where propagation found a conflict
//   propagations       literals forced by unit propagation across all nodes

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "satcsp/cnf.hpp"
#include "satcsp/unit_propagation.hpp"

namespace satcsp {

// Static branching order with a per-variable first polarity.
struct BranchPlan {
  std::vector<int> order;               // permutation of a subset of 1..num_vars
  std::vector<uint8_t> positive_first;  // parallel to order

  static BranchPlan ascending(int num_vars, bool positive_first_polarity = true) {
    BranchPlan p;
    for (int v = 1; v <= num_vars; ++v) {
      p.order.push_back(v);
      p.positive_first.push_back(positive_first_polarity ? 1 : 0);
    }
    return p;
  }

  void validate(int num_vars) const {
    if (order.size() != positive_first.size())
      throw std::invalid_argument("branch plan polarity list must parallel the order");
    std::vector<char> seen(static_cast<size_t>(num_vars) + 1, 0);
    for (int v : order) {
      if (v < 1 || v > num_vars) throw std::invalid_argument("branch plan variable out of range");
      if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("branch plan repeats a variable");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
};

struct SearchStats {
  int64_t decisions_total = 0;
  int64_t decisions_positive = 0;
  int64_t decisions_negative = 0;
  int64_t nodes = 0;
  int64_t failed_leaves = 0;
  int64_t propagations = 0;
  bool sat = false;
  std::optional<Assignment> model;
};

namespace detail {

inline bool all_clauses_satisfied(const Cnf& f, const Assignment& a) {
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (Literal l : c.lits)
      if (a.literal_true(l)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

inline bool dp_node(const Cnf& f, const BranchPlan& plan, Assignment a, SearchStats& s) {
  UpResult up = unit_propagate(f, std::move(a));
  s.propagations += up.forced_count;
  if (up.conflict) {
    ++s.failed_leaves;
    return false;
  }
  if (all_clauses_satisfied(f, up.fixpoint)) {
    Assignment model = up.fixpoint;
    for (int v = 1; v <= f.num_vars; ++v)
      if (!model.assigned(v)) model.set(v, false);
    s.model = std::move(model);
    return true;
  }
  int branch_var = 0;
  bool first_positive = true;
  for (size_t i = 0; i < plan.order.size(); ++i)
    if (!up.fixpoint.assigned(plan.order[i])) {
      branch_var = plan.order[i];
      first_positive = plan.positive_first[i] != 0;
      break;
    }
  if (branch_var == 0)
    throw std::logic_error("branch plan exhausted with unsatisfied clauses remaining");

  for (int attempt = 0; attempt < 2; ++attempt) {
    bool value = attempt == 0 ? first_positive : !first_positive;
    ++s.decisions_total;
    ++s.nodes;
    if (value)
      ++s.decisions_positive;
    else
      ++s.decisions_negative;
    Assignment child = up.fixpoint;
    child.set(branch_var, value);
    if (dp_node(f, plan, std::move(child), s)) return true;
  }
  return false;
}

}  // namespace detail

inline SearchStats dp_solve(const Cnf& f, const BranchPlan& plan) {
  plan.validate(f.num_vars);
  SearchStats s;
  s.nodes = 1;  // root
  s.sat = detail::dp_node(f, plan, Assignment(f.num_vars), s);
  if (s.sat && s.model) {
    if (!check_model(f, *s.model)) throw std::logic_error("search produced a non-model");
  } else {
    s.model.reset();
  }
  return s;
}

inline SearchStats dp_solve(const Cnf& f) { return dp_solve(f, BranchPlan::ascending(f.num_vars)); }

}  // namespace satcsp
