#pragma once
// Finite-domain CSP core with extensional constraints.
//
// Variables are 0-based and carry ordered domains of string labels; all
// internal computation uses value indices into those domains. A constraint
// lists tuples over its scope and either allows exactly those tuples or
// forbids exactly those tuples. Tuples are stored sorted and deduplicated.
// Empty domains are legal (the instance is then trivially unsatisfiable).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satcsp {

struct CspVariable {
  int id = 0;
  std::vector<std::string> domain;

  int domain_size() const { return static_cast<int>(domain.size()); }
};

enum class Semantics { allows, forbids };

struct ExtensionalConstraint {
  std::vector<int> scope;                // distinct variable ids, order significant
  Semantics semantics = Semantics::allows;
  std::vector<std::vector<int>> tuples;  // sorted lexicographically, deduplicated

  int arity() const { return static_cast<int>(scope.size()); }

  bool lists_tuple(const std::vector<int>& t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
  }
  // Is the full scope tuple t permitted by this constraint?
  bool permits(const std::vector<int>& t) const {
    return semantics == Semantics::allows ? lists_tuple(t) : !lists_tuple(t);
  }
  int scope_position(int var) const {
    for (int i = 0; i < arity(); ++i)
      if (scope[static_cast<size_t>(i)] == var) return i;
    return -1;
  }
};

inline void sort_dedup_tuples(std::vector<std::vector<int>>& tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

struct Csp {
  std::vector<CspVariable> variables;
  std::vector<ExtensionalConstraint> constraints;

  int num_vars() const { return static_cast<int>(variables.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }
  bool has_empty_domain() const {
    for (const CspVariable& v : variables)
      if (v.domain.empty()) return true;
    return false;
  }
  int max_arity() const {
    int m = 0;
    for (const ExtensionalConstraint& c : constraints) m = std::max(m, c.arity());
    return m;
  }

  void validate() const {
    for (int i = 0; i < num_vars(); ++i)
      if (variables[static_cast<size_t>(i)].id != i)
        throw std::invalid_argument("variable ids must be 0..n-1 in order");
    for (const CspVariable& v : variables) {
      std::vector<std::string> d = v.domain;
      std::sort(d.begin(), d.end());
      if (std::adjacent_find(d.begin(), d.end()) != d.end())
        throw std::invalid_argument("variable domain repeats a value label");
    }
    for (const ExtensionalConstraint& c : constraints) {
      if (c.arity() < 2) throw std::invalid_argument("constraint arity must be at least 2");
      std::vector<int> s = c.scope;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("constraint scope repeats a variable");
      for (int v : c.scope)
        if (v < 0 || v >= num_vars()) throw std::invalid_argument("constraint scope variable out of range");
      for (const std::vector<int>& t : c.tuples) {
        if (t.size() != c.scope.size()) throw std::invalid_argument("tuple arity mismatch");
        for (size_t i = 0; i < t.size(); ++i) {
          int var = c.scope[i];
          int d = variables[static_cast<size_t>(var)].domain_size();
          if (t[i] < 0 || t[i] >= d) throw std::invalid_argument("tuple value outside variable domain");
        }
      }
      if (!std::is_sorted(c.tuples.begin(), c.tuples.end()))
        throw std::invalid_argument("constraint tuples must be sorted");
      if (std::adjacent_find(c.tuples.begin(), c.tuples.end()) != c.tuples.end())
        throw std::invalid_argument("constraint tuples must be deduplicated");
    }
  }
};

namespace detail {

// Reorders tuple t given over scope `from` into the order of scope `to`
// (both must contain the same variable set).
inline std::vector<int> align_tuple(const std::vector<int>& from, const std::vector<int>& to,
                                    const std::vector<int>& t) {
  std::vector<int> out(to.size());
  for (size_t i = 0; i < to.size(); ++i) {
    auto it = std::find(from.begin(), from.end(), to[i]);
    if (it == from.end()) throw std::invalid_argument("scope mismatch while aligning tuples");
    out[i] = t[static_cast<size_t>(it - from.begin())];
  }
  return out;
}

}  // namespace detail

// Appends a constraint, normalizing tuples and merging with any existing
// constraint over the same variable set (tuples are aligned to the existing
// scope order; merge position and scope are the existing constraint's).
//   allows + allows  -> intersection
//   forbids + forbids -> union
//   mixed            -> allows-set minus forbids-set, semantics `allows`
inline void add_constraint(Csp& csp, std::vector<int> scope, Semantics semantics,
                           std::vector<std::vector<int>> tuples) {
  sort_dedup_tuples(tuples);
  std::vector<int> scope_set = scope;
  std::sort(scope_set.begin(), scope_set.end());

  for (ExtensionalConstraint& existing : csp.constraints) {
    std::vector<int> es = existing.scope;
    std::sort(es.begin(), es.end());
    if (es != scope_set) continue;

    std::vector<std::vector<int>> aligned;
    aligned.reserve(tuples.size());
    for (const std::vector<int>& t : tuples)
      aligned.push_back(detail::align_tuple(scope, existing.scope, t));
    sort_dedup_tuples(aligned);

    std::vector<std::vector<int>> merged;
    if (existing.semantics == semantics) {
      if (semantics == Semantics::allows)
        std::set_intersection(existing.tuples.begin(), existing.tuples.end(), aligned.begin(),
                              aligned.end(), std::back_inserter(merged));
      else
        std::set_union(existing.tuples.begin(), existing.tuples.end(), aligned.begin(),
                       aligned.end(), std::back_inserter(merged));
    } else {
      const auto& allows_set = existing.semantics == Semantics::allows ? existing.tuples : aligned;
      const auto& forbids_set = existing.semantics == Semantics::allows ? aligned : existing.tuples;
      std::set_difference(allows_set.begin(), allows_set.end(), forbids_set.begin(),
                          forbids_set.end(), std::back_inserter(merged));
      existing.semantics = Semantics::allows;
    }
    existing.tuples = std::move(merged);
    return;
  }

  ExtensionalConstraint c;
  c.scope = std::move(scope);
  c.semantics = semantics;
  c.tuples = std::move(tuples);
  csp.constraints.push_back(std::move(c));
}

// Full assignment check: `values` holds one in-domain value index per variable.
inline bool check_solution(const Csp& csp, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != csp.num_vars())
    throw std::invalid_argument("solution length must equal the variable count");
  for (int v = 0; v < csp.num_vars(); ++v)
    if (values[static_cast<size_t>(v)] < 0 ||
        values[static_cast<size_t>(v)] >= csp.variables[static_cast<size_t>(v)].domain_size())
      throw std::invalid_argument("solution value outside variable domain");
  std::vector<int> t;
  for (const ExtensionalConstraint& c : csp.constraints) {
    t.clear();
    for (int var : c.scope) t.push_back(values[static_cast<size_t>(var)]);
    if (!c.permits(t)) return false;
  }
  return true;
}

// Current domains during propagation/search: per variable, the ordered list of
// surviving value indices.
class DomainState {
 public:
  DomainState() = default;
  explicit DomainState(const Csp& csp) {
    current_.reserve(static_cast<size_t>(csp.num_vars()));
    for (const CspVariable& v : csp.variables) {
      std::vector<int> vals(static_cast<size_t>(v.domain_size()));
      for (int i = 0; i < v.domain_size(); ++i) vals[static_cast<size_t>(i)] = i;
      current_.push_back(std::move(vals));
    }
  }

  int num_vars() const { return static_cast<int>(current_.size()); }
  const std::vector<int>& values(int var) const { return current_[static_cast<size_t>(var)]; }
  int size(int var) const { return static_cast<int>(current_[static_cast<size_t>(var)].size()); }
  bool has(int var, int value) const {
    const auto& vals = current_[static_cast<size_t>(var)];
    return std::find(vals.begin(), vals.end(), value) != vals.end();
  }
  // Removes a value; returns false if it was already absent.
  bool remove(int var, int value) {
    auto& vals = current_[static_cast<size_t>(var)];
    auto it = std::find(vals.begin(), vals.end(), value);
    if (it == vals.end()) return false;
    vals.erase(it);
    return true;
  }
  // Restricts a variable to a single value (value must currently be present).
  void assign(int var, int value) {
    if (!has(var, value)) throw std::invalid_argument("assigning a pruned value");
    current_[static_cast<size_t>(var)] = {value};
  }
  bool wiped_out() const {
    for (const auto& vals : current_)
      if (vals.empty()) return true;
    return false;
  }
  bool all_singleton() const {
    for (const auto& vals : current_)
      if (vals.size() != 1) return false;
    return true;
  }

  friend bool operator==(const DomainState& a, const DomainState& b) {
    return a.current_ == b.current_;
  }

 private:
  std::vector<std::vector<int>> current_;
};

// Calls fn(tuple) for every tuple in the cartesian product of the given
// domain sizes, in lexicographic order. Product of sizes must fit the budget.
inline void for_each_tuple(const std::vector<int>& sizes,
                           const std::function<void(const std::vector<int>&)>& fn,
                           int64_t budget = 1000000) {
  int64_t total = 1;
  for (int s : sizes) {
    if (s <= 0) return;  // empty product
    total *= s;
    if (total > budget) throw std::runtime_error("tuple enumeration exceeds budget");
  }
  std::vector<int> t(sizes.size(), 0);
  while (true) {
    fn(t);
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && t[static_cast<size_t>(i)] + 1 == sizes[static_cast<size_t>(i)]) {
      t[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++t[static_cast<size_t>(i)];
  }
}

}  // namespace satcsp
