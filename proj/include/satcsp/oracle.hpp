#pragma once
// Brute-force ground truth. These evaluators deliberately avoid the solver
// code paths (no Assignment machinery, no permits() shortcuts) so that solver
// results can be cross-checked against genuinely independent logic.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"

namespace satcsp {

struct SatOracleResult {
  bool sat = false;
  int64_t model_count = 0;
  std::vector<Assignment> models;  // first models up to the cap; count is exact
};

// Exhaustive enumeration in lexicographic order (variable 1 most significant,
// false before true).
inline SatOracleResult brute_force_sat(const Cnf& f, int64_t model_cap = 4096) {
  if (f.num_vars > 24) throw std::invalid_argument("brute_force_sat handles at most 24 variables");
  SatOracleResult r;
  int n = f.num_vars;
  for (uint32_t bits = 0; bits < (1u << n); ++bits) {
    bool ok = true;
    for (const Clause& c : f.clauses) {
      bool clause_sat = false;
      for (Literal l : c.lits) {
        bool value = (bits >> (n - l.var())) & 1;
        if (value == l.positive()) {
          clause_sat = true;
          break;
        }
      }
      if (!clause_sat) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++r.model_count;
    if (static_cast<int64_t>(r.models.size()) < model_cap) {
      Assignment a(n);
      for (int v = 1; v <= n; ++v) a.set(v, ((bits >> (n - v)) & 1) != 0);
      r.models.push_back(std::move(a));
    }
  }
  r.sat = r.model_count > 0;
  return r;
}

struct CspOracleResult {
  bool sat = false;
  int64_t solution_count = 0;
  std::vector<std::vector<int>> solutions;  // first solutions up to the cap
};

namespace detail {

// Independent constraint evaluation: linear scans, no binary search.
inline bool oracle_satisfies(const Csp& p, const std::vector<int>& values) {
  for (const ExtensionalConstraint& c : p.constraints) {
    bool listed = false;
    for (const std::vector<int>& t : c.tuples) {
      bool match = true;
      for (size_t i = 0; i < c.scope.size(); ++i)
        if (t[i] != values[static_cast<size_t>(c.scope[i])]) {
          match = false;
          break;
        }
      if (match) {
        listed = true;
        break;
      }
    }
    if (c.semantics == Semantics::allows ? !listed : listed) return false;
  }
  return true;
}

}  // namespace detail

// Exhaustive enumeration over the domain product in lexicographic order
// (variable 0 most significant, value indices ascending).
inline CspOracleResult brute_force_csp(const Csp& p, int64_t solution_cap = 4096) {
  int64_t product = 1;
  for (const CspVariable& v : p.variables) {
    product *= v.domain_size();
    if (product > (1 << 24))
      throw std::invalid_argument("brute_force_csp domain product exceeds 2^24");
    if (product == 0) break;
  }
  CspOracleResult r;
  if (product == 0) return r;  // an empty domain admits no assignments

  int n = p.num_vars();
  std::vector<int> values(static_cast<size_t>(n), 0);
  while (true) {
    if (detail::oracle_satisfies(p, values)) {
      ++r.solution_count;
      if (static_cast<int64_t>(r.solutions.size()) < solution_cap) r.solutions.push_back(values);
    }
    int i = n - 1;
    while (i >= 0 &&
           values[static_cast<size_t>(i)] + 1 == p.variables[static_cast<size_t>(i)].domain_size()) {
      values[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++values[static_cast<size_t>(i)];
  }
  r.sat = r.solution_count > 0;
  return r;
}

}  // namespace satcsp
