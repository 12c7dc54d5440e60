#pragma once
// Unit propagation to fixpoint.
//
// Deterministic rule: scan clauses in stored order; the first unit clause
// found (exactly one unassigned literal, no true literal) forces that literal
// and the scan restarts from the first clause. A clause with all literals
// false is a conflict and stops propagation immediately. The forced literals
// are reported in the order they were set.

#include <vector>

#include "satcsp/cnf.hpp"

namespace satcsp {

struct UpResult {
  Assignment fixpoint;
  bool conflict = false;
  int forced_count = 0;
  std::vector<Literal> forced;
};

inline UpResult unit_propagate(const Cnf& f, Assignment a) {
  if (a.num_vars() != f.num_vars) throw std::invalid_argument("assignment/formula size mismatch");
  UpResult r;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : f.clauses) {
      bool sat = false;
      int unassigned = 0;
      Literal unit(1);
      for (Literal l : c.lits) {
        auto v = a.literal_value(l);
        if (!v.has_value()) {
          ++unassigned;
          unit = l;
        } else if (*v) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        r.fixpoint = std::move(a);
        r.conflict = true;
        return r;
      }
      if (unassigned == 1) {
        a.set(unit.var(), unit.positive());
        r.forced.push_back(unit);
        ++r.forced_count;
        changed = true;
        break;  // restart scan from the first clause
      }
    }
  }
  r.fixpoint = std::move(a);
  return r;
}

}  // namespace satcsp
