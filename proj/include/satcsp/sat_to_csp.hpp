#pragma once
// The four encodings of CNF formulas into extensional CSPs.
//
//   dual      one CSP variable per clause; its values are the clause's
//             satisfying truth tuples (width k -> 2^k - 1 values, ordered
//             lexicographically with F < T over the clause's variables in
//             first-occurrence order); one binary allows-constraint per pair
//             of clauses sharing a variable, listing the tuple pairs that
//             agree on every shared variable.
//   hidden    one two-valued variable per propositional variable (domain
//             ["F","T"]) plus the dual variables; per (clause, variable in
//             clause) one binary allows-constraint tying the tuple coordinate
//             to the variable's value; no constraints among propositional
//             variables.
//   literal   one CSP variable per clause; its values are the clause's
//             literals in clause order (DIMACS codes as labels); per clause
//             pair with complementary literals, one forbids-constraint
//             listing exactly the complementary pairs.
//   nonbinary one two-valued variable per propositional variable; per clause
//             of width >= 2 a forbids-constraint over the clause's variables
//             holding the single falsifying tuple; unit clauses restrict the
//             variable's domain directly (conflicting units empty it).
//
// All four reject formulas containing the empty clause (trivially unsat
// input). Duplicate clauses get distinct CSP variables in dual/hidden/literal.

#include <stdexcept>
#include <string>
#include <vector>

#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"
#include "satcsp/encoding_map.hpp"

namespace satcsp {

struct SatToCspResult {
  Csp csp;
  EncodingMap map;
};

namespace detail {

inline void reject_empty_clauses(const Cnf& f, const char* encoding) {
  for (const Clause& c : f.clauses)
    if (c.empty())
      throw std::invalid_argument(std::string(encoding) +
                                  " encoding rejects the empty clause (trivially unsat input)");
}

// The clause's variables in first-occurrence order (normalized clauses
// mention each variable once).
inline std::vector<int> clause_scope_vars(const Clause& c) {
  std::vector<int> out;
  for (Literal l : c.lits) out.push_back(l.var());
  return out;
}

// Satisfying truth tuples of the clause as F/T strings over its scope, in
// lexicographic order with F < T (exactly the all-false tuple is missing).
inline std::vector<std::string> satisfying_tuple_labels(const Clause& c) {
  int k = c.width();
  std::vector<std::string> out;
  for (int pattern = 0; pattern < (1 << k); ++pattern) {
    std::string label(static_cast<size_t>(k), 'F');
    bool sat = false;
    for (int j = 0; j < k; ++j) {
      bool value = (pattern >> (k - 1 - j)) & 1;  // leftmost coordinate most significant
      label[static_cast<size_t>(j)] = value ? 'T' : 'F';
      if (value == c.lits[static_cast<size_t>(j)].positive()) sat = true;
    }
    if (sat) out.push_back(std::move(label));
  }
  return out;
}

}  // namespace detail

inline SatToCspResult encode_dual(const Cnf& f) {
  detail::reject_empty_clauses(f, "dual");
  SatToCspResult r;
  r.map.direction = "sat_to_csp";
  r.map.encoding = "dual";
  r.map.num_original_vars = f.num_vars;

  int m = f.num_clauses();
  for (int i = 0; i < m; ++i) {
    const Clause& c = f.clauses[static_cast<size_t>(i)];
    CspVariable v;
    v.id = i;
    v.domain = detail::satisfying_tuple_labels(c);
    r.csp.variables.push_back(std::move(v));
    r.map.clause_var.push_back(i);
    r.map.clause_scope.push_back(detail::clause_scope_vars(c));
  }

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const std::vector<int>& si = r.map.clause_scope[static_cast<size_t>(i)];
      const std::vector<int>& sj = r.map.clause_scope[static_cast<size_t>(j)];
      std::vector<std::pair<int, int>> shared;  // (position in i, position in j)
      for (size_t a = 0; a < si.size(); ++a)
        for (size_t b = 0; b < sj.size(); ++b)
          if (si[a] == sj[b]) shared.emplace_back(static_cast<int>(a), static_cast<int>(b));
      if (shared.empty()) continue;

      const auto& di = r.csp.variables[static_cast<size_t>(i)].domain;
      const auto& dj = r.csp.variables[static_cast<size_t>(j)].domain;
      std::vector<std::vector<int>> tuples;
      for (int a = 0; a < static_cast<int>(di.size()); ++a)
        for (int b = 0; b < static_cast<int>(dj.size()); ++b) {
          bool agree = true;
          for (auto [pa, pb] : shared)
            if (di[static_cast<size_t>(a)][static_cast<size_t>(pa)] !=
                dj[static_cast<size_t>(b)][static_cast<size_t>(pb)]) {
              agree = false;
              break;
            }
          if (agree) tuples.push_back({a, b});
        }
      add_constraint(r.csp, {i, j}, Semantics::allows, std::move(tuples));
    }

  r.csp.validate();
  return r;
}

inline SatToCspResult encode_hidden(const Cnf& f) {
  detail::reject_empty_clauses(f, "hidden");
  SatToCspResult r;
  r.map.direction = "sat_to_csp";
  r.map.encoding = "hidden";
  r.map.num_original_vars = f.num_vars;

  for (int v = 1; v <= f.num_vars; ++v) {
    CspVariable pv;
    pv.id = v - 1;
    pv.domain = {"F", "T"};
    r.csp.variables.push_back(std::move(pv));
    r.map.prop_var.push_back(v - 1);
  }
  int m = f.num_clauses();
  for (int i = 0; i < m; ++i) {
    const Clause& c = f.clauses[static_cast<size_t>(i)];
    CspVariable dv;
    dv.id = f.num_vars + i;
    dv.domain = detail::satisfying_tuple_labels(c);
    r.csp.variables.push_back(std::move(dv));
    r.map.clause_var.push_back(f.num_vars + i);
    r.map.clause_scope.push_back(detail::clause_scope_vars(c));
  }

  for (int i = 0; i < m; ++i) {
    int dual_id = f.num_vars + i;
    const auto& domain = r.csp.variables[static_cast<size_t>(dual_id)].domain;
    const std::vector<int>& scope = r.map.clause_scope[static_cast<size_t>(i)];
    for (size_t pos = 0; pos < scope.size(); ++pos) {
      int prop_id = scope[pos] - 1;
      std::vector<std::vector<int>> tuples;
      for (int t = 0; t < static_cast<int>(domain.size()); ++t) {
        int prop_value = domain[static_cast<size_t>(t)][pos] == 'T' ? 1 : 0;  // domain ["F","T"]
        tuples.push_back({t, prop_value});
      }
      add_constraint(r.csp, {dual_id, prop_id}, Semantics::allows, std::move(tuples));
    }
  }

  r.csp.validate();
  return r;
}

inline SatToCspResult encode_literal(const Cnf& f) {
  detail::reject_empty_clauses(f, "literal");
  SatToCspResult r;
  r.map.direction = "sat_to_csp";
  r.map.encoding = "literal";
  r.map.num_original_vars = f.num_vars;

  int m = f.num_clauses();
  for (int i = 0; i < m; ++i) {
    const Clause& c = f.clauses[static_cast<size_t>(i)];
    CspVariable v;
    v.id = i;
    std::vector<int> codes;
    for (Literal l : c.lits) {
      v.domain.push_back(std::to_string(l.code));
      codes.push_back(l.code);
    }
    r.csp.variables.push_back(std::move(v));
    r.map.clause_var.push_back(i);
    r.map.clause_literals.push_back(std::move(codes));
  }

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Clause& ci = f.clauses[static_cast<size_t>(i)];
      const Clause& cj = f.clauses[static_cast<size_t>(j)];
      std::vector<std::vector<int>> tuples;
      for (int a = 0; a < ci.width(); ++a)
        for (int b = 0; b < cj.width(); ++b)
          if (ci.lits[static_cast<size_t>(a)] == cj.lits[static_cast<size_t>(b)].negated())
            tuples.push_back({a, b});
      if (!tuples.empty()) add_constraint(r.csp, {i, j}, Semantics::forbids, std::move(tuples));
    }

  r.csp.validate();
  return r;
}

inline SatToCspResult encode_nonbinary(const Cnf& f) {
  detail::reject_empty_clauses(f, "nonbinary");
  SatToCspResult r;
  r.map.direction = "sat_to_csp";
  r.map.encoding = "nonbinary";
  r.map.num_original_vars = f.num_vars;

  // Unit clauses restrict domains; conflicting units empty a domain, making
  // the instance trivially unsatisfiable.
  std::vector<bool> allow_f(static_cast<size_t>(f.num_vars) + 1, true);
  std::vector<bool> allow_t(static_cast<size_t>(f.num_vars) + 1, true);
  for (const Clause& c : f.clauses)
    if (c.width() == 1) {
      Literal l = c.lits[0];
      if (l.positive())
        allow_f[static_cast<size_t>(l.var())] = false;
      else
        allow_t[static_cast<size_t>(l.var())] = false;
    }
  for (int v = 1; v <= f.num_vars; ++v) {
    CspVariable pv;
    pv.id = v - 1;
    if (allow_f[static_cast<size_t>(v)]) pv.domain.push_back("F");
    if (allow_t[static_cast<size_t>(v)]) pv.domain.push_back("T");
    r.csp.variables.push_back(std::move(pv));
    r.map.prop_var.push_back(v - 1);
  }

  for (const Clause& c : f.clauses) {
    if (c.width() < 2) continue;
    std::vector<int> scope;
    for (Literal l : c.lits) scope.push_back(l.var() - 1);
    std::vector<int> falsifying;
    bool representable = true;
    for (Literal l : c.lits) {
      // The literal is false exactly when its variable takes the opposite value.
      const char* label = l.positive() ? "F" : "T";
      const auto& domain = r.csp.variables[static_cast<size_t>(l.var() - 1)].domain;
      int idx = -1;
      for (int d = 0; d < static_cast<int>(domain.size()); ++d)
        if (domain[static_cast<size_t>(d)] == label) idx = d;
      if (idx < 0) {
        representable = false;  // a unit restriction already satisfies this clause
        break;
      }
      falsifying.push_back(idx);
    }
    std::vector<std::vector<int>> tuples;
    if (representable) tuples.push_back(std::move(falsifying));
    add_constraint(r.csp, std::move(scope), Semantics::forbids, std::move(tuples));
  }

  r.csp.validate();
  return r;
}

inline SatToCspResult sat_to_csp(const Cnf& f, const std::string& encoding) {
  if (encoding == "dual") return encode_dual(f);
  if (encoding == "hidden") return encode_hidden(f);
  if (encoding == "literal") return encode_literal(f);
  if (encoding == "nonbinary") return encode_nonbinary(f);
  throw std::invalid_argument("unknown sat-to-csp encoding: " + encoding);
}

}  // namespace satcsp
