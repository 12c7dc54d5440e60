#pragma once
// The three encodings of extensional CSPs into CNF.
//
//   direct   one selector variable per (variable, value); one at-least-one
//            clause per variable; one conflict clause per forbidden tuple
//            (allows-constraints are complemented tuple-wise over the domain
//            product, guarded by a tuple budget); optional pairwise
//            at-most-one clauses. Clause order: ALO block, conflict blocks in
//            constraint order, AMO block.
//   log      ceil(log2 d) bits per variable (value index in binary, least
//            significant bit first in the bit table); per unused index one
//            exclusion clause; per forbidden tuple one clause of the bit
//            literals falsifying each value's pattern. Clause literals are
//            written most significant bit first. Clause order: exclusion
//            blocks per variable, then conflict blocks in constraint order.
//   support  direct-encoding selectors; per variable its ALO clause followed
//            by its pairwise AMO clauses; then per binary constraint, both
//            directions in scope order, per value ascending: one support
//            clause (selector implies the disjunction of its supports; empty
//            support yields a unit clause).
//
// Selector/bit numbering is variable-major ascending, so SAT variable order
// equals (variable, value) and (variable, bit) lexicographic order.

#include <stdexcept>
#include <string>
#include <vector>

#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"
#include "satcsp/encoding_map.hpp"

namespace satcsp {

struct CspToSatResult {
  Cnf cnf;
  EncodingMap map;
};

namespace detail {

constexpr int64_t kTupleBudget = 1000000;

// Calls fn for every forbidden tuple of the constraint, in deterministic
// order: stored order for forbids; domain-product (lexicographic) order minus
// the allowed set for allows, guarded by the tuple budget.
template <typename Fn>
inline void for_each_forbidden_tuple(const Csp& csp, int constraint_index, Fn fn) {
  const ExtensionalConstraint& c = csp.constraints[static_cast<size_t>(constraint_index)];
  if (c.semantics == Semantics::forbids) {
    for (const std::vector<int>& t : c.tuples) fn(t);
    return;
  }
  std::vector<int> sizes;
  int64_t product = 1;
  for (int v : c.scope) {
    sizes.push_back(csp.variables[static_cast<size_t>(v)].domain_size());
    product *= sizes.back();
    if (product > kTupleBudget)
      throw std::invalid_argument("constraint " + std::to_string(constraint_index) +
                                  ": complementing its allowed tuples exceeds the tuple budget");
  }
  for_each_tuple(sizes, [&](const std::vector<int>& t) {
    if (!c.lists_tuple(t)) fn(t);
  });
}

inline int bit_width(int domain_size) {
  int w = 0;
  while ((1 << w) < domain_size) ++w;
  return w;
}

}  // namespace detail

inline CspToSatResult encode_direct(const Csp& csp, const std::string& amo = "none") {
  csp.validate();
  if (amo != "none" && amo != "pairwise")
    throw std::invalid_argument("amo must be 'none' or 'pairwise'");

  CspToSatResult r;
  r.map.direction = "csp_to_sat";
  r.map.encoding = "direct";
  r.map.num_original_vars = csp.num_vars();
  r.map.amo = amo;

  int next = 1;
  for (const CspVariable& v : csp.variables) {
    std::vector<int> sel;
    for (int a = 0; a < v.domain_size(); ++a) sel.push_back(next++);
    r.map.selector.push_back(std::move(sel));
  }
  r.cnf.num_vars = next - 1;

  for (int v = 0; v < csp.num_vars(); ++v) {
    Clause alo;
    for (int s : r.map.selector[static_cast<size_t>(v)]) alo.lits.push_back(Literal::pos(s));
    r.cnf.clauses.push_back(std::move(alo));
  }

  for (int ci = 0; ci < csp.num_constraints(); ++ci) {
    const ExtensionalConstraint& c = csp.constraints[static_cast<size_t>(ci)];
    detail::for_each_forbidden_tuple(csp, ci, [&](const std::vector<int>& t) {
      Clause conflict;
      for (size_t i = 0; i < c.scope.size(); ++i)
        conflict.lits.push_back(
            Literal::neg(r.map.selector[static_cast<size_t>(c.scope[i])][static_cast<size_t>(t[i])]));
      r.cnf.clauses.push_back(std::move(conflict));
    });
  }

  if (amo == "pairwise")
    for (int v = 0; v < csp.num_vars(); ++v) {
      const std::vector<int>& sel = r.map.selector[static_cast<size_t>(v)];
      for (size_t a = 0; a < sel.size(); ++a)
        for (size_t b = a + 1; b < sel.size(); ++b)
          r.cnf.clauses.push_back(Clause({Literal::neg(sel[a]), Literal::neg(sel[b])}));
    }

  r.cnf.validate();
  return r;
}

inline CspToSatResult encode_log(const Csp& csp) {
  csp.validate();
  CspToSatResult r;
  r.map.direction = "csp_to_sat";
  r.map.encoding = "log";
  r.map.num_original_vars = csp.num_vars();

  int next = 1;
  for (const CspVariable& v : csp.variables) {
    int w = detail::bit_width(v.domain_size());
    std::vector<int> bv;
    for (int j = 0; j < w; ++j) bv.push_back(next++);  // index j weighs 2^j
    r.map.bits.push_back(std::move(bv));
  }
  r.cnf.num_vars = next - 1;

  // Clause refuting one bit pattern: true literals where the pattern has 0,
  // negative where it has 1, most significant bit first.
  auto pattern_clause = [&](int v, int index) {
    const std::vector<int>& bv = r.map.bits[static_cast<size_t>(v)];
    Clause cl;
    for (int j = static_cast<int>(bv.size()) - 1; j >= 0; --j) {
      bool bit = (index >> j) & 1;
      cl.lits.push_back(bit ? Literal::neg(bv[static_cast<size_t>(j)])
                            : Literal::pos(bv[static_cast<size_t>(j)]));
    }
    return cl;
  };

  for (int v = 0; v < csp.num_vars(); ++v) {
    int d = csp.variables[static_cast<size_t>(v)].domain_size();
    int w = static_cast<int>(r.map.bits[static_cast<size_t>(v)].size());
    for (int index = d; index < (1 << w); ++index)
      r.cnf.clauses.push_back(pattern_clause(v, index));
  }

  for (int ci = 0; ci < csp.num_constraints(); ++ci) {
    const ExtensionalConstraint& c = csp.constraints[static_cast<size_t>(ci)];
    detail::for_each_forbidden_tuple(csp, ci, [&](const std::vector<int>& t) {
      Clause conflict;
      for (size_t i = 0; i < c.scope.size(); ++i) {
        Clause part = pattern_clause(c.scope[i], t[i]);
        conflict.lits.insert(conflict.lits.end(), part.lits.begin(), part.lits.end());
      }
      r.cnf.clauses.push_back(std::move(conflict));
    });
  }

  r.cnf.validate();
  return r;
}

inline CspToSatResult encode_support(const Csp& csp) {
  csp.validate();
  if (csp.max_arity() > 2)
    throw std::invalid_argument("support encoding handles binary constraints only");

  CspToSatResult r;
  r.map.direction = "csp_to_sat";
  r.map.encoding = "support";
  r.map.num_original_vars = csp.num_vars();
  r.map.amo = "pairwise";

  int next = 1;
  for (const CspVariable& v : csp.variables) {
    std::vector<int> sel;
    for (int a = 0; a < v.domain_size(); ++a) sel.push_back(next++);
    r.map.selector.push_back(std::move(sel));
  }
  r.cnf.num_vars = next - 1;

  for (int v = 0; v < csp.num_vars(); ++v) {
    const std::vector<int>& sel = r.map.selector[static_cast<size_t>(v)];
    Clause alo;
    for (int s : sel) alo.lits.push_back(Literal::pos(s));
    r.cnf.clauses.push_back(std::move(alo));
    for (size_t a = 0; a < sel.size(); ++a)
      for (size_t b = a + 1; b < sel.size(); ++b)
        r.cnf.clauses.push_back(Clause({Literal::neg(sel[a]), Literal::neg(sel[b])}));
  }

  for (const ExtensionalConstraint& c : csp.constraints) {
    for (int dir = 0; dir < 2; ++dir) {
      int v = c.scope[dir == 0 ? 0 : 1];
      int w = c.scope[dir == 0 ? 1 : 0];
      int pv = c.scope_position(v), pw = c.scope_position(w);
      int dv = csp.variables[static_cast<size_t>(v)].domain_size();
      int dw = csp.variables[static_cast<size_t>(w)].domain_size();
      std::vector<int> t(2);
      for (int a = 0; a < dv; ++a) {
        Clause cl;
        cl.lits.push_back(Literal::neg(r.map.selector[static_cast<size_t>(v)][static_cast<size_t>(a)]));
        for (int b = 0; b < dw; ++b) {
          t[static_cast<size_t>(pv)] = a;
          t[static_cast<size_t>(pw)] = b;
          if (c.permits(t))
            cl.lits.push_back(
                Literal::pos(r.map.selector[static_cast<size_t>(w)][static_cast<size_t>(b)]));
        }
        r.cnf.clauses.push_back(std::move(cl));
      }
    }
  }

  r.cnf.validate();
  return r;
}

inline CspToSatResult csp_to_sat(const Csp& csp, const std::string& encoding,
                                 const std::string& amo = "none") {
  if (encoding == "direct") return encode_direct(csp, amo);
  if (encoding == "log") return encode_log(csp);
  if (encoding == "support") return encode_support(csp);
  throw std::invalid_argument("unknown csp-to-sat encoding: " + encoding);
}

}  // namespace satcsp
