#pragma once
// Verification engine for the documented lattice of relationships between
// propositional and constraint-based inference and search. Each claim pairs a
// procedure on one side of an encoding with a procedure on the other side and
// states how their conflict detection, pruning, or search-tree measures must
// relate. The engine measures every instance of a suite on both sides under a
// matched static branching heuristic, aggregates violations and witnesses,
// and emits deterministic reports.
//
// Claim catalogue (ids are stable identifiers used by the CLI and reports):
//   T1  UP conflict on a formula implies AC wipeout on its dual encoding;
//       strictly (AC on the dual detects some conflicts UP misses).
//   T2  AC on the hidden-variable encoding wipes out iff UP conflicts, and on
//       conflict-free instances prunes exactly the complements of the
//       UP-forced literals from the proposition variables.
//   T3  AC on the literal encoding vs UP: observational; the observed
//       relation between their conflict detections is reported.
//   T4  DP search never exceeds FC on the dual encoding (calibrated measure),
//       with at least one strict instance.
//   T5  DP and MAC on the dual encoding are incomparable: witnesses exist in
//       both directions.
//   T6  DP equals MAC on the hidden-variable encoding (calibrated measure) on
//       every non-degenerate instance.
//   T7  DP never exceeds MAC on the literal encoding, with a strict witness.
//   T8  UP conflict on the log encoding implies UP conflict on the direct
//       encoding, which implies AC wipeout on the original problem; both
//       inclusions have strict witnesses.
//   T9  DP on the direct encoding equals FC on the original problem
//       (calibrated measure) on every non-degenerate instance, and MAC on the
//       original never exceeds DP-direct, with a strict witness.
//   T10 FC and MAC on the original problem never exceed DP on the log
//       encoding; both with strict witnesses.
//   S1  UP on the support encoding conflicts iff AC wipes out on the original
//       problem, and its forced-false selectors are exactly the AC prunes.
//
// Branch-measure calibration: equality claims depend on a counting
// convention. The engine tries every candidate (measure pairing x base
// branching order x at-most-one policy for the direct encoding), keeps those
// under which T6 and the T9 equality hold with zero violations, breaks ties
// by dominance-claim quality, and freezes the winner for all branch claims.
// If no candidate reaches zero violations the best one is reported together
// with minimal counterexamples; nothing is hidden.
//
// Degeneracy rule: instances decided at the root by both sides without any
// real choice (no DP decision, no multi-valued CSP selection) are excluded
// from branch-measure comparisons but counted as skipped. Propagation claims
// never skip.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satcsp/arc_consistency.hpp"
#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"
#include "satcsp/csp_io.hpp"
#include "satcsp/csp_search.hpp"
#include "satcsp/csp_to_sat.hpp"
#include "satcsp/dimacs.hpp"
#include "satcsp/dp.hpp"
#include "satcsp/encoding_map.hpp"
#include "satcsp/enumerate.hpp"
#include "satcsp/random_gen.hpp"
#include "satcsp/sat_to_csp.hpp"
#include "satcsp/unit_propagation.hpp"

namespace satcsp {

// ---------------------------------------------------------------------------
// Measures and conventions
// ---------------------------------------------------------------------------

struct SatCounters {
  int64_t decisions_total = 0;
  int64_t decisions_positive = 0;
  int64_t nodes = 0;
  int64_t failed_leaves = 0;
};

struct CspCounters {
  int64_t branches = 0;
  int64_t choice_branches = 0;
  int64_t nodes = 0;
  int64_t failed_leaves = 0;
};

inline SatCounters sat_counters(const SearchStats& s) {
  return {s.decisions_total, s.decisions_positive, s.nodes, s.failed_leaves};
}

inline CspCounters csp_counters(const CspSearchStats& s) {
  return {s.branches, s.choice_branches, s.nodes, s.failed_leaves};
}

// Candidate measure pairings. Each pairs a DP-side counter with its CSP-side
// analogue:
//   decisions_total    <-> choice_branches  (attempts at real choice points)
//   decisions_positive <-> branches         (first-polarity tries <-> value tries)
//   nodes              <-> nodes
//   failed_leaves      <-> failed_leaves
inline constexpr int kMetricDecisionsTotal = 0;
inline constexpr int kMetricDecisionsPositive = 1;
inline constexpr int kMetricNodes = 2;
inline constexpr int kMetricFailedLeaves = 3;
inline constexpr int kMetricCount = 4;

// Base branching orders over the original formula's variables.
inline constexpr int kBaseAscending = 0;   // 1..n, positive polarity first
inline constexpr int kBaseOccurrence = 1;  // first-occurrence order and polarity
inline constexpr int kBaseCount = 2;

// At-most-one policy for the direct encoding.
inline constexpr int kAmoNone = 0;
inline constexpr int kAmoPairwise = 1;
inline constexpr int kAmoCount = 2;

inline const char* metric_name(int m) {
  static const char* names[kMetricCount] = {"decisions_total", "decisions_positive", "nodes",
                                            "failed_leaves"};
  if (m < 0 || m >= kMetricCount) throw std::invalid_argument("unknown measure");
  return names[m];
}

inline const char* base_name(int b) {
  static const char* names[kBaseCount] = {"ascending", "occurrence"};
  if (b < 0 || b >= kBaseCount) throw std::invalid_argument("unknown base order");
  return names[b];
}

inline const char* amo_name(int a) {
  static const char* names[kAmoCount] = {"none", "pairwise"};
  if (a < 0 || a >= kAmoCount) throw std::invalid_argument("unknown at-most-one policy");
  return names[a];
}

struct Convention {
  int metric = kMetricFailedLeaves;
  int base = kBaseAscending;
  int amo = kAmoPairwise;

  std::string to_string() const {
    return std::string(metric_name(metric)) + "/" + base_name(base) + "/" + amo_name(amo);
  }
};

inline int64_t sat_metric(const SatCounters& c, int metric) {
  switch (metric) {
    case kMetricDecisionsTotal: return c.decisions_total;
    case kMetricDecisionsPositive: return c.decisions_positive;
    case kMetricNodes: return c.nodes;
    case kMetricFailedLeaves: return c.failed_leaves;
    default: throw std::invalid_argument("unknown measure");
  }
}

inline int64_t csp_metric(const CspCounters& c, int metric) {
  switch (metric) {
    case kMetricDecisionsTotal: return c.choice_branches;
    case kMetricDecisionsPositive: return c.branches;
    case kMetricNodes: return c.nodes;
    case kMetricFailedLeaves: return c.failed_leaves;
    default: throw std::invalid_argument("unknown measure");
  }
}

// ---------------------------------------------------------------------------
// Matched-heuristic branch plans
// ---------------------------------------------------------------------------

// Base plan over the formula's own variables. Ascending: 1..n positive-first.
// Occurrence: variables ordered by first occurrence in the clause list, each
// with the polarity of that first occurrence; untouched variables follow in
// ascending order, positive-first.
inline BranchPlan sat_base_plan(const Cnf& f, int base) {
  if (base == kBaseAscending) return BranchPlan::ascending(f.num_vars);
  if (base != kBaseOccurrence) throw std::invalid_argument("unknown base order");
  BranchPlan p;
  std::vector<char> seen(static_cast<size_t>(f.num_vars) + 1, 0);
  for (const Clause& c : f.clauses)
    for (Literal l : c.lits) {
      int v = l.var();
      if (seen[static_cast<size_t>(v)]) continue;
      seen[static_cast<size_t>(v)] = 1;
      p.order.push_back(v);
      p.positive_first.push_back(l.positive() ? 1 : 0);
    }
  for (int v = 1; v <= f.num_vars; ++v)
    if (!seen[static_cast<size_t>(v)]) {
      p.order.push_back(v);
      p.positive_first.push_back(1);
    }
  return p;
}

namespace detail {

// positive_first lookup by variable id (1..n) for a base plan.
inline std::vector<char> polarity_by_var(const BranchPlan& base, int num_vars) {
  std::vector<char> pol(static_cast<size_t>(num_vars) + 1, 1);
  for (size_t i = 0; i < base.order.size(); ++i)
    pol[static_cast<size_t>(base.order[i])] = base.positive_first[i];
  return pol;
}

}  // namespace detail

// Hidden-variable encoding: branch only the proposition variables, in base
// order; value order tries the preferred polarity first ("T" before "F" when
// the base plan is positive-first for that variable).
inline CspBranchPlan hidden_plan(const EncodingMap& map, const BranchPlan& base) {
  CspBranchPlan p;
  for (size_t i = 0; i < base.order.size(); ++i) {
    int v = base.order[i];
    p.order.push_back(map.prop_var[static_cast<size_t>(v - 1)]);
    if (base.positive_first[i])
      p.value_order.push_back({1, 0});  // domain is ["F","T"]
    else
      p.value_order.push_back({0, 1});
  }
  return p;
}

// Dual encoding: clause variables in clause-index order. Each value is a
// satisfying tuple of the clause; values are ordered so that, scanning scope
// positions left to right, tuples carrying the preferred polarity of that
// position's variable come first.
inline CspBranchPlan dual_plan(const Csp& dual, const EncodingMap& map, const BranchPlan& base,
                               int num_vars) {
  std::vector<char> pol = detail::polarity_by_var(base, num_vars);
  CspBranchPlan p;
  for (size_t i = 0; i < map.clause_var.size(); ++i) {
    int cv = map.clause_var[i];
    p.order.push_back(cv);
    const std::vector<std::string>& labels = dual.variables[static_cast<size_t>(cv)].domain;
    const std::vector<int>& scope = map.clause_scope[i];
    std::vector<int> idx(labels.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      const std::string& la = labels[static_cast<size_t>(a)];
      const std::string& lb = labels[static_cast<size_t>(b)];
      for (size_t j = 0; j < scope.size(); ++j) {
        if (la[j] == lb[j]) continue;
        char preferred = pol[static_cast<size_t>(scope[j])] ? 'T' : 'F';
        return la[j] == preferred;
      }
      return false;
    });
    p.value_order.push_back(std::move(idx));
  }
  return p;
}

// Literal encoding: clause variables in clause-index order. Each value is one
// of the clause's literals; values are ordered by the base plan — literals of
// earlier base variables first, the preferred polarity of a variable before
// its complement, stored order as the tie-break.
inline CspBranchPlan literal_plan(const EncodingMap& map, const BranchPlan& base, int num_vars) {
  std::vector<int> rank(static_cast<size_t>(num_vars) + 1, num_vars);
  for (size_t i = 0; i < base.order.size(); ++i)
    rank[static_cast<size_t>(base.order[i])] = static_cast<int>(i);
  std::vector<char> pol = detail::polarity_by_var(base, num_vars);
  CspBranchPlan p;
  for (size_t i = 0; i < map.clause_var.size(); ++i) {
    p.order.push_back(map.clause_var[i]);
    const std::vector<int>& lits = map.clause_literals[i];
    std::vector<int> idx(lits.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      Literal la(lits[static_cast<size_t>(a)]);
      Literal lb(lits[static_cast<size_t>(b)]);
      int ra = rank[static_cast<size_t>(la.var())];
      int rb = rank[static_cast<size_t>(lb.var())];
      if (ra != rb) return ra < rb;
      if (la.positive() == lb.positive()) return false;
      bool prefer_positive = pol[static_cast<size_t>(la.var())] != 0;
      return la.positive() == prefer_positive;
    });
    p.value_order.push_back(std::move(idx));
  }
  return p;
}

// Log encoding: for each original variable in ascending order, branch its
// bits from most to least significant, trying 0 first; this explores the
// variable's values in ascending order, matching the CSP-side value order.
inline BranchPlan log_plan(const EncodingMap& map) {
  BranchPlan p;
  for (const std::vector<int>& bits : map.bits)
    for (size_t j = bits.size(); j-- > 0;) {
      p.order.push_back(bits[j]);
      p.positive_first.push_back(0);
    }
  return p;
}

// ---------------------------------------------------------------------------
// Per-instance measurement records
// ---------------------------------------------------------------------------

struct SatRecord {
  int index = 0;
  Cnf formula;
  bool up_conflict = false;
  bool dual_wipe = false;
  bool hidden_wipe = false;
  bool literal_wipe = false;
  // True when the AC prunes on the hidden encoding's proposition variables
  // are exactly the complements of the UP-forced literals. Only meaningful
  // when neither side detected a conflict.
  bool hidden_pruned_matches = true;
  std::array<SatCounters, kBaseCount> dp{};
  std::array<CspCounters, kBaseCount> fc_dual{};
  std::array<CspCounters, kBaseCount> mac_dual{};
  std::array<CspCounters, kBaseCount> mac_hidden{};
  std::array<CspCounters, kBaseCount> mac_literal{};
};

struct CspRecord {
  int index = 0;
  Csp problem;
  bool ac_wipe = false;
  std::array<bool, kAmoCount> up_direct_conflict{};
  bool up_log_conflict = false;
  bool up_support_conflict = false;
  // True when UP's forced-false selectors on the support encoding are exactly
  // the AC prunes on the original problem. Only meaningful when neither side
  // detected a conflict.
  bool support_pruned_matches = true;
  CspCounters fc{};
  CspCounters mac{};
  std::array<SatCounters, kAmoCount> dp_direct{};
  SatCounters dp_log{};
};

inline SatRecord build_sat_record(int index, const Cnf& f) {
  SatRecord r;
  r.index = index;
  r.formula = f;

  UpResult up = unit_propagate(f, Assignment(f.num_vars));
  r.up_conflict = up.conflict;

  SatToCspResult dual = encode_dual(f);
  r.dual_wipe = ac3(dual.csp, DomainState(dual.csp)).wipeout;

  SatToCspResult hidden = encode_hidden(f);
  PropagationResult hidden_ac = ac3(hidden.csp, DomainState(hidden.csp));
  r.hidden_wipe = hidden_ac.wipeout;
  if (!r.up_conflict && !r.hidden_wipe) {
    std::vector<std::pair<int, int>> got;
    for (const auto& pv : hidden_ac.pruned)
      if (pv.first < f.num_vars) got.push_back(pv);
    std::vector<std::pair<int, int>> want;
    for (Literal l : up.forced)
      want.emplace_back(hidden.map.prop_var[static_cast<size_t>(l.var() - 1)],
                        l.positive() ? 0 : 1);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    r.hidden_pruned_matches = got == want;
  }

  SatToCspResult lit = encode_literal(f);
  r.literal_wipe = ac3(lit.csp, DomainState(lit.csp)).wipeout;

  for (int base = 0; base < kBaseCount; ++base) {
    BranchPlan bp = sat_base_plan(f, base);
    r.dp[static_cast<size_t>(base)] = sat_counters(dp_solve(f, bp));
    CspBranchPlan dplan = dual_plan(dual.csp, dual.map, bp, f.num_vars);
    r.fc_dual[static_cast<size_t>(base)] = csp_counters(fc_solve(dual.csp, dplan));
    r.mac_dual[static_cast<size_t>(base)] = csp_counters(mac_solve(dual.csp, dplan));
    r.mac_hidden[static_cast<size_t>(base)] =
        csp_counters(mac_solve(hidden.csp, hidden_plan(hidden.map, bp)));
    r.mac_literal[static_cast<size_t>(base)] =
        csp_counters(mac_solve(lit.csp, literal_plan(lit.map, bp, f.num_vars)));
  }
  return r;
}

inline CspRecord build_csp_record(int index, const Csp& p) {
  CspRecord r;
  r.index = index;
  r.problem = p;

  PropagationResult ac = ac3(p, DomainState(p));
  r.ac_wipe = ac.wipeout;

  for (int amo = 0; amo < kAmoCount; ++amo) {
    CspToSatResult direct = encode_direct(p, amo_name(amo));
    r.up_direct_conflict[static_cast<size_t>(amo)] =
        unit_propagate(direct.cnf, Assignment(direct.cnf.num_vars)).conflict;
    r.dp_direct[static_cast<size_t>(amo)] =
        sat_counters(dp_solve(direct.cnf, BranchPlan::ascending(direct.cnf.num_vars)));
  }

  CspToSatResult log = encode_log(p);
  r.up_log_conflict = unit_propagate(log.cnf, Assignment(log.cnf.num_vars)).conflict;
  r.dp_log = sat_counters(dp_solve(log.cnf, log_plan(log.map)));

  CspToSatResult support = encode_support(p);
  UpResult sup = unit_propagate(support.cnf, Assignment(support.cnf.num_vars));
  r.up_support_conflict = sup.conflict;
  if (!r.up_support_conflict && !r.ac_wipe) {
    std::vector<std::pair<int, int>> selector_of(static_cast<size_t>(support.cnf.num_vars) + 1,
                                                 {-1, -1});
    for (size_t v = 0; v < support.map.selector.size(); ++v)
      for (size_t a = 0; a < support.map.selector[v].size(); ++a)
        selector_of[static_cast<size_t>(support.map.selector[v][a])] = {static_cast<int>(v),
                                                                        static_cast<int>(a)};
    std::vector<std::pair<int, int>> got;
    for (Literal l : sup.forced)
      if (!l.positive()) got.push_back(selector_of[static_cast<size_t>(l.var())]);
    std::vector<std::pair<int, int>> want = ac.pruned;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    r.support_pruned_matches = got == want;
  }

  CspBranchPlan plan = CspBranchPlan::ascending(p);
  r.fc = csp_counters(fc_solve(p, plan));
  r.mac = csp_counters(mac_solve(p, plan));
  return r;
}

// ---------------------------------------------------------------------------
// Claim results
// ---------------------------------------------------------------------------

inline constexpr int kWitnessCap = 3;  // stored payloads per witness kind; counts stay exact

struct ClaimWitness {
  std::string kind;
  int instance_index = 0;
  int64_t lhs = 0;
  int64_t rhs = 0;
  std::string instance;  // DIMACS or CSP JSON text of the witnessing instance
};

struct ClaimResult {
  std::string id;
  std::string description;
  int64_t instances = 0;
  int64_t skipped = 0;
  int64_t violations = 0;
  int64_t strict_witnesses = 0;
  int64_t incomparability_witnesses = 0;
  std::string convention;
  bool pass = false;
  std::string notes;
  // Claim-specific counters, explained by `notes`:
  //   T3: exceptions per direction; T5: witnesses per direction;
  //   T8: violations per inclusion; T9: equality/dominance violations;
  //   T10: strict witnesses per comparison.
  int64_t count_a = 0;
  int64_t count_b = 0;
  std::vector<ClaimWitness> witnesses;
};

inline const std::vector<std::string>& claim_catalogue() {
  static const std::vector<std::string> ids = {"T1", "T2", "T3", "T4", "T5", "T6",
                                               "T7", "T8", "T9", "T10", "S1"};
  return ids;
}

inline std::string claim_description(const std::string& id) {
  if (id == "T1") return "UP conflict implies AC wipeout on the dual encoding (strict)";
  if (id == "T2") return "AC on the hidden encoding detects and prunes exactly as UP";
  if (id == "T3") return "AC on the literal encoding vs UP: observed relation";
  if (id == "T4") return "DP <= FC on the dual encoding (with strict witness)";
  if (id == "T5") return "DP vs MAC on the dual encoding: incomparable";
  if (id == "T6") return "DP = MAC on the hidden encoding (non-degenerate instances)";
  if (id == "T7") return "DP <= MAC on the literal encoding (with strict witness)";
  if (id == "T8") return "UP conflicts: log => direct => AC wipeout (both strict)";
  if (id == "T9") return "DP on the direct encoding = FC, and MAC <= DP-direct (strict)";
  if (id == "T10") return "FC <= DP on the log encoding and MAC <= DP-log (both strict)";
  if (id == "S1") return "UP on the support encoding conflicts and prunes exactly as AC";
  throw std::invalid_argument("unknown claim id: " + id);
}

namespace detail {

inline void add_witness(ClaimResult& r, const std::string& kind, int index, int64_t lhs,
                        int64_t rhs, const std::string& text) {
  int same = 0;
  for (const ClaimWitness& w : r.witnesses)
    if (w.kind == kind) ++same;
  if (same >= kWitnessCap) return;
  r.witnesses.push_back({kind, index, lhs, rhs, text});
}

inline std::string sat_text(const SatRecord& rec) { return write_dimacs(rec.formula); }
inline std::string csp_text(const CspRecord& rec) { return csp_to_text(rec.problem); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Claim evaluators
// ---------------------------------------------------------------------------

inline ClaimResult eval_t1(const std::vector<SatRecord>& suite) {
  ClaimResult r;
  r.id = "T1";
  r.description = claim_description(r.id);
  r.convention = "conflict-detection";
  for (const SatRecord& rec : suite) {
    ++r.instances;
    if (rec.up_conflict && !rec.dual_wipe) {
      ++r.violations;
      detail::add_witness(r, "up-conflict-without-wipeout", rec.index, 1, 0,
                          detail::sat_text(rec));
    } else if (rec.dual_wipe && !rec.up_conflict) {
      ++r.strict_witnesses;
      detail::add_witness(r, "wipeout-without-up-conflict", rec.index, 0, 1,
                          detail::sat_text(rec));
    }
  }
  r.pass = r.violations == 0 && r.strict_witnesses > 0;
  return r;
}

inline ClaimResult eval_t2(const std::vector<SatRecord>& suite) {
  ClaimResult r;
  r.id = "T2";
  r.description = claim_description(r.id);
  r.convention = "conflict-detection+pruned-set";
  for (const SatRecord& rec : suite) {
    ++r.instances;
    if (rec.up_conflict != rec.hidden_wipe) {
      ++r.violations;
      detail::add_witness(r, "conflict-detection-mismatch", rec.index, rec.up_conflict ? 1 : 0,
                          rec.hidden_wipe ? 1 : 0, detail::sat_text(rec));
    } else if (!rec.up_conflict && !rec.hidden_pruned_matches) {
      ++r.violations;
      detail::add_witness(r, "pruned-set-mismatch", rec.index, 0, 0, detail::sat_text(rec));
    }
  }
  r.pass = r.violations == 0;
  return r;
}

inline ClaimResult eval_t3(const std::vector<SatRecord>& suite) {
  ClaimResult r;
  r.id = "T3";
  r.description = claim_description(r.id);
  for (const SatRecord& rec : suite) {
    ++r.instances;
    if (rec.up_conflict && !rec.literal_wipe) {
      ++r.count_a;
      detail::add_witness(r, "up-conflict-without-wipeout", rec.index, 1, 0,
                          detail::sat_text(rec));
    } else if (rec.literal_wipe && !rec.up_conflict) {
      ++r.count_b;
      detail::add_witness(r, "wipeout-without-up-conflict", rec.index, 0, 1,
                          detail::sat_text(rec));
    }
  }
  const char* relation = nullptr;
  if (r.count_a == 0 && r.count_b == 0)
    relation = "equivalence";
  else if (r.count_a == 0)
    relation = "ac-strictly-stronger";
  else if (r.count_b == 0)
    relation = "up-strictly-stronger";
  else
    relation = "incomparable";
  r.convention = std::string("observed:") + relation;
  r.notes = "UP-conflict without wipeout: " + std::to_string(r.count_a) +
            " instances; wipeout without UP-conflict: " + std::to_string(r.count_b) +
            " instances";
  r.pass = true;  // observational claim: it reports, it does not gate
  return r;
}

namespace detail {

// Shared body of the DP-vs-CSP-search dominance claims on the formula suite.
template <typename CspSide>
inline ClaimResult sat_dominance(const std::string& id, const std::vector<SatRecord>& suite,
                                 const Convention& conv, CspSide csp_side,
                                 const char* violation_kind, const char* strict_kind) {
  ClaimResult r;
  r.id = id;
  r.description = claim_description(id);
  r.convention = conv.to_string();
  for (const SatRecord& rec : suite) {
    ++r.instances;
    const SatCounters& s = rec.dp[static_cast<size_t>(conv.base)];
    const CspCounters& c = csp_side(rec);
    if (s.decisions_total == 0 && c.choice_branches == 0) {
      ++r.skipped;
      continue;
    }
    int64_t lhs = sat_metric(s, conv.metric);
    int64_t rhs = csp_metric(c, conv.metric);
    if (lhs > rhs) {
      ++r.violations;
      add_witness(r, violation_kind, rec.index, lhs, rhs, sat_text(rec));
    } else if (lhs < rhs) {
      ++r.strict_witnesses;
      add_witness(r, strict_kind, rec.index, lhs, rhs, sat_text(rec));
    }
  }
  r.pass = r.violations == 0 && r.strict_witnesses > 0;
  return r;
}

}  // namespace detail

inline ClaimResult eval_t4(const std::vector<SatRecord>& suite, const Convention& conv) {
  return detail::sat_dominance(
      "T4", suite, conv,
      [&](const SatRecord& rec) -> const CspCounters& {
        return rec.fc_dual[static_cast<size_t>(conv.base)];
      },
      "dp-above-fc-dual", "dp-below-fc-dual");
}

inline ClaimResult eval_t5(const std::vector<SatRecord>& suite, const Convention& conv) {
  ClaimResult r;
  r.id = "T5";
  r.description = claim_description(r.id);
  r.convention = conv.to_string();
  for (const SatRecord& rec : suite) {
    ++r.instances;
    const SatCounters& s = rec.dp[static_cast<size_t>(conv.base)];
    const CspCounters& c = rec.mac_dual[static_cast<size_t>(conv.base)];
    if (s.decisions_total == 0 && c.choice_branches == 0) {
      ++r.skipped;
      continue;
    }
    int64_t lhs = sat_metric(s, conv.metric);
    int64_t rhs = csp_metric(c, conv.metric);
    if (lhs < rhs) {
      ++r.count_a;
      detail::add_witness(r, "dp-below-mac-dual", rec.index, lhs, rhs, detail::sat_text(rec));
    } else if (lhs > rhs) {
      ++r.count_b;
      detail::add_witness(r, "dp-above-mac-dual", rec.index, lhs, rhs, detail::sat_text(rec));
    }
  }
  r.incomparability_witnesses = r.count_a + r.count_b;
  r.notes = "DP below MAC-dual on " + std::to_string(r.count_a) + " instances; above on " +
            std::to_string(r.count_b) + " instances";
  r.pass = r.count_a > 0 && r.count_b > 0;
  return r;
}

inline ClaimResult eval_t6(const std::vector<SatRecord>& suite, const Convention& conv) {
  ClaimResult r;
  r.id = "T6";
  r.description = claim_description(r.id);
  r.convention = conv.to_string();
  for (const SatRecord& rec : suite) {
    ++r.instances;
    const SatCounters& s = rec.dp[static_cast<size_t>(conv.base)];
    const CspCounters& c = rec.mac_hidden[static_cast<size_t>(conv.base)];
    if (s.decisions_total == 0 && c.choice_branches == 0) {
      ++r.skipped;
      continue;
    }
    int64_t lhs = sat_metric(s, conv.metric);
    int64_t rhs = csp_metric(c, conv.metric);
    if (lhs != rhs) {
      ++r.violations;
      detail::add_witness(r, "measure-mismatch", rec.index, lhs, rhs, detail::sat_text(rec));
    }
  }
  r.pass = r.violations == 0;
  return r;
}

inline ClaimResult eval_t7(const std::vector<SatRecord>& suite, const Convention& conv) {
  return detail::sat_dominance(
      "T7", suite, conv,
      [&](const SatRecord& rec) -> const CspCounters& {
        return rec.mac_literal[static_cast<size_t>(conv.base)];
      },
      "dp-above-mac-literal", "dp-below-mac-literal");
}

inline ClaimResult eval_t8(const std::vector<CspRecord>& suite,
                           const std::vector<int>& amo_settings) {
  struct Sub {
    int64_t log_without_direct = 0;    // violates: log conflict => direct conflict
    int64_t direct_without_wipe = 0;   // violates: direct conflict => AC wipeout
    int64_t direct_without_log = 0;    // strictness of the first inclusion
    int64_t wipe_without_direct = 0;   // strictness of the second inclusion
    bool pass() const {
      return log_without_direct == 0 && direct_without_wipe == 0 && direct_without_log > 0 &&
             wipe_without_direct > 0;
    }
  };
  std::vector<Sub> subs(amo_settings.size());
  for (const CspRecord& rec : suite)
    for (size_t i = 0; i < amo_settings.size(); ++i) {
      bool direct = rec.up_direct_conflict[static_cast<size_t>(amo_settings[i])];
      if (rec.up_log_conflict && !direct) ++subs[i].log_without_direct;
      if (direct && !rec.ac_wipe) ++subs[i].direct_without_wipe;
      if (direct && !rec.up_log_conflict) ++subs[i].direct_without_log;
      if (rec.ac_wipe && !direct) ++subs[i].wipe_without_direct;
    }

  size_t shown = 0;
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i].pass()) {
      shown = i;
      break;
    } else if (subs[i].log_without_direct + subs[i].direct_without_wipe <
               subs[shown].log_without_direct + subs[shown].direct_without_wipe) {
      shown = i;
    }

  ClaimResult r;
  r.id = "T8";
  r.description = claim_description(r.id);
  int shown_amo = amo_settings[shown];
  for (const CspRecord& rec : suite) {
    ++r.instances;
    bool direct = rec.up_direct_conflict[static_cast<size_t>(shown_amo)];
    if (rec.up_log_conflict && !direct)
      detail::add_witness(r, "log-conflict-without-direct-conflict", rec.index, 1, 0,
                          detail::csp_text(rec));
    if (direct && !rec.ac_wipe)
      detail::add_witness(r, "direct-conflict-without-wipeout", rec.index, 1, 0,
                          detail::csp_text(rec));
    if (direct && !rec.up_log_conflict)
      detail::add_witness(r, "direct-strict", rec.index, 0, 1, detail::csp_text(rec));
    if (rec.ac_wipe && !direct)
      detail::add_witness(r, "wipeout-strict", rec.index, 0, 1, detail::csp_text(rec));
  }
  r.count_a = subs[shown].log_without_direct;
  r.count_b = subs[shown].direct_without_wipe;
  r.violations = r.count_a + r.count_b;
  r.strict_witnesses = subs[shown].direct_without_log + subs[shown].wipe_without_direct;
  r.pass = subs[shown].pass();

  std::string passing;
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i].pass()) {
      if (!passing.empty()) passing += "|";
      passing += amo_name(amo_settings[i]);
    }
  r.convention = "amo=" + (passing.empty() ? std::string(amo_name(shown_amo)) : passing);
  r.notes = "log-conflict without direct-conflict: " + std::to_string(r.count_a) +
            "; direct-conflict without wipeout: " + std::to_string(r.count_b) +
            "; strict witnesses: direct " + std::to_string(subs[shown].direct_without_log) +
            ", wipeout " + std::to_string(subs[shown].wipe_without_direct) +
            " (at-most-one policy " + amo_name(shown_amo) + ")";
  return r;
}

inline ClaimResult eval_t9(const std::vector<CspRecord>& suite, const Convention& conv) {
  ClaimResult r;
  r.id = "T9";
  r.description = claim_description(r.id);
  r.convention = conv.to_string();
  int64_t dom_strict = 0;
  for (const CspRecord& rec : suite) {
    ++r.instances;
    const SatCounters& s = rec.dp_direct[static_cast<size_t>(conv.amo)];
    bool eq_skip = s.decisions_total == 0 && rec.fc.choice_branches == 0;
    if (!eq_skip) {
      int64_t lhs = sat_metric(s, conv.metric);
      int64_t rhs = csp_metric(rec.fc, conv.metric);
      if (lhs != rhs) {
        ++r.count_a;
        detail::add_witness(r, "fc-measure-mismatch", rec.index, lhs, rhs, detail::csp_text(rec));
      }
    }
    bool dom_skip = s.decisions_total == 0 && rec.mac.choice_branches == 0;
    if (!dom_skip) {
      int64_t lhs = csp_metric(rec.mac, conv.metric);
      int64_t rhs = sat_metric(s, conv.metric);
      if (lhs > rhs) {
        ++r.count_b;
        detail::add_witness(r, "mac-above-dp-direct", rec.index, lhs, rhs, detail::csp_text(rec));
      } else if (lhs < rhs) {
        ++dom_strict;
        detail::add_witness(r, "mac-below-dp-direct", rec.index, lhs, rhs, detail::csp_text(rec));
      }
    }
    if (eq_skip && dom_skip) ++r.skipped;
  }
  r.violations = r.count_a + r.count_b;
  r.strict_witnesses = dom_strict;
  r.notes = "FC equality violations: " + std::to_string(r.count_a) +
            "; MAC dominance violations: " + std::to_string(r.count_b) +
            "; MAC strict witnesses: " + std::to_string(dom_strict);
  r.pass = r.violations == 0 && dom_strict > 0;
  return r;
}

inline ClaimResult eval_t10(const std::vector<CspRecord>& suite, const Convention& conv) {
  ClaimResult r;
  r.id = "T10";
  r.description = claim_description(r.id);
  r.convention = conv.to_string();
  for (const CspRecord& rec : suite) {
    ++r.instances;
    int64_t dp = sat_metric(rec.dp_log, conv.metric);
    bool fc_skip = rec.dp_log.decisions_total == 0 && rec.fc.choice_branches == 0;
    if (!fc_skip) {
      int64_t lhs = csp_metric(rec.fc, conv.metric);
      if (lhs > dp) {
        ++r.violations;
        detail::add_witness(r, "fc-above-dp-log", rec.index, lhs, dp, detail::csp_text(rec));
      } else if (lhs < dp) {
        ++r.count_a;
        detail::add_witness(r, "fc-strict", rec.index, lhs, dp, detail::csp_text(rec));
      }
    }
    bool mac_skip = rec.dp_log.decisions_total == 0 && rec.mac.choice_branches == 0;
    if (!mac_skip) {
      int64_t lhs = csp_metric(rec.mac, conv.metric);
      if (lhs > dp) {
        ++r.violations;
        detail::add_witness(r, "mac-above-dp-log", rec.index, lhs, dp, detail::csp_text(rec));
      } else if (lhs < dp) {
        ++r.count_b;
        detail::add_witness(r, "mac-strict", rec.index, lhs, dp, detail::csp_text(rec));
      }
    }
    if (fc_skip && mac_skip) ++r.skipped;
  }
  r.strict_witnesses = r.count_a + r.count_b;
  r.notes = "FC strict on " + std::to_string(r.count_a) + " instances; MAC strict on " +
            std::to_string(r.count_b) + " instances";
  r.pass = r.violations == 0 && r.count_a > 0 && r.count_b > 0;
  return r;
}

inline ClaimResult eval_s1(const std::vector<CspRecord>& suite) {
  ClaimResult r;
  r.id = "S1";
  r.description = claim_description(r.id);
  r.convention = "conflict-detection+pruned-set";
  for (const CspRecord& rec : suite) {
    ++r.instances;
    if (rec.up_support_conflict != rec.ac_wipe) {
      ++r.violations;
      detail::add_witness(r, "conflict-detection-mismatch", rec.index,
                          rec.up_support_conflict ? 1 : 0, rec.ac_wipe ? 1 : 0,
                          detail::csp_text(rec));
    } else if (!rec.ac_wipe && !rec.support_pruned_matches) {
      ++r.violations;
      detail::add_witness(r, "pruned-set-mismatch", rec.index, 0, 0, detail::csp_text(rec));
    }
  }
  r.pass = r.violations == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Calibration
// ---------------------------------------------------------------------------

struct CalibrationOutcome {
  Convention convention;
  bool ok = false;  // zero violations on both equality claims
  std::string notes;
};

// Selects the counting convention: keep candidates under which both equality
// claims (T6 and the T9 equality half) hold with zero violations, then prefer
// the candidate with the best dominance-claim record (fewest violations plus
// one penalty per missing required witness), then the earliest candidate.
// When no candidate reaches zero equality violations, the least-violating one
// is selected and reported as failed calibration.
inline CalibrationOutcome calibrate(const std::vector<SatRecord>& sat_suite,
                                    const std::vector<CspRecord>& csp_suite,
                                    const std::vector<int>& amo_settings) {
  struct Scored {
    Convention conv;
    int64_t equality_violations = 0;
    int64_t dominance_score = 0;
  };
  std::vector<Scored> scored;
  for (int metric = 0; metric < kMetricCount; ++metric)
    for (int base = 0; base < kBaseCount; ++base)
      for (int amo : amo_settings) {
        Scored s;
        s.conv = {metric, base, amo};
        ClaimResult t6 = eval_t6(sat_suite, s.conv);
        ClaimResult t9 = eval_t9(csp_suite, s.conv);
        s.equality_violations = t6.violations + t9.count_a;
        ClaimResult t4 = eval_t4(sat_suite, s.conv);
        ClaimResult t5 = eval_t5(sat_suite, s.conv);
        ClaimResult t7 = eval_t7(sat_suite, s.conv);
        ClaimResult t10 = eval_t10(csp_suite, s.conv);
        s.dominance_score = t4.violations + (t4.strict_witnesses == 0 ? 1 : 0) +
                            (t5.count_a == 0 ? 1 : 0) + (t5.count_b == 0 ? 1 : 0) +
                            t7.violations + (t7.strict_witnesses == 0 ? 1 : 0) + t9.count_b +
                            (t9.strict_witnesses == 0 ? 1 : 0) + t10.violations +
                            (t10.count_a == 0 ? 1 : 0) + (t10.count_b == 0 ? 1 : 0);
        scored.push_back(s);
      }

  size_t best = 0;
  bool any_ok = false;
  for (size_t i = 0; i < scored.size(); ++i) {
    bool ok = scored[i].equality_violations == 0;
    if (ok && !any_ok) {
      any_ok = true;
      best = i;
      continue;
    }
    if (ok == (scored[best].equality_violations == 0)) {
      bool better = ok ? scored[i].dominance_score < scored[best].dominance_score
                       : (scored[i].equality_violations < scored[best].equality_violations ||
                          (scored[i].equality_violations == scored[best].equality_violations &&
                           scored[i].dominance_score < scored[best].dominance_score));
      if (better) best = i;
    }
  }

  CalibrationOutcome out;
  out.convention = scored[best].conv;
  out.ok = scored[best].equality_violations == 0;
  if (out.ok) {
    out.notes = "calibrated convention " + out.convention.to_string() +
                ": equality claims T6 and T9 hold with zero violations (" +
                std::to_string(sat_suite.size()) + " formula instances, " +
                std::to_string(csp_suite.size()) + " constraint instances); " +
                "dominance score " + std::to_string(scored[best].dominance_score);
  } else {
    out.notes = "no candidate convention satisfies both equality claims; best candidate " +
                out.convention.to_string() + " leaves " +
                std::to_string(scored[best].equality_violations) +
                " equality violations (counterexamples embedded in the T6/T9 witness lists)";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite construction and verification entry point
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string claims = "all";        // "all" or comma-separated ids
  std::string suite = "exhaustive";  // "exhaustive" | "random"
  // Exhaustive suite bounds:
  int max_vars = 3;
  int max_clauses = 4;
  int max_width = 3;
  int csp_max_vars = 3;
  int csp_max_domain = 3;
  // Random suite parameters:
  int random_count = 1000;
  int sat_vars = 5;
  int sat_clauses = 8;
  int sat_width = 3;
  int bincsp_vars = 4;
  int bincsp_domain = 3;
  int bincsp_constraints = 5;
  double bincsp_tightness = 0.4;
  uint64_t seed = 1;
  // Which at-most-one policies the direct encoding may use:
  std::string amo = "both";  // "both" | "none" | "pairwise"
};

struct VerifyResult {
  VerifyOptions options;
  std::vector<ClaimResult> claims;
  Convention convention;
  bool calibration_performed = false;
  bool calibration_ok = true;
  std::string calibration_notes;
  int64_t sat_instances = 0;
  int64_t csp_instances = 0;
  bool all_pass = false;
};

inline std::vector<std::string> parse_claim_list(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (tokens.empty()) throw std::invalid_argument("empty claim list");
  const std::vector<std::string>& all = claim_catalogue();
  for (const std::string& t : tokens) {
    if (t == "all") return all;
    if (std::find(all.begin(), all.end(), t) == all.end())
      throw std::invalid_argument("unknown claim id: " + t);
  }
  std::vector<std::string> out;
  for (const std::string& id : all)
    if (std::find(tokens.begin(), tokens.end(), id) != tokens.end()) out.push_back(id);
  return out;
}

inline std::vector<int> parse_amo_settings(const std::string& amo) {
  if (amo == "both") return {kAmoNone, kAmoPairwise};
  if (amo == "none") return {kAmoNone};
  if (amo == "pairwise") return {kAmoPairwise};
  throw std::invalid_argument("at-most-one policy must be both, none, or pairwise");
}

namespace detail {

// Seed offset separating the formula stream from the constraint stream of a
// random suite; documented in the interface notes.
inline constexpr uint64_t kCspSeedOffset = 500000;

inline std::vector<SatRecord> build_sat_suite(const VerifyOptions& opt) {
  std::vector<SatRecord> suite;
  if (opt.suite == "exhaustive") {
    suite.reserve(static_cast<size_t>(cnf_family_size(opt.max_vars, opt.max_clauses, opt.max_width)));
    enumerate_cnfs(opt.max_vars, opt.max_clauses, opt.max_width, [&](const Cnf& f) {
      suite.push_back(build_sat_record(static_cast<int>(suite.size()), f));
    });
  } else {
    suite.reserve(static_cast<size_t>(opt.random_count));
    for (int i = 0; i < opt.random_count; ++i)
      suite.push_back(build_sat_record(
          i, gen_ksat(opt.sat_vars, opt.sat_clauses, opt.sat_width, opt.seed + static_cast<uint64_t>(i))));
  }
  return suite;
}

inline std::vector<CspRecord> build_csp_suite(const VerifyOptions& opt) {
  std::vector<CspRecord> suite;
  if (opt.suite == "exhaustive") {
    suite.reserve(static_cast<size_t>(csp_family_size(opt.csp_max_vars, opt.csp_max_domain)));
    enumerate_csps(opt.csp_max_vars, opt.csp_max_domain, [&](const Csp& p) {
      suite.push_back(build_csp_record(static_cast<int>(suite.size()), p));
    });
  } else {
    suite.reserve(static_cast<size_t>(opt.random_count));
    for (int i = 0; i < opt.random_count; ++i)
      suite.push_back(build_csp_record(
          i, gen_bincsp(opt.bincsp_vars, opt.bincsp_constraints, opt.bincsp_domain,
                        opt.bincsp_tightness, opt.seed + kCspSeedOffset + static_cast<uint64_t>(i))));
  }
  return suite;
}

}  // namespace detail

inline VerifyResult run_verification(const VerifyOptions& opt) {
  if (opt.suite != "exhaustive" && opt.suite != "random")
    throw std::invalid_argument("suite must be exhaustive or random");
  if (opt.suite == "random" && opt.random_count < 1)
    throw std::invalid_argument("random suite needs a positive instance count");
  std::vector<std::string> requested = parse_claim_list(opt.claims);
  std::vector<int> amo_settings = parse_amo_settings(opt.amo);

  auto wants = [&](const char* id) {
    return std::find(requested.begin(), requested.end(), id) != requested.end();
  };
  bool branch_claims = wants("T4") || wants("T5") || wants("T6") || wants("T7") || wants("T9") ||
                       wants("T10");
  bool need_sat = branch_claims || wants("T1") || wants("T2") || wants("T3");
  bool need_csp = branch_claims || wants("T8") || wants("T9") || wants("T10") || wants("S1");

  VerifyResult result;
  result.options = opt;

  std::vector<SatRecord> sat_suite;
  std::vector<CspRecord> csp_suite;
  if (need_sat) sat_suite = detail::build_sat_suite(opt);
  if (need_csp) csp_suite = detail::build_csp_suite(opt);
  result.sat_instances = static_cast<int64_t>(sat_suite.size());
  result.csp_instances = static_cast<int64_t>(csp_suite.size());

  Convention conv{kMetricFailedLeaves, kBaseAscending, amo_settings.front()};
  if (branch_claims) {
    CalibrationOutcome cal = calibrate(sat_suite, csp_suite, amo_settings);
    conv = cal.convention;
    result.calibration_performed = true;
    result.calibration_ok = cal.ok;
    result.calibration_notes = cal.notes;
  } else {
    result.calibration_notes = "not performed: no branch-measure claim requested";
  }
  result.convention = conv;

  for (const std::string& id : requested) {
    if (id == "T1") result.claims.push_back(eval_t1(sat_suite));
    else if (id == "T2") result.claims.push_back(eval_t2(sat_suite));
    else if (id == "T3") result.claims.push_back(eval_t3(sat_suite));
    else if (id == "T4") result.claims.push_back(eval_t4(sat_suite, conv));
    else if (id == "T5") result.claims.push_back(eval_t5(sat_suite, conv));
    else if (id == "T6") result.claims.push_back(eval_t6(sat_suite, conv));
    else if (id == "T7") result.claims.push_back(eval_t7(sat_suite, conv));
    else if (id == "T8") result.claims.push_back(eval_t8(csp_suite, amo_settings));
    else if (id == "T9") result.claims.push_back(eval_t9(csp_suite, conv));
    else if (id == "T10") result.claims.push_back(eval_t10(csp_suite, conv));
    else if (id == "S1") result.claims.push_back(eval_s1(csp_suite));
  }

  // When a dominance claim fails under the frozen convention, report how it
  // fares under the other candidates so the result can be interpreted: a
  // claim that holds under a different counting convention points at a
  // convention conflict, not at a broken implementation.
  for (ClaimResult& c : result.claims) {
    if (c.pass || (c.id != "T4" && c.id != "T7")) continue;
    std::string alt;
    for (int metric = 0; metric < kMetricCount; ++metric)
      for (int base = 0; base < kBaseCount; ++base) {
        if (metric == conv.metric && base == conv.base) continue;
        Convention probe{metric, base, conv.amo};
        ClaimResult pr = c.id == "T4" ? eval_t4(sat_suite, probe) : eval_t7(sat_suite, probe);
        if (pr.violations == 0 && pr.strict_witnesses > 0) {
          if (!alt.empty()) alt += ", ";
          alt += probe.to_string();
        }
      }
    if (!alt.empty()) {
      if (!c.notes.empty()) c.notes += "; ";
      c.notes += "holds with zero violations under alternative conventions: " + alt;
    }
  }

  result.all_pass = true;
  for (const ClaimResult& c : result.claims)
    if (!c.pass) result.all_pass = false;
  return result;
}

}  // namespace satcsp
