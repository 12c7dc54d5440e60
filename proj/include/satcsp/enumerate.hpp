#pragma once
// Exhaustive instance families for small-parameter verification runs.
//
// CNF family over (max_vars V, max_clauses C, max_width K):
//   * The clause universe contains every clause over variables 1..V with
//     width 1..K, distinct variables, listed in canonical order: width
//     ascending, then variable combination lexicographic, then sign pattern
//     (all-positive first; pattern bit for the leftmost literal is most
//     significant, 0 = positive).
//   * Instances are all nonempty subsets of the universe with at most C
//     clauses, streamed in order of subset size, then combination-lexicographic.
//   * Every instance keeps num_vars = V so that unused variables stay part of
//     the problem (encodings must carry them).
//
// Binary CSP family over (max_vars N, max_domain D):
//   * For n = 1..N variables, every vector of domain sizes in 1..D, and every
//     assignment of one relation template to each unordered pair of variables.
//   * Templates (fixed order): none, eq, neq, lt, forbid_all, forbid_first.
//   * Domain values are labeled "a", "b", "c", ...
//
// Both enumerators compute the family size by an independent closed-form
// count and refuse families above the hard cap of 10^7 instances.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"

namespace satcsp {

inline constexpr int64_t kMaxFamilySize = 10'000'000;

namespace detail {

// Saturating arithmetic: family sizes only need to be exact below the cap;
// anything larger just has to compare as "too big" without overflowing.
inline int64_t add_sat(int64_t a, int64_t b) {
  if (a > INT64_MAX - b) return INT64_MAX;
  return a + b;
}

inline int64_t mul_sat(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > INT64_MAX / b) return INT64_MAX;
  return a * b;
}

inline int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(INT64_MAX)) return INT64_MAX;
  }
  return static_cast<int64_t>(r);
}

// Visits all k-combinations of {0..n-1} in lexicographic order.
inline void for_each_combination(int n, int k,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CNF family
// ---------------------------------------------------------------------------

// Closed-form count of the clause universe: sum over widths w of C(V,w)*2^w.
inline int64_t clause_universe_size(int max_vars, int max_width) {
  int64_t total = 0;
  for (int w = 1; w <= max_width && w <= max_vars; ++w)
    total = detail::add_sat(total, detail::mul_sat(detail::binomial(max_vars, w), int64_t{1} << w));
  return total;
}

inline std::vector<Clause> clause_universe(int max_vars, int max_width) {
  if (max_vars < 1) throw std::invalid_argument("clause_universe requires at least one variable");
  if (max_width < 1) throw std::invalid_argument("clause_universe requires width >= 1");
  std::vector<Clause> universe;
  for (int w = 1; w <= max_width && w <= max_vars; ++w) {
    detail::for_each_combination(max_vars, w, [&](const std::vector<int>& combo) {
      for (int pattern = 0; pattern < (1 << w); ++pattern) {
        Clause c;
        c.lits.reserve(static_cast<size_t>(w));
        for (int j = 0; j < w; ++j) {
          int var = combo[static_cast<size_t>(j)] + 1;
          bool negative = (pattern >> (w - 1 - j)) & 1;
          c.lits.push_back(negative ? Literal::neg(var) : Literal::pos(var));
        }
        universe.push_back(std::move(c));
      }
    });
  }
  if (static_cast<int64_t>(universe.size()) != clause_universe_size(max_vars, max_width))
    throw std::logic_error("clause universe size disagrees with the closed-form count");
  return universe;
}

// Closed-form count of the CNF family (nonempty clause subsets of size <= C).
inline int64_t cnf_family_size(int max_vars, int max_clauses, int max_width) {
  int64_t universe = clause_universe_size(max_vars, max_width);
  int64_t total = 0;
  for (int s = 1; s <= max_clauses && s <= universe; ++s)
    total = detail::add_sat(total, detail::binomial(universe, s));
  return total;
}

// Streams every instance in canonical order. Returns the number visited and
// asserts it equals the closed-form count.
inline int64_t enumerate_cnfs(int max_vars, int max_clauses, int max_width,
                              const std::function<void(const Cnf&)>& fn) {
  if (max_clauses < 1) throw std::invalid_argument("enumerate_cnfs requires at least one clause");
  int64_t expected = cnf_family_size(max_vars, max_clauses, max_width);
  if (expected > kMaxFamilySize)
    throw std::invalid_argument("cnf family too large: " + std::to_string(expected) +
                                " instances exceeds the cap of " + std::to_string(kMaxFamilySize));
  std::vector<Clause> universe = clause_universe(max_vars, max_width);
  int universe_size = static_cast<int>(universe.size());
  int64_t visited = 0;
  Cnf f;
  f.num_vars = max_vars;
  for (int s = 1; s <= max_clauses && s <= universe_size; ++s) {
    detail::for_each_combination(universe_size, s, [&](const std::vector<int>& combo) {
      f.clauses.clear();
      for (int idx : combo) f.clauses.push_back(universe[static_cast<size_t>(idx)]);
      ++visited;
      fn(f);
    });
  }
  if (visited != expected)
    throw std::logic_error("cnf family enumeration disagrees with the closed-form count");
  return visited;
}

// ---------------------------------------------------------------------------
// Binary CSP family
// ---------------------------------------------------------------------------

enum class PairTemplate { none, eq, neq, lt, forbid_all, forbid_first };

inline constexpr int kPairTemplateCount = 6;

inline int64_t csp_family_size(int max_vars, int max_domain) {
  int64_t total = 0;
  for (int n = 1; n <= max_vars; ++n) {
    int64_t domains = 1;
    for (int i = 0; i < n; ++i) domains = detail::mul_sat(domains, max_domain);
    int64_t pairs = detail::binomial(n, 2);
    int64_t templates = 1;
    for (int64_t i = 0; i < pairs; ++i) templates = detail::mul_sat(templates, kPairTemplateCount);
    total = detail::add_sat(total, detail::mul_sat(domains, templates));
  }
  return total;
}

inline std::string value_label(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "v" + std::to_string(index);
}

namespace detail {

inline void apply_pair_template(Csp& p, int i, int j, PairTemplate t) {
  int di = p.variables[static_cast<size_t>(i)].domain_size();
  int dj = p.variables[static_cast<size_t>(j)].domain_size();
  std::vector<std::vector<int>> tuples;
  Semantics sem = Semantics::forbids;
  switch (t) {
    case PairTemplate::none:
      return;
    case PairTemplate::eq:
      sem = Semantics::allows;
      for (int k = 0; k < std::min(di, dj); ++k) tuples.push_back({k, k});
      break;
    case PairTemplate::neq:
      for (int k = 0; k < std::min(di, dj); ++k) tuples.push_back({k, k});
      break;
    case PairTemplate::lt:
      sem = Semantics::allows;
      for (int a = 0; a < di; ++a)
        for (int b = a + 1; b < dj; ++b) tuples.push_back({a, b});
      break;
    case PairTemplate::forbid_all:
      for (int a = 0; a < di; ++a)
        for (int b = 0; b < dj; ++b) tuples.push_back({a, b});
      break;
    case PairTemplate::forbid_first:
      tuples.push_back({0, 0});
      break;
  }
  add_constraint(p, {i, j}, sem, std::move(tuples));
}

}  // namespace detail

// Streams every binary CSP in canonical order: variable count ascending, then
// domain-size vector lexicographic, then template vector lexicographic over
// pairs (0,1), (0,2), ..., (1,2), ...
inline int64_t enumerate_csps(int max_vars, int max_domain,
                              const std::function<void(const Csp&)>& fn) {
  if (max_vars < 1) throw std::invalid_argument("enumerate_csps requires at least one variable");
  if (max_domain < 1) throw std::invalid_argument("enumerate_csps requires domain size >= 1");
  int64_t expected = csp_family_size(max_vars, max_domain);
  if (expected > kMaxFamilySize)
    throw std::invalid_argument("csp family too large: " + std::to_string(expected) +
                                " instances exceeds the cap of " + std::to_string(kMaxFamilySize));
  int64_t visited = 0;
  for (int n = 1; n <= max_vars; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<int> sizes(static_cast<size_t>(n), 1);
    while (true) {
      std::vector<int> templates(pairs.size(), 0);
      while (true) {
        Csp p;
        for (int v = 0; v < n; ++v) {
          CspVariable var;
          var.id = v;
          for (int k = 0; k < sizes[static_cast<size_t>(v)]; ++k)
            var.domain.push_back(value_label(k));
          p.variables.push_back(std::move(var));
        }
        for (size_t pi = 0; pi < pairs.size(); ++pi)
          detail::apply_pair_template(p, pairs[pi].first, pairs[pi].second,
                                      static_cast<PairTemplate>(templates[pi]));
        ++visited;
        fn(p);

        size_t ti = templates.size();
        while (ti > 0 && templates[ti - 1] == kPairTemplateCount - 1) {
          templates[ti - 1] = 0;
          --ti;
        }
        if (ti == 0) break;
        ++templates[ti - 1];
      }
      int si = n - 1;
      while (si >= 0 && sizes[static_cast<size_t>(si)] == max_domain) {
        sizes[static_cast<size_t>(si)] = 1;
        --si;
      }
      if (si < 0) break;
      ++sizes[static_cast<size_t>(si)];
    }
  }
  if (visited != expected)
    throw std::logic_error("csp family enumeration disagrees with the closed-form count");
  return visited;
}

}  // namespace satcsp
