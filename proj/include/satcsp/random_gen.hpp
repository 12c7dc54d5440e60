#pragma once
// Seeded random instance generation. A single SplitMix64 stream drives each
// generator; draws happen in a fixed documented order, so instances are fully
// reproducible from (kind, sizes, seed) across platforms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satcsp/cnf.hpp"
#include "satcsp/csp.hpp"
#include "satcsp/enumerate.hpp"

namespace satcsp {

// SplitMix64 (Steele, Lea, Flood; public-domain reference constants).
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection sampling (no modulo bias).
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0) is undefined");
    uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    while (true) {
      uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }
};

namespace detail {

// Draws `count` distinct indices from [0, pool_size) via partial Fisher-Yates;
// the result is in draw order (callers sort when a canonical order is needed).
inline std::vector<int64_t> sample_distinct(SplitMix64& rng, int64_t pool_size, int64_t count) {
  std::vector<int64_t> pool(static_cast<size_t>(pool_size));
  for (int64_t i = 0; i < pool_size; ++i) pool[static_cast<size_t>(i)] = i;
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) {
    int64_t j = i + static_cast<int64_t>(rng.below(static_cast<uint64_t>(pool_size - i)));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    out.push_back(pool[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace detail

// Random k-SAT: for each of `clauses` clauses (independently, with
// replacement), draw `width` distinct variables, sort them ascending, then
// draw one sign per literal (heads = negative).
inline Cnf gen_ksat(int vars, int clauses, int width, uint64_t seed) {
  if (vars < 1) throw std::invalid_argument("gen_ksat requires at least one variable");
  if (clauses < 1) throw std::invalid_argument("gen_ksat requires at least one clause");
  if (width < 1 || width > vars)
    throw std::invalid_argument("gen_ksat requires 1 <= width <= vars");
  SplitMix64 rng(seed);
  Cnf f;
  f.num_vars = vars;
  for (int ci = 0; ci < clauses; ++ci) {
    std::vector<int64_t> chosen = detail::sample_distinct(rng, vars, width);
    std::sort(chosen.begin(), chosen.end());
    Clause c;
    for (int64_t v : chosen) {
      bool negative = rng.below(2) == 1;
      int var = static_cast<int>(v) + 1;
      c.lits.push_back(negative ? Literal::neg(var) : Literal::pos(var));
    }
    f.clauses.push_back(std::move(c));
  }
  f.validate();
  return f;
}

// Random binary CSP: all variables share domain size `domain`; `constraints`
// distinct variable pairs are drawn, sorted lexicographically, and each
// receives round(tightness * domain^2) distinct forbidden tuples.
inline Csp gen_bincsp(int vars, int constraints, int domain, double tightness, uint64_t seed) {
  if (vars < 1) throw std::invalid_argument("gen_bincsp requires at least one variable");
  if (domain < 1) throw std::invalid_argument("gen_bincsp requires domain size >= 1");
  if (constraints < 0) throw std::invalid_argument("gen_bincsp requires a nonnegative constraint count");
  if (!(tightness >= 0.0 && tightness <= 1.0))
    throw std::invalid_argument("gen_bincsp requires tightness in [0, 1]");
  int64_t max_pairs = static_cast<int64_t>(vars) * (vars - 1) / 2;
  if (constraints > max_pairs)
    throw std::invalid_argument("gen_bincsp: more constraints requested than variable pairs exist");

  SplitMix64 rng(seed);
  Csp p;
  for (int v = 0; v < vars; ++v) {
    CspVariable var;
    var.id = v;
    for (int k = 0; k < domain; ++k) var.domain.push_back(value_label(k));
    p.variables.push_back(std::move(var));
  }

  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < vars; ++i)
    for (int j = i + 1; j < vars; ++j) all_pairs.emplace_back(i, j);
  std::vector<int64_t> pair_idx = detail::sample_distinct(rng, max_pairs, constraints);
  std::sort(pair_idx.begin(), pair_idx.end());

  int64_t d2 = static_cast<int64_t>(domain) * domain;
  int64_t nogoods = std::llround(tightness * static_cast<double>(d2));
  for (int64_t pi : pair_idx) {
    auto [i, j] = all_pairs[static_cast<size_t>(pi)];
    std::vector<int64_t> tuple_idx = detail::sample_distinct(rng, d2, nogoods);
    std::vector<std::vector<int>> tuples;
    for (int64_t t : tuple_idx)
      tuples.push_back({static_cast<int>(t / domain), static_cast<int>(t % domain)});
    add_constraint(p, {i, j}, Semantics::forbids, std::move(tuples));
  }
  p.validate();
  return p;
}

}  // namespace satcsp
