#include <catch2/catch_amalgamated.hpp>

#include "satcsp/csp_search.hpp"
#include "satcsp/enumerate.hpp"
#include "satcsp/oracle.hpp"
#include "satcsp/random_gen.hpp"

using namespace satcsp;

namespace {

Csp vars_with_domains(std::vector<int> sizes) {
  Csp p;
  for (size_t v = 0; v < sizes.size(); ++v) {
    CspVariable var;
    var.id = static_cast<int>(v);
    for (int k = 0; k < sizes[v]; ++k) var.domain.push_back(value_label(k));
    p.variables.push_back(var);
  }
  return p;
}

Csp not_equal_pair(int d) {
  Csp p = vars_with_domains({d, d});
  std::vector<std::vector<int>> diag;
  for (int k = 0; k < d; ++k) diag.push_back({k, k});
  add_constraint(p, {0, 1}, Semantics::forbids, diag);
  return p;
}

}  // namespace

TEST_CASE("forward checking solves a two-value not-equal pair in two branches") {
  Csp p = not_equal_pair(2);
  CspSearchStats s = fc_solve(p);
  CHECK(s.sat);
  CHECK(s.branches == 2);
  CHECK(s.choice_branches == 1);  // the second variable is singleton by then
  CHECK(s.nodes == 3);
  CHECK(s.failed_leaves == 0);
  REQUIRE(s.solution.has_value());
  CHECK(*s.solution == std::vector<int>{0, 1});
  CHECK(check_solution(p, *s.solution));
}

TEST_CASE("forward checking fails after one branch on the singleton not-equal pair") {
  Csp p = not_equal_pair(1);
  CspSearchStats s = fc_solve(p);
  CHECK_FALSE(s.sat);
  CHECK(s.branches == 1);
  CHECK(s.choice_branches == 0);
  CHECK(s.failed_leaves == 1);
  CHECK_FALSE(s.solution.has_value());
}

TEST_CASE("forward checking branches once per variable when nothing constrains them") {
  Csp p = vars_with_domains({2, 2, 2});
  CspSearchStats s = fc_solve(p);
  CHECK(s.sat);
  CHECK(s.branches == 3);
  CHECK(s.choice_branches == 3);
  CHECK(*s.solution == std::vector<int>{0, 0, 0});
}

TEST_CASE("mac finishes the ordered chain by singleton assignments after root propagation") {
  Csp p = vars_with_domains({3, 3, 3});
  std::vector<std::vector<int>> lt = {{0, 1}, {0, 2}, {1, 2}};
  add_constraint(p, {0, 1}, Semantics::allows, lt);
  add_constraint(p, {1, 2}, Semantics::allows, lt);
  CspSearchStats s = mac_solve(p);
  CHECK(s.sat);
  CHECK(s.branches == 3);  // all three are singleton branches
  CHECK(s.choice_branches == 0);
  CHECK(s.failed_leaves == 0);
  CHECK(*s.solution == std::vector<int>{0, 1, 2});
}

TEST_CASE("mac detects unsatisfiability at the root without branching") {
  Csp p = not_equal_pair(1);
  CspSearchStats s = mac_solve(p);
  CHECK_FALSE(s.sat);
  CHECK(s.branches == 0);
  CHECK(s.nodes == 1);
  CHECK(s.failed_leaves == 1);
}

TEST_CASE("an empty domain is an immediate failed leaf for both solvers") {
  Csp p = vars_with_domains({2, 0});
  CspSearchStats f = fc_solve(p);
  CHECK_FALSE(f.sat);
  CHECK(f.failed_leaves == 1);
  CHECK(f.branches == 0);
  CspSearchStats m = mac_solve(p);
  CHECK_FALSE(m.sat);
  CHECK(m.failed_leaves == 1);
}

TEST_CASE("solvers respect the plan's variable and value order") {
  Csp p = not_equal_pair(2);
  CspBranchPlan plan;
  plan.order = {1, 0};
  plan.value_order = {{1, 0}, {1, 0}};
  CspSearchStats s = fc_solve(p, plan);
  CHECK(s.sat);
  CHECK(*s.solution == std::vector<int>{0, 1});  // y tried value 1 first, x forced to 0
  CHECK(s.branches == 2);
}

TEST_CASE("forward checking demands a plan covering every variable") {
  Csp p = not_equal_pair(2);
  CspBranchPlan plan;
  plan.order = {0};
  plan.value_order = {{0, 1}};
  CHECK_THROWS_AS(fc_solve(p, plan), std::invalid_argument);
  // mac may branch a subset when propagation can certify the rest.
  CHECK_NOTHROW(mac_solve(p, plan));
}

TEST_CASE("plan validation rejects malformed plans") {
  Csp p = not_equal_pair(2);
  CspBranchPlan plan;
  plan.order = {0, 0};
  CHECK_THROWS_AS(plan.validate(p, false), std::invalid_argument);  // repeat
  plan.order = {0, 5};
  CHECK_THROWS_AS(plan.validate(p, false), std::invalid_argument);  // out of range
  plan.order = {0, 1};
  plan.value_order = {{0}, {0, 1}};
  CHECK_THROWS_AS(plan.validate(p, false), std::invalid_argument);  // not a permutation
}

TEST_CASE("fc and mac agree with brute force on random binary instances") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    Csp p = gen_bincsp(4, 4, 3, 0.5, seed + 4000);
    CspOracleResult o = brute_force_csp(p);
    CspSearchStats f = fc_solve(p);
    CspSearchStats m = mac_solve(p);
    INFO("seed " << seed);
    REQUIRE(f.sat == o.sat);
    REQUIRE(m.sat == o.sat);
    if (o.sat) {
      CHECK(check_solution(p, *f.solution));
      CHECK(check_solution(p, *m.solution));
      // Both use static ascending-first plans, so both find the
      // lexicographically least solution with respect to that order.
      CHECK(*f.solution == o.solutions.front());
      CHECK(*m.solution == o.solutions.front());
    }
    CHECK(m.branches <= f.branches);  // stronger propagation never branches more
  }
}

TEST_CASE("fc and mac agree with brute force on the exhaustive two-variable family") {
  int64_t count = enumerate_csps(2, 3, [&](const Csp& p) {
    CspOracleResult o = brute_force_csp(p);
    CspSearchStats f = fc_solve(p);
    CspSearchStats m = mac_solve(p);
    REQUIRE(f.sat == o.sat);
    REQUIRE(m.sat == o.sat);
    CHECK(m.branches <= f.branches);
  });
  CHECK(count == 57);
}
