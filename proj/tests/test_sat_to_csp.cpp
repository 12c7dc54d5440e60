#include <catch2/catch_amalgamated.hpp>

#include "satcsp/csp_search.hpp"
#include "satcsp/dimacs.hpp"
#include "satcsp/enumerate.hpp"
#include "satcsp/oracle.hpp"
#include "satcsp/random_gen.hpp"
#include "satcsp/sat_to_csp.hpp"

using namespace satcsp;

namespace {

Cnf make(int n, std::initializer_list<std::initializer_list<int>> clauses) {
  Cnf f;
  f.num_vars = n;
  for (auto c : clauses) f.clauses.push_back(Clause::of(c));
  f.validate();
  return f;
}

int64_t count_unused_vars(const Cnf& f) {
  std::vector<bool> used(static_cast<size_t>(f.num_vars) + 1, false);
  for (const Clause& c : f.clauses)
    for (Literal l : c.lits) used[static_cast<size_t>(l.var())] = true;
  int64_t n = 0;
  for (int v = 1; v <= f.num_vars; ++v)
    if (!used[static_cast<size_t>(v)]) ++n;
  return n;
}

}  // namespace

TEST_CASE("dual encoding gives each clause the domain of its satisfying tuples") {
  Cnf f = make(2, {{1, -2}});
  SatToCspResult r = encode_dual(f);
  REQUIRE(r.csp.num_vars() == 1);
  CHECK(r.csp.variables[0].domain == std::vector<std::string>{"FF", "TF", "TT"});
  CHECK(r.csp.constraints.empty());
  CHECK(r.map.encoding == "dual");
  CHECK(r.map.clause_scope == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("dual encoding constrains clause pairs that share variables") {
  Cnf f = make(3, {{1, -2}, {2, 3}});
  SatToCspResult r = encode_dual(f);
  REQUIRE(r.csp.num_vars() == 2);
  CHECK(r.csp.variables[0].domain == std::vector<std::string>{"FF", "TF", "TT"});
  CHECK(r.csp.variables[1].domain == std::vector<std::string>{"FT", "TF", "TT"});
  REQUIRE(r.csp.constraints.size() == 1);
  const ExtensionalConstraint& c = r.csp.constraints[0];
  CHECK(c.scope == std::vector<int>{0, 1});
  CHECK(c.semantics == Semantics::allows);
  CHECK(c.tuples == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 1}, {2, 2}});
}

TEST_CASE("dual encoding adds no constraint between variable-disjoint clauses") {
  Cnf f = make(4, {{1, 2}, {3, 4}});
  SatToCspResult r = encode_dual(f);
  CHECK(r.csp.num_vars() == 2);
  CHECK(r.csp.constraints.empty());
}

TEST_CASE("hidden encoding keeps every original variable and links clause tuples to them") {
  Cnf f = make(2, {{1, 2}});
  SatToCspResult r = encode_hidden(f);
  REQUIRE(r.csp.num_vars() == 3);  // two value variables plus one clause variable
  CHECK(r.csp.variables[0].domain == std::vector<std::string>{"F", "T"});
  CHECK(r.csp.variables[1].domain == std::vector<std::string>{"F", "T"});
  CHECK(r.csp.variables[2].domain == std::vector<std::string>{"FT", "TF", "TT"});
  REQUIRE(r.csp.constraints.size() == 2);
  CHECK(r.csp.constraints[0].scope == std::vector<int>{2, 0});
  CHECK(r.csp.constraints[0].tuples ==
        std::vector<std::vector<int>>{{0, 0}, {1, 1}, {2, 1}});
  CHECK(r.csp.constraints[1].scope == std::vector<int>{2, 1});
  CHECK(r.csp.constraints[1].tuples ==
        std::vector<std::vector<int>>{{0, 1}, {1, 0}, {2, 1}});
  CHECK(r.map.prop_var == std::vector<int>{0, 1});
  CHECK(r.map.clause_var == std::vector<int>{2});
}

TEST_CASE("hidden encoding carries variables that occur in no clause") {
  Cnf f = make(3, {{1, 2}});  // variable 3 unused
  SatToCspResult r = encode_hidden(f);
  CHECK(r.csp.num_vars() == 4);
  CHECK(r.map.prop_var == std::vector<int>{0, 1, 2});
}

TEST_CASE("literal encoding forbids complementary literal choices") {
  Cnf f = make(3, {{1, 2}, {-1, 3}});
  SatToCspResult r = encode_literal(f);
  REQUIRE(r.csp.num_vars() == 2);
  CHECK(r.csp.variables[0].domain == std::vector<std::string>{"1", "2"});
  CHECK(r.csp.variables[1].domain == std::vector<std::string>{"-1", "3"});
  REQUIRE(r.csp.constraints.size() == 1);
  CHECK(r.csp.constraints[0].semantics == Semantics::forbids);
  CHECK(r.csp.constraints[0].tuples == std::vector<std::vector<int>>{{0, 0}});
  CHECK(r.map.clause_literals == std::vector<std::vector<int>>{{1, 2}, {-1, 3}});
}

TEST_CASE("nonbinary encoding restricts domains by unit clauses and forbids falsifying tuples") {
  Cnf f = make(3, {{1}, {-1, 2}, {1, 2, -3}});
  SatToCspResult r = encode_nonbinary(f);
  REQUIRE(r.csp.num_vars() == 3);
  CHECK(r.csp.variables[0].domain == std::vector<std::string>{"T"});
  CHECK(r.csp.variables[1].domain == std::vector<std::string>{"F", "T"});
  CHECK(r.csp.variables[2].domain == std::vector<std::string>{"F", "T"});
  REQUIRE(r.csp.constraints.size() == 2);
  CHECK(r.csp.constraints[0].scope == std::vector<int>{0, 1});
  CHECK(r.csp.constraints[0].semantics == Semantics::forbids);
  CHECK(r.csp.constraints[0].tuples == std::vector<std::vector<int>>{{0, 0}});
  // (1 2 -3) is falsified by x1=F, which the unit-restricted domain cannot
  // represent, so its constraint forbids nothing.
  CHECK(r.csp.constraints[1].scope == std::vector<int>{0, 1, 2});
  CHECK(r.csp.constraints[1].tuples.empty());
}

TEST_CASE("contradictory unit clauses yield an empty domain") {
  Cnf f = make(1, {{1}, {-1}});
  SatToCspResult r = encode_nonbinary(f);
  CHECK(r.csp.variables[0].domain.empty());
  CHECK(r.csp.has_empty_domain());
}

TEST_CASE("all encoders reject the empty clause") {
  Cnf f;
  f.num_vars = 1;
  f.clauses.push_back(Clause{});
  CHECK_THROWS_AS(encode_dual(f), std::invalid_argument);
  CHECK_THROWS_AS(encode_hidden(f), std::invalid_argument);
  CHECK_THROWS_AS(encode_literal(f), std::invalid_argument);
  CHECK_THROWS_AS(encode_nonbinary(f), std::invalid_argument);
}

TEST_CASE("encodings preserve satisfiability and solution structure exhaustively") {
  int64_t checked = enumerate_cnfs(2, 3, 2, [&](const Cnf& f) {
    SatOracleResult o = brute_force_sat(f, 1 << 16);
    INFO(write_dimacs(f));

    SatToCspResult dual = encode_dual(f);
    CspOracleResult od = brute_force_csp(dual.csp, 1 << 16);
    REQUIRE(od.sat == o.sat);
    // One dual solution per satisfying assignment of the occurring variables.
    int64_t unused = count_unused_vars(f);
    CHECK(od.solution_count * (int64_t{1} << unused) == o.model_count);

    SatToCspResult hidden = encode_hidden(f);
    CspOracleResult oh = brute_force_csp(hidden.csp, 1 << 16);
    REQUIRE(oh.sat == o.sat);
    CHECK(oh.solution_count == o.model_count);

    SatToCspResult lit = encode_literal(f);
    CspOracleResult ol = brute_force_csp(lit.csp, 1 << 16);
    REQUIRE(ol.sat == o.sat);

    SatToCspResult nb = encode_nonbinary(f);
    CspOracleResult on = brute_force_csp(nb.csp, 1 << 16);
    REQUIRE(on.sat == o.sat);
    CHECK(on.solution_count == o.model_count);
  });
  CHECK(checked == 92);
}

TEST_CASE("solving the encoded problem and decoding recovers a model") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    // Mixed widths so the nonbinary encoding also produces ternary constraints.
    Cnf f = gen_ksat(5, 6, 2, seed + 31);
    Cnf wide = gen_ksat(5, 4, 3, seed + 7700);
    f.clauses.insert(f.clauses.end(), wide.clauses.begin(), wide.clauses.end());
    SatOracleResult o = brute_force_sat(f, 1);
    for (const std::string& enc : {"dual", "hidden", "literal", "nonbinary"}) {
      INFO("seed " << seed << " encoding " << enc);
      SatToCspResult r = sat_to_csp(f, enc);
      std::optional<std::vector<int>> solution;
      if (r.csp.max_arity() <= 2) {
        CspSearchStats s = mac_solve(r.csp);
        REQUIRE(s.sat == o.sat);
        solution = s.solution;
      } else {
        CspOracleResult oc = brute_force_csp(r.csp, 1);
        REQUIRE(oc.sat == o.sat);
        if (oc.sat) solution = oc.solutions.front();
      }
      if (solution) {
        Assignment a = decode_sat_assignment(r.map, r.csp, *solution);
        CHECK(check_model(f, a));
      }
    }
  }
}
