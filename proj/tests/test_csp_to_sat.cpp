#include <catch2/catch_amalgamated.hpp>

#include "satcsp/csp_to_sat.hpp"
#include "satcsp/dp.hpp"
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

std::vector<std::vector<int>> clause_codes(const Cnf& f) {
  std::vector<std::vector<int>> out;
  for (const Clause& c : f.clauses) {
    std::vector<int> lits;
    for (Literal l : c.lits) lits.push_back(l.code);
    out.push_back(lits);
  }
  return out;
}

}  // namespace

TEST_CASE("direct encoding emits at-least-one then conflict clauses") {
  Csp p = not_equal_pair(2);
  CspToSatResult r = encode_direct(p, "none");
  CHECK(r.cnf.num_vars == 4);
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{
                                   {1, 2}, {3, 4}, {-1, -3}, {-2, -4}});
  CHECK(r.map.selector == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(r.map.amo == "none");

  CspToSatResult rp = encode_direct(p, "pairwise");
  CHECK(clause_codes(rp.cnf) ==
        std::vector<std::vector<int>>{
            {1, 2}, {3, 4}, {-1, -3}, {-2, -4}, {-1, -2}, {-3, -4}});
  CHECK(rp.map.amo == "pairwise");
}

TEST_CASE("direct encoding complements allowed tuples into conflict clauses") {
  Csp p = vars_with_domains({2, 2});
  add_constraint(p, {0, 1}, Semantics::allows, {{0, 1}, {1, 0}});
  CspToSatResult r = encode_direct(p, "none");
  // Forbidden = complement of allowed: (0,0) and (1,1).
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{
                                   {1, 2}, {3, 4}, {-1, -3}, {-2, -4}});
}

TEST_CASE("direct encoding of an empty domain contains the empty clause") {
  Csp p = vars_with_domains({0});
  CspToSatResult r = encode_direct(p, "none");
  REQUIRE(r.cnf.clauses.size() == 1);
  CHECK(r.cnf.clauses[0].lits.empty());
  SearchStats s = dp_solve(r.cnf);
  CHECK_FALSE(s.sat);
}

TEST_CASE("log encoding numbers bits least-significant-first per variable") {
  Csp p = vars_with_domains({3});
  CspToSatResult r = encode_log(p);
  CHECK(r.cnf.num_vars == 2);
  CHECK(r.map.bits == std::vector<std::vector<int>>{{1, 2}});
  // The only clause excludes the unused bit pattern 11 (index 3), most
  // significant bit first.
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{{-2, -1}});
}

TEST_CASE("log encoding writes conflict clauses as concatenated bit patterns") {
  Csp p = vars_with_domains({3, 3});
  add_constraint(p, {0, 1}, Semantics::forbids, {{0, 1}});
  CspToSatResult r = encode_log(p);
  CHECK(r.cnf.num_vars == 4);
  REQUIRE(r.cnf.clauses.size() == 3);
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{
                                   {-2, -1},      // exclude index 3 of variable 0
                                   {-4, -3},      // exclude index 3 of variable 1
                                   {2, 1, 4, -3}  // forbid (index 0, index 1)
                               });
}

TEST_CASE("log encoding of exact powers of two needs no exclusion clauses") {
  Csp p = vars_with_domains({4, 2});
  CspToSatResult r = encode_log(p);
  CHECK(r.cnf.num_vars == 3);
  CHECK(r.cnf.clauses.empty());
}

TEST_CASE("log encoding of a single-value domain uses zero bits") {
  Csp p = vars_with_domains({1, 2});
  add_constraint(p, {0, 1}, Semantics::forbids, {{0, 1}});
  CspToSatResult r = encode_log(p);
  CHECK(r.cnf.num_vars == 1);  // only variable 1 needs a bit
  CHECK(r.map.bits == std::vector<std::vector<int>>{{}, {1}});
  // Conflict over (0,1): variable 0 contributes no literals.
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{{-1}});
}

TEST_CASE("log encoding of an empty domain contains the empty clause") {
  Csp p = vars_with_domains({0});
  CspToSatResult r = encode_log(p);
  REQUIRE(r.cnf.clauses.size() == 1);
  CHECK(r.cnf.clauses[0].lits.empty());
}

TEST_CASE("support encoding interleaves exactly-one blocks then support clauses") {
  Csp p = not_equal_pair(2);
  CspToSatResult r = encode_support(p);
  CHECK(r.cnf.num_vars == 4);
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{
                                   {1, 2}, {-1, -2},   // exactly-one for variable 0
                                   {3, 4}, {-3, -4},   // exactly-one for variable 1
                                   {-1, 4}, {-2, 3},   // supports for variable 0's values
                                   {-3, 2}, {-4, 1}})  // supports for variable 1's values
      ;
  CHECK(r.map.amo == "pairwise");
}

TEST_CASE("an unsupported value yields a unit support clause") {
  Csp p = not_equal_pair(1);
  CspToSatResult r = encode_support(p);
  CHECK(clause_codes(r.cnf) == std::vector<std::vector<int>>{{1}, {2}, {-1}, {-2}});
  SearchStats s = dp_solve(r.cnf);
  CHECK_FALSE(s.sat);
}

TEST_CASE("support encoding rejects non-binary constraints") {
  Csp p = vars_with_domains({2, 2, 2});
  add_constraint(p, {0, 1, 2}, Semantics::allows, {{0, 0, 0}});
  CHECK_THROWS_AS(encode_support(p), std::invalid_argument);
  CHECK_NOTHROW(encode_direct(p, "none"));
  CHECK_NOTHROW(encode_log(p));
}

TEST_CASE("complementing a huge allowed relation exceeds the tuple budget") {
  Csp p = vars_with_domains({1001, 1001});
  add_constraint(p, {0, 1}, Semantics::allows, {{0, 0}});
  CHECK_THROWS_AS(encode_direct(p, "none"), std::invalid_argument);
  CHECK_THROWS_AS(encode_log(p), std::invalid_argument);
}

TEST_CASE("sat encodings preserve satisfiability and counts exhaustively") {
  int64_t count = enumerate_csps(2, 3, [&](const Csp& p) {
    CspOracleResult o = brute_force_csp(p, 1 << 16);

    CspToSatResult direct_none = encode_direct(p, "none");
    SatOracleResult dn = brute_force_sat(direct_none.cnf, 1 << 16);
    REQUIRE(dn.sat == o.sat);

    CspToSatResult direct_pw = encode_direct(p, "pairwise");
    SatOracleResult dp_models = brute_force_sat(direct_pw.cnf, 1 << 16);
    REQUIRE(dp_models.sat == o.sat);
    CHECK(dp_models.model_count == o.solution_count);

    CspToSatResult log = encode_log(p);
    SatOracleResult lg = brute_force_sat(log.cnf, 1 << 16);
    REQUIRE(lg.sat == o.sat);
    CHECK(lg.model_count == o.solution_count);

    CspToSatResult support = encode_support(p);
    SatOracleResult sp = brute_force_sat(support.cnf, 1 << 16);
    REQUIRE(sp.sat == o.sat);
    CHECK(sp.model_count == o.solution_count);
  });
  CHECK(count == 57);
}

TEST_CASE("solving the encoded formula and decoding recovers a solution") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Csp p = gen_bincsp(4, 4, 3, 0.4, seed + 5000);
    CspOracleResult o = brute_force_csp(p, 1);
    for (const std::string& enc : {"direct", "log", "support"}) {
      INFO("seed " << seed << " encoding " << enc);
      CspToSatResult r = csp_to_sat(p, enc, enc == "direct" ? "pairwise" : "none");
      SearchStats s = dp_solve(r.cnf);
      REQUIRE(s.sat == o.sat);
      if (s.sat) {
        std::vector<int> solution = decode_csp_solution(r.map, p, *s.model);
        CHECK(check_solution(p, solution));
      }
    }
  }
}
