#include <catch2/catch_amalgamated.hpp>

#include "satcsp/arc_consistency.hpp"
#include "satcsp/enumerate.hpp"
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

// Independent arc-consistency oracle: repeatedly delete unsupported values by
// scanning everything until nothing changes. Binary constraints only.
DomainState naive_ac_fixpoint(const Csp& p, bool* wiped) {
  DomainState st(p);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ExtensionalConstraint& c : p.constraints) {
      for (int side = 0; side < 2; ++side) {
        int x = c.scope[side == 0 ? 0 : 1];
        int y = c.scope[side == 0 ? 1 : 0];
        std::vector<int> doomed;
        for (int a : st.values(x)) {
          bool supported = false;
          for (int b : st.values(y)) {
            std::vector<int> t(2);
            t[static_cast<size_t>(c.scope_position(x))] = a;
            t[static_cast<size_t>(c.scope_position(y))] = b;
            if (c.permits(t)) supported = true;
          }
          if (!supported) doomed.push_back(a);
        }
        for (int a : doomed) {
          st.remove(x, a);
          changed = true;
        }
      }
    }
  }
  *wiped = st.wiped_out();
  return st;
}

}  // namespace

TEST_CASE("ac3 prunes values without support against a singleton neighbor") {
  Csp p = vars_with_domains({1, 2});
  add_constraint(p, {0, 1}, Semantics::forbids, {{0, 0}});  // not-equal on the shared value
  PropagationResult r = ac3(p, DomainState(p));
  CHECK_FALSE(r.wipeout);
  CHECK(r.pruned == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(r.state.values(1) == std::vector<int>{1});
  CHECK(r.revisions > 0);
}

TEST_CASE("ac3 wipes out a domain when no value has support") {
  SECTION("two singleton variables forbidding their only pair") {
    Csp p = vars_with_domains({1, 1});
    add_constraint(p, {0, 1}, Semantics::forbids, {{0, 0}});
    PropagationResult r = ac3(p, DomainState(p));
    CHECK(r.wipeout);
    CHECK(r.state.wiped_out());
  }
  SECTION("forbidding the whole product over two-value domains") {
    Csp p = vars_with_domains({2, 2});
    add_constraint(p, {0, 1}, Semantics::forbids, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    PropagationResult r = ac3(p, DomainState(p));
    CHECK(r.wipeout);
  }
  SECTION("an initially empty domain is an immediate wipeout") {
    Csp p = vars_with_domains({2, 0});
    PropagationResult r = ac3(p, DomainState(p));
    CHECK(r.wipeout);
    CHECK(r.pruned.empty());
  }
}

TEST_CASE("ac3 reduces an ordered chain to the unique consistent assignment") {
  // X < Y, Y < Z over {0,1,2}: arc consistency alone pins X=0, Y=1, Z=2.
  Csp p = vars_with_domains({3, 3, 3});
  std::vector<std::vector<int>> lt = {{0, 1}, {0, 2}, {1, 2}};
  add_constraint(p, {0, 1}, Semantics::allows, lt);
  add_constraint(p, {1, 2}, Semantics::allows, lt);
  PropagationResult r = ac3(p, DomainState(p));
  CHECK_FALSE(r.wipeout);
  CHECK(r.state.values(0) == std::vector<int>{0});
  CHECK(r.state.values(1) == std::vector<int>{1});
  CHECK(r.state.values(2) == std::vector<int>{2});
  CHECK(r.pruned.size() == 6);
}

TEST_CASE("ac3 is idempotent") {
  Csp p = vars_with_domains({3, 3, 3});
  std::vector<std::vector<int>> lt = {{0, 1}, {0, 2}, {1, 2}};
  add_constraint(p, {0, 1}, Semantics::allows, lt);
  add_constraint(p, {1, 2}, Semantics::allows, lt);
  PropagationResult first = ac3(p, DomainState(p));
  PropagationResult second = ac3(p, first.state);
  CHECK_FALSE(second.wipeout);
  CHECK(second.pruned.empty());
  CHECK(second.state == first.state);
}

TEST_CASE("ac3 rejects non-binary constraints") {
  Csp p = vars_with_domains({2, 2, 2});
  add_constraint(p, {0, 1, 2}, Semantics::allows, {{0, 0, 0}});
  CHECK_THROWS_AS(ac3(p, DomainState(p)), std::invalid_argument);
}

TEST_CASE("ac3 matches a naive fixpoint oracle on random binary instances") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    Csp p = gen_bincsp(4, 4, 3, 0.45, seed);
    bool naive_wiped = false;
    DomainState expect = naive_ac_fixpoint(p, &naive_wiped);
    PropagationResult r = ac3(p, DomainState(p));
    INFO("seed " << seed);
    CHECK(r.wipeout == naive_wiped);
    if (!r.wipeout && !naive_wiped) CHECK(r.state == expect);
    // The pruned list matches the domain delta exactly.
    if (!r.wipeout) {
      size_t removed = 0;
      for (int v = 0; v < p.num_vars(); ++v)
        removed += static_cast<size_t>(p.variables[static_cast<size_t>(v)].domain_size() -
                                       r.state.size(v));
      CHECK(r.pruned.size() == removed);
    }
  }
}

TEST_CASE("gac agrees with ac3 on binary instances") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    Csp p = gen_bincsp(4, 3, 3, 0.5, seed + 900);
    PropagationResult a = ac3(p, DomainState(p));
    PropagationResult g = gac(p, DomainState(p));
    INFO("seed " << seed);
    CHECK(a.wipeout == g.wipeout);
    if (!a.wipeout) CHECK(a.state == g.state);
  }
  int64_t count = enumerate_csps(2, 3, [&](const Csp& p) {
    PropagationResult a = ac3(p, DomainState(p));
    PropagationResult g = gac(p, DomainState(p));
    CHECK(a.wipeout == g.wipeout);
    if (!a.wipeout) CHECK(a.state == g.state);
  });
  CHECK(count == 3 + 9 * 6);  // one-var domains + two-var grid of templates
}

TEST_CASE("gac handles non-binary constraints") {
  SECTION("a single allowed triple pins all three variables") {
    Csp p = vars_with_domains({2, 2, 2});
    add_constraint(p, {0, 1, 2}, Semantics::allows, {{0, 1, 0}});
    PropagationResult r = gac(p, DomainState(p));
    CHECK_FALSE(r.wipeout);
    CHECK(r.state.values(0) == std::vector<int>{0});
    CHECK(r.state.values(1) == std::vector<int>{1});
    CHECK(r.state.values(2) == std::vector<int>{0});
  }
  SECTION("forbidding the entire product wipes out") {
    Csp p = vars_with_domains({2, 2, 2});
    std::vector<std::vector<int>> all;
    for_each_tuple({2, 2, 2}, [&](const std::vector<int>& t) { all.push_back(t); });
    add_constraint(p, {0, 1, 2}, Semantics::forbids, all);
    PropagationResult r = gac(p, DomainState(p));
    CHECK(r.wipeout);
  }
  SECTION("ternary parity constraint leaves full domains untouched") {
    // Tuples with an even number of 1s: every value extends to a support.
    Csp p = vars_with_domains({2, 2, 2});
    add_constraint(p, {0, 1, 2}, Semantics::allows,
                   {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    PropagationResult r = gac(p, DomainState(p));
    CHECK_FALSE(r.wipeout);
    CHECK(r.pruned.empty());
  }
}
