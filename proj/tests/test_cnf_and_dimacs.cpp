#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "satcsp/cnf.hpp"
#include "satcsp/dimacs.hpp"

using namespace satcsp;

TEST_CASE("literals carry sign and variable") {
  Literal p = Literal::pos(3);
  Literal n = Literal::neg(3);
  CHECK(p.var() == 3);
  CHECK(n.var() == 3);
  CHECK(p.positive());
  CHECK_FALSE(n.positive());
  CHECK(p.negated() == n);
  CHECK(n.negated() == p);
  CHECK_THROWS_AS(Literal::pos(0), std::invalid_argument);
  CHECK_THROWS_AS(Literal::pos(-2), std::invalid_argument);
}

TEST_CASE("clause normalization drops tautologies and duplicate literals") {
  int dups = 0;
  auto taut = normalize_clause(Clause::of({1, -1, 2}).lits, &dups);
  CHECK_FALSE(taut.has_value());

  dups = 0;
  auto dedup = normalize_clause(Clause::of({2, 1, 2}).lits, &dups);
  REQUIRE(dedup.has_value());
  CHECK(dedup->lits == Clause::of({2, 1}).lits);  // first-occurrence order kept
  CHECK(dups == 1);

  dups = 0;
  auto plain = normalize_clause(Clause::of({-3}).lits, &dups);
  REQUIRE(plain.has_value());
  CHECK(plain->lits == Clause::of({-3}).lits);
  CHECK(dups == 0);
}

TEST_CASE("cnf validation rejects out-of-range variables") {
  Cnf f;
  f.num_vars = 2;
  f.clauses.push_back(Clause::of({1, -2}));
  CHECK_NOTHROW(f.validate());
  f.clauses.push_back(Clause::of({3}));
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
}

TEST_CASE("assignments are three-valued and reject contradictory reassignment") {
  Assignment a(2);
  CHECK(a.assigned_count() == 0);
  CHECK_FALSE(a.assigned(1));
  a.set(1, true);
  CHECK(a.assigned(1));
  CHECK(a.value(1));
  CHECK_NOTHROW(a.set(1, true));  // same value is a no-op
  CHECK_THROWS_AS(a.set(1, false), std::logic_error);
  CHECK(a.literal_true(Literal::pos(1)));
  CHECK(a.literal_false(Literal::neg(1)));
  CHECK_FALSE(a.literal_value(Literal::pos(2)).has_value());
}

TEST_CASE("check_model evaluates total assignments") {
  Cnf f;
  f.num_vars = 2;
  f.clauses = {Clause::of({1, 2}), Clause::of({-1, 2})};
  Assignment a(2);
  a.set(1, true);
  CHECK_THROWS_AS(check_model(f, a), std::invalid_argument);  // partial
  a.set(2, true);
  CHECK(check_model(f, a));
  Assignment b(2);
  b.set(1, true);
  b.set(2, false);
  CHECK_FALSE(check_model(f, b));  // (-1 2) falsified
}

TEST_CASE("dimacs parses the standard format") {
  std::string text =
      "c example\n"
      "p cnf 3 2\n"
      "1 -2 0\n"
      "2 3 0\n";
  DimacsWarnings w;
  Cnf f = read_dimacs(text, &w);
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0].lits == Clause::of({1, -2}).lits);
  CHECK(f.clauses[1].lits == Clause::of({2, 3}).lits);
  CHECK(w.tautologies_dropped == 0);
  CHECK(w.duplicate_literals_removed == 0);
}

TEST_CASE("dimacs lets clauses span lines and allows interleaved comments") {
  std::string text =
      "p cnf 3 2\n"
      "1 -2\n"
      "3 0\n"
      "c comments are recognized between clauses, not inside one\n"
      "-1 0\n";
  Cnf f = read_dimacs(text);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0].lits == Clause::of({1, -2, 3}).lits);
  CHECK(f.clauses[1].lits == Clause::of({-1}).lits);
  // A comment token while a clause is open is an error under the strict grammar.
  CHECK_THROWS_AS(read_dimacs("p cnf 1 1\n1\nc oops\n0\n"), DimacsParseError);
}

TEST_CASE("dimacs counts dropped tautologies and removed duplicates") {
  std::string text =
      "p cnf 2 3\n"
      "1 -1 0\n"
      "1 1 2 0\n"
      "-2 0\n";
  DimacsWarnings w;
  Cnf f = read_dimacs(text, &w);
  REQUIRE(f.clauses.size() == 2);  // tautology dropped, count refers to clauses as written
  CHECK(f.clauses[0].lits == Clause::of({1, 2}).lits);
  CHECK(w.tautologies_dropped == 1);
  CHECK(w.duplicate_literals_removed == 1);
}

TEST_CASE("dimacs parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      read_dimacs(text);
    } catch (const DimacsParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("c only a comment\n") == 1);                        // missing header
  CHECK(line_of("p cnf x 1\n1 0\n") == 1);                          // malformed header
  CHECK(line_of("p cnf 2 1\n1 zebra 0\n") == 2);                    // garbage token
  CHECK(line_of("p cnf 2 1\n3 0\n") == 2);                          // literal out of range
  CHECK(line_of("p cnf 2 1\n1 0\n2 0\n") == 3);                     // too many clauses
  CHECK(line_of("p cnf 2 2\n1 0\n") == 2);                          // too few clauses at EOF
  CHECK(line_of("p cnf 2 1\n1 2\n") == 2);                          // unterminated clause
  CHECK(line_of("p cnf 2 1\np cnf 2 1\n1 0\n") == 2);               // second header is not a literal
  CHECK(line_of("junk\np cnf 1 1\n1 0\n") == 1);                    // junk before header
}

TEST_CASE("dimacs writing round-trips") {
  Cnf f;
  f.num_vars = 3;
  f.clauses = {Clause::of({1, -2}), Clause::of({3}), Clause::of({-1, -3})};
  std::string text = write_dimacs(f);
  CHECK(text == "p cnf 3 3\n1 -2 0\n3 0\n-1 -3 0\n");
  Cnf back = read_dimacs(text);
  CHECK(back == f);
  CHECK(write_dimacs(back) == text);
}

TEST_CASE("dimacs accepts an empty clause list") {
  Cnf f = read_dimacs("p cnf 4 0\n");
  CHECK(f.num_vars == 4);
  CHECK(f.clauses.empty());
  CHECK(write_dimacs(f) == "p cnf 4 0\n");
}
