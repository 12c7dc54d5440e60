#pragma once
// Strict DIMACS CNF reader/writer.
//
// Accepted grammar: optional comment lines `c ...`, one header
// `p cnf <vars> <clauses>`, then exactly <clauses> zero-terminated clauses.
// Literals may span lines. Errors carry 1-based line numbers.
// Tautological clauses are dropped (counted in warnings); duplicate literals
// inside a clause are removed. The declared clause count refers to clauses as
// written, before tautology dropping.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcsp/cnf.hpp"

namespace satcsp {

struct DimacsParseError : std::runtime_error {
  int line;
  DimacsParseError(int line_no, const std::string& what)
      : std::runtime_error("dimacs: line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

struct DimacsWarnings {
  int tautologies_dropped = 0;
  int duplicate_literals_removed = 0;
};

inline Cnf read_dimacs(std::istream& in, DimacsWarnings* warnings = nullptr) {
  DimacsWarnings local;
  DimacsWarnings& warn = warnings ? *warnings : local;
  warn = DimacsWarnings{};

  int line_no = 0;
  std::string line;
  long long num_vars = -1, num_clauses = -1;

  // Header: skip comments, demand `p cnf V C`.
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "c") continue;
    if (tok != "p") throw DimacsParseError(line_no, "expected comment or `p cnf` header, got `" + tok + "`");
    std::string fmt;
    if (!(ls >> fmt) || fmt != "cnf")
      throw DimacsParseError(line_no, "header format must be `cnf`");
    if (!(ls >> num_vars >> num_clauses) || num_vars < 0 || num_clauses < 0)
      throw DimacsParseError(line_no, "header must be `p cnf <vars> <clauses>` with nonnegative counts");
    std::string extra;
    if (ls >> extra) throw DimacsParseError(line_no, "trailing tokens after header");
    break;
  }
  if (num_vars < 0) throw DimacsParseError(line_no == 0 ? 1 : line_no, "missing `p cnf` header");

  Cnf f;
  f.num_vars = static_cast<int>(num_vars);

  std::vector<Literal> current;
  long long clauses_seen = 0;
  bool in_clause = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "c" && !in_clause) {
        // Comment line only when it starts the line's token stream outside a clause.
        break;
      }
      long long lit;
      try {
        size_t pos = 0;
        lit = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("junk");
      } catch (const std::exception&) {
        throw DimacsParseError(line_no, "expected literal or 0, got `" + tok + "`");
      }
      if (lit == 0) {
        ++clauses_seen;
        if (clauses_seen > num_clauses)
          throw DimacsParseError(line_no, "more clauses than declared in header");
        int dups = 0;
        auto norm = normalize_clause(current, &dups);
        warn.duplicate_literals_removed += dups;
        if (norm)
          f.clauses.push_back(std::move(*norm));
        else
          ++warn.tautologies_dropped;
        current.clear();
        in_clause = false;
      } else {
        long long v = lit < 0 ? -lit : lit;
        if (v > num_vars)
          throw DimacsParseError(line_no, "literal " + std::to_string(lit) +
                                              " outside declared variable range 1.." +
                                              std::to_string(num_vars));
        current.push_back(Literal(static_cast<int>(lit)));
        in_clause = true;
      }
    }
  }

  if (in_clause) throw DimacsParseError(line_no, "clause not terminated by 0 before end of input");
  if (clauses_seen != num_clauses)
    throw DimacsParseError(line_no == 0 ? 1 : line_no,
                           "header declared " + std::to_string(num_clauses) + " clauses but found " +
                               std::to_string(clauses_seen));
  return f;
}

inline Cnf read_dimacs(const std::string& text, DimacsWarnings* warnings = nullptr) {
  std::istringstream in(text);
  return read_dimacs(in, warnings);
}

inline void write_dimacs(std::ostream& out, const Cnf& f) {
  out << "p cnf " << f.num_vars << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses) {
    for (Literal l : c.lits) out << l.code << ' ';
    out << "0\n";
  }
}

inline std::string write_dimacs(const Cnf& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace satcsp
