#pragma once
// Propositional CNF core: literals, clauses, formulas, partial assignments.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satcsp {

// A literal is a 1-based variable index with a sign, encoded DIMACS-style as
// a signed nonzero integer.
struct Literal {
  int code = 0;

  Literal() = default;
  explicit Literal(int dimacs) : code(dimacs) {
    if (dimacs == 0) throw std::invalid_argument("literal code must be nonzero");
  }
  static Literal pos(int var) {
    if (var < 1) throw std::invalid_argument("variable index must be positive");
    return Literal(var);
  }
  static Literal neg(int var) {
    if (var < 1) throw std::invalid_argument("variable index must be positive");
    return Literal(-var);
  }

  int var() const { return code < 0 ? -code : code; }
  bool positive() const { return code > 0; }
  Literal negated() const { return Literal(-code); }

  friend bool operator==(Literal a, Literal b) { return a.code == b.code; }
  friend bool operator!=(Literal a, Literal b) { return a.code != b.code; }
};

// Canonical literal order: by variable, positive sign first.
inline bool literal_less(Literal a, Literal b) {
  if (a.var() != b.var()) return a.var() < b.var();
  return a.positive() && !b.positive();
}

// A clause is an ordered disjunction of literals. A normalized clause has no
// duplicate literal and is not a tautology. The empty clause is the
// distinguished conflict clause (always false).
struct Clause {
  std::vector<Literal> lits;

  Clause() = default;
  explicit Clause(std::vector<Literal> ls) : lits(std::move(ls)) {}
  static Clause of(std::initializer_list<int> codes) {
    Clause c;
    for (int x : codes) c.lits.push_back(Literal(x));
    return c;
  }

  int width() const { return static_cast<int>(lits.size()); }
  bool empty() const { return lits.empty(); }
  bool contains(Literal l) const {
    return std::find(lits.begin(), lits.end(), l) != lits.end();
  }

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits == b.lits; }
};

// Removes duplicate literals (keeping first occurrence order) and returns
// nullopt for tautologies (clause containing both v and ~v).
inline std::optional<Clause> normalize_clause(const std::vector<Literal>& raw,
                                              int* duplicates_removed = nullptr) {
  Clause out;
  for (Literal l : raw) {
    if (out.contains(l.negated())) return std::nullopt;
    if (out.contains(l)) {
      if (duplicates_removed) ++*duplicates_removed;
      continue;
    }
    out.lits.push_back(l);
  }
  return out;
}

// A CNF formula over variables 1..num_vars. Clause order is significant and
// preserved; duplicate clauses are allowed.
struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;

  Cnf() = default;
  Cnf(int n, std::vector<Clause> cs) : num_vars(n), clauses(std::move(cs)) { validate(); }

  int num_clauses() const { return static_cast<int>(clauses.size()); }

  void validate() const {
    if (num_vars < 0) throw std::invalid_argument("num_vars must be nonnegative");
    for (const Clause& c : clauses)
      for (Literal l : c.lits)
        if (l.var() < 1 || l.var() > num_vars)
          throw std::invalid_argument("clause mentions variable outside 1..num_vars");
  }

  friend bool operator==(const Cnf& a, const Cnf& b) {
    return a.num_vars == b.num_vars && a.clauses == b.clauses;
  }
};

// A partial assignment of truth values to variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars) : val_(static_cast<size_t>(num_vars) + 1, 0) {}

  int num_vars() const { return static_cast<int>(val_.size()) - 1; }
  int assigned_count() const { return assigned_; }
  bool total() const { return assigned_ == num_vars(); }

  bool assigned(int var) const {
    check_var(var);
    return val_[static_cast<size_t>(var)] != 0;
  }
  bool value(int var) const {
    if (!assigned(var)) throw std::invalid_argument("variable is unassigned");
    return val_[static_cast<size_t>(var)] > 0;
  }
  void set(int var, bool v) {
    check_var(var);
    int8_t next = v ? 1 : -1;
    int8_t& slot = val_[static_cast<size_t>(var)];
    if (slot == next) return;
    if (slot != 0) throw std::invalid_argument("variable already assigned the other value");
    slot = next;
    ++assigned_;
  }

  // True/false/unassigned status of a literal.
  std::optional<bool> literal_value(Literal l) const {
    int8_t s = val_[static_cast<size_t>(l.var())];
    if (s == 0) return std::nullopt;
    return (s > 0) == l.positive();
  }
  bool literal_true(Literal l) const { return literal_value(l) == std::optional<bool>(true); }
  bool literal_false(Literal l) const { return literal_value(l) == std::optional<bool>(false); }

  friend bool operator==(const Assignment& a, const Assignment& b) { return a.val_ == b.val_; }

 private:
  void check_var(int var) const {
    if (var < 1 || var >= static_cast<int>(val_.size()))
      throw std::invalid_argument("variable index out of range");
  }
  std::vector<int8_t> val_;  // index 0 unused; 0 unassigned, +1 true, -1 false
  int assigned_ = 0;
};

// Evaluates a total assignment against a formula. Partial input is an error.
inline bool check_model(const Cnf& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars)
    throw std::invalid_argument("assignment is over the wrong variable count");
  if (!a.total()) throw std::invalid_argument("check_model requires a total assignment");
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (Literal l : c.lits)
      if (a.literal_true(l)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

}  // namespace satcsp
