#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "metaterm/term.hpp"

namespace metaterm {

struct Literal {
  bool positive = true;
  Term atom;

  static Literal pos(Term a) { return Literal{true, std::move(a)}; }
  static Literal neg(Term a) { return Literal{false, std::move(a)}; }
  bool operator==(const Literal& o) const { return positive == o.positive && atom == o.atom; }
};

struct Clause {
  Term head;
  std::vector<Literal> body;

  bool is_fact() const { return body.empty(); }
};

Clause rename_apart(const Clause& c, VarSupply& supply);
std::set<int> clause_vars(const Clause& c);

/// A query is a finite sequence of literals; empty means success.
using QuerySeq = std::vector<Literal>;

QuerySeq query_of(std::vector<Term> atoms);
std::vector<Term> query_atoms(const QuerySeq& q);

class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }

  /// Clause indices defining a predicate, in source order.
  const std::vector<int>* defining(const SymKey& pred) const;
  std::vector<SymKey> predicates() const;
  bool defines(const std::string& name) const;

  /// Every predicate or functor symbol occurring anywhere in the program.
  std::set<SymKey> all_symbols() const;

  Program concatenated(const Program& tail) const;
  void append(Clause c);

 private:
  std::vector<Clause> clauses_;
  std::map<SymKey, std::vector<int>> table_;
};

struct DependencyGraph {
  std::set<SymKey> nodes;
  std::set<std::pair<SymKey, SymKey>> refers_to;
  std::set<std::pair<SymKey, SymKey>> depends_on;  // transitive closure, not reflexive

  bool depends(const SymKey& p, const SymKey& q) const { return depends_on.count({p, q}) > 0; }
  bool mutually_recursive(const SymKey& p, const SymKey& q) const {
    return depends(p, q) && depends(q, p);
  }
  bool recursive(const SymKey& p) const { return depends(p, p); }
};

DependencyGraph dependency_relations(const Program& p);

/// True iff flattening `parts` in order yields exactly `whole` (element-wise
/// syntactic equality); empty parts are not allowed.
bool forms_partition(const std::vector<std::vector<Term>>& parts, const std::vector<Term>& whole);

/// Splits a right-nested ","-term into its conjuncts; `true` yields the empty list.
std::vector<Term> conjunction_to_list(const Term& t);

/// Right-nested ","-term over `ts`; empty input encodes as `true`.
Term list_to_conjunction(const std::vector<Term>& ts);

/// Literal sequence <-> body term (negative literals become "\\+"/1 functors).
Term body_to_term(const std::vector<Literal>& body);
std::vector<Literal> term_to_body(const Term& t);

/// Prolog list helpers over "."/2 and "[]".
Term make_list(const std::vector<Term>& elems);
std::optional<std::vector<Term>> list_elements(const Term& t);

std::string to_string(const Clause& c);
std::string to_string(const QuerySeq& q);
std::string to_string(const Program& p);

}  // namespace metaterm
