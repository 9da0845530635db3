#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metaterm/program.hpp"
#include "metaterm/term.hpp"

namespace metaterm {

/// Object program as facts clause(Head, BodyTerm); bodies become right-nested
/// ","-terms, the empty body becomes `true`, negative literals become
/// "\\+"/1 functors. Rejects programs that already use clause or ","
/// (the object and meta languages must stay distinguishable).
Program clause_encode(const Program& p);

/// Per-clause extra arguments for ce with k trailing slots.
struct FreshVars {};
struct GivenFillers {
  std::vector<std::vector<Term>> per_clause;  // one k-vector per clause
};
using Filler = std::variant<FreshVars, GivenFillers>;

/// clause/(2+k) facts; FreshVars appends a linear fresh-variable tail per fact.
Program clause_encode_extended(const Program& p, int k, const Filler& filler, VarSupply& supply);

/// Program-wide symbol numbering: predicates p(i), functors f(i) (arity > 0),
/// constants c(i), indices assigned in first-occurrence order of a
/// left-to-right, top-to-bottom scan. Variables v(i) restart per clause.
class SymbolTable {
 public:
  Term encode_predicate(const SymKey& k);
  Term encode_functor(const SymKey& k);
  Term encode_constant(const std::string& name);

  std::optional<SymKey> decode_predicate(int i) const;
  std::optional<SymKey> decode_functor(int i) const;
  std::optional<std::string> decode_constant(int i) const;

  const std::map<SymKey, int>& predicates() const { return pred_; }
  const std::map<SymKey, int>& functors() const { return fun_; }
  const std::map<std::string, int>& constants() const { return con_; }

 private:
  std::map<SymKey, int> pred_;
  std::map<SymKey, int> fun_;
  std::map<std::string, int> con_;
  std::vector<SymKey> pred_by_index_;
  std::vector<SymKey> fun_by_index_;
  std::vector<std::string> con_by_index_;
};

struct GroundEncoding {
  std::vector<Term> clause_terms;  // one ground if/2 term per clause
  SymbolTable table;

  Term program_list() const { return make_list(clause_terms); }
};

/// if(atom(p(i), [...]), Body) with Body over and/not/true/atom; terms become
/// term(f(i), [...]) or c(i); variables v(i) numbered per clause. The result
/// is ground.
GroundEncoding ground_encode(const Program& p);

/// Encodes one query atom or conjunction against an existing table (new
/// symbols extend it); variable numbering restarts for the query.
Term ground_encode_query(const Term& q, SymbolTable& table);

/// Inverse of the ground encoding, up to variable renaming; one decode call
/// maps equal v(i) to the same fresh variable. Throws PreconditionError on a
/// malformed representation.
Term ground_decode_term(const Term& t, const SymbolTable& table, VarSupply& supply);
Clause ground_decode_clause(const Term& t, const SymbolTable& table, VarSupply& supply);

}  // namespace metaterm
