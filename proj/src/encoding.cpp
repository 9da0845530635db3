#include "metaterm/encoding.hpp"

namespace metaterm {

namespace {

void check_encodable(const Program& p) {
  for (const SymKey& k : p.all_symbols()) {
    if (k.name == "clause")
      throw PreconditionError("object program must not use the symbol clause/" +
                              std::to_string(k.arity));
    if (k.name == ",")
      throw PreconditionError("object program must not use the symbol ,/2");
  }
}

}  // namespace

Program clause_encode(const Program& p) {
  check_encodable(p);
  std::vector<Clause> facts;
  facts.reserve(p.clauses().size());
  for (const Clause& c : p.clauses()) {
    Clause f;
    f.head = Term::compound("clause", {c.head, body_to_term(c.body)});
    facts.push_back(std::move(f));
  }
  return Program(std::move(facts));
}

Program clause_encode_extended(const Program& p, int k, const Filler& filler, VarSupply& supply) {
  if (k < 0) throw PreconditionError("extra arity must be non-negative");
  check_encodable(p);
  const GivenFillers* given = std::get_if<GivenFillers>(&filler);
  if (given && given->per_clause.size() != p.clauses().size())
    throw PreconditionError("one filler row per clause required");

  std::vector<Clause> facts;
  facts.reserve(p.clauses().size());
  for (size_t i = 0; i < p.clauses().size(); ++i) {
    const Clause& c = p.clauses()[i];
    std::vector<Term> args{c.head, body_to_term(c.body)};
    if (given) {
      if (static_cast<int>(given->per_clause[i].size()) != k)
        throw PreconditionError("filler row length differs from the extra arity");
      for (const Term& t : given->per_clause[i]) args.push_back(t);
    } else {
      for (int j = 0; j < k; ++j) args.push_back(Term::var(supply, "S"));
    }
    Clause f;
    f.head = Term::compound("clause", std::move(args));
    facts.push_back(std::move(f));
  }
  return Program(std::move(facts));
}

namespace {
Term indexed(const char* tag, int i) {
  return Term::compound(tag, {Term::constant(std::to_string(i))});
}

std::optional<int> index_of(const Term& t, const char* tag) {
  if (!(t.is_compound() && t.symbol() == tag && t.arity() == 1)) return std::nullopt;
  const Term& n = t.args()[0];
  if (!n.is_constant()) return std::nullopt;
  try {
    return std::stoi(n.symbol());
  } catch (...) {
    return std::nullopt;
  }
}
}  // namespace

Term SymbolTable::encode_predicate(const SymKey& k) {
  auto it = pred_.find(k);
  if (it == pred_.end()) {
    it = pred_.emplace(k, static_cast<int>(pred_by_index_.size())).first;
    pred_by_index_.push_back(k);
  }
  return indexed("p", it->second);
}

Term SymbolTable::encode_functor(const SymKey& k) {
  auto it = fun_.find(k);
  if (it == fun_.end()) {
    it = fun_.emplace(k, static_cast<int>(fun_by_index_.size())).first;
    fun_by_index_.push_back(k);
  }
  return indexed("f", it->second);
}

Term SymbolTable::encode_constant(const std::string& name) {
  auto it = con_.find(name);
  if (it == con_.end()) {
    it = con_.emplace(name, static_cast<int>(con_by_index_.size())).first;
    con_by_index_.push_back(name);
  }
  return indexed("c", it->second);
}

std::optional<SymKey> SymbolTable::decode_predicate(int i) const {
  if (i < 0 || i >= static_cast<int>(pred_by_index_.size())) return std::nullopt;
  return pred_by_index_[i];
}

std::optional<SymKey> SymbolTable::decode_functor(int i) const {
  if (i < 0 || i >= static_cast<int>(fun_by_index_.size())) return std::nullopt;
  return fun_by_index_[i];
}

std::optional<std::string> SymbolTable::decode_constant(int i) const {
  if (i < 0 || i >= static_cast<int>(con_by_index_.size())) return std::nullopt;
  return con_by_index_[i];
}

namespace {

struct ClauseVarNumbering {
  std::map<int, int> index;
  Term encode(const Term& v) {
    auto it = index.find(v.var_id());
    if (it == index.end()) it = index.emplace(v.var_id(), static_cast<int>(index.size())).first;
    return indexed("v", it->second);
  }
};

Term encode_term(const Term& t, SymbolTable& table, ClauseVarNumbering& vars) {
  if (t.is_var()) return vars.encode(t);
  if (t.is_constant()) return table.encode_constant(t.symbol());
  std::vector<Term> enc;
  enc.reserve(t.args().size());
  for (const Term& a : t.args()) enc.push_back(encode_term(a, table, vars));
  return Term::compound("term", {table.encode_functor(key_of(t)), make_list(enc)});
}

Term encode_atom(const Term& a, SymbolTable& table, ClauseVarNumbering& vars) {
  std::vector<Term> enc;
  enc.reserve(a.args().size());
  for (const Term& arg : a.args()) enc.push_back(encode_term(arg, table, vars));
  return Term::compound("atom", {table.encode_predicate(key_of(a)), make_list(enc)});
}

Term encode_body(const std::vector<Literal>& body, SymbolTable& table, ClauseVarNumbering& vars) {
  if (body.empty()) return Term::constant("true");
  std::vector<Term> parts;
  for (const Literal& l : body) {
    Term a = encode_atom(l.atom, table, vars);
    parts.push_back(l.positive ? a : Term::compound("not", {a}));
  }
  Term out = parts.back();
  for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i)
    out = Term::compound("and", {parts[i], out});
  return out;
}

}  // namespace

GroundEncoding ground_encode(const Program& p) {
  GroundEncoding out;
  for (const Clause& c : p.clauses()) {
    ClauseVarNumbering vars;
    Term head = encode_atom(c.head, out.table, vars);
    Term body = encode_body(c.body, out.table, vars);
    out.clause_terms.push_back(Term::compound("if", {head, body}));
  }
  return out;
}

Term ground_encode_query(const Term& q, SymbolTable& table) {
  ClauseVarNumbering vars;
  std::vector<Literal> lits = term_to_body(q);
  std::vector<Term> parts;
  for (const Literal& l : lits) {
    Term a = encode_atom(l.atom, table, vars);
    parts.push_back(l.positive ? a : Term::compound("not", {a}));
  }
  if (parts.empty()) return Term::constant("true");
  Term out = parts.back();
  for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i)
    out = Term::compound("and", {parts[i], out});
  return out;
}

namespace {

struct Decoder {
  const SymbolTable& table;
  VarSupply& supply;
  std::map<int, Term> vars;

  [[noreturn]] void malformed(const Term& t) {
    throw PreconditionError("malformed ground representation: " + to_string(t));
  }

  Term decode_term(const Term& t) {
    if (auto vi = index_of(t, "v")) {
      auto it = vars.find(*vi);
      if (it == vars.end())
        it = vars.emplace(*vi, Term::var(supply, "X" + std::to_string(*vi))).first;
      return it->second;
    }
    if (auto ci = index_of(t, "c")) {
      auto name = table.decode_constant(*ci);
      if (!name) malformed(t);
      return Term::constant(*name);
    }
    if (t.is_compound() && t.symbol() == "term" && t.arity() == 2) {
      auto fi = index_of(t.args()[0], "f");
      auto elems = list_elements(t.args()[1]);
      if (!fi || !elems) malformed(t);
      auto k = table.decode_functor(*fi);
      if (!k || static_cast<int>(elems->size()) != k->arity) malformed(t);
      std::vector<Term> args;
      for (const Term& e : *elems) args.push_back(decode_term(e));
      return Term::compound(k->name, std::move(args));
    }
    malformed(t);
  }

  Term decode_atom(const Term& t) {
    if (!(t.is_compound() && t.symbol() == "atom" && t.arity() == 2)) malformed(t);
    auto pi = index_of(t.args()[0], "p");
    auto elems = list_elements(t.args()[1]);
    if (!pi || !elems) malformed(t);
    auto k = table.decode_predicate(*pi);
    if (!k || static_cast<int>(elems->size()) != k->arity) malformed(t);
    std::vector<Term> args;
    for (const Term& e : *elems) args.push_back(decode_term(e));
    return Term::compound(k->name, std::move(args));
  }

  void decode_body(const Term& t, std::vector<Literal>& out) {
    if (t.is_compound() && t.symbol() == "true" && t.arity() == 0) return;
    if (t.is_compound() && t.symbol() == "and" && t.arity() == 2) {
      decode_body(t.args()[0], out);
      decode_body(t.args()[1], out);
      return;
    }
    if (t.is_compound() && t.symbol() == "not" && t.arity() == 1) {
      out.push_back(Literal::neg(decode_atom(t.args()[0])));
      return;
    }
    out.push_back(Literal::pos(decode_atom(t)));
  }
};

}  // namespace

Term ground_decode_term(const Term& t, const SymbolTable& table, VarSupply& supply) {
  Decoder d{table, supply, {}};
  if (t.is_compound() && t.symbol() == "atom" && t.arity() == 2) return d.decode_atom(t);
  return d.decode_term(t);
}

Clause ground_decode_clause(const Term& t, const SymbolTable& table, VarSupply& supply) {
  if (!(t.is_compound() && t.symbol() == "if" && t.arity() == 2))
    throw PreconditionError("malformed clause representation: " + to_string(t));
  Decoder d{table, supply, {}};
  Clause c;
  c.head = d.decode_atom(t.args()[0]);
  d.decode_body(t.args()[1], c.body);
  return c;
}

}  // namespace metaterm
