#include "metaterm/catalog.hpp"

#include <algorithm>
#include <map>

#include "metaterm/engine.hpp"
#include "metaterm/parser.hpp"

namespace metaterm {

namespace {

const char* kM0 = R"(
solve(true).
solve((A, B)) :- solve(A), solve(B).
solve(Head) :- clause(Head, Body), solve(Body).
)";

const char* kM1 = R"(
solve(A) :- fail.
)";

const char* kM2 = R"(
solve(true, 0).
solve((A, B), K) :- solve(A, M), solve(B, N), max(M, N, K).
solve(A, s(N)) :- clause(A, B), solve(B, N).
max(0, 0, 0).
max(s(X), 0, s(X)).
max(0, s(X), s(X)).
max(s(X), s(Y), s(Z)) :- max(X, Y, Z).
)";

const char* kM3 = R"(
solve(true).
solve((A, B)) :- solve(A), solve(B).
solve(A) :- clause(A, B), check(B), solve(B).
check((A, B)) :- check(A), check(B).
check(A) :- clause(A, _).
check(true).
)";

const char* kM4 = R"(
solve(true).
solve((Atom, Atoms)) :- solve(Atom), solve(Atoms).
solve(\+(Atom)) :- \+ solve(Atom).
solve(Head) :- clause(Head, Body), solve(Body).
)";

const char* kFourPort = R"(
solve(true).
solve((G1, G2)) :- solve(G1), solve(G2).
solve(G) :- before(G), clause(G, B), solve(B), after(G).
before(G) :- write('call '), write(G), nl.
before(G) :- write('fail '), write(G), nl, fail.
after(G) :- write('succeed '), write(G), nl.
after(G) :- write('redo '), write(G), nl, fail.
)";

const char* kProofTree = R"(
solve(true, true).
solve((A, B), (ProofA, ProofB)) :- solve(A, ProofA), solve(B, ProofB).
solve(A, (A :- Proof)) :- clause(A, B), solve(B, Proof).
)";

const char* kEx43 = R"(
solve(true).
solve((A, B)) :- solve(A), solve(B).
solve(A) :- clause(A, B), B = q(f(Z)), solve(B).
)";

const char* kMetaAb = R"(
solve(true, a).
solve((A, B), a) :- solve(A, a), solve(B, a).
solve(A, a) :- clause(A, B), solve(B, a).
)";

const char* kFailBody = R"(
solve(true).
solve((A, B)) :- solve(A), solve(B).
solve(A) :- fail, clause(A, B), solve(B).
)";

const char* kFailTrue = R"(
solve(true) :- fail.
solve((A, B)) :- solve(A), solve(B).
solve(A) :- clause(A, B), solve(B).
)";

const char* kAp0 = R"(
solve(true).
solve((A, B)) :- A = p(0), solve(A), solve(B).
solve(A) :- clause(A, B), solve(B).
)";

const char* kLoopGuard = R"(
solve(true).
solve((A, B)) :- fail, solve(A), solve(B).
solve(A) :- loop, clause(A, B), solve(B).
loop :- loop.
)";

const char* kFooVariant = R"(
solve(true, true).
solve((A, B), (ProofA, ProofB)) :- solve(A, ProofA), solve(B, ProofB).
solve(A, (A :- Proof)) :- clause(A, B), foo(Proof), solve(B, Proof).
foo(_).
)";

// The constant clause of inst_term is required to run encoded programs that
// contain constants; the remaining clauses follow the published text.
const char* kIdemo = R"(
idemo(P, X, Y) :- instance_of(X, Y), idemo1(P, Y).
idemo1(_, true).
idemo1(P, and(X, Y)) :- idemo1(P, X), idemo1(P, Y).
idemo1(P, not(X)) :- \+ idemo1(P, X).
idemo1(P, atom(Q, Xs)) :- member(Z, P), instance_of(Z, if(atom(Q, Xs), B)), idemo1(P, B).
instance_of(X, Y) :- inst_formula(X, Y, [], _).
inst_formula(atom(Q, Xs), atom(Q, Ys), S, S1) :- inst_args(Xs, Ys, S, S1).
inst_formula(and(X, Y), and(Z, W), S, S2) :- inst_formula(X, Z, S, S1), inst_formula(Y, W, S1, S2).
inst_formula(if(X, Y), if(Z, W), S, S2) :- inst_formula(X, Z, S, S1), inst_formula(Y, W, S1, S2).
inst_formula(not(X), not(Z), S, S1) :- inst_formula(X, Z, S, S1).
inst_formula(true, true, S, S).
inst_args([], [], S, S).
inst_args([X|Xs], [Y|Ys], S, S2) :- inst_term(X, Y, S, S1), inst_args(Xs, Ys, S1, S2).
inst_term(v(N), X, [], [bind(N, X)]).
inst_term(v(N), X, [bind(N, X)|S], [bind(N, X)|S]).
inst_term(v(N), X, [bind(M, Y)|S], [bind(M, Y)|S1]) :- N \= M, inst_term(v(N), X, S, S1).
inst_term(c(N), c(N), S, S).
inst_term(term(F, Xs), term(F, Ys), S, S1) :- inst_args(Xs, Ys, S, S1).
member(X, [X|_]).
member(X, [_|T]) :- member(X, T).
)";

struct CatalogRow {
  const char* name;
  const char* source;
  const char* meta_predicate;
  int solve_arity;
  EncodingKind encoding;
  int k;
  InterpClass expected;
  const char* notes;
};

const CatalogRow kRows[] = {
    {"m0", kM0, "solve", 1, EncodingKind::ce, 0, InterpClass::vanilla,
     "plain resolution mirror"},
    {"m1", kM1, "solve", 1, EncodingKind::ce, 0, InterpClass::other, "fails every goal"},
    {"m2", kM2, "solve", 2, EncodingKind::ce, 0, InterpClass::double_extended,
     "computes the maximal derivation depth in its second argument"},
    {"m3", kM3, "solve", 1, EncodingKind::ce, 0, InterpClass::other,
     "prunes bodies whose atoms have no defining clause"},
    {"m4", kM4, "solve", 1, EncodingKind::ce, 0, InterpClass::normal,
     "extends the plain interpreter with negation as failure"},
    {"four_port", kFourPort, "solve", 1, EncodingKind::ce_d, 0, InterpClass::restricted,
     "call/fail/succeed/redo tracer"},
    {"proof_tree", kProofTree, "solve", 2, EncodingKind::ce_d, 0, InterpClass::restricted,
     "builds the proof tree in its second argument"},
    {"ex43", kEx43, "solve", 1, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "forces every retrieved body to a fixed shape"},
    {"meta_ab", kMetaAb, "solve", 2, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "constant second argument; head unification can fail on it"},
    {"fail_body", kFailBody, "solve", 1, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "failing intermediate goal cuts every derivation"},
    {"fail_true", kFailTrue, "solve", 1, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "failing goal after the empty-goal clause"},
    {"ap0", kAp0, "solve", 1, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "binds the meta-variable before descending, changing the call set"},
    {"loop_guard", kLoopGuard, "solve", 1, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "looping guard goal; never reaches the recursive call"},
    {"foo_variant", kFooVariant, "solve", 2, EncodingKind::ce_d, 0, InterpClass::double_extended,
     "proof-tree variant whose extra variable occurs in a harmless guard"},
    {"idemo", kIdemo, "idemo", 3, EncodingKind::ground, 0, InterpClass::ground_rep,
     "runs the ground representation; second argument is the encoded query"},
};

std::map<std::string, InterpreterSpec>& registry() {
  static std::map<std::string, InterpreterSpec> reg = [] {
    std::map<std::string, InterpreterSpec> r;
    for (const CatalogRow& row : kRows) {
      InterpreterSpec spec;
      spec.name = row.name;
      VarSupply supply;
      spec.program = parse_program(row.source, supply);
      spec.meta_predicate = row.meta_predicate;
      spec.solve_arity = row.solve_arity;
      spec.encoding = row.encoding;
      spec.extra_encoding_arity = row.k;
      spec.expected_class = row.expected;
      spec.notes = row.notes;
      r.emplace(spec.name, std::move(spec));
    }
    return r;
  }();
  return reg;
}

}  // namespace

const InterpreterSpec& get_interpreter(const std::string& name) {
  auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw PreconditionError("unknown interpreter: " + name);
  return it->second;
}

std::vector<std::string> interpreter_names() {
  std::vector<std::string> out;
  for (const CatalogRow& row : kRows) out.push_back(row.name);
  return out;
}

MetaComposition compose_meta_program(const InterpreterSpec& i, const Program& p,
                                     VarSupply& supply) {
  MetaComposition comp;
  if (p.defines(i.meta_predicate))
    throw PreconditionError("object program must not define " + i.meta_predicate);
  switch (i.encoding) {
    case EncodingKind::ce:
      comp.program = i.program.concatenated(clause_encode(p));
      break;
    case EncodingKind::ce_d:
      comp.program = i.program.concatenated(
          clause_encode_extended(p, i.extra_encoding_arity, FreshVars{}, supply));
      break;
    case EncodingKind::ground: {
      comp.program = i.program;
      GroundEncoding enc = ground_encode(p);
      comp.program_term = enc.program_list();
      comp.table = std::move(enc.table);
      break;
    }
  }
  return comp;
}

MetaQuery make_meta_query(const InterpreterSpec& i, const MetaComposition& comp, const Term& q,
                          const ExtraArgsMode& mode, VarSupply& supply) {
  MetaQuery out;
  if (i.encoding == EncodingKind::ground) {
    if (!comp.program_term || !comp.table)
      throw PreconditionError("ground-encoded composition required");
    SymbolTable table = *comp.table;
    std::vector<Term> args{*comp.program_term, ground_encode_query(q, table)};
    int extras = i.solve_arity - 2;
    if (extras < 0) throw PreconditionError("meta predicate arity too small");
    if (const auto* given = std::get_if<ExtraArgsGiven>(&mode)) {
      if (static_cast<int>(given->terms.size()) != extras)
        throw PreconditionError("extra-argument arity mismatch");
      for (const Term& t : given->terms) args.push_back(t);
    } else {
      for (int j = 0; j < extras; ++j) args.push_back(Term::var(supply, "V"));
    }
    out.query = query_of({Term::compound(i.meta_predicate, std::move(args))});
    return out;
  }

  int extras = i.solve_arity - 1;
  std::vector<Term> args{q};
  std::vector<Term> extra_terms;
  if (const auto* given = std::get_if<ExtraArgsGiven>(&mode)) {
    if (static_cast<int>(given->terms.size()) != extras)
      throw PreconditionError("extra-argument arity mismatch");
    extra_terms = given->terms;
  } else {
    for (int j = 0; j < extras; ++j) extra_terms.push_back(Term::var(supply, "V"));
  }
  for (const Term& t : extra_terms) args.push_back(t);
  out.query = query_of({Term::compound(i.meta_predicate, std::move(args))});

  // Restricted-query shape: either the extra arguments are fresh linear
  // variables, or all three head sequences of the interpreter are.
  bool fresh_linear = is_linear_fresh_sequence(extra_terms, var_set(q));
  if (!fresh_linear) {
    ClassificationReport report = classify_interpreter(i.program);
    out.restricted_query = report.head_extra_args_fresh;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

bool term_mentions(const Term& t, const std::string& name) {
  if (t.is_var()) return false;
  if (t.symbol() == name) return true;
  for (const Term& a : t.args())
    if (term_mentions(a, name)) return true;
  return false;
}

Term clause_as_term(const Clause& c) {
  std::vector<Term> parts{c.head};
  for (const Literal& l : c.body)
    parts.push_back(l.positive ? l.atom : Term::compound("\\+", {l.atom}));
  return tupled(parts);
}

bool variant_program(const Program& a, const Program& b) {
  if (a.clauses().size() != b.clauses().size()) return false;
  for (size_t i = 0; i < a.clauses().size(); ++i)
    if (!is_variant(clause_as_term(a.clauses()[i]), clause_as_term(b.clauses()[i]))) return false;
  return true;
}

const Program& m0_shape() {
  static Program p = [] {
    VarSupply s;
    return parse_program(kM0, s);
  }();
  return p;
}

const Program& m4_shape() {
  static Program p = [] {
    VarSupply s;
    return parse_program(kM4, s);
  }();
  return p;
}

// Syntactic non-failure / non-binding analysis of helper predicates.
class HelperAnalysis {
 public:
  explicit HelperAnalysis(const Program& p) : prog_(p) {}

  bool never_fails(const SymKey& k) {
    return memo(never_fails_memo_, k, false, [&](const SymKey& key) {
      const std::vector<int>* defs = prog_.defining(key);
      if (!defs) return false;
      for (int ci : *defs) {
        const Clause& c = prog_.clauses()[ci];
        if (!most_general_linear_head(c)) continue;
        if (body_never_fails(c)) return true;
      }
      return false;
    });
  }

  bool never_succeeds(const SymKey& k) {
    return memo(never_succeeds_memo_, k, true, [&](const SymKey& key) {
      const std::vector<int>* defs = prog_.defining(key);
      if (!defs) return true;  // undefined predicates always fail
      for (int ci : *defs) {
        const Clause& c = prog_.clauses()[ci];
        bool doomed = false;
        for (const Literal& l : c.body) {
          if (!l.positive) continue;
          if (key_of(l.atom) == SymKey{"fail", 0}) {
            doomed = true;
            break;
          }
          if (!is_builtin(l.atom) && l.atom.symbol() != "=" && never_succeeds(key_of(l.atom))) {
            doomed = true;
            break;
          }
        }
        if (!doomed) return false;
      }
      return true;
    });
  }

  bool never_binds_args(const SymKey& k) {
    return memo(never_binds_memo_, k, true, [&](const SymKey& key) {
      const std::vector<int>* defs = prog_.defining(key);
      if (!defs) return true;
      for (int ci : *defs) {
        const Clause& c = prog_.clauses()[ci];
        if (!linear_var_head(c)) return false;
        std::set<int> head_vars = var_set(c.head);
        std::set<int> earlier = head_vars;
        for (const Literal& l : c.body) {
          if (!l.positive) return false;
          const Term& a = l.atom;
          if (key_of(a) == SymKey{"true", 0} || key_of(a) == SymKey{"fail", 0} ||
              key_of(a) == SymKey{"nl", 0} || key_of(a) == SymKey{"write", 1}) {
            // no bindings
          } else if (a.symbol() == "=" && a.arity() == 2) {
            const Term& u = a.args()[0];
            if (!u.is_var() || earlier.count(u.var_id())) return false;
          } else if (!never_binds_args(key_of(a))) {
            return false;
          }
          for (int v : var_set(a)) earlier.insert(v);
        }
      }
      return true;
    });
  }

 private:
  static bool linear_var_head(const Clause& c) {
    std::vector<int> vs;
    for (const Term& a : c.head.args()) {
      if (!a.is_var()) return false;
      vs.push_back(a.var_id());
    }
    std::set<int> uniq(vs.begin(), vs.end());
    return uniq.size() == vs.size();
  }

  static bool most_general_linear_head(const Clause& c) { return linear_var_head(c); }

  bool body_never_fails(const Clause& c) {
    std::set<int> earlier = var_set(c.head);
    for (const Literal& l : c.body) {
      if (!l.positive) return false;
      const Term& a = l.atom;
      SymKey k = key_of(a);
      if (k == SymKey{"true", 0} || k == SymKey{"nl", 0} || k == SymKey{"write", 1}) {
        // fine
      } else if (a.symbol() == "=" && a.arity() == 2) {
        const Term& u = a.args()[0];
        if (!u.is_var() || earlier.count(u.var_id()) || occurs(u.var_id(), a.args()[1]))
          return false;
      } else if (k == SymKey{"fail", 0}) {
        return false;
      } else if (!never_fails(k)) {
        return false;
      }
      for (int v : var_set(a)) earlier.insert(v);
    }
    return true;
  }

  template <typename F>
  bool memo(std::map<SymKey, int>& table, const SymKey& k, bool in_progress_value, F&& f) {
    auto it = table.find(k);
    if (it != table.end()) {
      if (it->second == 2) return in_progress_value;
      return it->second == 1;
    }
    table[k] = 2;  // in progress
    bool result = f(k);
    table[k] = result ? 1 : 0;
    return result;
  }

  const Program& prog_;
  std::map<SymKey, int> never_fails_memo_;
  std::map<SymKey, int> never_succeeds_memo_;
  std::map<SymKey, int> never_binds_memo_;
};

struct SolveShape {
  // true clause
  std::vector<Term> t1;
  std::vector<Literal> c1;
  // conjunction clause
  Term conj_a, conj_b;
  std::vector<Term> t2, t3, t4;
  std::vector<Literal> d1, d2, c2;
  // clause-lookup clause
  Term goal_var, body_var;
  std::vector<Term> t5, t6, s;
  std::vector<Literal> d3, d4, c3;
  const Clause* conj_clause = nullptr;
  const Clause* lookup_clause = nullptr;
};

std::vector<Term> tail_args(const Term& atom) {
  std::vector<Term> out;
  for (int i = 1; i < atom.arity(); ++i) out.push_back(atom.args()[i]);
  return out;
}

bool decompose(const Program& interp, SolveShape& shape, ClassificationReport& report) {
  std::vector<const Clause*> solve_clauses;
  for (const Clause& c : interp.clauses())
    if (c.head.symbol() == "solve") solve_clauses.push_back(&c);
  if (solve_clauses.size() != 3) {
    report.findings.push_back("expected exactly three solve clauses, found " +
                              std::to_string(solve_clauses.size()));
    return false;
  }
  int arity = solve_clauses[0]->head.arity();
  for (const Clause* c : solve_clauses)
    if (c->head.arity() != arity) {
      report.findings.push_back("solve clauses disagree on arity");
      return false;
    }
  if (arity < 1) {
    report.findings.push_back("solve needs the goal argument");
    return false;
  }
  report.solve_extra_args = arity - 1;

  const Clause* true_clause = nullptr;
  const Clause* conj_clause = nullptr;
  const Clause* lookup_clause = nullptr;
  for (const Clause* c : solve_clauses) {
    const Term& first = c->head.args()[0];
    if (first.is_compound() && first.symbol() == "true" && first.arity() == 0 && !true_clause)
      true_clause = c;
    else if (first.is_compound() && first.symbol() == "," && first.arity() == 2 &&
             first.args()[0].is_var() && first.args()[1].is_var() &&
             first.args()[0] != first.args()[1] && !conj_clause)
      conj_clause = c;
    else if (first.is_var() && !lookup_clause)
      lookup_clause = c;
    else {
      report.findings.push_back("unexpected solve clause head: " + to_string(c->head));
      return false;
    }
  }
  if (!true_clause || !conj_clause || !lookup_clause) {
    report.findings.push_back("the three solve clause shapes are not all present");
    return false;
  }

  auto definite = [&](const Clause* c) {
    for (const Literal& l : c->body)
      if (!l.positive) {
        report.findings.push_back("negative literal in a solve clause");
        return false;
      }
    return true;
  };
  if (!definite(true_clause) || !definite(conj_clause) || !definite(lookup_clause)) return false;

  shape.t1 = tail_args(true_clause->head);
  shape.c1 = true_clause->body;
  for (const Literal& l : shape.c1)
    if (l.atom.symbol() == "solve" || l.atom.symbol() == "clause") {
      report.findings.push_back("extra goal of the empty-goal clause uses solve or clause");
      return false;
    }

  // conjunction clause: exactly two solve atoms carrying A then B
  shape.conj_clause = conj_clause;
  shape.conj_a = conj_clause->head.args()[0].args()[0];
  shape.conj_b = conj_clause->head.args()[0].args()[1];
  shape.t2 = tail_args(conj_clause->head);
  {
    std::vector<size_t> solve_pos;
    for (size_t i = 0; i < conj_clause->body.size(); ++i)
      if (conj_clause->body[i].atom.symbol() == "solve") solve_pos.push_back(i);
    if (solve_pos.size() != 2) {
      report.findings.push_back("conjunction clause must call solve exactly twice");
      return false;
    }
    const Term& first = conj_clause->body[solve_pos[0]].atom;
    const Term& second = conj_clause->body[solve_pos[1]].atom;
    if (first.arity() != arity || second.arity() != arity ||
        !(first.args()[0] == shape.conj_a) || !(second.args()[0] == shape.conj_b)) {
      report.findings.push_back("conjunction clause does not descend into both conjuncts");
      return false;
    }
    shape.t3 = tail_args(first);
    shape.t4 = tail_args(second);
    for (size_t i = 0; i < solve_pos[0]; ++i) shape.d1.push_back(conj_clause->body[i]);
    for (size_t i = solve_pos[0] + 1; i < solve_pos[1]; ++i)
      shape.d2.push_back(conj_clause->body[i]);
    for (size_t i = solve_pos[1] + 1; i < conj_clause->body.size(); ++i)
      shape.c2.push_back(conj_clause->body[i]);
  }

  // clause-lookup clause: one clause/(2+k) atom, then one solve atom on its body
  shape.lookup_clause = lookup_clause;
  shape.goal_var = lookup_clause->head.args()[0];
  shape.t5 = tail_args(lookup_clause->head);
  {
    std::vector<size_t> clause_pos, solve_pos;
    for (size_t i = 0; i < lookup_clause->body.size(); ++i) {
      const Term& a = lookup_clause->body[i].atom;
      if (a.symbol() == "clause") clause_pos.push_back(i);
      if (a.symbol() == "solve") solve_pos.push_back(i);
    }
    if (clause_pos.size() != 1 || solve_pos.size() != 1 || solve_pos[0] < clause_pos[0]) {
      report.findings.push_back(
          "lookup clause must retrieve one encoded clause and then call solve once");
      return false;
    }
    const Term& cl = lookup_clause->body[clause_pos[0]].atom;
    const Term& sv = lookup_clause->body[solve_pos[0]].atom;
    if (cl.arity() < 2) {
      report.findings.push_back("clause atom needs head and body arguments");
      return false;
    }
    report.clause_extra_args = cl.arity() - 2;
    if (!(cl.args()[0] == shape.goal_var) || !cl.args()[1].is_var() ||
        occurs(cl.args()[1].var_id(), lookup_clause->head)) {
      report.findings.push_back("clause atom must retrieve the head goal and a fresh body");
      return false;
    }
    shape.body_var = cl.args()[1];
    if (sv.arity() != arity || !(sv.args()[0] == shape.body_var)) {
      report.findings.push_back("lookup clause must descend into the retrieved body");
      return false;
    }
    for (int i = 2; i < cl.arity(); ++i) shape.s.push_back(cl.args()[i]);
    shape.t6 = tail_args(sv);
    for (size_t i = 0; i < clause_pos[0]; ++i) shape.d3.push_back(lookup_clause->body[i]);
    for (size_t i = clause_pos[0] + 1; i < solve_pos[0]; ++i)
      shape.d4.push_back(lookup_clause->body[i]);
    for (size_t i = solve_pos[0] + 1; i < lookup_clause->body.size(); ++i)
      shape.c3.push_back(lookup_clause->body[i]);
  }

  auto goals_clean = [&](const std::vector<Literal>& goals, const char* where) {
    for (const Literal& l : goals)
      if (term_mentions(l.atom, "solve") || term_mentions(l.atom, "clause")) {
        report.findings.push_back(std::string("extra goal in ") + where +
                                  " mentions solve or clause");
        return false;
      }
    return true;
  };
  if (!goals_clean(shape.d1, "the conjunction clause") ||
      !goals_clean(shape.d2, "the conjunction clause") ||
      !goals_clean(shape.c2, "the conjunction clause") ||
      !goals_clean(shape.d3, "the lookup clause") || !goals_clean(shape.d4, "the lookup clause") ||
      !goals_clean(shape.c3, "the lookup clause"))
    return false;

  // every helper clause must stay clear of solve and clause
  for (const Clause& c : interp.clauses()) {
    if (c.head.symbol() == "solve") continue;
    if (term_mentions(c.head, "solve") || term_mentions(c.head, "clause")) {
      report.findings.push_back("helper clause mentions solve or clause: " + to_string(c.head));
      return false;
    }
    for (const Literal& l : c.body)
      if (term_mentions(l.atom, "solve") || term_mentions(l.atom, "clause")) {
        report.findings.push_back("call to solve or clause in the definition of " +
                                  key_of(c.head).str());
        return false;
      }
  }
  return true;
}

enum class CondState { ok, unknown, violated };

struct CondResult {
  CondState state = CondState::ok;
  std::string condition;
  std::string detail;
};

CondResult worse(const CondResult& a, const CondResult& b) {
  if (a.state == CondState::violated) return a;
  if (b.state == CondState::violated) return b;
  if (a.state == CondState::unknown) return a;
  return b;
}

// One Def-style extra-argument sequence: fresh linear variables, none
// occurring in the preceding body atoms.
CondResult check_sequence(const std::vector<Term>& seq, const std::vector<Literal>& preceding,
                          const char* which) {
  std::set<int> seen;
  std::set<int> forbidden;
  for (const Literal& l : preceding)
    for (int v : var_set(l.atom)) forbidden.insert(v);
  for (const Term& t : seq) {
    if (!t.is_var())
      return {CondState::violated, "argument-sequences",
              std::string(which) + " contains the non-variable " + to_string(t)};
    if (!seen.insert(t.var_id()).second)
      return {CondState::violated, "argument-sequences",
              std::string(which) + " repeats " + to_string(t)};
    if (forbidden.count(t.var_id()))
      return {CondState::unknown, "argument-sequences",
              to_string(t) + " appears in a preceding subgoal of " + which};
  }
  return {};
}

CondResult check_head_sequence(const std::vector<Term>& seq, const Term& first_arg) {
  std::set<int> seen;
  std::set<int> head_goal_vars = var_set(first_arg);
  for (const Term& t : seq) {
    if (!t.is_var())
      return {CondState::violated, "argument-sequences",
              "head extra argument " + to_string(t) + " is not a variable"};
    if (!seen.insert(t.var_id()).second || head_goal_vars.count(t.var_id()))
      return {CondState::violated, "argument-sequences",
              "head extra argument " + to_string(t) + " is not fresh and linear"};
  }
  return {};
}

CondResult check_goal_atom(const Literal& lit, const SolveShape& shape, const Clause& clause,
                           const std::vector<Term>& meta_vars, HelperAnalysis& helpers,
                           const std::vector<Literal>& preceding) {
  const Term& a = lit.atom;
  SymKey k = key_of(a);
  if (k == SymKey{"true", 0} || k == SymKey{"nl", 0} || k == SymKey{"write", 1}) return {};
  if (k == SymKey{"fail", 0})
    return {CondState::violated, "non-failure", "the goal fail always fails"};
  if (a.symbol() == "=" && a.arity() == 2) {
    const Term& u = a.args()[0];
    const Term& rhs = a.args()[1];
    for (const Term& mv : meta_vars)
      if ((u.is_var() && u == mv) || occurs(mv.var_id(), rhs))
        return {CondState::violated, "meta-variable-binding",
                "unification " + to_string(a) + " touches the meta-variable " + to_string(mv)};
    std::set<int> earlier = var_set(clause.head);
    for (const Literal& p : preceding)
      for (int v : var_set(p.atom)) earlier.insert(v);
    if (!u.is_var() || earlier.count(u.var_id()) || occurs(u.var_id(), rhs))
      return {CondState::unknown, "non-failure",
              "unification " + to_string(a) + " is not of the fresh-variable form"};
    return {};
  }
  if (a.symbol() == "\\=" )
    return {CondState::unknown, "non-failure", to_string(a) + " may fail"};
  // user-defined goal
  if (helpers.never_succeeds(k))
    return {CondState::violated, "non-failure", k.str() + " never succeeds"};
  if (!helpers.never_fails(k))
    return {CondState::unknown, "non-failure",
            "could not discharge non-failure of " + k.str()};
  bool touches_meta = false;
  for (const Term& mv : meta_vars)
    if (occurs(mv.var_id(), a)) touches_meta = true;
  if (touches_meta && !helpers.never_binds_args(k))
    return {CondState::unknown, "meta-variable-binding",
            k.str() + " receives a meta-variable and may bind it"};
  (void)shape;
  return {};
}

}  // namespace

InterpClass ClassificationReport::derived_class() const {
  if (is_vanilla) return InterpClass::vanilla;
  if (is_normal_vanilla) return InterpClass::normal;
  if (is_double_extended)
    return restricted == RestrictedVerdict::yes ? InterpClass::restricted
                                                : InterpClass::double_extended;
  return InterpClass::other;
}

ClassificationReport classify_interpreter(const Program& interp) {
  ClassificationReport report;
  if (variant_program(interp, m0_shape())) {
    report.is_vanilla = true;
    report.is_double_extended = true;
    report.restricted = RestrictedVerdict::yes;
    report.findings.push_back("plain three-clause interpreter");
    return report;
  }
  if (variant_program(interp, m4_shape())) {
    report.is_normal_vanilla = true;
    report.findings.push_back("plain interpreter extended with negation as failure");
    return report;
  }

  SolveShape shape;
  if (!decompose(interp, shape, report)) {
    report.is_double_extended = false;
    report.restricted = RestrictedVerdict::not_applicable;
    return report;
  }
  report.is_double_extended = true;

  // Argument-sequence condition: either the four call-site sequences are
  // fresh and linear, or the three head sequences are.
  CondResult alt1;
  {
    std::vector<Literal> before_first(shape.d1);
    alt1 = worse(alt1, check_sequence(shape.t3, before_first, "the first recursive call"));
    std::vector<Literal> before_second(shape.d1);
    before_second.push_back(Literal::pos(
        Term::compound("solve", [&] {
          std::vector<Term> args{shape.conj_a};
          for (const Term& t : shape.t3) args.push_back(t);
          return args;
        }())));
    for (const Literal& l : shape.d2) before_second.push_back(l);
    alt1 = worse(alt1, check_sequence(shape.t4, before_second, "the second recursive call"));
    std::vector<Literal> before_lookup(shape.d3);
    alt1 = worse(alt1, check_sequence(shape.s, before_lookup, "the clause retrieval"));
    std::vector<Literal> before_descent(shape.d3);
    before_descent.push_back(Literal::pos(Term::compound("clause", [&] {
      std::vector<Term> args{shape.goal_var, shape.body_var};
      for (const Term& t : shape.s) args.push_back(t);
      return args;
    }())));
    for (const Literal& l : shape.d4) before_descent.push_back(l);
    alt1 = worse(alt1, check_sequence(shape.t6, before_descent, "the body descent"));
  }
  CondResult alt2;
  {
    alt2 = worse(alt2, check_head_sequence(shape.t1, Term::constant("true")));
    alt2 = worse(alt2, check_head_sequence(
                           shape.t2, Term::compound(",", {shape.conj_a, shape.conj_b})));
    alt2 = worse(alt2, check_head_sequence(shape.t5, shape.goal_var));
  }
  report.head_extra_args_fresh = alt2.state == CondState::ok;

  CondResult args_cond;
  if (alt1.state == CondState::ok || alt2.state == CondState::ok) {
    args_cond = {};
  } else if (alt1.state == CondState::unknown || alt2.state == CondState::unknown) {
    args_cond = alt1.state == CondState::unknown ? alt1 : alt2;
  } else {
    args_cond = alt1;
  }

  HelperAnalysis helpers(interp);
  CondResult goals_cond;
  auto visit = [&](const std::vector<Literal>& goals, const Clause& clause,
                   const std::vector<Term>& meta_vars, const std::vector<Literal>& preceding) {
    std::vector<Literal> seen = preceding;
    for (const Literal& l : goals) {
      goals_cond = worse(goals_cond, check_goal_atom(l, shape, clause, meta_vars, helpers, seen));
      seen.push_back(l);
    }
  };
  const Clause& tc = *[&] {
    for (const Clause& c : interp.clauses())
      if (c.head.symbol() == "solve" && c.head.args()[0].is_compound() &&
          c.head.args()[0].symbol() == "true")
        return &c;
    return shape.conj_clause;
  }();
  visit(shape.c1, tc, {}, {});
  std::vector<Term> conj_meta{shape.conj_a, shape.conj_b};
  visit(shape.d1, *shape.conj_clause, conj_meta, {});
  visit(shape.d2, *shape.conj_clause, conj_meta, shape.d1);
  visit(shape.c2, *shape.conj_clause, conj_meta, shape.d1);
  std::vector<Term> lookup_meta{shape.goal_var, shape.body_var};
  visit(shape.d3, *shape.lookup_clause, lookup_meta, {});
  visit(shape.d4, *shape.lookup_clause, lookup_meta, shape.d3);
  visit(shape.c3, *shape.lookup_clause, lookup_meta, shape.d3);

  CondResult overall = worse(args_cond, goals_cond);
  switch (overall.state) {
    case CondState::ok:
      report.restricted = RestrictedVerdict::yes;
      break;
    case CondState::unknown:
      report.restricted = RestrictedVerdict::unknown;
      report.restricted_condition = overall.condition;
      report.findings.push_back(overall.detail);
      break;
    case CondState::violated:
      report.restricted = RestrictedVerdict::no;
      report.restricted_condition = overall.condition;
      report.findings.push_back(overall.detail);
      break;
  }
  return report;
}

Program reduce_to_vanilla(const Program& interp) {
  ClassificationReport report;
  SolveShape shape;
  if (variant_program(interp, m0_shape())) return interp;
  if (!decompose(interp, shape, report))
    throw PreconditionError("not a double extended interpreter");
  std::vector<Clause> out;
  Clause c1;
  c1.head = Term::compound("solve", {Term::constant("true")});
  out.push_back(c1);
  Clause c2;
  c2.head = Term::compound("solve", {Term::compound(",", {shape.conj_a, shape.conj_b})});
  c2.body.push_back(Literal::pos(Term::compound("solve", {shape.conj_a})));
  c2.body.push_back(Literal::pos(Term::compound("solve", {shape.conj_b})));
  out.push_back(c2);
  Clause c3;
  c3.head = Term::compound("solve", {shape.goal_var});
  c3.body.push_back(Literal::pos(Term::compound("clause", {shape.goal_var, shape.body_var})));
  c3.body.push_back(Literal::pos(Term::compound("solve", {shape.body_var})));
  out.push_back(c3);
  return Program(std::move(out));
}

std::string to_string(InterpClass c) {
  switch (c) {
    case InterpClass::vanilla:
      return "vanilla";
    case InterpClass::double_extended:
      return "double_extended";
    case InterpClass::restricted:
      return "restricted";
    case InterpClass::normal:
      return "normal";
    case InterpClass::ground_rep:
      return "ground_rep";
    case InterpClass::other:
      return "other";
  }
  return "?";
}

std::string to_string(RestrictedVerdict v) {
  switch (v) {
    case RestrictedVerdict::yes:
      return "yes";
    case RestrictedVerdict::no:
      return "no";
    case RestrictedVerdict::unknown:
      return "unknown";
    case RestrictedVerdict::not_applicable:
      return "not_applicable";
  }
  return "?";
}

}  // namespace metaterm
