// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "metaterm/cli.hpp"
#include "metaterm/preservation.hpp"
#include "metaterm/search.hpp"
#include "metaterm/semantics.hpp"

using namespace metaterm;
using namespace fixtures;

namespace {

int checks_failed = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ++checks_failed;                                                     \
      std::cout << "    failed: " << #cond << " (" << __FILE__ << ":"      \
                << __LINE__ << ")\n";                                      \
    }                                                                      \
  } while (0)

bool run_criterion(int number, const std::string& title, const std::function<void()>& body) {
  int before = checks_failed;
  try {
    body();
  } catch (const std::exception& e) {
    ++checks_failed;
    std::cout << "    exception: " << e.what() << "\n";
  }
  bool ok = checks_failed == before;
  std::cout << "criterion " << number << " " << (ok ? "PASS" : "FAIL") << " - " << title << "\n";
  return ok;
}

ObligationSet meta_obligations_m0(const char* text, const std::vector<const char*>& seeds) {
  SourceProgram obj = parse_fix(text);
  const InterpreterSpec& plain = get_interpreter("m0");
  MetaComposition comp = compose_meta_program(plain, obj.program, obj.supply);
  std::vector<QuerySeq> qs;
  for (const char* s : seeds) {
    Term q = atom(s, obj.supply);
    qs.push_back(make_meta_query(plain, comp, q, ExtraArgsFresh{}, obj.supply).query);
  }
  return decrease_obligations(comp.program, qs, Budget{}, obj.supply);
}

// --------------------------------------------------------------------------

void criterion1_vanilla_preservation() {
  for (const char* query : {"l(0)", "l(f(0))", "l(f(f(0)))"}) {
    SourceProgram obj = parse_fix(kGroundRecursion);
    Term q = atom(query, obj.supply);
    PreservationReport r = preservation_report(get_interpreter("m0"), obj.program, q,
                                               ExtraArgsFresh{}, Budget{}, obj.supply);
    EXPECT(r.object_status.terminates());
    EXPECT(r.meta_status.terminates());
    EXPECT(r.verdict == PreservationReport::Verdict::consistent);
    EXPECT(r.answers.sound == CheckOutcome::pass);
    EXPECT(r.answers.complete == CheckOutcome::pass);
    EXPECT(r.answers.sets_equal == true);
  }
  SourceProgram obj = parse_fix(kGroundRecursion);
  Term q = atom("p(X)", obj.supply);
  PreservationReport r = preservation_report(get_interpreter("m0"), obj.program, q,
                                             ExtraArgsFresh{}, Budget{}, obj.supply);
  EXPECT(r.object_status.looping());
  EXPECT(r.meta_status.looping());
  EXPECT(r.verdict == PreservationReport::Verdict::consistent);
}

void criterion2_improvement_counterexample() {
  std::string path = "/tmp/metaterm_acceptance_conj_loop.pl";
  std::string json_path = "/tmp/metaterm_acceptance_compare.json";
  {
    std::ofstream out(path);
    out << kConjLoop;
  }
  std::ostringstream so, se;
  int code = run_cli({"compare", path, "--interp", "m3", "-q", "p", "--json", json_path}, so, se);
  EXPECT(code == 4);
  std::ifstream in(json_path);
  nlohmann::json j;
  in >> j;
  EXPECT(j["result"]["verdict"] == "improvement_counterexample");
  EXPECT(j["result"]["object_status"]["status"] == "loop_detected");
  EXPECT(j["result"]["meta_status"]["status"] == "terminates");
  EXPECT(j["result"]["answers"]["sound"] == "inconclusive" ||
         j["result"]["meta_status"].contains("nodes"));
  std::remove(path.c_str());
  std::remove(json_path.c_str());

  // the meta side finitely fails: no answers
  SourceProgram obj = parse_fix(kConjLoop);
  const InterpreterSpec& m3 = get_interpreter("m3");
  MetaComposition comp = compose_meta_program(m3, obj.program, obj.supply);
  Term q = atom("p", obj.supply);
  MetaQuery mq = make_meta_query(m3, comp, q, ExtraArgsFresh{}, obj.supply);
  LDTree t = build_ld_tree(comp.program, mq.query, Budget{}, obj.supply);
  EXPECT(t.complete());
  EXPECT(computed_answers(t).answers.empty());
}

void criterion3_call_sets() {
  VarSupply v;
  SourceProgram obj = parse_fix(kTinyProgram);
  const InterpreterSpec& shaped = get_interpreter("ex43");
  MetaComposition comp = compose_meta_program(shaped, obj.program, obj.supply);
  Term q = atom("p(X)", obj.supply);
  MetaQuery mq = make_meta_query(shaped, comp, q, ExtraArgsFresh{}, obj.supply);
  CallSet shaped_calls =
      call_set(build_ld_tree(comp.program, mq.query, Budget{}, obj.supply));
  EXPECT(shaped_calls.records.size() == 3);
  EXPECT(shaped_calls.contains_variant_atom(parse_term("solve(p(X))", v)));
  EXPECT(shaped_calls.contains_variant_atom(parse_term("solve(q(f(Z)))", v)));
  EXPECT(shaped_calls.contains_variant_atom(parse_term("clause(p(X), q(X))", v)));

  SourceProgram obj2 = parse_fix(kTinyProgram);
  const InterpreterSpec& plain = get_interpreter("m0");
  MetaComposition comp2 = compose_meta_program(plain, obj2.program, obj2.supply);
  Term q2 = atom("p(X)", obj2.supply);
  MetaQuery mq2 = make_meta_query(plain, comp2, q2, ExtraArgsFresh{}, obj2.supply);
  CallSet plain_calls =
      call_set(build_ld_tree(comp2.program, mq2.query, Budget{}, obj2.supply));
  EXPECT(plain_calls.records.size() == 5);
  for (const char* a : {"solve(p(X))", "solve(q(X))", "solve(true)", "clause(p(X), q(X))",
                        "clause(q(b), true)"})
    EXPECT(plain_calls.contains_variant_atom(parse_term(a, v)));

  SourceProgram obj3 = parse_fix(kTinyProgram);
  Term q3 = atom("p(X)", obj3.supply);
  CallCorrespondence cover = call_correspondence(
      shaped, obj3.program, q3, CallCheckMode::instance_cover, Budget{}, obj3.supply);
  EXPECT(cover.outcome == CheckOutcome::pass);
  EXPECT(cover.variant_missing.size() == 1);
  EXPECT(is_variant(cover.variant_missing.at(0), parse_term("solve(q(f(Z)))", v)));
}

void criterion4_linear_dichotomy() {
  // a small linear mapping proves the interpreted program
  {
    SourceProgram sp = parse_fix(kGroundRecursion);
    ObligationSet obs = decrease_obligations(
        sp.program,
        {q1("l(0)", sp.supply), q1("l(f(0))", sp.supply), q1("l(f(f(0)))", sp.supply)},
        Budget{}, sp.supply);
    EXPECT(obs.complete);
    SearchResult r = search_ordering(obs, LinearStrategy{3});
    EXPECT(found(r));
    if (found(r))
      EXPECT(check_obligations(std::get<SearchFound>(r).spec, obs).acceptable());
  }
  // and for the meta-program of the list recursion, where the published
  // mapping with coefficient three also verifies
  {
    ObligationSet obs = meta_obligations_m0(kListRecursion, {"p([a, b, c])"});
    EXPECT(obs.complete);
    SearchResult r = search_ordering(obs, LinearStrategy{3});
    EXPECT(found(r));
    LinearLevelMapping published;
    published.norm = LinearNorm::zeros();
    published.norm.set(SymKey{",", 2}, 1, {1, 1});
    published.norm.set(SymKey{"p", 1}, 1, {1});
    published.norm.set(SymKey{".", 2}, 1, {0, 3});
    published.preds[SymKey{"solve", 1}] = {0, {1}};
    EXPECT(check_obligations(OrderingSpec{published}, obs).acceptable());
  }
  // the meta obligations of the two-recursion program defeat bounded linear
  // search but admit a recursive path ordering
  {
    ObligationSet obs =
        meta_obligations_m0(kGroundRecursion, {"l(0)", "l(f(0))", "l(f(f(0)))"});
    EXPECT(obs.complete);
    SearchResult lin = search_ordering(obs, LinearStrategy{10});
    EXPECT(!found(lin));
    if (!found(lin))
      EXPECT(std::get<NoneWithinBound>(lin).note.find("not excluded") != std::string::npos);

    SearchResult rpo = search_ordering(obs, RpoStrategy{});
    EXPECT(found(rpo));
    if (found(rpo)) {
      const OrderingSpec& spec = std::get<SearchFound>(rpo).spec;
      EXPECT(check_obligations(spec, obs).acceptable());
      VarSupply v;
      for (const char* t : {"0", "f(0)", "f(f(0))"}) {
        std::string tt = t;
        EXPECT(compare(spec, parse_term("solve(l(" + tt + "))", v),
                       parse_term("solve((p(" + tt + "), r(" + tt + ")))", v)) == Cmp::greater);
        EXPECT(compare(spec, parse_term("solve((p(" + tt + "), r(" + tt + ")))", v),
                       parse_term("solve(p(" + tt + "))", v)) == Cmp::greater);
        EXPECT(compare(spec, parse_term("solve((p(" + tt + "), r(" + tt + ")))", v),
                       parse_term("solve(r(" + tt + "))", v)) == Cmp::greater);
      }
      EXPECT(compare(spec, parse_term("solve(r(f(0)))", v), parse_term("solve(r(0))", v)) ==
             Cmp::greater);
      EXPECT(compare(spec, parse_term("solve(p(f(0)))", v), parse_term("solve(p(0))", v)) ==
             Cmp::greater);
    }
  }
}

void criterion5_consequence_powers() {
  const Program& d = get_interpreter("proof_tree").program;
  VarSupply v;
  PiInterpretation one = tpi_power(d, 1, v);
  EXPECT(one.atoms.size() == 1);
  EXPECT(one.contains(parse_term("solve(true, true)", v)));
  PiInterpretation two = tpi_power(d, 2, v);
  EXPECT(two.atoms.size() == 2);
  EXPECT(two.contains(parse_term("solve((true, true), (true, true))", v)));

  int n = 5;
  PiInterpretation p = tpi_power(d, n, v);
  Term t = Term::constant("true");
  for (int depth = 0; depth < n; ++depth) {
    EXPECT(p.contains(Term::compound("solve", {t, t})));
    t = Term::compound(",", {Term::constant("true"), t});
  }

  SourceProgram sp = parse_fix(kTinyProgram);
  OSemantics o = o_semantics_approx(sp.program, Budget{}, sp.supply);
  EXPECT(o.complete);
  VarSupply v2;
  FixpointResult fix = tpi_fixpoint(sp.program, 12, v2);
  EXPECT(fix.stabilized);
  EXPECT(o.interpretation.same_as(fix.interpretation));
}

void criterion6_classifier_table() {
  struct Row {
    const char* name;
    InterpClass cls;
    RestrictedVerdict restricted;
    const char* condition;  // nullptr = unconstrained
  };
  const std::vector<Row> rows = {
      {"m0", InterpClass::vanilla, RestrictedVerdict::yes, nullptr},
      {"proof_tree", InterpClass::restricted, RestrictedVerdict::yes, nullptr},
      {"four_port", InterpClass::restricted, RestrictedVerdict::yes, nullptr},
      {"ex43", InterpClass::double_extended, RestrictedVerdict::no, nullptr},
      {"m2", InterpClass::double_extended, RestrictedVerdict::unknown, nullptr},
      {"m3", InterpClass::other, RestrictedVerdict::not_applicable, nullptr},
      {"meta_ab", InterpClass::double_extended, RestrictedVerdict::no, "argument-sequences"},
      {"fail_body", InterpClass::double_extended, RestrictedVerdict::no, "non-failure"},
      {"fail_true", InterpClass::double_extended, RestrictedVerdict::no, "non-failure"},
      {"ap0", InterpClass::double_extended, RestrictedVerdict::no, "meta-variable-binding"},
      {"loop_guard", InterpClass::double_extended, RestrictedVerdict::no, "non-failure"},
      {"foo_variant", InterpClass::double_extended, RestrictedVerdict::unknown, nullptr},
  };
  int ok = 0;
  for (const Row& row : rows) {
    ClassificationReport r = classify_interpreter(get_interpreter(row.name).program);
    bool match = r.derived_class() == row.cls && r.restricted == row.restricted &&
                 (!row.condition || r.restricted_condition == row.condition);
    if (match)
      ++ok;
    else
      std::cout << "    " << row.name << ": got " << to_string(r.derived_class())
                << ", restricted " << to_string(r.restricted) << " (" << r.restricted_condition
                << ")\n";
  }
  std::cout << "    " << ok << "/" << rows.size() << " expected classifications\n";
  EXPECT(ok == static_cast<int>(rows.size()));
}

void criterion7_tracer_sensitivity() {
  ClassificationReport full = classify_interpreter(get_interpreter("four_port").program);
  EXPECT(full.restricted == RestrictedVerdict::yes);

  const Program& four_port = get_interpreter("four_port").program;
  VarSupply v;
  Term pattern = parse_term("'$t'(before(G), write('call '), write(G), nl)", v);
  std::vector<Clause> kept;
  for (const Clause& c : four_port.clauses()) {
    std::vector<Term> parts{c.head};
    for (const Literal& l : c.body) parts.push_back(l.atom);
    if (is_variant(Term::compound("$t", parts), pattern)) continue;
    kept.push_back(c);
  }
  EXPECT(kept.size() + 1 == four_port.clauses().size());
  ClassificationReport cut = classify_interpreter(Program(std::move(kept)));
  EXPECT(cut.is_double_extended);
  EXPECT(cut.restricted == RestrictedVerdict::no);
  EXPECT(cut.restricted_condition == "non-failure");
}

void criterion8_restricted_preservation() {
  struct Case {
    const char* program;
    const char* query;
  };
  const std::vector<Case> corpus = {{kTinyProgram, "p(X)"}, {kTinyProgram, "s"},
                                    {kGroundRecursion, "l(f(0))"}, {kConjLoop, "p"},
                                    {kGroundRecursion, "p(X)"},   {kTailLoop, "r"}};
  const InterpreterSpec& pt = get_interpreter("proof_tree");
  for (const Case& c : corpus) {
    SourceProgram obj = parse_fix(c.program);
    Term q = atom(c.query, obj.supply);
    PreservationReport r =
        preservation_report(pt, obj.program, q, ExtraArgsFresh{}, Budget{}, obj.supply);
    EXPECT(r.restricted_query);
    EXPECT(r.verdict == PreservationReport::Verdict::consistent);
    EXPECT(r.object_status.kind == r.meta_status.kind);
  }

  // a ground second argument is flagged as not restricted
  SourceProgram obj = parse_fix(kTinyProgram);
  MetaComposition comp = compose_meta_program(pt, obj.program, obj.supply);
  ExtraArgsGiven given;
  given.terms = {atom("done", obj.supply)};
  MetaQuery mq = make_meta_query(pt, comp, atom("p(X)", obj.supply), given, obj.supply);
  EXPECT(!mq.restricted_query);
}

void criterion9_normal_parity() {
  struct Case {
    const char* program;
    const char* query;
  };
  const std::vector<Case> corpus = {
      {"q. p :- \\+ q.", "p"},
      {"p(a).", "\\+ p(X)"},
      {"q :- q. p :- \\+ q.", "p"},
      {"r(a). s :- \\+ r(b).", "s"},
  };
  const InterpreterSpec& m4 = get_interpreter("m4");
  for (const Case& c : corpus) {
    SourceProgram obj = parse_source(c.program);
    Term q = atom(c.query, obj.supply);
    PreservationReport r =
        preservation_report(m4, obj.program, q, ExtraArgsFresh{}, Budget{}, obj.supply);
    EXPECT(r.object_status.kind == r.meta_status.kind);
    EXPECT(r.object_floundered == r.meta_floundered);
    EXPECT(r.verdict == PreservationReport::Verdict::consistent);
    if (!r.object_floundered && r.object_status.terminates())
      EXPECT(r.answers.sets_equal == true);
  }
  // floundering is detected exactly on the floundering case
  SourceProgram fl = parse_source("p(a).");
  Term fq = atom("\\+ p(X)", fl.supply);
  PreservationReport r =
      preservation_report(m4, fl.program, fq, ExtraArgsFresh{}, Budget{}, fl.supply);
  EXPECT(r.object_floundered);
  EXPECT(r.meta_floundered);
}

void criterion10_ground_representation() {
  // pinned encoding of the displayed two-element permute head
  SourceProgram pp = parse_fix(kPermutePair);
  GroundEncoding enc = ground_encode(pp.program);
  VarSupply v;
  Term expected = parse_term(
      "if(atom(p(0), [v(0), term(f(0), [v(1), term(f(0), [v(2), c(0)])])]), "
      "and(atom(p(1), [v(1), v(0), v(3)]), atom(p(0), [v(3), v(2)])))",
      v);
  EXPECT(enc.clause_terms.size() == 1);
  EXPECT(enc.clause_terms.at(0) == expected);
  EXPECT(to_string(enc.clause_terms.at(0)) == to_string(expected));

  // decode . encode is the identity up to variance over the corpus
  for (const char* text :
       {kTinyProgram, kGroundRecursion, kListRecursion, kConjLoop, kUnifyGuardLoop, kTailLoop}) {
    SourceProgram sp = parse_fix(text);
    GroundEncoding genc = ground_encode(sp.program);
    for (size_t i = 0; i < genc.clause_terms.size(); ++i) {
      Clause back = ground_decode_clause(genc.clause_terms[i], genc.table, sp.supply);
      std::vector<Term> a{sp.program.clauses()[i].head};
      for (const Literal& l : sp.program.clauses()[i].body)
        a.push_back(l.positive ? l.atom : Term::compound("\\+", {l.atom}));
      std::vector<Term> b{back.head};
      for (const Literal& l : back.body)
        b.push_back(l.positive ? l.atom : Term::compound("\\+", {l.atom}));
      EXPECT(is_variant(tupled(a), tupled(b)));
    }
  }

  // the ground-representation interpreter mirrors answers and statuses
  struct Case {
    const char* program;
    const char* query;
  };
  const std::vector<Case> cases = {
      {"q(b). p(X) :- q(X).", "p(X)"},
      {"q :- q.", "q"},
      {"r(a). r(b).", "r(X)"},
  };
  const InterpreterSpec& idemo = get_interpreter("idemo");
  for (const Case& c : cases) {
    SourceProgram obj = parse_source(c.program);
    Term q = atom(c.query, obj.supply);
    PreservationReport r =
        preservation_report(idemo, obj.program, q, ExtraArgsFresh{}, Budget{}, obj.supply);
    EXPECT(r.object_status.kind == r.meta_status.kind);
    EXPECT(r.verdict == PreservationReport::Verdict::consistent);
    if (r.object_status.terminates()) {
      EXPECT(r.answers.sound == CheckOutcome::pass);
      EXPECT(r.answers.complete == CheckOutcome::pass);
      EXPECT(r.answers.sets_equal == true);
    }
  }
}

void criterion11_property_suites() {
  // unification: correctness, occurs check, factoring through brute force
  {
    TermGen gen(97);
    int unifiable = 0;
    for (int round = 0; round < 120; ++round) {
      Term a = gen.term(3);
      Term b = gen.term(3);
      auto mgu = unify(a, b);
      if (!mgu) continue;
      ++unifiable;
      EXPECT(mgu->apply(a) == mgu->apply(b));
    }
    EXPECT(unifiable > 10);
    VarSupply v;
    Term x = Term::var("X", v.fresh());
    EXPECT(!unify(x, Term::compound("f", {x})).has_value());
  }

  // partition properties on random sequences
  {
    TermGen gen(13);
    for (int round = 0; round < 40; ++round) {
      std::vector<Term> whole;
      for (int i = 0; i < 1 + gen.pick(5); ++i) whole.push_back(gen.term(2));
      std::vector<std::vector<Term>> parts;
      size_t at = 0;
      while (at < whole.size()) {
        size_t len = 1 + gen.pick(2);
        std::vector<Term> part(whole.begin() + at,
                               whole.begin() + std::min(whole.size(), at + len));
        at += part.size();
        parts.push_back(std::move(part));
      }
      EXPECT(forms_partition(parts, whole));
      Substitution theta;
      theta.bind(1000, gen.term(1));
      std::vector<std::vector<Term>> pt;
      for (const auto& part : parts) pt.push_back(theta.apply(part));
      EXPECT(forms_partition(pt, theta.apply(whole)));
    }
  }

  // call-set bijection and partition correspondence on complete plain runs
  {
    struct Case {
      const char* program;
      const char* query;
    };
    const std::vector<Case> corpus = {{kTinyProgram, "p(X)"},
                                      {kTinyProgram, "s"},
                                      {kGroundRecursion, "l(0)"},
                                      {kGroundRecursion, "l(f(0))"},
                                      {kListRecursion, "p([a, b])"}};
    for (const Case& c : corpus) {
      SourceProgram obj = parse_fix(c.program);
      Term q = atom(c.query, obj.supply);
      CallCorrespondence bij = call_correspondence(
          get_interpreter("m0"), obj.program, q, CallCheckMode::variant_bijection, Budget{},
          obj.supply);
      EXPECT(bij.outcome == CheckOutcome::pass);
      SourceProgram obj2 = parse_fix(c.program);
      Term q2 = atom(c.query, obj2.supply);
      CallCorrespondence part = call_correspondence(
          get_interpreter("m0"), obj2.program, q2, CallCheckMode::partition, Budget{},
          obj2.supply);
      EXPECT(part.outcome == CheckOutcome::pass);
    }
  }

  // ordering sanity
  {
    TermGen gen(51);
    RpoSpec rpo;
    rpo.rank[SymKey{"f", 2}] = 2;
    rpo.rank[SymKey{"g", 1}] = 1;
    OrderingSpec o{rpo};
    std::vector<Term> sample;
    for (int i = 0; i < 25; ++i) sample.push_back(gen.term(3));
    for (const Term& a : sample) {
      EXPECT(compare(o, a, a) != Cmp::greater);
      if (a.is_compound())
        for (const Term& sub : a.args()) EXPECT(rpo.greater(a, sub));
    }
    for (size_t i = 0; i < sample.size(); ++i)
      for (size_t j = 0; j < sample.size(); ++j) {
        bool ij = compare(o, sample[i], sample[j]) == Cmp::greater;
        bool ji = compare(o, sample[j], sample[i]) == Cmp::greater;
        EXPECT(!(ij && ji));
      }
  }

  // acceptable complete obligations imply termination of every seed
  {
    SourceProgram sp = parse_fix(kGroundRecursion);
    std::vector<QuerySeq> seeds{q1("l(0)", sp.supply), q1("l(f(0))", sp.supply)};
    ObligationSet obs = decrease_obligations(sp.program, seeds, Budget{}, sp.supply);
    SearchResult r = search_ordering(obs, LinearStrategy{3});
    EXPECT(found(r));
    if (found(r)) {
      ObligationReport report = check_obligations(std::get<SearchFound>(r).spec, obs);
      EXPECT(report.acceptable());
      if (report.acceptable())
        for (const QuerySeq& seed : seeds)
          EXPECT(termination_status(sp.program, seed, Budget{}, sp.supply).terminates());
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    std::function<void()> body;
  };
  const std::vector<Entry> criteria = {
      {1, "plain interpreter preserves statuses and answers", criterion1_vanilla_preservation},
      {2, "body-pruning interpreter yields an improvement counterexample",
       criterion2_improvement_counterexample},
      {3, "call sets match the published listings", criterion3_call_sets},
      {4, "linear mapping dichotomy and path-ordering rescue", criterion4_linear_dichotomy},
      {5, "consequence-operator powers and answer approximation", criterion5_consequence_powers},
      {6, "classifier table", criterion6_classifier_table},
      {7, "tracer restrictedness is clause-sensitive", criterion7_tracer_sensitivity},
      {8, "restricted interpreter preserves statuses on the corpus",
       criterion8_restricted_preservation},
      {9, "negation-aware interpreter parity on normal programs", criterion9_normal_parity},
      {10, "ground representation round-trips and mirrors execution",
       criterion10_ground_representation},
      {11, "property suites", criterion11_property_suites},
  };
  int failed = 0;
  for (const Entry& e : criteria)
    if (!run_criterion(e.number, e.title, e.body)) ++failed;
  if (failed) {
    std::cout << failed << " criteria FAILED\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
