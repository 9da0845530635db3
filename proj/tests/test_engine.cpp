#include <doctest.h>

#include "fixtures.hpp"
#include "metaterm/catalog.hpp"
#include "metaterm/engine.hpp"

using namespace metaterm;
using namespace fixtures;

TEST_CASE("ld_step resolves in source clause order and handles built-ins") {
  SourceProgram sp = parse_fix(kTinyProgram);
  auto steps = ld_step(q1("p(X)", sp.supply), sp.program, sp.supply);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].clause.has_value());
  CHECK(to_string(steps[0].resolvent) == "q(X)");

  auto t = ld_step(q1("true, r", sp.supply), sp.program, sp.supply);
  REQUIRE(t.size() == 1);
  CHECK(to_string(t[0].resolvent) == "r");
  CHECK_FALSE(t[0].clause.has_value());

  CHECK(ld_step(q1("fail, r", sp.supply), sp.program, sp.supply).empty());

  auto eq = ld_step(q1("X = f(a), p(X)", sp.supply), sp.program, sp.supply);
  REQUIRE(eq.size() == 1);
  CHECK(to_string(eq[0].resolvent) == "p(f(a))");

  CHECK_THROWS_AS(ld_step(q1("\\+ q(b)", sp.supply), sp.program, sp.supply),
                  PreconditionError);
}

TEST_CASE("bounded trees complete or truncate honestly") {
  SourceProgram sp = parse_fix(kGroundRecursion);
  LDTree done = build_ld_tree(sp.program, q1("l(0)", sp.supply), Budget{}, sp.supply);
  CHECK(done.complete());
  CHECK(done.has_success());

  SourceProgram loop = parse_fix(kConjLoop);
  LDTree cut = build_ld_tree(loop.program, q1("p", loop.supply), Budget(500, 60), loop.supply);
  CHECK_FALSE(cut.complete());

  SourceProgram empty = parse_fix(kTinyProgram);
  LDTree succ = build_ld_tree(empty.program, QuerySeq{}, Budget{}, empty.supply);
  REQUIRE(succ.nodes.size() == 1);
  CHECK(succ.nodes[0].leaf == LeafKind::success);
}

TEST_CASE("negation as failure spawns subsidiary trees and flounders on open atoms") {
  {
    SourceProgram sp = parse_source("q.");
    LDForest f = build_ldnf_forest(sp.program, q1("\\+ q", sp.supply), Budget{}, sp.supply);
    CHECK(f.complete());
    CHECK_FALSE(f.floundered);
    CHECK(computed_answers(f).answers.empty());
    CHECK(f.trees.size() == 2);
  }
  {
    SourceProgram sp = parse_source("p(a).");
    LDForest f = build_ldnf_forest(sp.program, q1("\\+ p(X)", sp.supply), Budget{}, sp.supply);
    CHECK(f.floundered);
    CHECK(computed_answers(f).incomplete);
  }
  {
    SourceProgram sp = parse_source("r(a). s :- \\+ r(b).");
    LDForest f = build_ldnf_forest(sp.program, q1("s", sp.supply), Budget{}, sp.supply);
    CHECK(f.complete());
    CHECK(computed_answers(f).answers.size() == 1);
  }
}

TEST_CASE("computed answers collapse up to variance") {
  SourceProgram sp = parse_fix(kTinyProgram);
  LDTree t = build_ld_tree(sp.program, q1("p(X)", sp.supply), Budget{}, sp.supply);
  AnswerSet a = computed_answers(t);
  REQUIRE(a.answers.size() == 1);
  CHECK(to_string(a.answers[0][0]) == "p(b)");
  CHECK_FALSE(a.incomplete);

  // the same run through the plain interpreter
  VarSupply v;
  SourceProgram obj = parse_fix(kTinyProgram);
  MetaComposition comp = compose_meta_program(get_interpreter("m0"), obj.program, obj.supply);
  Term q = atom("p(X)", obj.supply);
  MetaQuery mq = make_meta_query(get_interpreter("m0"), comp, q, ExtraArgsFresh{}, obj.supply);
  LDTree mt = build_ld_tree(comp.program, mq.query, Budget{}, obj.supply);
  AnswerSet ma = computed_answers(mt);
  REQUIRE(ma.answers.size() == 1);
  CHECK(to_string(ma.answers[0][0]) == "solve(p(b))");

  SourceProgram none = parse_fix(kTinyProgram);
  LDTree nt = build_ld_tree(none.program, q1("q(c)", none.supply), Budget{}, none.supply);
  CHECK(computed_answers(nt).answers.empty());
}

TEST_CASE("call sets match the two published listings") {
  auto goals = [](const CallSet& cs) {
    std::vector<std::string> out;
    for (const CallRecord& r : cs.records) out.push_back(to_string(r.atom));
    return out;
  };

  SourceProgram obj = parse_fix(kTinyProgram);
  const InterpreterSpec& shaped = get_interpreter("ex43");
  MetaComposition comp = compose_meta_program(shaped, obj.program, obj.supply);
  Term q = atom("p(X)", obj.supply);
  MetaQuery mq = make_meta_query(shaped, comp, q, ExtraArgsFresh{}, obj.supply);
  LDTree t = build_ld_tree(comp.program, mq.query, Budget{}, obj.supply);
  CallSet cs = call_set(t);
  VarSupply v;
  REQUIRE(cs.records.size() == 3);
  CHECK(cs.contains_variant_atom(parse_term("solve(p(X))", v)));
  CHECK(cs.contains_variant_atom(parse_term("solve(q(f(Z)))", v)));
  CHECK(cs.contains_variant_atom(parse_term("clause(p(X), q(X))", v)));

  SourceProgram obj2 = parse_fix(kTinyProgram);
  const InterpreterSpec& plain = get_interpreter("m0");
  MetaComposition comp2 = compose_meta_program(plain, obj2.program, obj2.supply);
  Term q2 = atom("p(X)", obj2.supply);
  MetaQuery mq2 = make_meta_query(plain, comp2, q2, ExtraArgsFresh{}, obj2.supply);
  LDTree t2 = build_ld_tree(comp2.program, mq2.query, Budget{}, obj2.supply);
  CallSet cs2 = call_set(t2);
  REQUIRE(cs2.records.size() == 5);
  CHECK(cs2.contains_variant_atom(parse_term("solve(p(X))", v)));
  CHECK(cs2.contains_variant_atom(parse_term("solve(q(X))", v)));
  CHECK(cs2.contains_variant_atom(parse_term("solve(true)", v)));
  CHECK(cs2.contains_variant_atom(parse_term("clause(p(X), q(X))", v)));
  CHECK(cs2.contains_variant_atom(parse_term("clause(q(b), true)", v)));

  SourceProgram fact = parse_source("q(b).");
  LDTree ft = build_ld_tree(fact.program, q1("q(X)", fact.supply), Budget{}, fact.supply);
  CallSet fcs = call_set(ft);
  REQUIRE(fcs.records.size() == 1);
  CHECK(is_variant(fcs.records[0].atom, parse_term("q(X)", v)));
}

TEST_CASE("call sets grow monotonically with the budget") {
  for (const char* text : {kConjLoop, kUnifyGuardLoop}) {
    SourceProgram a = parse_fix(text);
    SourceProgram b = parse_fix(text);
    const char* query = text == kConjLoop ? "p" : "q";
    CallSet small = call_set(
        build_ld_tree(a.program, q1(query, a.supply), Budget(60, 30), a.supply));
    CallSet big =
        call_set(build_ld_tree(b.program, q1(query, b.supply), Budget(600, 80), b.supply));
    CHECK(small.lower_approximation);
    for (const CallRecord& r : small.records) CHECK(big.contains_variant_atom(r.atom));
  }
}

TEST_CASE("decrease obligations instantiate callers over computed answers") {
  SourceProgram sp = parse_fix(kGroundRecursion);
  ObligationSet obs = decrease_obligations(
      sp.program, {q1("l(0)", sp.supply), q1("l(f(0))", sp.supply)}, Budget{}, sp.supply);
  CHECK(obs.complete);
  auto has_pair = [&](const char* caller, const char* callee) {
    VarSupply v;
    Term want = Term::compound("$ob", {parse_term(caller, v), parse_term(callee, v)});
    for (const Obligation& ob : obs.obligations)
      if (is_variant(Term::compound("$ob", {ob.caller, ob.callee}), want)) return true;
    return false;
  };
  CHECK(has_pair("p(f(0))", "p(0)"));
  CHECK(has_pair("r(f(0))", "r(0)"));

  SourceProgram flat = parse_source("a :- b. b.");
  ObligationSet none =
      decrease_obligations(flat.program, {q1("a", flat.supply)}, Budget{}, flat.supply);
  CHECK(none.obligations.empty());
}

TEST_CASE("meta-level obligations include the published inequality instances") {
  SourceProgram obj = parse_fix(kGroundRecursion);
  const InterpreterSpec& plain = get_interpreter("m0");
  MetaComposition comp = compose_meta_program(plain, obj.program, obj.supply);
  Term q = atom("l(f(0))", obj.supply);
  MetaQuery mq = make_meta_query(plain, comp, q, ExtraArgsFresh{}, obj.supply);
  ObligationSet obs = decrease_obligations(comp.program, {mq.query}, Budget{}, obj.supply);
  REQUIRE(obs.complete);
  auto has_pair = [&](const char* caller, const char* callee) {
    VarSupply v;
    Term want = Term::compound("$ob", {parse_term(caller, v), parse_term(callee, v)});
    for (const Obligation& ob : obs.obligations)
      if (is_variant(Term::compound("$ob", {ob.caller, ob.callee}), want)) return true;
    return false;
  };
  CHECK(has_pair("solve(l(f(0)))", "solve((p(f(0)), r(f(0))))"));
  CHECK(has_pair("solve((p(f(0)), r(f(0))))", "solve(p(f(0)))"));
  CHECK(has_pair("solve((p(f(0)), r(f(0))))", "solve(r(f(0)))"));
  CHECK(has_pair("solve(p(f(0)))", "solve((q(f(0), Y), p(Y)))"));
  CHECK(has_pair("solve((q(f(0), Y), p(Y)))", "solve(p(0))"));
  CHECK(has_pair("solve(r(f(0)))", "solve((s(Y), r(0)))"));
  CHECK(has_pair("solve((s(Y), r(0)))", "solve(r(0))"));
}

TEST_CASE("termination status distinguishes loops from exhausted budgets") {
  SourceProgram sp = parse_fix(kGroundRecursion);
  TerminationStatus onloop =
      termination_status(sp.program, q1("p(X)", sp.supply), Budget{}, sp.supply);
  CHECK(onloop.looping());
  REQUIRE(onloop.witness.size() >= 2);
  CHECK(is_variant(onloop.witness.front(), onloop.witness.back()));

  SourceProgram done = parse_fix(kGroundRecursion);
  CHECK(termination_status(done.program, q1("l(0)", done.supply), Budget{}, done.supply)
            .terminates());

  SourceProgram self = parse_source("q :- q.");
  CHECK(termination_status(self.program, q1("q", self.supply), Budget{}, self.supply).looping());
}

TEST_CASE("loop witnesses replay from their entry atom") {
  for (const char* text : {kGroundRecursion, kConjLoop, kUnifyGuardLoop}) {
    SourceProgram sp = parse_fix(text);
    const char* query = text == kGroundRecursion ? "p(X)" : (text == kConjLoop ? "p" : "q");
    TerminationStatus st = termination_status(sp.program, q1(query, sp.supply), Budget{}, sp.supply);
    REQUIRE(st.looping());
    CHECK(is_variant(st.witness.front(), st.witness.back()));
    // starting over at the repeating atom finds the loop again
    TerminationStatus again = termination_status(
        sp.program, query_of({st.witness.front()}), Budget{}, sp.supply);
    CHECK(again.looping());
  }
}

TEST_CASE("complete trees give exact answers") {
  SourceProgram sp = parse_fix(kGroundRecursion);
  TerminationStatus st =
      termination_status(sp.program, q1("l(f(0))", sp.supply), Budget{}, sp.supply);
  REQUIRE(st.terminates());
  SourceProgram again = parse_fix(kGroundRecursion);
  LDTree t = build_ld_tree(again.program, q1("l(f(0))", again.supply), Budget{}, again.supply);
  CHECK(t.complete());
  CHECK_FALSE(computed_answers(t).incomplete);
}

TEST_CASE("tree dump lists one node per line with depth and status") {
  SourceProgram sp = parse_fix(kTinyProgram);
  LDTree t = build_ld_tree(sp.program, q1("p(X)", sp.supply), Budget{}, sp.supply);
  std::string dump = dump_tree(t);
  CHECK(dump.find("0 inner p(X)") != std::string::npos);
  CHECK(dump.find("success") != std::string::npos);
}
