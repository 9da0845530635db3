#include <doctest.h>

#include "fixtures.hpp"
#include "metaterm/preservation.hpp"

using namespace metaterm;
using namespace fixtures;

namespace {

InterpreterSpec inline_interpreter(const char* name, const char* source, int arity) {
  InterpreterSpec spec;
  spec.name = name;
  VarSupply v;
  spec.program = parse_program(source, v);
  spec.solve_arity = arity;
  spec.encoding = EncodingKind::ce;
  return spec;
}

}  // namespace

TEST_CASE("the plain interpreter is sound and complete on a terminating program") {
  SourceProgram obj = parse_fix(kTinyProgram);
  Term q = atom("p(X)", obj.supply);
  AnswerCorrespondence a =
      answer_correspondence(get_interpreter("m0"), obj.program, q, Budget{}, obj.supply);
  CHECK(a.sound == CheckOutcome::pass);
  CHECK(a.complete == CheckOutcome::pass);
  CHECK(a.sets_equal == true);
}

TEST_CASE("the failing interpreter is sound but incomplete") {
  SourceProgram obj = parse_fix(kTinyProgram);
  Term q = atom("p(X)", obj.supply);
  AnswerCorrespondence a =
      answer_correspondence(get_interpreter("m1"), obj.program, q, Budget{}, obj.supply);
  CHECK(a.sound == CheckOutcome::pass);
  CHECK(a.complete == CheckOutcome::fail);
}

TEST_CASE("the one-fact interpreter is complete but unsound") {
  InterpreterSpec accept_all = inline_interpreter("accept_all", "solve(A, X).", 2);
  SourceProgram obj = parse_fix(kTinyProgram);
  Term q = atom("q(c)", obj.supply);  // finitely failing goal
  AnswerCorrespondence a = answer_correspondence(accept_all, obj.program, q, Budget{}, obj.supply);
  CHECK(a.complete == CheckOutcome::pass);
  CHECK(a.sound == CheckOutcome::fail);
}

TEST_CASE("variant bijection of call sets holds for the plain interpreter") {
  SourceProgram obj = parse_fix(kTinyProgram);
  Term q = atom("p(X)", obj.supply);
  CallCorrespondence c =
      call_correspondence(get_interpreter("m0"), obj.program, q,
                          CallCheckMode::variant_bijection, Budget{}, obj.supply);
  CHECK(c.outcome == CheckOutcome::pass);

  SourceProgram fact = parse_source("q(b).");
  Term fq = atom("q(X)", fact.supply);
  CallCorrespondence cf = call_correspondence(
      get_interpreter("m0"), fact.program, fq, CallCheckMode::variant_bijection, Budget{},
      fact.supply);
  CHECK(cf.outcome == CheckOutcome::pass);
}

TEST_CASE("instance cover holds where the variant bijection fails") {
  SourceProgram obj = parse_fix(kTinyProgram);
  Term q = atom("p(X)", obj.supply);
  CallCorrespondence c =
      call_correspondence(get_interpreter("ex43"), obj.program, q,
                          CallCheckMode::instance_cover, Budget{}, obj.supply);
  CHECK(c.outcome == CheckOutcome::pass);
  REQUIRE(c.variant_missing.size() == 1);
  VarSupply v;
  CHECK(is_variant(c.variant_missing[0], parse_term("solve(q(f(Z)))", v)));
}

TEST_CASE("partition correspondence links meta queries to object queries") {
  for (const char* text : {kTinyProgram, kGroundRecursion}) {
    SourceProgram obj = parse_fix(text);
    Term q = atom(text == kTinyProgram ? "p(X)" : "l(f(0))", obj.supply);
    CallCorrespondence c = call_correspondence(
        get_interpreter("m0"), obj.program, q, CallCheckMode::partition, Budget{}, obj.supply);
    CHECK(c.outcome == CheckOutcome::pass);
  }
}

TEST_CASE("the body-pruning interpreter improves termination") {
  SourceProgram obj = parse_fix(kConjLoop);
  Term q = atom("p", obj.supply);
  PreservationReport r = preservation_report(get_interpreter("m3"), obj.program, q,
                                             ExtraArgsFresh{}, Budget{}, obj.supply);
  CHECK(r.object_status.looping());
  CHECK(r.meta_status.terminates());
  CHECK(r.verdict == PreservationReport::Verdict::improvement_counterexample);
}

TEST_CASE("a clashing extra argument improves termination") {
  SourceProgram obj = parse_fix(kConjLoop);
  Term q = atom("q", obj.supply);
  ExtraArgsGiven given;
  given.terms = {atom("b", obj.supply)};
  PreservationReport r = preservation_report(get_interpreter("meta_ab"), obj.program, q, given,
                                             Budget{}, obj.supply);
  CHECK(r.object_status.looping());
  CHECK(r.meta_status.terminates());
  CHECK(r.verdict == PreservationReport::Verdict::improvement_counterexample);
  CHECK_FALSE(r.restricted_query);
}

TEST_CASE("binding the meta-variable changes the call set and improves termination") {
  SourceProgram obj = parse_fix(kUnifyGuardLoop);
  Term q = atom("q", obj.supply);
  PreservationReport r = preservation_report(get_interpreter("ap0"), obj.program, q,
                                             ExtraArgsFresh{}, Budget{}, obj.supply);
  CHECK(r.object_status.looping());
  CHECK(r.meta_status.terminates());
  CHECK(r.verdict == PreservationReport::Verdict::improvement_counterexample);
}

TEST_CASE("the plain interpreter preserves status on both directions") {
  struct Case {
    const char* program;
    const char* query;
    bool loops;
  };
  std::vector<Case> corpus = {{kTinyProgram, "p(X)", false}, {kGroundRecursion, "l(f(0))", false},
                              {kConjLoop, "p", true},        {kGroundRecursion, "p(X)", true},
                              {kTailLoop, "r", true},        {kTinyProgram, "s", false}};
  for (const Case& c : corpus) {
    SourceProgram obj = parse_fix(c.program);
    Term q = atom(c.query, obj.supply);
    PreservationReport r = preservation_report(get_interpreter("m0"), obj.program, q,
                                               ExtraArgsFresh{}, Budget{}, obj.supply);
    CHECK(r.verdict == PreservationReport::Verdict::consistent);
    CHECK(r.object_status.looping() == c.loops);
    CHECK(r.meta_status.looping() == c.loops);
  }
}

TEST_CASE("budget-exhausted sides never produce counterexamples") {
  SourceProgram obj = parse_fix(kConjLoop);
  Term q = atom("p", obj.supply);
  // a budget too small even to find the loop
  PreservationReport r = preservation_report(get_interpreter("m3"), obj.program, q,
                                             ExtraArgsFresh{}, Budget(2, 2), obj.supply);
  if (!r.object_status.looping()) {
    CHECK(r.verdict == PreservationReport::Verdict::inconclusive);
    CHECK_FALSE(r.counterexample());
  }
}
