#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "metaterm/catalog.hpp"
#include "metaterm/ordering.hpp"

using namespace metaterm;
using namespace fixtures;

namespace {

// term-size level mapping on l/p/r, zero on s/q, as used for the
// two-recursion program
LinearLevelMapping ground_recursion_mapping() {
  LinearLevelMapping lm;
  lm.norm = LinearNorm::term_size();
  lm.preds[SymKey{"l", 1}] = {0, {1}};
  lm.preds[SymKey{"p", 1}] = {0, {1}};
  lm.preds[SymKey{"r", 1}] = {0, {1}};
  lm.preds[SymKey{"s", 1}] = {0, {}};
  lm.preds[SymKey{"q", 2}] = {0, {}};
  return lm;
}

// ||(A,B)|| = 1+||A||+||B||, ||p(X)|| = 1+||X||, ||[H|T]|| = 1+3||T||, rest 0
LinearLevelMapping list_meta_mapping() {
  LinearLevelMapping lm;
  lm.norm = LinearNorm::zeros();
  lm.norm.set(SymKey{",", 2}, 1, {1, 1});
  lm.norm.set(SymKey{"p", 1}, 1, {1});
  lm.norm.set(SymKey{".", 2}, 1, {0, 3});
  lm.preds[SymKey{"solve", 1}] = {0, {1}};
  return lm;
}

}  // namespace

TEST_CASE("norm values") {
  VarSupply v;
  LinearNorm ts = LinearNorm::term_size();
  CHECK(ts.value(parse_term("f(f(0))", v)) == 3);
  LinearNorm ll = LinearNorm::list_length();
  CHECK(ll.value(parse_term("[a, b]", v)) == 2);
  CHECK(ll.value(parse_term("0", v)) == 0);

  LinearNorm custom = LinearNorm::zeros();
  custom.set(SymKey{".", 2}, 1, {0, 3});
  CHECK(custom.value(parse_term("[a, b]", v)) == 4);
  CHECK(custom.value(Term::var("X", 0)) == 0);
}

TEST_CASE("level values") {
  VarSupply v;
  LinearLevelMapping lm = ground_recursion_mapping();
  CHECK(lm.value(parse_term("l(f(0))", v)) == 2);
  CHECK(lm.value(parse_term("q(f(0), 0)", v)) == 0);
  LinearLevelMapping zero;
  CHECK(zero.value(parse_term("p(f(f(0)))", v)) == 0);
}

TEST_CASE("fixed norms select one argument") {
  VarSupply v;
  FixedNormSpec fx;
  fx.kind = FixedNormSpec::Kind::list_length;
  CHECK(fx.value(parse_term("p([a, b, c])", v)) == 3);
  CHECK(fx.value(parse_term("p", v)) == 0);
  fx.arg_for[SymKey{"q", 2}] = 1;
  CHECK(fx.value(parse_term("q(x, [a])", v)) == 1);
}

TEST_CASE("rpo has the subterm property and orders published instances") {
  VarSupply v;
  RpoSpec rpo;
  rpo.rank[SymKey{"r", 1}] = 3;
  rpo.rank[SymKey{"f", 1}] = 2;
  rpo.rank[SymKey{"0", 0}] = 1;
  CHECK(rpo.greater(parse_term("r(f(X))", v), parse_term("r(X)", v)));
  CHECK(compare(OrderingSpec{rpo}, parse_term("r(f(t))", v), parse_term("r(t)", v)) ==
        Cmp::greater);
  Term t = parse_term("f(f(0))", v);
  CHECK(compare(OrderingSpec{rpo}, t, t) == Cmp::equal_or_equiv);
  CHECK(compare(OrderingSpec{rpo}, t, parse_term("g(a)", v)) == Cmp::not_greater);

  TermGen gen(31);
  for (int i = 0; i < 80; ++i) {
    Term s = gen.term(3);
    if (!s.is_compound()) continue;
    std::function<void(const Term&)> sub = [&](const Term& inner) {
      for (const Term& a : inner.args()) {
        RpoSpec plain;  // subterm decrease needs no precedence
        CHECK(plain.greater(inner, a));
        sub(a);
      }
    };
    sub(s);
  }
}

TEST_CASE("the list meta mapping orders conjunction unfolding") {
  VarSupply v;
  LinearLevelMapping lm = list_meta_mapping();
  Term caller = parse_term("solve((p([a]), p([])))", v);
  Term callee = parse_term("solve(p([a]))", v);
  CHECK(lm.value(caller) == 4);
  CHECK(lm.value(callee) == 2);
  CHECK(compare(OrderingSpec{lm}, caller, callee) == Cmp::greater);
}

TEST_CASE("ordering sanity on random samples") {
  TermGen gen(41);
  RpoSpec rpo;
  rpo.rank[SymKey{"f", 2}] = 2;
  rpo.rank[SymKey{"g", 1}] = 1;
  rpo.rank[SymKey{"a", 0}] = 0;
  std::vector<Term> sample;
  for (int i = 0; i < 30; ++i) sample.push_back(gen.term(3));
  OrderingSpec o{rpo};
  for (const Term& a : sample) CHECK(compare(o, a, a) != Cmp::greater);
  for (size_t i = 0; i < sample.size(); ++i)
    for (size_t j = 0; j < sample.size(); ++j) {
      bool ij = compare(o, sample[i], sample[j]) == Cmp::greater;
      bool ji = compare(o, sample[j], sample[i]) == Cmp::greater;
      CHECK_FALSE((ij && ji));
      if (!ij) continue;
      for (size_t k = 0; k < sample.size(); k += 5)
        if (compare(o, sample[j], sample[k]) == Cmp::greater)
          CHECK(compare(o, sample[i], sample[k]) == Cmp::greater);
    }
}

TEST_CASE("obligation checking against the two-recursion program") {
  SourceProgram sp = parse_fix(kGroundRecursion);
  ObligationSet obs = decrease_obligations(
      sp.program,
      {q1("l(0)", sp.supply), q1("l(f(0))", sp.supply), q1("l(f(f(0)))", sp.supply)}, Budget{},
      sp.supply);
  REQUIRE(obs.complete);
  REQUIRE_FALSE(obs.obligations.empty());
  ObligationReport report = check_obligations(OrderingSpec{ground_recursion_mapping()}, obs);
  CHECK(report.acceptable());
  CHECK(report.satisfied == report.total);
}

TEST_CASE("obligation checking for the list program under its meta mapping") {
  SourceProgram obj = parse_fix(kListRecursion);
  const InterpreterSpec& plain = get_interpreter("m0");
  MetaComposition comp = compose_meta_program(plain, obj.program, obj.supply);
  Term q = atom("p([a, b, c])", obj.supply);
  MetaQuery mq = make_meta_query(plain, comp, q, ExtraArgsFresh{}, obj.supply);
  ObligationSet obs = decrease_obligations(comp.program, {mq.query}, Budget{}, obj.supply);
  REQUIRE(obs.complete);
  REQUIRE_FALSE(obs.obligations.empty());
  ObligationReport report = check_obligations(OrderingSpec{list_meta_mapping()}, obs);
  CHECK(report.acceptable());
}

TEST_CASE("an empty obligation set is acceptable and truncation is reported") {
  ObligationSet none;
  CHECK(check_obligations(OrderingSpec{LinearLevelMapping{}}, none).acceptable());
  ObligationSet cut;
  cut.complete = false;
  CHECK(check_obligations(OrderingSpec{LinearLevelMapping{}}, cut).verdict ==
        ObligationReport::Verdict::inconclusive_truncated);
  VarSupply v;
  cut.obligations.push_back(
      Obligation{parse_term("p(a)", v), parse_term("p(f(a))", v), 0, 0});
  ObligationReport bad = check_obligations(OrderingSpec{LinearLevelMapping{}}, cut);
  CHECK(bad.verdict == ObligationReport::Verdict::counterexample);
  CHECK(bad.violations.size() == 1);
}
