#include <doctest.h>

#include "fixtures.hpp"
#include "metaterm/catalog.hpp"
#include "metaterm/search.hpp"

using namespace metaterm;
using namespace fixtures;

namespace {

ObligationSet object_obligations(const char* text, const std::vector<const char*>& seeds) {
  SourceProgram sp = parse_fix(text);
  std::vector<QuerySeq> qs;
  for (const char* s : seeds) qs.push_back(q1(s, sp.supply));
  return decrease_obligations(sp.program, qs, Budget{}, sp.supply);
}

ObligationSet meta_obligations(const char* text, const char* interp,
                               const std::vector<const char*>& seeds) {
  SourceProgram obj = parse_fix(text);
  const InterpreterSpec& spec = get_interpreter(interp);
  MetaComposition comp = compose_meta_program(spec, obj.program, obj.supply);
  std::vector<QuerySeq> qs;
  for (const char* s : seeds) {
    Term q = atom(s, obj.supply);
    qs.push_back(make_meta_query(spec, comp, q, ExtraArgsFresh{}, obj.supply).query);
  }
  return decrease_obligations(comp.program, qs, Budget{}, obj.supply);
}

}  // namespace

TEST_CASE("a small linear mapping proves the two-recursion object program") {
  ObligationSet obs = object_obligations(kGroundRecursion, {"l(0)", "l(f(0))", "l(f(f(0)))"});
  REQUIRE(obs.complete);
  SearchResult r = search_ordering(obs, LinearStrategy{2});
  REQUIRE(found(r));
  ObligationReport check = check_obligations(std::get<SearchFound>(r).spec, obs);
  CHECK(check.acceptable());
}

TEST_CASE("no bounded linear mapping covers the meta obligations of the same program") {
  ObligationSet obs =
      meta_obligations(kGroundRecursion, "m0", {"l(0)", "l(f(0))", "l(f(f(0)))"});
  REQUIRE(obs.complete);
  REQUIRE(obs.obligations.size() >= 20);
  SearchResult r = search_ordering(obs, LinearStrategy{10});
  CHECK_FALSE(found(r));
  CHECK(std::get<NoneWithinBound>(r).note.find("not excluded") != std::string::npos);
}

TEST_CASE("a recursive path ordering covers those meta obligations") {
  ObligationSet obs =
      meta_obligations(kGroundRecursion, "m0", {"l(0)", "l(f(0))", "l(f(f(0)))"});
  REQUIRE(obs.complete);
  SearchResult r = search_ordering(obs, RpoStrategy{});
  REQUIRE(found(r));
  const OrderingSpec& spec = std::get<SearchFound>(r).spec;
  ObligationReport check = check_obligations(spec, obs);
  CHECK(check.acceptable());

  // the published decrease schema holds on the harvested instances
  VarSupply v;
  for (const char* t : {"0", "f(0)", "f(f(0))"}) {
    Term lt = parse_term(std::string("solve(l(") + t + "))", v);
    Term pr = parse_term(std::string("solve((p(") + t + "), r(" + t + ")))", v);
    CHECK(compare(spec, lt, pr) == Cmp::greater);
    CHECK(compare(spec, pr, parse_term(std::string("solve(p(") + t + "))", v)) == Cmp::greater);
    CHECK(compare(spec, pr, parse_term(std::string("solve(r(") + t + "))", v)) == Cmp::greater);
  }
  CHECK(compare(spec, parse_term("solve(r(f(f(0))))", v), parse_term("solve(r(f(0)))", v)) ==
        Cmp::greater);
}

TEST_CASE("the list program finds a linear meta mapping within bound three") {
  ObligationSet obs = meta_obligations(kListRecursion, "m0", {"p([a, b, c])"});
  REQUIRE(obs.complete);
  REQUIRE_FALSE(obs.obligations.empty());
  SearchResult r = search_ordering(obs, LinearStrategy{3});
  REQUIRE(found(r));
  ObligationReport check = check_obligations(std::get<SearchFound>(r).spec, obs);
  CHECK(check.acceptable());
}

TEST_CASE("search and check agree on every found ordering") {
  struct Case {
    const char* program;
    std::vector<const char*> seeds;
  };
  std::vector<Case> cases = {{kGroundRecursion, {"l(f(0))"}},
                             {kTinyProgram, {"p(X)"}},
                             {kUnifyGuardLoop, {"p(0)", "p(f(0))"}}};
  for (const Case& c : cases) {
    ObligationSet obs = object_obligations(c.program, c.seeds);
    SearchResult lin = search_ordering(obs, LinearStrategy{4});
    if (found(lin))
      CHECK(check_obligations(std::get<SearchFound>(lin).spec, obs).violations.empty());
    SearchResult rpo = search_ordering(obs, RpoStrategy{});
    if (found(rpo))
      CHECK(check_obligations(std::get<SearchFound>(rpo).spec, obs).violations.empty());
  }
}

TEST_CASE("empty obligation sets are trivially orderable") {
  ObligationSet none;
  CHECK(found(search_ordering(none, LinearStrategy{1})));
  CHECK(found(search_ordering(none, RpoStrategy{})));
}
