#pragma once

#include <random>
#include <string>
#include <vector>

#include "metaterm/parser.hpp"

namespace fixtures {

using namespace metaterm;

// l descends into two independent recursions; every ground l(t) terminates
// while p(X) with a free argument loops.
inline const char* kGroundRecursion = R"(
l(X) :- p(X), r(X).
p(X) :- q(X, Y), p(Y).
r(f(X)) :- s(Y), r(X).
q(f(Z), Z).
p(0).
r(0).
s(0).
)";

// list recursion that needs per-symbol norm coefficients at the meta level
inline const char* kListRecursion = R"(
p([X, Y|T]) :- p([Y|T]), p(T).
)";

// three tiny clauses, one undefined body predicate
inline const char* kTinyProgram = R"(
p(X) :- q(X).
q(b).
s :- r, t.
)";

// p reaches a self-loop through its first conjunct
inline const char* kConjLoop = R"(
p :- q, r.
q :- q.
)";

// the unification guard of some interpreters changes this call set
inline const char* kUnifyGuardLoop = R"(
q :- p(X), r.
p(f(X)) :- p(X).
p(0).
r.
)";

// loops only after its first body atom succeeds
inline const char* kTailLoop = R"(
r :- p, r.
p.
)";

// two-element-list head whose encoding is pinned byte-exactly in tests
inline const char* kPermutePair = R"(
permute(L, [El, T]) :- delete(El, L, L1), permute(L1, T).
)";

inline SourceProgram parse_fix(const char* text) { return parse_source(text); }

inline Term atom(const std::string& text, VarSupply& supply) {
  return parse_term(text, supply);
}

inline QuerySeq q1(const std::string& text, VarSupply& supply) {
  return parse_query(text, supply);
}

// deterministic random terms over f/2, g/1, a, b and three variables
class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  Term term(int max_depth) {
    if (max_depth == 0 || pick(3) == 0) return leaf();
    if (pick(2) == 0) return Term::compound("g", {term(max_depth - 1)});
    return Term::compound("f", {term(max_depth - 1), term(max_depth - 1)});
  }

  Term leaf() {
    switch (pick(5)) {
      case 0:
        return Term::constant("a");
      case 1:
        return Term::constant("b");
      case 2:
        return Term::var("X", 1000);
      case 3:
        return Term::var("Y", 1001);
      default:
        return Term::var("Z", 1002);
    }
  }

  int pick(int n) { return static_cast<int>(rng_() % n); }

 private:
  std::mt19937 rng_;
};

}  // namespace fixtures
