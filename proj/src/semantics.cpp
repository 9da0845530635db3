#include "metaterm/semantics.hpp"

namespace metaterm {

bool PiInterpretation::subset_of(const PiInterpretation& other) const {
  for (const Term& a : atoms)
    if (!other.contains(a)) return false;
  return true;
}

bool PiInterpretation::same_as(const PiInterpretation& other) const {
  return subset_of(other) && other.subset_of(*this);
}

namespace {

// Extends `acc` over body atoms [pos..) and adds every resulting head
// instance. Members of `i` are renamed apart before each use, so the
// atom-by-atom cumulative unification coincides with the simultaneous one.
void derive(const Clause& c, size_t pos, const Substitution& acc, const PiInterpretation& i,
            VarSupply& supply, PiInterpretation& out) {
  if (pos == c.body.size()) {
    out.insert(acc.apply(c.head));
    return;
  }
  if (!c.body[pos].positive)
    throw PreconditionError("consequence operator is defined for definite programs only");
  Term goal = acc.apply(c.body[pos].atom);
  for (const Term& member : i.atoms) {
    Term fresh = rename_apart(member, supply);
    if (auto u = unify(goal, fresh)) derive(c, pos + 1, acc.compose(*u), i, supply, out);
  }
}

}  // namespace

PiInterpretation tpi_step(const Program& p, const PiInterpretation& i, VarSupply& supply) {
  PiInterpretation out;
  for (const Clause& c : p.clauses()) {
    Clause rc = rename_apart(c, supply);
    derive(rc, 0, Substitution{}, i, supply, out);
  }
  return out;
}

PiInterpretation tpi_power(const Program& p, int n, VarSupply& supply) {
  PiInterpretation cur;
  for (int k = 0; k < n; ++k) cur = tpi_step(p, cur, supply);
  return cur;
}

FixpointResult tpi_fixpoint(const Program& p, int max_powers, VarSupply& supply) {
  FixpointResult r;
  for (int k = 0; k < max_powers; ++k) {
    PiInterpretation next = tpi_step(p, r.interpretation, supply);
    ++r.powers;
    if (next.same_as(r.interpretation)) {
      r.stabilized = true;
      r.interpretation = std::move(next);
      return r;
    }
    r.interpretation = std::move(next);
  }
  return r;
}

OSemantics o_semantics_approx(const Program& p, const Budget& b, VarSupply& supply) {
  OSemantics out;
  for (const SymKey& pred : p.predicates()) {
    std::vector<Term> args;
    for (int i = 0; i < pred.arity; ++i) args.push_back(Term::var(supply, "X"));
    Term goal = Term::compound(pred.name, std::move(args));
    LDTree t = build_ld_tree(p, query_of({goal}), b, supply);
    if (t.truncated) out.complete = false;
    for (const auto& ans : computed_answers(t).answers) out.interpretation.insert(ans.front());
  }
  return out;
}

}  // namespace metaterm
