#pragma once

#include <vector>

#include "metaterm/engine.hpp"
#include "metaterm/program.hpp"

namespace metaterm {

/// A set of atoms maintained up to variance: no two members are variants.
struct PiInterpretation {
  std::vector<Term> atoms;

  bool contains(const Term& a) const { return contains_variant(atoms, a); }
  bool insert(const Term& a) { return insert_up_to_variance(atoms, a); }
  bool subset_of(const PiInterpretation& other) const;
  bool same_as(const PiInterpretation& other) const;
};

/// Non-ground immediate consequence step: every head instance obtained by
/// unifying a clause body, atom by atom left to right with a cumulative
/// substitution, against renamed-apart members of `i`.
PiInterpretation tpi_step(const Program& p, const PiInterpretation& i, VarSupply& supply);

/// n-fold iteration from the empty interpretation; monotone in n.
PiInterpretation tpi_power(const Program& p, int n, VarSupply& supply);

/// Iterates until stable or `max_powers` is reached; reports the power used.
struct FixpointResult {
  PiInterpretation interpretation;
  int powers = 0;
  bool stabilized = false;
};
FixpointResult tpi_fixpoint(const Program& p, int max_powers, VarSupply& supply);

/// Computed-answer approximation: for every defined predicate, runs the
/// most-general query under the budget and collects the answer atoms.
struct OSemantics {
  PiInterpretation interpretation;
  bool complete = true;
};
OSemantics o_semantics_approx(const Program& p, const Budget& b, VarSupply& supply);

}  // namespace metaterm
