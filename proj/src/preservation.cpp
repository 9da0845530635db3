#include "metaterm/preservation.hpp"

#include <algorithm>

namespace metaterm {

namespace {

struct MetaRun {
  MetaComposition comp;
  MetaQuery query;
  LDForest forest;
};

MetaRun run_meta(const InterpreterSpec& i, const Program& p, const Term& q,
                 const ExtraArgsMode& mode, const Budget& b, VarSupply& supply) {
  MetaRun r;
  r.comp = compose_meta_program(i, p, supply);
  r.query = make_meta_query(i, r.comp, q, mode, supply);
  r.forest = build_ldnf_forest(r.comp.program, r.query.query, b, supply);
  return r;
}

/// The object-level content of one meta answer: the goal argument for
/// solve-style interpreters, the decoded query for the ground representation.
std::optional<Term> meta_answer_projection(const InterpreterSpec& i, const MetaComposition& comp,
                                           const Term& answer_atom, VarSupply& supply) {
  if (i.encoding == EncodingKind::ground) {
    // the instantiated query representation sits in the last argument
    if (answer_atom.arity() < 3) return std::nullopt;
    try {
      return ground_decode_term(answer_atom.args()[answer_atom.arity() - 1], *comp.table, supply);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  }
  if (answer_atom.arity() < 1) return std::nullopt;
  return answer_atom.args()[0];
}

std::set<std::string> object_predicates(const Program& p) {
  std::set<std::string> preds;
  for (const Clause& c : p.clauses()) {
    preds.insert(c.head.symbol());
    for (const Literal& l : c.body) preds.insert(l.atom.symbol());
  }
  return preds;
}

}  // namespace

std::string to_string(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::pass:
      return "pass";
    case CheckOutcome::fail:
      return "fail";
    case CheckOutcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

AnswerCorrespondence answer_correspondence(const InterpreterSpec& i, const Program& p,
                                           const Term& q, const Budget& b, VarSupply& supply) {
  AnswerCorrespondence out;
  LDForest object = build_ldnf_forest(p, term_to_body(q), b, supply);
  AnswerSet object_answers = computed_answers(object);

  MetaRun meta = run_meta(i, p, q, ExtraArgsFresh{}, b, supply);
  AnswerSet meta_answers = computed_answers(meta.forest);

  if (object_answers.incomplete || meta_answers.incomplete) {
    out.sound = CheckOutcome::inconclusive;
    out.complete = CheckOutcome::inconclusive;
    return out;
  }

  std::vector<Term> object_atoms;
  for (const auto& ans : object_answers.answers) object_atoms.push_back(tupled(ans));

  std::vector<Term> meta_projected;
  for (const auto& ans : meta_answers.answers) {
    auto proj = meta_answer_projection(i, meta.comp, ans.front(), supply);
    if (proj) meta_projected.push_back(*proj);
  }

  // Object queries here are atomic, so each object answer is one atom.
  out.sound = CheckOutcome::pass;
  for (const Term& t : meta_projected) {
    bool ok = false;
    for (const auto& ans : object_answers.answers)
      if (is_instance(t, ans.front())) ok = true;
    if (!ok) {
      out.sound = CheckOutcome::fail;
      out.sound_failures.push_back(t);
    }
  }
  out.complete = CheckOutcome::pass;
  for (const auto& ans : object_answers.answers) {
    bool ok = false;
    for (const Term& t : meta_projected)
      if (is_instance(ans.front(), t)) ok = true;
    if (!ok) {
      out.complete = CheckOutcome::fail;
      out.complete_failures.push_back(ans.front());
    }
  }

  bool equal = meta_projected.size() == object_answers.answers.size();
  if (equal)
    for (const Term& t : meta_projected)
      if (![&] {
            for (const auto& ans : object_answers.answers)
              if (is_variant(t, ans.front())) return true;
            return false;
          }())
        equal = false;
  out.sets_equal = equal;
  return out;
}

CallCorrespondence call_correspondence(const InterpreterSpec& i, const Program& p, const Term& q,
                                       CallCheckMode mode, const Budget& b, VarSupply& supply) {
  CallCorrespondence out;
  out.mode = mode;

  LDForest object = build_ldnf_forest(p, term_to_body(q), b, supply);
  CallSet object_calls = call_set(object);

  MetaRun meta = run_meta(i, p, q, ExtraArgsFresh{}, b, supply);
  CallSet meta_calls = call_set(meta.forest);

  if (object.truncated || meta.forest.truncated) {
    out.outcome = CheckOutcome::inconclusive;
    out.note = "a contributing tree was truncated";
    return out;
  }

  std::set<std::string> preds = object_predicates(p);
  auto solve_goals = [&](const CallSet& calls) {
    std::vector<Term> goals;
    for (const CallRecord& r : calls.records)
      if (r.atom.symbol() == i.meta_predicate && r.atom.arity() >= 1)
        goals.push_back(r.atom.args()[0]);
    return goals;
  };

  if (mode == CallCheckMode::variant_bijection) {
    std::vector<Term> meta_goals;
    for (const Term& g : solve_goals(meta_calls))
      if (g.is_compound() && preds.count(g.symbol())) insert_up_to_variance(meta_goals, g);
    out.outcome = CheckOutcome::pass;
    for (const CallRecord& r : object_calls.records) {
      if (!contains_variant(meta_goals, r.atom) && preds.count(r.atom.symbol())) {
        out.outcome = CheckOutcome::fail;
        out.failures.push_back(r.atom);
      }
    }
    for (const Term& g : meta_goals) {
      if (!object_calls.contains_variant_atom(g)) {
        out.outcome = CheckOutcome::fail;
        out.failures.push_back(Term::compound(i.meta_predicate, {g}));
      }
    }
    return out;
  }

  if (mode == CallCheckMode::instance_cover) {
    MetaRun plain = run_meta(get_interpreter("m0"), p, q, ExtraArgsFresh{}, b, supply);
    if (plain.forest.truncated) {
      out.outcome = CheckOutcome::inconclusive;
      out.note = "the plain-interpreter run was truncated";
      return out;
    }
    std::vector<Term> plain_goals = solve_goals(call_set(plain.forest));
    out.outcome = CheckOutcome::pass;
    for (const Term& g : solve_goals(meta_calls)) {
      bool covered = false, variant_found = false;
      for (const Term& pg : plain_goals) {
        if (is_instance(g, pg)) covered = true;
        if (is_variant(g, pg)) variant_found = true;
      }
      if (!covered) {
        out.outcome = CheckOutcome::fail;
        out.failures.push_back(Term::compound("solve", {g}));
      }
      if (!variant_found)
        insert_up_to_variance(out.variant_missing, Term::compound("solve", {g}));
    }
    return out;
  }

  // partition mode: every all-solve query of the meta tree corresponds, after
  // stripping solve and splitting conjunctions, to a partition of some
  // object-level query, up to renaming.
  out.outcome = CheckOutcome::pass;
  const LDTree& meta_tree = meta.forest.main();
  const LDTree& object_tree = object.main();
  for (const LDNode& n : meta_tree.nodes) {
    if (n.query.empty()) continue;
    bool all_solve = true;
    for (const Literal& l : n.query)
      all_solve &= l.positive && l.atom.symbol() == i.meta_predicate && l.atom.arity() >= 1;
    if (!all_solve) continue;
    const Term& first = n.query.front().atom.args()[0];
    if (first.is_compound() && first.symbol() == "true" && first.arity() == 0) continue;

    std::vector<std::vector<Term>> parts;
    std::vector<Term> flat;
    for (const Literal& l : n.query) {
      parts.push_back(conjunction_to_list(l.atom.args()[0]));
      for (const Term& t : parts.back()) flat.push_back(t);
    }
    bool matched = false;
    for (const LDNode& on : object_tree.nodes) {
      if (on.query.size() != flat.size() || on.query.empty()) continue;
      Term object_tuple = tupled(query_atoms(on.query));
      if (!is_variant(tupled(flat), object_tuple)) continue;
      auto renaming = unify(tupled(flat), object_tuple);
      if (!renaming) continue;
      std::vector<std::vector<Term>> renamed;
      for (const auto& part : parts) renamed.push_back(renaming->apply(part));
      if (forms_partition(renamed, renaming->apply(query_atoms(on.query)))) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.outcome = CheckOutcome::fail;
      out.failures.push_back(tupled(flat));
    }
  }
  return out;
}

PreservationReport preservation_report(const InterpreterSpec& i, const Program& p, const Term& q,
                                       const ExtraArgsMode& mode, const Budget& b,
                                       VarSupply& supply) {
  PreservationReport r;
  r.budget = b;

  LDForest object = build_ldnf_forest(p, term_to_body(q), b, supply);
  r.object_status = status_of(object);
  r.object_floundered = object.floundered;

  MetaRun meta = run_meta(i, p, q, mode, b, supply);
  r.meta_status = status_of(meta.forest);
  r.meta_floundered = meta.forest.floundered;
  r.restricted_query = meta.query.restricted_query;

  using K = TerminationStatus::Kind;
  K ok = r.object_status.kind, mk = r.meta_status.kind;
  if (ok == K::terminates && mk == K::loop_detected)
    r.verdict = PreservationReport::Verdict::violation_counterexample;
  else if (ok == K::loop_detected && mk == K::terminates)
    r.verdict = PreservationReport::Verdict::improvement_counterexample;
  else if (ok == K::budget_exhausted || mk == K::budget_exhausted)
    r.verdict = PreservationReport::Verdict::inconclusive;
  else
    r.verdict = PreservationReport::Verdict::consistent;

  r.answers = answer_correspondence(i, p, q, b, supply);
  return r;
}

std::string PreservationReport::verdict_str() const {
  switch (verdict) {
    case Verdict::consistent:
      return "consistent";
    case Verdict::violation_counterexample:
      return "violation_counterexample";
    case Verdict::improvement_counterexample:
      return "improvement_counterexample";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace metaterm
