#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metaterm/program.hpp"
#include "metaterm/term.hpp"

namespace metaterm {

struct Budget {
  int max_nodes = 10000;
  int max_depth = 200;

  Budget() = default;
  Budget(int nodes, int depth) : max_nodes(nodes), max_depth(depth) {
    if (nodes <= 0 || depth <= 0) throw PreconditionError("budget must be positive");
  }
};

enum class LeafKind { inner, success, failure, truncated, floundered };

struct ChildEdge {
  int clause_index = -1;  // -1 for built-in and negation-as-failure steps
  Substitution mgu;
  int child = -1;
};

struct LDNode {
  QuerySeq query;  // instantiated remaining query; selection is leftmost
  int depth = 0;
  int parent = -1;
  int call_parent = -1;     // node whose selection introduced query[0]
  std::vector<int> origin;  // per-literal introducing node, -1 for root literals
  std::vector<Term> tracked;  // root query atoms (plus extras) under the composed mgus
  LeafKind leaf = LeafKind::inner;
  std::vector<ChildEdge> children;
};

struct LDTree {
  QuerySeq root;
  std::vector<LDNode> nodes;
  bool truncated = false;
  std::optional<Term> naf_root;  // set for subsidiary negation trees

  bool complete() const { return !truncated; }
  bool has_success() const;
};

struct LDForest {
  std::vector<LDTree> trees;  // trees[0] answers the root query
  bool floundered = false;
  bool truncated = false;

  bool complete() const { return !truncated; }
  const LDTree& main() const { return trees.front(); }
};

/// One LD resolution step: every way to resolve the selected (leftmost)
/// literal, in source clause order. Built-ins are handled before clause
/// lookup; entries without a clause come from a built-in.
struct StepResult {
  std::optional<Clause> clause;  // renamed apart
  Substitution mgu;
  QuerySeq resolvent;
};
std::vector<StepResult> ld_step(const QuerySeq& q, const Program& p, VarSupply& supply);

/// Depth-first bounded LD-tree for a definite query (negative literals are an error).
LDTree build_ld_tree(const Program& p, const QuerySeq& q, const Budget& b, VarSupply& supply);

/// As build_ld_tree, but additionally carries `extra` terms through every
/// node's `tracked` vector (after the root atoms), so success leaves expose
/// their instances under the composed answer substitution.
LDTree build_ld_tree_tracked(const Program& p, const QuerySeq& q, const std::vector<Term>& extra,
                             const Budget& b, VarSupply& supply);

/// Bounded LDNF-forest: a ground selected negative literal spawns a
/// subsidiary tree; a non-ground one flounders and abandons the branch.
LDForest build_ldnf_forest(const Program& p, const QuerySeq& q, const Budget& b, VarSupply& supply);

/// Success-leaf instances of the root query, collapsed up to variance.
struct AnswerSet {
  std::vector<std::vector<Term>> answers;  // instantiated root atoms per answer
  bool incomplete = false;
};
AnswerSet computed_answers(const LDTree& t);
AnswerSet computed_answers(const LDForest& f);

struct CallRecord {
  Term atom;
  int tree = 0;
  int node = 0;
};

/// Selected atoms collapsed up to variance. Built-in control atoms are not
/// recorded; atoms of the clause-encoding predicate are recorded once per
/// retrieved fact, under the retrieval unifier, when `resolve_clause_calls`
/// is set (the default), and verbatim otherwise.
struct CallSet {
  std::vector<CallRecord> records;
  bool lower_approximation = false;  // true when any contributing tree truncated

  bool contains_variant_atom(const Term& a) const;
  std::vector<Term> atoms() const;
};
CallSet call_set(const LDTree& t, bool resolve_clause_calls = true);
CallSet call_set(const LDForest& f, bool resolve_clause_calls = true);

/// One decrease requirement: the caller must exceed the instantiated
/// mutually recursive body atom.
struct Obligation {
  Term caller;
  Term callee;
  int clause_index = -1;
  int body_position = 0;
};

struct ObligationSet {
  std::vector<Obligation> obligations;
  bool complete = true;
};

/// Harvests calls from the seeds, resolves each against every clause of a
/// mutually recursive predicate, enumerates budget-bounded computed answers
/// of the body prefix, and emits caller/callee pairs (deduplicated up to
/// variance of the pair).
ObligationSet decrease_obligations(const Program& p, const std::vector<QuerySeq>& seeds,
                                   const Budget& b, VarSupply& supply);

struct TerminationStatus {
  enum class Kind { terminates, loop_detected, budget_exhausted };
  Kind kind = Kind::budget_exhausted;
  int node_count = 0;
  std::vector<Term> witness;  // directed derivation; last atom is a variant of the first
  bool floundered = false;

  bool terminates() const { return kind == Kind::terminates; }
  bool looping() const { return kind == Kind::loop_detected; }
  std::string str() const;
};

TerminationStatus termination_status(const Program& p, const QuerySeq& q, const Budget& b,
                                     VarSupply& supply);
TerminationStatus termination_status_ldnf(const Program& p, const QuerySeq& q, const Budget& b,
                                          VarSupply& supply);
TerminationStatus status_of(const LDTree& t);
TerminationStatus status_of(const LDForest& f);

/// Indented dump, one node per line: `<depth> <status> <query>`.
std::string dump_tree(const LDTree& t);
std::string dump_forest(const LDForest& f);

bool is_builtin(const Term& atom);

}  // namespace metaterm
