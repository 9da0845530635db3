#include "metaterm/engine.hpp"

#include <algorithm>
#include <sstream>

namespace metaterm {

namespace {

bool is_key(const Term& a, const char* name, int arity) {
  return a.is_compound() && a.symbol() == name && a.arity() == arity;
}

}  // namespace

bool is_builtin(const Term& atom) {
  return is_key(atom, "true", 0) || is_key(atom, "fail", 0) || is_key(atom, "=", 2) ||
         is_key(atom, "\\=", 2) || is_key(atom, "write", 1) || is_key(atom, "nl", 0);
}

bool LDTree::has_success() const {
  for (const LDNode& n : nodes)
    if (n.leaf == LeafKind::success) return true;
  return false;
}

std::vector<StepResult> ld_step(const QuerySeq& q, const Program& p, VarSupply& supply) {
  if (q.empty()) throw PreconditionError("ld_step on an empty query");
  const Literal& sel = q.front();
  if (!sel.positive)
    throw PreconditionError("ld_step selected a negative literal; use the LDNF forest");
  QuerySeq rest(q.begin() + 1, q.end());
  std::vector<StepResult> out;
  const Term& a = sel.atom;

  if (is_key(a, "true", 0) || is_key(a, "write", 1) || is_key(a, "nl", 0)) {
    out.push_back(StepResult{std::nullopt, Substitution{}, rest});
    return out;
  }
  if (is_key(a, "fail", 0)) return out;
  if (is_key(a, "=", 2)) {
    if (auto u = unify(a.args()[0], a.args()[1])) {
      QuerySeq r;
      for (const Literal& l : rest) r.push_back(Literal{l.positive, u->apply(l.atom)});
      out.push_back(StepResult{std::nullopt, *u, std::move(r)});
    }
    return out;
  }
  if (is_key(a, "\\=", 2)) {
    if (!unify(a.args()[0], a.args()[1]))
      out.push_back(StepResult{std::nullopt, Substitution{}, rest});
    return out;
  }

  const std::vector<int>* defs = p.defining(key_of(a));
  if (!defs) return out;
  for (int idx : *defs) {
    Clause rc = rename_apart(p.clauses()[idx], supply);
    auto u = unify(a, rc.head);
    if (!u) continue;
    QuerySeq r;
    for (const Literal& l : rc.body) r.push_back(Literal{l.positive, u->apply(l.atom)});
    for (const Literal& l : rest) r.push_back(Literal{l.positive, u->apply(l.atom)});
    out.push_back(StepResult{std::move(rc), *u, std::move(r)});
  }
  return out;
}

namespace {

class ForestBuilder {
 public:
  ForestBuilder(const Program& p, const Budget& b, VarSupply& supply, bool allow_negation)
      : prog_(p), budget_(b), supply_(supply), allow_negation_(allow_negation) {}

  LDForest run(const QuerySeq& root, const std::vector<Term>& extra_tracked = {}) {
    std::vector<Term> tracked = query_atoms(root);
    tracked.insert(tracked.end(), extra_tracked.begin(), extra_tracked.end());
    build_tree(root, std::nullopt, tracked);
    return std::move(forest_);
  }

 private:
  int build_tree(const QuerySeq& root, std::optional<Term> naf_root,
                 const std::vector<Term>& tracked) {
    int ti = static_cast<int>(forest_.trees.size());
    forest_.trees.emplace_back();
    forest_.trees[ti].root = root;
    forest_.trees[ti].naf_root = std::move(naf_root);

    LDNode r;
    r.query = root;
    r.origin.assign(root.size(), -1);
    r.call_parent = -1;
    r.tracked = tracked;
    if (!try_reserve()) {
      // No capacity even for the root: report an all-truncated tree.
      r.leaf = LeafKind::truncated;
      forest_.trees[ti].nodes.push_back(std::move(r));
      mark_truncated(ti);
      return ti;
    }
    forest_.trees[ti].nodes.push_back(std::move(r));

    std::vector<int> stack{0};
    while (!stack.empty()) {
      int ni = stack.back();
      stack.pop_back();
      expand(ti, ni, stack);
    }
    return ti;
  }

  bool try_reserve() {
    if (nodes_created_ >= budget_.max_nodes) return false;
    ++nodes_created_;
    return true;
  }

  void mark_truncated(int tree) {
    forest_.trees[tree].truncated = true;
    forest_.truncated = true;
  }

  // Expands one node; children are pushed in reverse so the leftmost clause
  // is explored first, matching Prolog's depth-first search.
  void expand(int ti, int ni, std::vector<int>& stack) {
    LDTree& tree = forest_.trees[ti];
    {
      LDNode& n = tree.nodes[ni];
      if (n.query.empty()) {
        n.leaf = LeafKind::success;
        return;
      }
      if (n.depth >= budget_.max_depth) {
        n.leaf = LeafKind::truncated;
        mark_truncated(ti);
        return;
      }
    }

    Literal sel = tree.nodes[ni].query.front();
    if (!sel.positive) {
      if (!allow_negation_)
        throw PreconditionError("negative literal in a definite derivation");
      handle_negation(ti, ni, stack);
      return;
    }

    std::vector<StepResult> steps;
    std::vector<int> clause_ids;
    const Term& a = sel.atom;
    QuerySeq rest(tree.nodes[ni].query.begin() + 1, tree.nodes[ni].query.end());

    if (is_key(a, "true", 0) || is_key(a, "write", 1) || is_key(a, "nl", 0)) {
      steps.push_back(StepResult{std::nullopt, Substitution{}, rest});
      clause_ids.push_back(-1);
    } else if (is_key(a, "fail", 0)) {
      // no steps
    } else if (is_key(a, "=", 2)) {
      if (auto u = unify(a.args()[0], a.args()[1])) {
        QuerySeq r;
        for (const Literal& l : rest) r.push_back(Literal{l.positive, u->apply(l.atom)});
        steps.push_back(StepResult{std::nullopt, *u, std::move(r)});
        clause_ids.push_back(-1);
      }
    } else if (is_key(a, "\\=", 2)) {
      if (!unify(a.args()[0], a.args()[1])) {
        steps.push_back(StepResult{std::nullopt, Substitution{}, rest});
        clause_ids.push_back(-1);
      }
    } else if (const std::vector<int>* defs = prog_.defining(key_of(a))) {
      for (int idx : *defs) {
        Clause rc = rename_apart(prog_.clauses()[idx], supply_);
        auto u = unify(a, rc.head);
        if (!u) continue;
        QuerySeq r;
        for (const Literal& l : rc.body) r.push_back(Literal{l.positive, u->apply(l.atom)});
        for (const Literal& l : rest) r.push_back(Literal{l.positive, u->apply(l.atom)});
        steps.push_back(StepResult{std::move(rc), *u, std::move(r)});
        clause_ids.push_back(idx);
      }
    }

    if (steps.empty()) {
      tree.nodes[ni].leaf = LeafKind::failure;
      return;
    }

    std::vector<int> created;
    for (size_t si = 0; si < steps.size(); ++si) {
      if (!try_reserve()) {
        tree.nodes[ni].leaf = LeafKind::truncated;
        mark_truncated(ti);
        break;
      }
      const StepResult& st = steps[si];
      size_t body_len = st.clause ? st.clause->body.size() : 0;

      LDNode child;
      child.query = st.resolvent;
      child.depth = tree.nodes[ni].depth + 1;
      child.parent = ni;
      child.tracked = st.mgu.apply(tree.nodes[ni].tracked);
      child.origin.reserve(st.resolvent.size());
      for (size_t j = 0; j < body_len; ++j) child.origin.push_back(ni);
      for (size_t j = 1; j < tree.nodes[ni].query.size(); ++j)
        child.origin.push_back(tree.nodes[ni].origin[j]);
      child.call_parent = child.origin.empty() ? -1 : child.origin.front();

      int ci = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(std::move(child));
      tree.nodes[ni].children.push_back(ChildEdge{clause_ids[si], st.mgu, ci});
      created.push_back(ci);
    }
    for (auto it = created.rbegin(); it != created.rend(); ++it) stack.push_back(*it);
  }

  void handle_negation(int ti, int ni, std::vector<int>& stack) {
    Term atom = forest_.trees[ti].nodes[ni].query.front().atom;
    if (!is_ground(atom)) {
      forest_.trees[ti].nodes[ni].leaf = LeafKind::floundered;
      forest_.floundered = true;
      return;
    }
    int sub = build_tree(query_of({atom}), atom, {atom});
    bool succeeded = forest_.trees[sub].has_success();
    bool sub_complete = forest_.trees[sub].complete();

    LDTree& tree = forest_.trees[ti];
    if (succeeded) {
      tree.nodes[ni].leaf = LeafKind::failure;
      return;
    }
    if (!sub_complete) {
      tree.nodes[ni].leaf = LeafKind::truncated;
      mark_truncated(ti);
      return;
    }
    if (!try_reserve()) {
      tree.nodes[ni].leaf = LeafKind::truncated;
      mark_truncated(ti);
      return;
    }
    LDNode child;
    child.query.assign(tree.nodes[ni].query.begin() + 1, tree.nodes[ni].query.end());
    child.depth = tree.nodes[ni].depth + 1;
    child.parent = ni;
    child.tracked = tree.nodes[ni].tracked;
    child.origin.assign(tree.nodes[ni].origin.begin() + 1, tree.nodes[ni].origin.end());
    child.call_parent = child.origin.empty() ? -1 : child.origin.front();
    int ci = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(std::move(child));
    tree.nodes[ni].children.push_back(ChildEdge{-1, Substitution{}, ci});
    stack.push_back(ci);
  }

  const Program& prog_;
  Budget budget_;
  VarSupply& supply_;
  bool allow_negation_;
  int nodes_created_ = 0;
  LDForest forest_;
};

}  // namespace

LDTree build_ld_tree(const Program& p, const QuerySeq& q, const Budget& b, VarSupply& supply) {
  return build_ld_tree_tracked(p, q, {}, b, supply);
}

LDTree build_ld_tree_tracked(const Program& p, const QuerySeq& q, const std::vector<Term>& extra,
                             const Budget& b, VarSupply& supply) {
  for (const Literal& l : q)
    if (!l.positive) throw PreconditionError("definite tree requested for a non-definite query");
  LDForest f = ForestBuilder(p, b, supply, false).run(q, extra);
  return std::move(f.trees.front());
}

LDForest build_ldnf_forest(const Program& p, const QuerySeq& q, const Budget& b,
                           VarSupply& supply) {
  return ForestBuilder(p, b, supply, true).run(q);
}

namespace {
void collect_answers(const LDTree& t, std::vector<std::vector<Term>>& out,
                     std::vector<Term>& seen) {
  size_t root_len = t.root.size();
  for (const LDNode& n : t.nodes) {
    if (n.leaf != LeafKind::success) continue;
    std::vector<Term> inst(n.tracked.begin(), n.tracked.begin() + root_len);
    if (insert_up_to_variance(seen, tupled(inst))) out.push_back(std::move(inst));
  }
}
}  // namespace

AnswerSet computed_answers(const LDTree& t) {
  AnswerSet s;
  std::vector<Term> seen;
  collect_answers(t, s.answers, seen);
  s.incomplete = t.truncated;
  return s;
}

AnswerSet computed_answers(const LDForest& f) {
  AnswerSet s;
  std::vector<Term> seen;
  collect_answers(f.main(), s.answers, seen);
  s.incomplete = f.truncated || f.floundered;
  return s;
}

namespace {
void collect_calls(const LDTree& t, int tree_index, bool resolve_clause_calls, CallSet& out,
                   std::vector<Term>& seen) {
  for (int ni = 0; ni < static_cast<int>(t.nodes.size()); ++ni) {
    const LDNode& n = t.nodes[ni];
    if (n.query.empty()) continue;
    const Literal& sel = n.query.front();
    if (!sel.positive) continue;  // the subsidiary tree records the atom as its root
    const Term& a = sel.atom;
    if (is_builtin(a)) continue;
    if (resolve_clause_calls && a.symbol() == "clause") {
      for (const ChildEdge& e : n.children) {
        Term inst = e.mgu.apply(a);
        if (insert_up_to_variance(seen, inst))
          out.records.push_back(CallRecord{inst, tree_index, ni});
      }
      continue;
    }
    if (insert_up_to_variance(seen, a)) out.records.push_back(CallRecord{a, tree_index, ni});
  }
}
}  // namespace

bool CallSet::contains_variant_atom(const Term& a) const {
  for (const CallRecord& r : records)
    if (is_variant(r.atom, a)) return true;
  return false;
}

std::vector<Term> CallSet::atoms() const {
  std::vector<Term> out;
  out.reserve(records.size());
  for (const CallRecord& r : records) out.push_back(r.atom);
  return out;
}

CallSet call_set(const LDTree& t, bool resolve_clause_calls) {
  CallSet out;
  std::vector<Term> seen;
  collect_calls(t, 0, resolve_clause_calls, out, seen);
  out.lower_approximation = t.truncated;
  return out;
}

CallSet call_set(const LDForest& f, bool resolve_clause_calls) {
  CallSet out;
  std::vector<Term> seen;
  for (int ti = 0; ti < static_cast<int>(f.trees.size()); ++ti)
    collect_calls(f.trees[ti], ti, resolve_clause_calls, out, seen);
  out.lower_approximation = f.truncated;
  return out;
}

ObligationSet decrease_obligations(const Program& p, const std::vector<QuerySeq>& seeds,
                                   const Budget& b, VarSupply& supply) {
  ObligationSet out;
  DependencyGraph graph = dependency_relations(p);

  std::vector<Term> calls;
  for (const QuerySeq& seed : seeds) {
    for (const Literal& l : seed)
      if (!l.positive) throw PreconditionError("obligation seeds must be definite");
    LDTree t = build_ld_tree(p, seed, b, supply);
    if (t.truncated) out.complete = false;
    for (const CallRecord& r : call_set(t, false).records)
      insert_up_to_variance(calls, r.atom);
  }

  std::vector<Term> seen_pairs;
  for (const Term& caller : calls) {
    if (is_builtin(caller)) continue;
    const std::vector<int>* defs = p.defining(key_of(caller));
    if (!defs) continue;
    SymKey caller_key = key_of(caller);
    for (int ci : *defs) {
      Clause rc = rename_apart(p.clauses()[ci], supply);
      auto theta = unify(caller, rc.head);
      if (!theta) continue;
      for (size_t i = 0; i < rc.body.size(); ++i) {
        const Literal& bi = rc.body[i];
        if (!bi.positive) continue;
        if (!graph.mutually_recursive(caller_key, key_of(bi.atom))) continue;

        QuerySeq prefix;
        for (size_t j = 0; j < i; ++j)
          prefix.push_back(Literal{rc.body[j].positive, theta->apply(rc.body[j].atom)});
        Term bi_theta = theta->apply(bi.atom);

        // one callee per computed answer of the prefix, read off the tracked copy
        std::vector<Term> callees;
        bool prefix_truncated = false;
        if (prefix.empty()) {
          callees.push_back(bi_theta);
        } else {
          bool has_negation = false;
          for (const Literal& l : prefix) has_negation |= !l.positive;
          if (has_negation) {
            LDForest f = ForestBuilder(p, b, supply, true).run(prefix, {bi_theta});
            prefix_truncated = f.truncated || f.floundered;
            for (const LDNode& n : f.main().nodes)
              if (n.leaf == LeafKind::success) callees.push_back(n.tracked.back());
          } else {
            LDTree t = build_ld_tree_tracked(p, prefix, {bi_theta}, b, supply);
            prefix_truncated = t.truncated;
            for (const LDNode& n : t.nodes)
              if (n.leaf == LeafKind::success) callees.push_back(n.tracked.back());
          }
        }
        if (prefix_truncated) out.complete = false;

        for (const Term& callee : callees) {
          Term pair = Term::compound("$ob", {caller, callee});
          if (insert_up_to_variance(seen_pairs, pair))
            out.obligations.push_back(Obligation{caller, callee, ci, static_cast<int>(i)});
        }
      }
    }
  }
  return out;
}

namespace {

bool find_loop(const LDTree& t, std::vector<Term>& witness) {
  for (int ni = 0; ni < static_cast<int>(t.nodes.size()); ++ni) {
    const LDNode& n = t.nodes[ni];
    if (n.query.empty() || !n.query.front().positive) continue;
    const Term& atom = n.query.front().atom;
    if (is_builtin(atom)) continue;
    int anc = n.call_parent;
    while (anc >= 0) {
      const LDNode& m = t.nodes[anc];
      if (!m.query.empty() && m.query.front().positive &&
          is_variant(m.query.front().atom, atom)) {
        std::vector<Term> chain;
        int cur = ni;
        while (cur != anc) {
          chain.push_back(t.nodes[cur].query.front().atom);
          cur = t.nodes[cur].call_parent;
        }
        chain.push_back(m.query.front().atom);
        std::reverse(chain.begin(), chain.end());
        witness = std::move(chain);
        return true;
      }
      anc = m.call_parent;
    }
  }
  return false;
}

TerminationStatus status_common(const std::vector<LDTree>& trees, bool truncated,
                                bool floundered) {
  TerminationStatus s;
  s.floundered = floundered;
  int total = 0;
  for (const LDTree& t : trees) total += static_cast<int>(t.nodes.size());
  s.node_count = total;
  if (!truncated) {
    s.kind = TerminationStatus::Kind::terminates;
    return s;
  }
  for (const LDTree& t : trees) {
    if (find_loop(t, s.witness)) {
      s.kind = TerminationStatus::Kind::loop_detected;
      return s;
    }
  }
  s.kind = TerminationStatus::Kind::budget_exhausted;
  return s;
}

}  // namespace

TerminationStatus status_of(const LDTree& t) {
  std::vector<LDTree> one{t};
  return status_common(one, t.truncated, false);
}

TerminationStatus status_of(const LDForest& f) {
  return status_common(f.trees, f.truncated, f.floundered);
}

TerminationStatus termination_status(const Program& p, const QuerySeq& q, const Budget& b,
                                     VarSupply& supply) {
  LDTree t = build_ld_tree(p, q, b, supply);
  return status_of(t);
}

TerminationStatus termination_status_ldnf(const Program& p, const QuerySeq& q, const Budget& b,
                                          VarSupply& supply) {
  LDForest f = build_ldnf_forest(p, q, b, supply);
  return status_of(f);
}

std::string TerminationStatus::str() const {
  switch (kind) {
    case Kind::terminates:
      return "terminates(" + std::to_string(node_count) + ")";
    case Kind::loop_detected:
      return "loop_detected";
    case Kind::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {
const char* leaf_name(const LDNode& n) {
  switch (n.leaf) {
    case LeafKind::inner:
      return "inner";
    case LeafKind::success:
      return "success";
    case LeafKind::failure:
      return "failure";
    case LeafKind::truncated:
      return "truncated";
    case LeafKind::floundered:
      return "floundered";
  }
  return "?";
}

void dump_node(const LDTree& t, int ni, std::ostringstream& os) {
  const LDNode& n = t.nodes[ni];
  for (int i = 0; i < n.depth; ++i) os << "  ";
  os << n.depth << " " << leaf_name(n) << " ";
  os << (n.query.empty() ? std::string("<empty>") : to_string(n.query));
  os << "\n";
  for (const ChildEdge& e : n.children) dump_node(t, e.child, os);
}
}  // namespace

std::string dump_tree(const LDTree& t) {
  std::ostringstream os;
  dump_node(t, 0, os);
  return os.str();
}

std::string dump_forest(const LDForest& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.trees.size(); ++i) {
    if (f.trees[i].naf_root)
      os << "subsidiary tree for " << to_string(*f.trees[i].naf_root) << ":\n";
    else if (i == 0)
      os << "main tree:\n";
    dump_node(f.trees[i], 0, os);
  }
  if (f.floundered) os << "floundered\n";
  return os.str();
}

}  // namespace metaterm
