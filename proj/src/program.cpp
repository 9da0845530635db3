#include "metaterm/program.hpp"

#include <sstream>

namespace metaterm {

Clause rename_apart(const Clause& c, VarSupply& supply) {
  std::vector<Term> parts;
  parts.push_back(c.head);
  for (const Literal& l : c.body) parts.push_back(l.atom);
  Term renamed = rename_apart(tupled(parts), supply);
  Clause out;
  out.head = renamed.args()[0];
  for (size_t i = 0; i < c.body.size(); ++i)
    out.body.push_back(Literal{c.body[i].positive, renamed.args()[i + 1]});
  return out;
}

std::set<int> clause_vars(const Clause& c) {
  std::vector<int> vs;
  collect_vars(c.head, vs);
  for (const Literal& l : c.body) collect_vars(l.atom, vs);
  return std::set<int>(vs.begin(), vs.end());
}

QuerySeq query_of(std::vector<Term> atoms) {
  QuerySeq q;
  for (Term& a : atoms) q.push_back(Literal::pos(std::move(a)));
  return q;
}

std::vector<Term> query_atoms(const QuerySeq& q) {
  std::vector<Term> out;
  out.reserve(q.size());
  for (const Literal& l : q) out.push_back(l.atom);
  return out;
}

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (int i = 0; i < static_cast<int>(clauses_.size()); ++i)
    table_[key_of(clauses_[i].head)].push_back(i);
}

const std::vector<int>* Program::defining(const SymKey& pred) const {
  auto it = table_.find(pred);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<SymKey> Program::predicates() const {
  std::vector<SymKey> out;
  for (const auto& [k, v] : table_) out.push_back(k);
  return out;
}

bool Program::defines(const std::string& name) const {
  for (const auto& [k, v] : table_)
    if (k.name == name) return true;
  return false;
}

namespace {
void collect_symbols(const Term& t, std::set<SymKey>& out) {
  if (t.is_var()) return;
  out.insert(key_of(t));
  for (const Term& a : t.args()) collect_symbols(a, out);
}
}  // namespace

std::set<SymKey> Program::all_symbols() const {
  std::set<SymKey> out;
  for (const Clause& c : clauses_) {
    collect_symbols(c.head, out);
    for (const Literal& l : c.body) collect_symbols(l.atom, out);
  }
  return out;
}

Program Program::concatenated(const Program& tail) const {
  std::vector<Clause> all = clauses_;
  all.insert(all.end(), tail.clauses_.begin(), tail.clauses_.end());
  return Program(std::move(all));
}

void Program::append(Clause c) {
  table_[key_of(c.head)].push_back(static_cast<int>(clauses_.size()));
  clauses_.push_back(std::move(c));
}

DependencyGraph dependency_relations(const Program& p) {
  DependencyGraph g;
  for (const Clause& c : p.clauses()) {
    SymKey h = key_of(c.head);
    g.nodes.insert(h);
    for (const Literal& l : c.body) {
      SymKey b = key_of(l.atom);
      g.nodes.insert(b);
      g.refers_to.insert({h, b});
    }
  }
  g.depends_on = g.refers_to;
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::pair<SymKey, SymKey>> next = g.depends_on;
    for (const auto& [a, b] : g.depends_on)
      for (const auto& [c, d] : g.depends_on)
        if (b == c && next.insert({a, d}).second) grew = true;
    g.depends_on = std::move(next);
  }
  return g;
}

bool forms_partition(const std::vector<std::vector<Term>>& parts, const std::vector<Term>& whole) {
  size_t pos = 0;
  for (const auto& part : parts) {
    if (part.empty()) return false;
    for (const Term& x : part) {
      if (pos >= whole.size() || !(whole[pos] == x)) return false;
      ++pos;
    }
  }
  return pos == whole.size();
}

std::vector<Term> conjunction_to_list(const Term& t) {
  if (t.is_compound() && t.symbol() == "true" && t.arity() == 0) return {};
  std::vector<Term> out;
  Term cur = t;
  while (cur.is_compound() && cur.symbol() == "," && cur.arity() == 2) {
    out.push_back(cur.args()[0]);
    cur = cur.args()[1];
  }
  out.push_back(cur);
  return out;
}

Term list_to_conjunction(const std::vector<Term>& ts) {
  if (ts.empty()) return Term::constant("true");
  Term out = ts.back();
  for (int i = static_cast<int>(ts.size()) - 2; i >= 0; --i)
    out = Term::compound(",", {ts[i], out});
  return out;
}

Term body_to_term(const std::vector<Literal>& body) {
  std::vector<Term> parts;
  parts.reserve(body.size());
  for (const Literal& l : body)
    parts.push_back(l.positive ? l.atom : Term::compound("\\+", {l.atom}));
  return list_to_conjunction(parts);
}

std::vector<Literal> term_to_body(const Term& t) {
  std::vector<Literal> out;
  for (const Term& part : conjunction_to_list(t)) {
    if (part.is_compound() && part.symbol() == "\\+" && part.arity() == 1)
      out.push_back(Literal::neg(part.args()[0]));
    else
      out.push_back(Literal::pos(part));
  }
  return out;
}

Term make_list(const std::vector<Term>& elems) {
  Term out = Term::constant("[]");
  for (int i = static_cast<int>(elems.size()) - 1; i >= 0; --i)
    out = Term::compound(".", {elems[i], out});
  return out;
}

std::optional<std::vector<Term>> list_elements(const Term& t) {
  std::vector<Term> out;
  Term cur = t;
  while (true) {
    if (cur.is_compound() && cur.symbol() == "[]" && cur.arity() == 0) return out;
    if (cur.is_compound() && cur.symbol() == "." && cur.arity() == 2) {
      out.push_back(cur.args()[0]);
      cur = cur.args()[1];
      continue;
    }
    return std::nullopt;
  }
}

std::string to_string(const Clause& c) {
  std::ostringstream os;
  os << to_string(c.head);
  if (!c.body.empty()) {
    os << " :- ";
    for (size_t i = 0; i < c.body.size(); ++i) {
      if (i) os << ", ";
      if (!c.body[i].positive) os << "\\+ ";
      os << to_string(c.body[i].atom);
    }
  }
  os << ".";
  return os.str();
}

std::string to_string(const QuerySeq& q) {
  std::ostringstream os;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) os << ", ";
    if (!q[i].positive) os << "\\+ ";
    os << to_string(q[i].atom);
  }
  return os.str();
}

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const Clause& c : p.clauses()) os << to_string(c) << "\n";
  return os.str();
}

}  // namespace metaterm
