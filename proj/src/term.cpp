#include "metaterm/term.hpp"

#include <algorithm>
#include <sstream>

namespace metaterm {

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->is_var != other.node_->is_var) return false;
  if (node_->is_var) return node_->id == other.node_->id;
  if (node_->sym != other.node_->sym) return false;
  if (node_->args.size() != other.node_->args.size()) return false;
  for (size_t i = 0; i < node_->args.size(); ++i)
    if (node_->args[i] != other.node_->args[i]) return false;
  return true;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_var()) {
    const Term* bound = lookup(t.var_id());
    return bound ? *bound : t;
  }
  if (t.is_constant() || bindings_.empty()) return t;
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    if (args.back() != a) changed = true;
  }
  if (!changed) return t;
  return Term::compound(t.symbol(), std::move(args));
}

std::vector<Term> Substitution::apply(const std::vector<Term>& ts) const {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(apply(t));
  return out;
}

namespace {
Term substitute_one(const Term& t, int v, const Term& replacement) {
  if (t.is_var()) return t.var_id() == v ? replacement : t;
  if (t.is_constant()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute_one(a, v, replacement));
  return Term::compound(t.symbol(), std::move(args));
}
}  // namespace

bool Substitution::bind(int v, const Term& t) {
  Term norm = apply(t);
  if (norm.is_var() && norm.var_id() == v) return true;
  if (occurs(v, norm)) return false;
  for (auto& [k, rhs] : bindings_) rhs = substitute_one(rhs, v, norm);
  bindings_.emplace(v, std::move(norm));
  return true;
}

Substitution Substitution::compose(const Substitution& other) const {
  Substitution out;
  for (const auto& [v, t] : bindings_) {
    Term mapped = other.apply(t);
    if (!(mapped.is_var() && mapped.var_id() == v)) out.bindings_.emplace(v, std::move(mapped));
  }
  for (const auto& [v, t] : other.bindings_) {
    if (!out.bindings_.count(v) && !bindings_.count(v)) out.bindings_.emplace(v, t);
  }
  // Mgu chains from one derivation stay idempotent; re-normalize to be safe.
  for (int round = 0; round < 1000; ++round) {
    bool dirty = false;
    for (auto& [v, t] : out.bindings_) {
      Term again = out.apply(t);
      if (again != t) {
        t = again;
        dirty = true;
      }
    }
    if (!dirty) break;
  }
  return out;
}

Substitution Substitution::restricted_to(const std::set<int>& vars) const {
  Substitution out;
  for (const auto& [v, t] : bindings_)
    if (vars.count(v)) out.bindings_.emplace(v, t);
  return out;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution s;
  std::vector<std::pair<Term, Term>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    x = s.apply(x);
    y = s.apply(y);
    if (x.is_var()) {
      if (y.is_var() && y.var_id() == x.var_id()) continue;
      if (!s.bind(x.var_id(), y)) return std::nullopt;
      continue;
    }
    if (y.is_var()) {
      if (!s.bind(y.var_id(), x)) return std::nullopt;
      continue;
    }
    if (x.symbol() != y.symbol() || x.arity() != y.arity()) return std::nullopt;
    for (int i = x.arity() - 1; i >= 0; --i) work.emplace_back(x.args()[i], y.args()[i]);
  }
  return s;
}

std::optional<Substitution> unify_all(const std::vector<Term>& as, const std::vector<Term>& bs) {
  if (as.size() != bs.size()) return std::nullopt;
  return unify(tupled(as), tupled(bs));
}

namespace {
Term rename_walk(const Term& t, VarSupply& supply, std::map<int, Term>& fresh) {
  if (t.is_var()) {
    auto it = fresh.find(t.var_id());
    if (it != fresh.end()) return it->second;
    Term v = Term::var(t.var_name(), supply.fresh());
    fresh.emplace(t.var_id(), v);
    return v;
  }
  if (t.is_constant()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rename_walk(a, supply, fresh));
  return Term::compound(t.symbol(), std::move(args));
}
}  // namespace

Term rename_apart(const Term& t, VarSupply& supply) {
  std::map<int, Term> fresh;
  return rename_walk(t, supply, fresh);
}

void collect_vars(const Term& t, std::vector<int>& out) {
  if (t.is_var()) {
    out.push_back(t.var_id());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<int> var_set(const Term& t) {
  std::vector<int> vs;
  collect_vars(t, vs);
  return std::set<int>(vs.begin(), vs.end());
}

bool occurs(int var_id, const Term& t) {
  if (t.is_var()) return t.var_id() == var_id;
  for (const Term& a : t.args())
    if (occurs(var_id, a)) return true;
  return false;
}

bool is_ground(const Term& t) {
  if (t.is_var()) return false;
  for (const Term& a : t.args())
    if (!is_ground(a)) return false;
  return true;
}

namespace {
bool match(const Term& t, const Term& pattern, std::map<int, Term>& binding) {
  if (pattern.is_var()) {
    auto it = binding.find(pattern.var_id());
    if (it != binding.end()) return it->second == t;
    binding.emplace(pattern.var_id(), t);
    return true;
  }
  if (t.is_var()) return false;
  if (t.symbol() != pattern.symbol() || t.arity() != pattern.arity()) return false;
  for (int i = 0; i < t.arity(); ++i)
    if (!match(t.args()[i], pattern.args()[i], binding)) return false;
  return true;
}

bool variant_walk(const Term& a, const Term& b, std::map<int, int>& ab, std::map<int, int>& ba) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    auto ita = ab.find(a.var_id());
    auto itb = ba.find(b.var_id());
    if (ita == ab.end() && itb == ba.end()) {
      ab.emplace(a.var_id(), b.var_id());
      ba.emplace(b.var_id(), a.var_id());
      return true;
    }
    return ita != ab.end() && itb != ba.end() && ita->second == b.var_id() &&
           itb->second == a.var_id();
  }
  if (a.symbol() != b.symbol() || a.arity() != b.arity()) return false;
  for (int i = 0; i < a.arity(); ++i)
    if (!variant_walk(a.args()[i], b.args()[i], ab, ba)) return false;
  return true;
}
}  // namespace

bool is_instance(const Term& t, const Term& pattern) {
  std::map<int, Term> binding;
  return match(t, pattern, binding);
}

bool is_variant(const Term& a, const Term& b) {
  std::map<int, int> ab, ba;
  return variant_walk(a, b, ab, ba);
}

bool is_linear_fresh_sequence(const std::vector<Term>& ts, const std::set<int>& forbidden) {
  std::set<int> seen;
  for (const Term& t : ts) {
    if (!t.is_var()) return false;
    if (forbidden.count(t.var_id())) return false;
    if (!seen.insert(t.var_id()).second) return false;
  }
  return true;
}

namespace {

bool plain_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::islower(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool numeric_symbol(const std::string& s) {
  if (s.empty()) return false;
  bool dot = false;
  for (char c : s) {
    if (c == '.') {
      if (dot) return false;
      dot = true;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return std::isdigit(static_cast<unsigned char>(s.front())) &&
         std::isdigit(static_cast<unsigned char>(s.back()));
}

}  // namespace

struct PrinterImpl {
  TermPrinter& state;

  // Distinct ids sharing a display name get the id appended.
  std::string var_name(const Term& v) {
    auto it = state.display_.find(v.var_id());
    if (it != state.display_.end()) return it->second;
    std::string base = v.var_name().empty() ? "_G" : v.var_name();
    std::string name = base;
    auto owner = state.name_owner_.find(base);
    if (owner != state.name_owner_.end() && owner->second != v.var_id())
      name = base + "_" + std::to_string(v.var_id());
    else
      state.name_owner_.emplace(base, v.var_id());
    state.display_.emplace(v.var_id(), name);
    return name;
  }

  void atom_symbol(std::ostream& os, const std::string& s) {
    if (plain_symbol(s) || numeric_symbol(s) || s == "[]" || s == "!") {
      os << s;
      return;
    }
    os << '\'';
    for (char c : s) {
      if (c == '\'' || c == '\\') os << '\\';
      os << c;
    }
    os << '\'';
  }

  void print(std::ostream& os, const Term& t) {
    if (t.is_var()) {
      os << var_name(t);
      return;
    }
    if (t.symbol() == "." && t.arity() == 2) {
      os << '[';
      print(os, t.args()[0]);
      Term tail = t.args()[1];
      while (tail.is_compound() && tail.symbol() == "." && tail.arity() == 2) {
        os << ", ";
        print(os, tail.args()[0]);
        tail = tail.args()[1];
      }
      if (!(tail.is_compound() && tail.symbol() == "[]" && tail.arity() == 0)) {
        os << '|';
        print(os, tail);
      }
      os << ']';
      return;
    }
    if (t.symbol() == "," && t.arity() == 2) {
      os << '(';
      print(os, t.args()[0]);
      Term rest = t.args()[1];
      while (rest.is_compound() && rest.symbol() == "," && rest.arity() == 2) {
        os << ", ";
        print(os, rest.args()[0]);
        rest = rest.args()[1];
      }
      os << ", ";
      print(os, rest);
      os << ')';
      return;
    }
    if (t.symbol() == ":-" && t.arity() == 2) {
      os << '(';
      print(os, t.args()[0]);
      os << " :- ";
      print(os, t.args()[1]);
      os << ')';
      return;
    }
    if ((t.symbol() == "=" || t.symbol() == "\\=") && t.arity() == 2) {
      print(os, t.args()[0]);
      os << ' ' << t.symbol() << ' ';
      print(os, t.args()[1]);
      return;
    }
    atom_symbol(os, t.symbol());
    if (t.arity() > 0) {
      os << '(';
      for (int i = 0; i < t.arity(); ++i) {
        if (i) os << ", ";
        print(os, t.args()[i]);
      }
      os << ')';
    }
  }
};

std::string TermPrinter::operator()(const Term& t) {
  std::ostringstream os;
  PrinterImpl{*this}.print(os, t);
  return os.str();
}

std::string to_string(const Term& t) {
  TermPrinter p;
  return p(t);
}

Term tupled(const std::vector<Term>& ts) { return Term::compound("$tuple", ts); }

bool contains_variant(const std::vector<Term>& set, const Term& t) {
  for (const Term& u : set)
    if (is_variant(u, t)) return true;
  return false;
}

bool insert_up_to_variance(std::vector<Term>& set, const Term& t) {
  if (contains_variant(set, t)) return false;
  set.push_back(t);
  return true;
}

}  // namespace metaterm
