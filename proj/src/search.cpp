#include "metaterm/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace metaterm {

namespace {

// ---------------------------------------------------------------------------
// Linear search: polynomials over coefficient variables.
// ---------------------------------------------------------------------------

using Monomial = std::vector<int>;  // sorted coefficient-variable ids

struct Poly {
  std::map<Monomial, long> terms;

  void add(const Monomial& m, long k) {
    if (k == 0) return;
    auto [it, fresh] = terms.emplace(m, k);
    if (!fresh) {
      it->second += k;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add_poly(const Poly& p, long scale = 1) {
    for (const auto& [m, k] : p.terms) add(m, k * scale);
  }
  Poly times_var(int v) const {
    Poly out;
    for (const auto& [m, k] : terms) {
      Monomial m2 = m;
      m2.insert(std::lower_bound(m2.begin(), m2.end(), v), v);
      out.terms.emplace(std::move(m2), k);
    }
    return out;
  }
  static Poly constant(long k) {
    Poly p;
    p.add({}, k);
    return p;
  }
};

// Level value of an atom as a polynomial in the searched coefficients, split
// into a constant part and one slope polynomial per (universally read) term
// variable.
struct LevelExpr {
  Poly konst;
  std::map<int, Poly> slope;

  void add_scaled(const LevelExpr& e, int coeff_var) {
    konst.add_poly(e.konst.times_var(coeff_var));
    for (const auto& [v, p] : e.slope) {
      Poly scaled = p.times_var(coeff_var);
      slope[v].add_poly(scaled);
    }
  }
  void add_fixed(const LevelExpr& e, long k) {
    konst.add_poly(e.konst, k);
    for (const auto& [v, p] : e.slope) slope[v].add_poly(p, k);
  }
};

struct CoeffVar {
  SymKey sym;
  int slot;  // 0 = additive constant, i >= 1 = argument coefficient
  bool is_pred;
};

class LinearSpace {
 public:
  explicit LinearSpace(const ObligationSet& obs) {
    for (const Obligation& ob : obs.obligations) {
      scan_pred(ob.caller);
      scan_pred(ob.callee);
    }
    for (const Obligation& ob : obs.obligations) {
      LevelExpr lhs = level(ob.caller);
      LevelExpr rhs = level(ob.callee);
      Constraint c;
      c.strict = true;
      c.diff = diff(lhs.konst, rhs.konst);
      constraints_.push_back(std::move(c));
      std::set<int> vars;
      for (const auto& [v, p] : lhs.slope) vars.insert(v);
      for (const auto& [v, p] : rhs.slope) vars.insert(v);
      for (int v : vars) {
        Constraint s;
        s.strict = false;
        Poly l = lhs.slope.count(v) ? lhs.slope.at(v) : Poly{};
        Poly r = rhs.slope.count(v) ? rhs.slope.at(v) : Poly{};
        s.diff = diff(l, r);
        constraints_.push_back(std::move(s));
      }
      caller_keys_.push_back(atom_key(ob.caller));
      callee_keys_.push_back(atom_key(ob.callee));
    }
  }

  struct Constraint {
    std::map<Monomial, long> diff;  // lhs - rhs; need > 0 (strict) or >= 0
    bool strict = false;
  };

  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<CoeffVar>& vars() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  size_t obligation_count() const { return caller_keys_.size(); }
  const Poly& atom_poly(int key) const { return atom_polys_[key]; }
  int caller_key(size_t ob) const { return caller_keys_[ob]; }
  int callee_key(size_t ob) const { return callee_keys_[ob]; }

 private:
  static std::map<Monomial, long> diff(const Poly& l, const Poly& r) {
    Poly d = l;
    d.add_poly(r, -1);
    return d.terms;
  }

  void scan_pred(const Term& atom) {
    ensure_pred(key_of(atom));
    for (const Term& a : atom.args()) scan_fun(a);
  }
  void scan_fun(const Term& t) {
    if (t.is_var()) return;
    ensure_fun(key_of(t));
    for (const Term& a : t.args()) scan_fun(a);
  }

  int ensure_var(const SymKey& k, int slot, bool is_pred) {
    auto key = std::make_tuple(k, slot, is_pred);
    auto it = var_ids_.find(key);
    if (it != var_ids_.end()) return it->second;
    int id = static_cast<int>(vars_.size());
    vars_.push_back(CoeffVar{k, slot, is_pred});
    var_ids_.emplace(key, id);
    return id;
  }
  void ensure_pred(const SymKey& k) {
    if (k.name == "solve") {
      // c fixed to 0, a_1 fixed to 1; further argument slots are searched.
      for (int i = 2; i <= k.arity; ++i) ensure_var(k, i, true);
      return;
    }
    for (int i = 0; i <= k.arity; ++i) ensure_var(k, i, true);
  }
  void ensure_fun(const SymKey& k) {
    for (int i = 0; i <= k.arity; ++i) ensure_var(k, i, false);
  }

  LevelExpr norm_expr(const Term& t) {
    if (t.is_var()) {
      LevelExpr e;
      e.slope[t.var_id()] = Poly::constant(1);
      return e;
    }
    SymKey k = key_of(t);
    LevelExpr e;
    e.konst.add({ensure_var(k, 0, false)}, 1);
    for (int i = 0; i < t.arity(); ++i) {
      LevelExpr sub = norm_expr(t.args()[i]);
      e.add_scaled(sub, ensure_var(k, i + 1, false));
    }
    return e;
  }

  LevelExpr level(const Term& atom) {
    SymKey k = key_of(atom);
    LevelExpr e;
    bool is_solve = k.name == "solve";
    if (!is_solve) e.konst.add({ensure_var(k, 0, true)}, 1);
    for (int i = 0; i < atom.arity(); ++i) {
      LevelExpr sub = norm_expr(atom.args()[i]);
      if (is_solve && i == 0)
        e.add_fixed(sub, 1);
      else
        e.add_scaled(sub, ensure_var(k, i + 1, true));
    }
    return e;
  }

  int atom_key(const Term& atom) {
    LevelExpr e = level(atom);
    atom_polys_.push_back(e.konst);
    return static_cast<int>(atom_polys_.size()) - 1;
  }

  std::vector<CoeffVar> vars_;
  std::map<std::tuple<SymKey, int, bool>, int> var_ids_;
  std::vector<Constraint> constraints_;
  std::vector<Poly> atom_polys_;
  std::vector<int> caller_keys_, callee_keys_;
};

class LinearSearch {
 public:
  LinearSearch(const ObligationSet& obs, const LinearStrategy& strategy)
      : space_(obs), bound_(strategy.coeff_bound), node_limit_(strategy.node_limit) {
    assignment_.assign(space_.var_count(), -1);
    order_ = frequency_order();
  }

  std::optional<std::vector<long>> run() {
    if (dfs(0)) return assignment_;
    return std::nullopt;
  }

  bool hit_node_limit() const { return nodes_ >= node_limit_; }

 private:
  // Coefficients that occur in slope (per-variable) constraints carry the
  // tightest requirements, so they are assigned first; within each group,
  // more frequent coefficients come earlier.
  std::vector<int> frequency_order() const {
    std::vector<long> freq(space_.var_count(), 0);
    std::vector<char> in_slope(space_.var_count(), 0);
    for (const auto& c : space_.constraints())
      for (const auto& [m, k] : c.diff)
        for (int v : m) {
          ++freq[v];
          if (!c.strict) in_slope[v] = 1;
        }
    std::vector<int> order(space_.var_count());
    for (int i = 0; i < space_.var_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (in_slope[a] != in_slope[b]) return in_slope[a] > in_slope[b];
      return freq[a] > freq[b];
    });
    return order;
  }

  long mono_min(const Monomial& m) const {
    long v = 1;
    for (int id : m) {
      long x = assignment_[id];
      if (x < 0) return 0;
      v *= x;
      if (v == 0) return 0;
    }
    return v;
  }
  long mono_max(const Monomial& m) const {
    long v = 1;
    for (int id : m) {
      long x = assignment_[id];
      v *= (x < 0 ? bound_ : x);
      if (v == 0) return 0;
    }
    return v;
  }

  // Upper bound of (lhs - rhs) over all completions of the assignment.
  long upper(const std::map<Monomial, long>& diff) const {
    long u = 0;
    for (const auto& [m, k] : diff) u += k > 0 ? k * mono_max(m) : k * mono_min(m);
    return u;
  }

  bool feasible() const {
    for (const auto& c : space_.constraints()) {
      long u = upper(c.diff);
      if (c.strict ? u < 1 : u < 0) return false;
    }
    return !has_forced_cycle();
  }

  // If two atoms' constant polynomials coincide under the current partial
  // assignment, the strict decreases between them cannot form a cycle.
  bool has_forced_cycle() const {
    std::map<std::string, int> ids;
    std::vector<std::vector<int>> adj;
    auto node = [&](int key) {
      std::string sig = signature(space_.atom_poly(key));
      auto it = ids.find(sig);
      if (it == ids.end()) {
        it = ids.emplace(sig, static_cast<int>(adj.size())).first;
        adj.emplace_back();
      }
      return it->second;
    };
    for (size_t ob = 0; ob < space_.obligation_count(); ++ob) {
      int a = node(space_.caller_key(ob));
      int b = node(space_.callee_key(ob));
      adj[a].push_back(b);
    }
    std::vector<int> state(adj.size(), 0);
    for (size_t i = 0; i < adj.size(); ++i)
      if (state[i] == 0 && cyclic(static_cast<int>(i), adj, state)) return true;
    return false;
  }

  static bool cyclic(int n, const std::vector<std::vector<int>>& adj, std::vector<int>& state) {
    state[n] = 1;
    for (int m : adj[n]) {
      if (state[m] == 1) return true;
      if (state[m] == 0 && cyclic(m, adj, state)) return true;
    }
    state[n] = 2;
    return false;
  }

  // Canonical form of a polynomial with assigned variables substituted.
  std::string signature(const Poly& p) const {
    std::map<Monomial, long> reduced;
    for (const auto& [m, k] : p.terms) {
      long c = k;
      Monomial rest;
      for (int v : m) {
        if (assignment_[v] >= 0)
          c *= assignment_[v];
        else
          rest.push_back(v);
      }
      if (c == 0) continue;
      auto [it, fresh] = reduced.emplace(rest, c);
      if (!fresh) it->second += c;
    }
    std::ostringstream os;
    for (const auto& [m, k] : reduced) {
      if (k == 0) continue;
      os << k << ':';
      for (int v : m) os << v << ',';
      os << ';';
    }
    return os.str();
  }

  bool dfs(size_t depth) {
    if (++nodes_ > node_limit_) return false;
    if (!feasible()) return false;
    if (depth == order_.size()) return true;
    int var = order_[depth];
    for (long v = 0; v <= bound_; ++v) {
      assignment_[var] = v;
      if (dfs(depth + 1)) return true;
      if (nodes_ > node_limit_) break;
    }
    assignment_[var] = -1;
    return false;
  }

  LinearSpace space_;
  long bound_;
  long node_limit_;
  long nodes_ = 0;
  std::vector<long> assignment_;
  std::vector<int> order_;
};

LinearLevelMapping mapping_from(const LinearSpace& space, const std::vector<long>& assignment) {
  LinearLevelMapping lm;
  lm.norm = LinearNorm::zeros();
  std::map<SymKey, LinearNorm::Entry> funs, preds;
  for (int i = 0; i < space.var_count(); ++i) {
    const CoeffVar& cv = space.vars()[i];
    auto& entry = cv.is_pred ? preds[cv.sym] : funs[cv.sym];
    if (entry.a.size() != static_cast<size_t>(cv.sym.arity)) entry.a.assign(cv.sym.arity, 0);
    if (cv.slot == 0)
      entry.c = assignment[i];
    else
      entry.a[cv.slot - 1] = assignment[i];
  }
  for (auto& [k, e] : preds) {
    if (k.name == "solve") {
      if (e.a.size() != static_cast<size_t>(k.arity)) e.a.assign(k.arity, 0);
      e.c = 0;
      if (k.arity >= 1) e.a[0] = 1;
    }
    lm.preds[k] = e;
  }
  for (const auto& [k, e] : funs) lm.norm.set(k, e.c, e.a);
  return lm;
}

// Ensure solve predicates present in obligations but without searched slots
// (solve/1) still get their fixed entry.
void add_fixed_solve(LinearLevelMapping& lm, const ObligationSet& obs) {
  auto touch = [&](const Term& atom) {
    SymKey k = key_of(atom);
    if (k.name != "solve") return;
    auto& e = lm.preds[k];
    if (e.a.size() != static_cast<size_t>(k.arity)) e.a.resize(k.arity, 0);
    e.c = 0;
    if (k.arity >= 1) e.a[0] = 1;
  };
  for (const Obligation& ob : obs.obligations) {
    touch(ob.caller);
    touch(ob.callee);
  }
}

// ---------------------------------------------------------------------------
// RPO search: backtracking over precedence constraints.
// ---------------------------------------------------------------------------

class PrecedenceState {
 public:
  explicit PrecedenceState(int n) : n_(n), gt_(n * n, false) {}

  bool greater(int a, int b) const { return gt_[a * n_ + b]; }

  // Adds a > b with transitive closure; fails on a contradiction.
  bool add(int a, int b) {
    if (a == b || greater(b, a)) return false;
    if (greater(a, b)) return true;
    std::vector<int> above{a}, below{b};
    for (int x = 0; x < n_; ++x) {
      if (greater(x, a)) above.push_back(x);
      if (greater(b, x)) below.push_back(x);
    }
    for (int x : above)
      for (int y : below) {
        if (x == y || greater(y, x)) return false;
        gt_[x * n_ + y] = true;
      }
    return true;
  }

 private:
  int n_;
  std::vector<char> gt_;
};

using PairSet = std::vector<std::pair<int, int>>;

class RpoSearch {
 public:
  RpoSearch(const ObligationSet& obs, RpoSpec::Status status, long node_limit)
      : status_(status), node_limit_(node_limit) {
    for (const Obligation& ob : obs.obligations) {
      collect(ob.caller);
      collect(ob.callee);
    }
    for (const Obligation& ob : obs.obligations) goals_.emplace_back(ob.caller, ob.callee);
  }

  int symbol_count() const { return static_cast<int>(symbols_.size()); }

  std::optional<RpoSpec> run() {
    PrecedenceState po(symbol_count());
    if (!solve_goals(0, po)) return std::nullopt;
    return finalize();
  }

 private:
  void collect(const Term& t) {
    if (t.is_var()) return;
    SymKey k = key_of(t);
    if (!ids_.count(k)) {
      ids_.emplace(k, static_cast<int>(symbols_.size()));
      symbols_.push_back(k);
    }
    for (const Term& a : t.args()) collect(a);
  }
  int id(const SymKey& k) const { return ids_.at(k); }

  static void push_way(std::vector<PairSet>& ways, PairSet w) {
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    for (const PairSet& e : ways)
      if (e == w) return;
    if (ways.size() < 48) ways.push_back(std::move(w));
  }

  static std::vector<PairSet> product(const std::vector<PairSet>& xs,
                                      const std::vector<PairSet>& ys) {
    std::vector<PairSet> out;
    for (const PairSet& x : xs)
      for (const PairSet& y : ys) {
        PairSet w = x;
        w.insert(w.end(), y.begin(), y.end());
        push_way(out, std::move(w));
        if (out.size() >= 48) return out;
      }
    return out;
  }

  // Requirement-sets of precedence pairs sufficient for s >rpo t.
  std::vector<PairSet> ways(const Term& s, const Term& t, const PrecedenceState& po, int depth) {
    std::vector<PairSet> out;
    if (depth > 64 || s == t) return out;
    if (t.is_var()) {
      if (!s.is_var()) push_way(out, {});
      return out;
    }
    if (s.is_var()) return out;

    for (const Term& si : s.args()) {
      if (si == t) {
        push_way(out, {});
        continue;
      }
      for (PairSet& w : ways(si, t, po, depth + 1)) push_way(out, std::move(w));
    }

    SymKey f = key_of(s), g = key_of(t);
    if (f == g) {
      std::vector<PairSet> args_ways = status_ == RpoSpec::Status::lex
                                           ? lex_ways(s.args(), t.args(), po, depth)
                                           : mul_ways(s.args(), t.args(), po, depth);
      std::vector<PairSet> all{{}};
      for (const Term& tj : t.args()) {
        all = product(all, ways(s, tj, po, depth + 1));
        if (all.empty()) break;
      }
      for (PairSet& w : product(args_ways, all)) push_way(out, std::move(w));
    } else if (!po.greater(id(g), id(f))) {
      std::vector<PairSet> base{{}};
      if (!po.greater(id(f), id(g))) base = {{{id(f), id(g)}}};
      std::vector<PairSet> all = base;
      for (const Term& tj : t.args()) {
        all = product(all, ways(s, tj, po, depth + 1));
        if (all.empty()) break;
      }
      for (PairSet& w : all) push_way(out, std::move(w));
    }
    return out;
  }

  std::vector<PairSet> lex_ways(const std::vector<Term>& ss, const std::vector<Term>& ts,
                                const PrecedenceState& po, int depth) {
    size_t n = std::min(ss.size(), ts.size());
    for (size_t i = 0; i < n; ++i) {
      if (ss[i] == ts[i]) continue;
      return ways(ss[i], ts[i], po, depth + 1);
    }
    if (ss.size() > ts.size()) return {{}};
    return {};
  }

  std::vector<PairSet> mul_ways(std::vector<Term> ss, std::vector<Term> ts,
                                const PrecedenceState& po, int depth) {
    for (auto it = ts.begin(); it != ts.end();) {
      auto match = std::find(ss.begin(), ss.end(), *it);
      if (match != ss.end()) {
        ss.erase(match);
        it = ts.erase(it);
      } else {
        ++it;
      }
    }
    if (ss.empty()) return {};
    std::vector<PairSet> all{{}};
    for (const Term& t : ts) {
      std::vector<PairSet> cover;
      for (const Term& s : ss)
        for (PairSet& w : ways(s, t, po, depth + 1)) push_way(cover, std::move(w));
      all = product(all, cover);
      if (all.empty()) return all;
    }
    return all;
  }

  bool solve_goals(size_t gi, PrecedenceState po) {
    if (++nodes_ > node_limit_) return false;
    if (gi == goals_.size()) {
      result_ = po_to_spec(po);
      return true;
    }
    for (const PairSet& w : ways(goals_[gi].first, goals_[gi].second, po, 0)) {
      PrecedenceState next = po;
      bool ok = true;
      for (const auto& [a, b] : w)
        if (!next.add(a, b)) {
          ok = false;
          break;
        }
      if (ok && solve_goals(gi + 1, next)) return true;
      if (nodes_ > node_limit_) return false;
    }
    return false;
  }

  RpoSpec po_to_spec(const PrecedenceState& po) const {
    // Linearize the partial precedence to ranks (topological order).
    int n = symbol_count();
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (po.greater(a, b)) ++indeg[b];
    std::vector<int> order;
    std::vector<char> used(n, false);
    for (int round = 0; round < n; ++round) {
      for (int x = 0; x < n; ++x) {
        if (used[x] || indeg[x] != 0) continue;
        used[x] = true;
        order.push_back(x);
        for (int b = 0; b < n; ++b)
          if (po.greater(x, b)) --indeg[b];
        break;
      }
    }
    RpoSpec spec;
    spec.default_status = status_;
    for (size_t i = 0; i < order.size(); ++i)
      spec.rank[symbols_[order[i]]] = n - static_cast<int>(i);
    return spec;
  }

  std::optional<RpoSpec> finalize() { return result_; }

  RpoSpec::Status status_;
  long node_limit_;
  long nodes_ = 0;
  std::map<SymKey, int> ids_;
  std::vector<SymKey> symbols_;
  std::vector<std::pair<Term, Term>> goals_;
  std::optional<RpoSpec> result_;
};

}  // namespace

SearchResult search_ordering(const ObligationSet& obs, const LinearStrategy& strategy) {
  if (obs.obligations.empty()) {
    LinearLevelMapping lm;
    return SearchFound{OrderingSpec{lm}};
  }
  LinearSearch search(obs, strategy);
  auto assignment = search.run();
  if (assignment) {
    LinearSpace space(obs);
    LinearLevelMapping lm = mapping_from(space, *assignment);
    add_fixed_solve(lm, obs);
    return SearchFound{OrderingSpec{lm}};
  }
  std::ostringstream note;
  note << "no linear level mapping with coefficients in [0, " << strategy.coeff_bound
       << "] over the obligation symbols";
  if (search.hit_node_limit()) note << " (search stopped at its node limit)";
  note << "; larger coefficients are not excluded";
  return NoneWithinBound{note.str()};
}

SearchResult search_ordering(const ObligationSet& obs, const RpoStrategy& strategy) {
  if (obs.obligations.empty()) return SearchFound{OrderingSpec{RpoSpec{}}};
  for (RpoSpec::Status st : {RpoSpec::Status::lex, RpoSpec::Status::mul}) {
    RpoSearch search(obs, st, strategy.node_limit);
    if (search.symbol_count() > strategy.max_symbols)
      return NoneWithinBound{"too many symbols for the precedence search (" +
                             std::to_string(search.symbol_count()) + " > " +
                             std::to_string(strategy.max_symbols) + ")"};
    if (auto spec = search.run()) {
      // The linearized total precedence must still order every obligation.
      if (check_obligations(OrderingSpec{*spec}, obs).violations.empty())
        return SearchFound{OrderingSpec{*spec}};
    }
  }
  return NoneWithinBound{"no precedence/status assignment orders every obligation"};
}

}  // namespace metaterm
