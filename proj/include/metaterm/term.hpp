#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace metaterm {

struct ParseError : std::runtime_error {
  int line = 0, column = 0;
  ParseError(const std::string& msg, int l = 0, int c = 0)
      : std::runtime_error(msg), line(l), column(c) {}
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Source of fresh variable ids. Every draw returns a previously unissued id.
class VarSupply {
 public:
  int fresh() { return next_++; }
  void reserve_from(int id) {
    if (id >= next_) next_ = id + 1;
  }
  int peek() const { return next_; }

 private:
  int next_ = 0;
};

/// Immutable first-order term: a variable (identified by integer id, the
/// display name is cosmetic) or a compound; constants are 0-ary compounds.
class Term {
 public:
  Term() : Term(constant("[]")) {}

  static Term var(std::string name, int id) {
    auto n = std::make_shared<Node>();
    n->is_var = true;
    n->sym = std::move(name);
    n->id = id;
    return Term(std::move(n));
  }
  static Term var(VarSupply& supply, std::string name = "_G") {
    return var(std::move(name), supply.fresh());
  }
  static Term compound(std::string symbol, std::vector<Term> args) {
    auto n = std::make_shared<Node>();
    n->is_var = false;
    n->sym = std::move(symbol);
    n->args = std::move(args);
    return Term(std::move(n));
  }
  static Term constant(std::string symbol) { return compound(std::move(symbol), {}); }

  bool is_var() const { return node_->is_var; }
  bool is_compound() const { return !node_->is_var; }
  bool is_constant() const { return !node_->is_var && node_->args.empty(); }

  int var_id() const { return node_->id; }
  const std::string& var_name() const { return node_->sym; }

  const std::string& symbol() const { return node_->sym; }
  const std::vector<Term>& args() const { return node_->args; }
  int arity() const { return static_cast<int>(node_->args.size()); }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node {
    bool is_var = false;
    std::string sym;
    int id = -1;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Name/arity key for predicates and functors.
struct SymKey {
  std::string name;
  int arity = 0;
  bool operator<(const SymKey& o) const {
    if (name != o.name) return name < o.name;
    return arity < o.arity;
  }
  bool operator==(const SymKey& o) const { return name == o.name && arity == o.arity; }
  std::string str() const { return name + "/" + std::to_string(arity); }
};

inline SymKey key_of(const Term& t) { return SymKey{t.symbol(), t.arity()}; }

/// Finite variable-id -> term map, kept idempotent: no variable of the
/// domain occurs in any range term, so application is a single pass.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  size_t size() const { return bindings_.size(); }
  const std::map<int, Term>& bindings() const { return bindings_; }

  const Term* lookup(int var_id) const {
    auto it = bindings_.find(var_id);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  Term apply(const Term& t) const;
  std::vector<Term> apply(const std::vector<Term>& ts) const;

  /// Adds v -> t (t is normalized against the current map first).
  /// Returns false on occurs-check failure; the map is left unchanged then.
  bool bind(int v, const Term& t);

  /// this; other  (apply `other` after `this`), re-normalized to idempotent form.
  Substitution compose(const Substitution& other) const;

  Substitution restricted_to(const std::set<int>& vars) const;

 private:
  std::map<int, Term> bindings_;
};

/// Most general idempotent relevant unifier, with occurs check.
std::optional<Substitution> unify(const Term& a, const Term& b);

/// Simultaneous unification of two equal-length sequences.
std::optional<Substitution> unify_all(const std::vector<Term>& as, const std::vector<Term>& bs);

Term rename_apart(const Term& t, VarSupply& supply);

void collect_vars(const Term& t, std::vector<int>& out);
std::set<int> var_set(const Term& t);
bool occurs(int var_id, const Term& t);
bool is_ground(const Term& t);

/// True iff `t` equals apply(s, pattern) for some substitution s.
bool is_instance(const Term& t, const Term& pattern);

/// Equality up to a variable-renaming bijection.
bool is_variant(const Term& a, const Term& b);

/// All elements are variables, pairwise distinct, and none is in `forbidden`.
bool is_linear_fresh_sequence(const std::vector<Term>& ts, const std::set<int>& forbidden);

/// Canonical text form; re-parses to a variant-equal term. Reuse one printer
/// across related terms (a clause head and its body) so shared variables keep
/// one display name and clashing names get disambiguated consistently.
class TermPrinter {
 public:
  std::string operator()(const Term& t);

 private:
  friend struct PrinterImpl;
  std::map<int, std::string> display_;
  std::map<std::string, int> name_owner_;
};

std::string to_string(const Term& t);

/// Wraps a sequence of terms into one term for variance comparisons.
Term tupled(const std::vector<Term>& ts);

/// Membership / insertion in collections kept free of mutual variants.
bool contains_variant(const std::vector<Term>& set, const Term& t);
bool insert_up_to_variance(std::vector<Term>& set, const Term& t);

}  // namespace metaterm
