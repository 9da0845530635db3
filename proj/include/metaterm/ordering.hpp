#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "metaterm/engine.hpp"
#include "metaterm/term.hpp"

namespace metaterm {

/// Linear norm: ||f(t1..tn)|| = c_f + sum a_f_i * ||t_i||, coefficients
/// non-negative integers; variables contribute 0. Symbols without an entry
/// fall back to the default coefficients.
class LinearNorm {
 public:
  struct Entry {
    long c = 0;
    std::vector<long> a;
  };

  LinearNorm() = default;
  LinearNorm(long default_c, long default_a) : def_c_(default_c), def_a_(default_a) {}

  static LinearNorm term_size() { return LinearNorm(1, 1); }
  static LinearNorm list_length() {
    LinearNorm n(0, 0);
    n.set(SymKey{".", 2}, 1, {0, 1});
    return n;
  }
  static LinearNorm zeros() { return LinearNorm(0, 0); }

  void set(const SymKey& k, long c, std::vector<long> a) { entries_[k] = Entry{c, std::move(a)}; }
  const std::map<SymKey, Entry>& entries() const { return entries_; }
  long default_c() const { return def_c_; }
  long default_a() const { return def_a_; }

  long value(const Term& t) const;

 private:
  std::map<SymKey, Entry> entries_;
  long def_c_ = 1, def_a_ = 1;
};

/// |p(t1..tn)| = c_p + sum a_p_i * ||t_i|| over the attached norm.
/// Predicates without an entry map to 0.
struct LinearLevelMapping {
  std::map<SymKey, LinearNorm::Entry> preds;
  LinearNorm norm = LinearNorm::zeros();

  long value(const Term& atom) const;
};

/// A fixed norm applied to one selected argument position per predicate.
struct FixedNormSpec {
  enum class Kind { term_size, list_length };
  Kind kind = Kind::term_size;
  std::map<SymKey, int> arg_for;  // defaults to the first argument
  long value(const Term& atom) const;
};

/// Recursive path ordering generated by a strict precedence on symbols with
/// lex/mul statuses. Variables compare as minimal elements: below every
/// non-variable term, mutually incomparable. This matches checking decreases
/// on harvested call instances rather than building a rewrite order.
struct RpoSpec {
  enum class Status { lex, mul };
  std::map<SymKey, int> rank;  // higher rank = greater in the precedence
  std::map<SymKey, Status> status;
  Status default_status = Status::lex;

  bool prec_greater(const SymKey& f, const SymKey& g) const;
  Status status_of(const SymKey& k) const;
  bool greater(const Term& s, const Term& t) const;
  std::vector<SymKey> precedence_order() const;  // descending rank
};

using OrderingSpec = std::variant<LinearLevelMapping, FixedNormSpec, RpoSpec>;

enum class Cmp { greater, equal_or_equiv, not_greater };
Cmp compare(const OrderingSpec& o, const Term& a, const Term& b);

struct ObligationReport {
  enum class Verdict { acceptable_on_sample, counterexample, inconclusive_truncated };
  int total = 0;
  int satisfied = 0;
  std::vector<std::pair<Obligation, std::string>> violations;
  Verdict verdict = Verdict::acceptable_on_sample;

  bool acceptable() const { return verdict == Verdict::acceptable_on_sample; }
  std::string verdict_str() const;
};

ObligationReport check_obligations(const OrderingSpec& o, const ObligationSet& obs);

}  // namespace metaterm
