#include "metaterm/ordering.hpp"

#include <algorithm>
#include <sstream>

namespace metaterm {

long LinearNorm::value(const Term& t) const {
  if (t.is_var()) return 0;
  auto it = entries_.find(key_of(t));
  long c = it != entries_.end() ? it->second.c : def_c_;
  long sum = c;
  for (int i = 0; i < t.arity(); ++i) {
    long a;
    if (it != entries_.end())
      a = i < static_cast<int>(it->second.a.size()) ? it->second.a[i] : 0;
    else
      a = def_a_;
    if (a != 0) sum += a * value(t.args()[i]);
  }
  return sum;
}

long LinearLevelMapping::value(const Term& atom) const {
  auto it = preds.find(key_of(atom));
  if (it == preds.end()) return 0;
  long sum = it->second.c;
  for (int i = 0; i < atom.arity(); ++i) {
    long a = i < static_cast<int>(it->second.a.size()) ? it->second.a[i] : 0;
    if (a != 0) sum += a * norm.value(atom.args()[i]);
  }
  return sum;
}

long FixedNormSpec::value(const Term& atom) const {
  if (atom.arity() == 0) return 0;
  int idx = 0;
  auto it = arg_for.find(key_of(atom));
  if (it != arg_for.end()) idx = it->second;
  if (idx < 0 || idx >= atom.arity()) idx = 0;
  LinearNorm n = kind == Kind::term_size ? LinearNorm::term_size() : LinearNorm::list_length();
  return n.value(atom.args()[idx]);
}

bool RpoSpec::prec_greater(const SymKey& f, const SymKey& g) const {
  auto fi = rank.find(f);
  auto gi = rank.find(g);
  if (fi == rank.end() || gi == rank.end()) return false;
  return fi->second > gi->second;
}

RpoSpec::Status RpoSpec::status_of(const SymKey& k) const {
  auto it = status.find(k);
  return it == status.end() ? default_status : it->second;
}

namespace {

bool rpo_gt(const RpoSpec& o, const Term& s, const Term& t);

bool rpo_ge(const RpoSpec& o, const Term& s, const Term& t) {
  return s == t || rpo_gt(o, s, t);
}

bool lex_greater(const RpoSpec& o, const std::vector<Term>& ss, const std::vector<Term>& ts) {
  size_t n = std::min(ss.size(), ts.size());
  for (size_t i = 0; i < n; ++i) {
    if (ss[i] == ts[i]) continue;
    return rpo_gt(o, ss[i], ts[i]);
  }
  return ss.size() > ts.size();
}

bool mul_greater(const RpoSpec& o, std::vector<Term> ss, std::vector<Term> ts) {
  // cancel syntactically equal elements pairwise
  for (auto it = ts.begin(); it != ts.end();) {
    auto match = std::find(ss.begin(), ss.end(), *it);
    if (match != ss.end()) {
      ss.erase(match);
      it = ts.erase(it);
    } else {
      ++it;
    }
  }
  if (ss.empty()) return false;
  for (const Term& t : ts) {
    bool covered = false;
    for (const Term& s : ss)
      if (rpo_gt(o, s, t)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool rpo_gt(const RpoSpec& o, const Term& s, const Term& t) {
  if (s == t) return false;
  if (t.is_var()) return !s.is_var();  // variables are minimal elements
  if (s.is_var()) return false;
  // subterm route
  for (const Term& si : s.args())
    if (rpo_ge(o, si, t)) return true;
  SymKey f = key_of(s), g = key_of(t);
  if (f == g) {
    bool args_ok = o.status_of(f) == RpoSpec::Status::lex
                       ? lex_greater(o, s.args(), t.args())
                       : mul_greater(o, s.args(), t.args());
    if (!args_ok) return false;
    for (const Term& tj : t.args())
      if (!rpo_gt(o, s, tj)) return false;
    return true;
  }
  if (o.prec_greater(f, g)) {
    for (const Term& tj : t.args())
      if (!rpo_gt(o, s, tj)) return false;
    return true;
  }
  return false;
}

}  // namespace

bool RpoSpec::greater(const Term& s, const Term& t) const { return rpo_gt(*this, s, t); }

std::vector<SymKey> RpoSpec::precedence_order() const {
  std::vector<SymKey> syms;
  for (const auto& [k, r] : rank) syms.push_back(k);
  std::sort(syms.begin(), syms.end(), [&](const SymKey& a, const SymKey& b) {
    return rank.at(a) > rank.at(b);
  });
  return syms;
}

Cmp compare(const OrderingSpec& o, const Term& a, const Term& b) {
  if (const auto* lm = std::get_if<LinearLevelMapping>(&o)) {
    if (a == b) return Cmp::equal_or_equiv;
    long va = lm->value(a), vb = lm->value(b);
    if (va > vb) return Cmp::greater;
    return va == vb ? Cmp::equal_or_equiv : Cmp::not_greater;
  }
  if (const auto* fx = std::get_if<FixedNormSpec>(&o)) {
    if (a == b) return Cmp::equal_or_equiv;
    long va = fx->value(a), vb = fx->value(b);
    if (va == vb) return Cmp::equal_or_equiv;
    return va > vb ? Cmp::greater : Cmp::not_greater;
  }
  const RpoSpec& rpo = std::get<RpoSpec>(o);
  if (a == b) return Cmp::equal_or_equiv;
  return rpo.greater(a, b) ? Cmp::greater : Cmp::not_greater;
}

namespace {
std::string explain(const OrderingSpec& o, const Term& caller, const Term& callee) {
  std::ostringstream os;
  if (const auto* lm = std::get_if<LinearLevelMapping>(&o)) {
    os << "level " << lm->value(caller) << " vs " << lm->value(callee);
  } else if (const auto* fx = std::get_if<FixedNormSpec>(&o)) {
    os << "norm " << fx->value(caller) << " vs " << fx->value(callee);
  } else {
    os << "no rpo decrease";
  }
  os << " for " << to_string(caller) << " > " << to_string(callee);
  return os.str();
}
}  // namespace

ObligationReport check_obligations(const OrderingSpec& o, const ObligationSet& obs) {
  ObligationReport r;
  r.total = static_cast<int>(obs.obligations.size());
  for (const Obligation& ob : obs.obligations) {
    if (compare(o, ob.caller, ob.callee) == Cmp::greater)
      ++r.satisfied;
    else
      r.violations.emplace_back(ob, explain(o, ob.caller, ob.callee));
  }
  if (!r.violations.empty())
    r.verdict = ObligationReport::Verdict::counterexample;
  else if (!obs.complete)
    r.verdict = ObligationReport::Verdict::inconclusive_truncated;
  else
    r.verdict = ObligationReport::Verdict::acceptable_on_sample;
  return r;
}

std::string ObligationReport::verdict_str() const {
  switch (verdict) {
    case Verdict::acceptable_on_sample:
      return "acceptable_on_sample";
    case Verdict::counterexample:
      return "counterexample";
    case Verdict::inconclusive_truncated:
      return "inconclusive_truncated";
  }
  return "?";
}

}  // namespace metaterm
