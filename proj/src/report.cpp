#include "metaterm/report.hpp"

namespace metaterm {

Json to_json(const TerminationStatus& s) {
  Json j;
  switch (s.kind) {
    case TerminationStatus::Kind::terminates:
      j["status"] = "terminates";
      j["nodes"] = s.node_count;
      break;
    case TerminationStatus::Kind::loop_detected: {
      j["status"] = "loop_detected";
      Json chain = Json::array();
      for (const Term& t : s.witness) chain.push_back(to_string(t));
      j["witness"] = chain;
      break;
    }
    case TerminationStatus::Kind::budget_exhausted:
      j["status"] = "budget_exhausted";
      break;
  }
  if (s.floundered) j["floundered"] = true;
  return j;
}

Json to_json(const AnswerSet& a) {
  Json j;
  Json arr = Json::array();
  for (const auto& ans : a.answers) {
    TermPrinter printer;
    Json one = Json::array();
    for (const Term& t : ans) one.push_back(printer(t));
    arr.push_back(one);
  }
  j["answers"] = arr;
  j["incomplete"] = a.incomplete;
  return j;
}

Json to_json(const CallSet& c) {
  Json j;
  Json arr = Json::array();
  for (const CallRecord& r : c.records) arr.push_back(to_string(r.atom));
  j["calls"] = arr;
  j["lower_approximation"] = c.lower_approximation;
  return j;
}

Json to_json(const ObligationSet& o) {
  Json j;
  Json arr = Json::array();
  for (const Obligation& ob : o.obligations) {
    TermPrinter printer;
    arr.push_back(Json{{"caller", printer(ob.caller)},
                       {"callee", printer(ob.callee)},
                       {"clause", ob.clause_index},
                       {"position", ob.body_position}});
  }
  j["obligations"] = arr;
  j["complete"] = o.complete;
  return j;
}

Json to_json(const ObligationReport& r) {
  Json j;
  j["total"] = r.total;
  j["satisfied"] = r.satisfied;
  j["verdict"] = r.verdict_str();
  Json v = Json::array();
  for (const auto& [ob, why] : r.violations) {
    TermPrinter printer;
    v.push_back(Json{{"caller", printer(ob.caller)}, {"callee", printer(ob.callee)},
                     {"reason", why}});
  }
  j["violations"] = v;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["class"] = to_string(r.derived_class());
  j["double_extended"] = r.is_double_extended;
  j["restricted"] = to_string(r.restricted);
  if (!r.restricted_condition.empty()) j["restricted_condition"] = r.restricted_condition;
  j["solve_extra_args"] = r.solve_extra_args;
  j["clause_extra_args"] = r.clause_extra_args;
  j["findings"] = r.findings;
  return j;
}

Json to_json(const AnswerCorrespondence& a) {
  Json j;
  j["sound"] = to_string(a.sound);
  j["complete"] = to_string(a.complete);
  if (a.sets_equal) j["sets_equal"] = *a.sets_equal;
  Json sf = Json::array(), cf = Json::array();
  for (const Term& t : a.sound_failures) sf.push_back(to_string(t));
  for (const Term& t : a.complete_failures) cf.push_back(to_string(t));
  j["sound_failures"] = sf;
  j["complete_failures"] = cf;
  return j;
}

Json to_json(const CallCorrespondence& c) {
  Json j;
  switch (c.mode) {
    case CallCheckMode::variant_bijection:
      j["mode"] = "variant_bijection";
      break;
    case CallCheckMode::instance_cover:
      j["mode"] = "instance_cover";
      break;
    case CallCheckMode::partition:
      j["mode"] = "partition";
      break;
  }
  j["outcome"] = to_string(c.outcome);
  Json f = Json::array(), m = Json::array();
  for (const Term& t : c.failures) f.push_back(to_string(t));
  for (const Term& t : c.variant_missing) m.push_back(to_string(t));
  j["failures"] = f;
  j["variant_missing"] = m;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const PreservationReport& r) {
  Json j;
  j["object_status"] = to_json(r.object_status);
  j["meta_status"] = to_json(r.meta_status);
  j["answers"] = to_json(r.answers);
  if (r.calls) j["calls"] = to_json(*r.calls);
  j["object_floundered"] = r.object_floundered;
  j["meta_floundered"] = r.meta_floundered;
  j["restricted_query"] = r.restricted_query;
  j["verdict"] = r.verdict_str();
  j["budgets"] = budget_json(r.budget);
  return j;
}

Json to_json(const PiInterpretation& i) {
  Json arr = Json::array();
  for (const Term& a : i.atoms) arr.push_back(to_string(a));
  return arr;
}

namespace {
Json entry_json(const LinearNorm::Entry& e) {
  Json j;
  j["c"] = e.c;
  j["a"] = e.a;
  return j;
}

LinearNorm::Entry entry_from(const Json& j) {
  LinearNorm::Entry e;
  e.c = j.at("c").get<long>();
  e.a = j.at("a").get<std::vector<long>>();
  return e;
}

SymKey key_from(const std::string& s) {
  auto slash = s.rfind('/');
  if (slash == std::string::npos) throw PreconditionError("bad symbol key: " + s);
  return SymKey{s.substr(0, slash), std::stoi(s.substr(slash + 1))};
}
}  // namespace

Json to_json(const OrderingSpec& o) {
  Json j;
  if (const auto* lm = std::get_if<LinearLevelMapping>(&o)) {
    j["kind"] = "linear";
    Json preds = Json::object(), norm = Json::object();
    for (const auto& [k, e] : lm->preds) preds[k.str()] = entry_json(e);
    for (const auto& [k, e] : lm->norm.entries()) norm[k.str()] = entry_json(e);
    j["predicates"] = preds;
    j["norm"] = norm;
    j["norm_default"] = Json{{"c", lm->norm.default_c()}, {"a", lm->norm.default_a()}};
    return j;
  }
  if (const auto* fx = std::get_if<FixedNormSpec>(&o)) {
    j["kind"] = "fixed_norm";
    j["norm"] = fx->kind == FixedNormSpec::Kind::term_size ? "term_size" : "list_length";
    Json args = Json::object();
    for (const auto& [k, i] : fx->arg_for) args[k.str()] = i;
    j["argument"] = args;
    return j;
  }
  const RpoSpec& rpo = std::get<RpoSpec>(o);
  j["kind"] = "rpo";
  Json prec = Json::array();
  for (const SymKey& k : rpo.precedence_order()) prec.push_back(k.str());
  j["precedence"] = prec;
  j["status"] = rpo.default_status == RpoSpec::Status::lex ? "lex" : "mul";
  return j;
}

OrderingSpec ordering_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    LinearLevelMapping lm;
    long dc = 0, da = 0;
    if (j.contains("norm_default")) {
      dc = j["norm_default"].at("c").get<long>();
      da = j["norm_default"].at("a").get<long>();
    }
    lm.norm = LinearNorm(dc, da);
    for (const auto& [k, v] : j.at("predicates").items())
      lm.preds[key_from(k)] = entry_from(v);
    for (const auto& [k, v] : j.at("norm").items()) {
      LinearNorm::Entry e = entry_from(v);
      lm.norm.set(key_from(k), e.c, e.a);
    }
    return lm;
  }
  if (kind == "fixed_norm") {
    FixedNormSpec fx;
    fx.kind = j.at("norm").get<std::string>() == "list_length" ? FixedNormSpec::Kind::list_length
                                                               : FixedNormSpec::Kind::term_size;
    if (j.contains("argument"))
      for (const auto& [k, v] : j.at("argument").items()) fx.arg_for[key_from(k)] = v.get<int>();
    return fx;
  }
  if (kind == "rpo") {
    RpoSpec rpo;
    rpo.default_status =
        j.value("status", "lex") == "mul" ? RpoSpec::Status::mul : RpoSpec::Status::lex;
    auto prec = j.at("precedence").get<std::vector<std::string>>();
    int rank = static_cast<int>(prec.size());
    for (const std::string& s : prec) rpo.rank[key_from(s)] = rank--;
    return rpo;
  }
  throw PreconditionError("unknown ordering kind: " + kind);
}

Json budget_json(const Budget& b) {
  return Json{{"max_nodes", b.max_nodes}, {"max_depth", b.max_depth}};
}

}  // namespace metaterm
