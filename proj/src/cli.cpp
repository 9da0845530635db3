#include "metaterm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "metaterm/parser.hpp"
#include "metaterm/report.hpp"

namespace metaterm {

namespace {

constexpr int kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kCounterexample = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Ctx {
  std::string file;
  std::string query_text;
  std::vector<std::string> seed_texts;
  std::string interp_name;
  std::string kind = "ce";
  std::string strategy = "linear:10";
  std::string extra = "fresh";
  std::string given_mapping;
  std::string json_path;
  int powers = 4;
  int max_nodes = 10000;
  int max_depth = 200;

  Budget budget() const { return Budget(max_nodes, max_depth); }
};

void emit(const Ctx& ctx, const std::string& command, const Json& inputs, const Json& result,
          bool truncated) {
  if (ctx.json_path.empty()) return;
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["budgets"] = budget_json(ctx.budget());
  j["result"] = result;
  j["truncated"] = truncated;
  std::ofstream out(ctx.json_path);
  out << j.dump(2) << "\n";
}

Term object_query_term(const std::string& text, VarSupply& supply) {
  QuerySeq q = parse_query(text, supply);
  if (q.empty()) throw PreconditionError("empty query");
  return body_to_term(q);
}

ExtraArgsMode extra_mode(const Ctx& ctx, VarSupply& supply) {
  if (ctx.extra == "fresh") return ExtraArgsFresh{};
  ExtraArgsGiven given;
  std::stringstream ss(ctx.extra);
  std::string piece;
  while (std::getline(ss, piece, ';'))
    if (!piece.empty()) given.terms.push_back(parse_term(piece, supply));
  return given;
}

int cmd_check(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  Json result;
  result["clauses"] = sp.program.clauses().size();
  Json preds = Json::array();
  for (const SymKey& k : sp.program.predicates()) preds.push_back(k.str());
  result["predicates"] = preds;
  out << "ok: " << sp.program.clauses().size() << " clauses, " << preds.size()
      << " predicates\n";
  emit(ctx, "check", Json{{"file", ctx.file}}, result, false);
  return kOk;
}

int cmd_run(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  QuerySeq q = parse_query(ctx.query_text, sp.supply);
  LDForest f = build_ldnf_forest(sp.program, q, ctx.budget(), sp.supply);
  AnswerSet answers = computed_answers(f);
  TerminationStatus status = status_of(f);
  for (const auto& ans : answers.answers) {
    TermPrinter printer;
    std::string sep;
    for (const Term& t : ans) {
      out << sep << printer(t);
      sep = ", ";
    }
    out << "\n";
  }
  out << status.str() << (f.floundered ? " (floundered)" : "") << "\n";
  Json result;
  result["answers"] = to_json(answers);
  result["status"] = to_json(status);
  emit(ctx, "run", Json{{"file", ctx.file}, {"query", ctx.query_text}}, result, f.truncated);
  return kOk;
}

int cmd_tree(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  QuerySeq q = parse_query(ctx.query_text, sp.supply);
  LDForest f = build_ldnf_forest(sp.program, q, ctx.budget(), sp.supply);
  std::string dump = dump_forest(f);
  out << dump;
  Json result;
  result["dump"] = dump;
  result["status"] = to_json(status_of(f));
  emit(ctx, "tree", Json{{"file", ctx.file}, {"query", ctx.query_text}}, result, f.truncated);
  return kOk;
}

int cmd_encode(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  Json result;
  if (ctx.kind == "ce") {
    Program enc = clause_encode(sp.program);
    out << to_string(enc);
    result["facts"] = Json::array();
    for (const Clause& c : enc.clauses()) result["facts"].push_back(to_string(c));
  } else if (ctx.kind.rfind("ced:", 0) == 0) {
    int k = std::stoi(ctx.kind.substr(4));
    Program enc = clause_encode_extended(sp.program, k, FreshVars{}, sp.supply);
    out << to_string(enc);
    result["facts"] = Json::array();
    for (const Clause& c : enc.clauses()) result["facts"].push_back(to_string(c));
  } else if (ctx.kind == "ground") {
    GroundEncoding enc = ground_encode(sp.program);
    result["clauses"] = Json::array();
    for (const Term& t : enc.clause_terms) {
      out << to_string(t) << "\n";
      result["clauses"].push_back(to_string(t));
    }
    Json table;
    for (const auto& [k, i] : enc.table.predicates()) table["p(" + std::to_string(i) + ")"] = k.str();
    for (const auto& [k, i] : enc.table.functors()) table["f(" + std::to_string(i) + ")"] = k.str();
    for (const auto& [k, i] : enc.table.constants()) table["c(" + std::to_string(i) + ")"] = k;
    result["table"] = table;
  } else {
    throw CLI::ValidationError("--kind must be ce, ced:K or ground");
  }
  emit(ctx, "encode", Json{{"file", ctx.file}, {"kind", ctx.kind}}, result, false);
  return kOk;
}

int cmd_meta(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  const InterpreterSpec& interp = get_interpreter(ctx.interp_name);
  Term q = object_query_term(ctx.query_text, sp.supply);
  MetaComposition comp = compose_meta_program(interp, sp.program, sp.supply);
  MetaQuery mq = make_meta_query(interp, comp, q, extra_mode(ctx, sp.supply), sp.supply);
  LDForest f = build_ldnf_forest(comp.program, mq.query, ctx.budget(), sp.supply);
  AnswerSet answers = computed_answers(f);
  TerminationStatus status = status_of(f);
  for (const auto& ans : answers.answers) {
    TermPrinter printer;
    out << printer(ans.front()) << "\n";
  }
  out << status.str() << (f.floundered ? " (floundered)" : "") << "\n";
  if (!mq.restricted_query) out << "note: the query is not restricted\n";
  Json result;
  result["meta_query"] = to_string(mq.query);
  result["restricted_query"] = mq.restricted_query;
  result["answers"] = to_json(answers);
  result["status"] = to_json(status);
  emit(ctx, "meta",
       Json{{"file", ctx.file}, {"interp", ctx.interp_name}, {"query", ctx.query_text}}, result,
       f.truncated);
  return kOk;
}

int cmd_classify(const Ctx& ctx, std::ostream& out) {
  Program program;
  Json inputs;
  if (!ctx.interp_name.empty()) {
    program = get_interpreter(ctx.interp_name).program;
    inputs["interp"] = ctx.interp_name;
  } else if (!ctx.file.empty()) {
    program = parse_source(slurp(ctx.file), ctx.file).program;
    inputs["file"] = ctx.file;
  } else {
    throw CLI::ValidationError("classify needs FILE or --interp NAME");
  }
  ClassificationReport report = classify_interpreter(program);
  out << "class: " << to_string(report.derived_class()) << "\n";
  out << "double_extended: " << (report.is_double_extended ? "yes" : "no") << "\n";
  out << "restricted: " << to_string(report.restricted);
  if (!report.restricted_condition.empty()) out << " (" << report.restricted_condition << ")";
  out << "\n";
  for (const std::string& f : report.findings) out << "  - " << f << "\n";
  emit(ctx, "classify", inputs, to_json(report), false);
  return kOk;
}

int cmd_analyze(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  std::vector<QuerySeq> seeds;
  for (const std::string& s : ctx.seed_texts) seeds.push_back(parse_query(s, sp.supply));
  if (seeds.empty()) throw CLI::ValidationError("analyze needs at least one -q seed");
  ObligationSet obs = decrease_obligations(sp.program, seeds, ctx.budget(), sp.supply);
  out << obs.obligations.size() << " obligations (" << (obs.complete ? "complete" : "truncated")
      << ")\n";

  Json result;
  result["obligations"] = to_json(obs);

  if (!ctx.given_mapping.empty()) {
    OrderingSpec spec = ordering_from_json(Json::parse(slurp(ctx.given_mapping)));
    ObligationReport report = check_obligations(spec, obs);
    out << "given mapping: " << report.verdict_str() << " (" << report.satisfied << "/"
        << report.total << ")\n";
    result["check"] = to_json(report);
    emit(ctx, "analyze", Json{{"file", ctx.file}, {"given_mapping", ctx.given_mapping}}, result,
         !obs.complete);
    return report.verdict == ObligationReport::Verdict::counterexample ? kCounterexample : kOk;
  }

  SearchResult search = [&]() -> SearchResult {
    if (ctx.strategy.rfind("linear", 0) == 0) {
      LinearStrategy st;
      auto colon = ctx.strategy.find(':');
      if (colon != std::string::npos) st.coeff_bound = std::stoi(ctx.strategy.substr(colon + 1));
      return search_ordering(obs, st);
    }
    if (ctx.strategy == "rpo") return search_ordering(obs, RpoStrategy{});
    throw CLI::ValidationError("--strategy must be linear:BOUND or rpo");
  }();

  if (found(search)) {
    const OrderingSpec& spec = std::get<SearchFound>(search).spec;
    ObligationReport report = check_obligations(spec, obs);
    out << "found ordering; recheck: " << report.verdict_str() << "\n";
    result["found"] = to_json(spec);
    result["check"] = to_json(report);
  } else {
    const auto& none = std::get<NoneWithinBound>(search);
    out << "none within bound: " << none.note << "\n";
    result["none_within_bound"] = none.note;
  }
  emit(ctx, "analyze", Json{{"file", ctx.file}, {"strategy", ctx.strategy}}, result,
       !obs.complete);
  return kOk;
}

int cmd_compare(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  const InterpreterSpec& interp = get_interpreter(ctx.interp_name);
  Term q = object_query_term(ctx.query_text, sp.supply);
  PreservationReport report =
      preservation_report(interp, sp.program, q, extra_mode(ctx, sp.supply), ctx.budget(),
                          sp.supply);
  out << "object: " << report.object_status.str() << "\n";
  out << "meta:   " << report.meta_status.str() << "\n";
  out << "answers: sound " << to_string(report.answers.sound) << ", complete "
      << to_string(report.answers.complete) << "\n";
  out << "verdict: " << report.verdict_str() << "\n";
  emit(ctx, "compare",
       Json{{"file", ctx.file}, {"interp", ctx.interp_name}, {"query", ctx.query_text}},
       to_json(report),
       report.object_status.kind == TerminationStatus::Kind::budget_exhausted ||
           report.meta_status.kind == TerminationStatus::Kind::budget_exhausted);
  return report.counterexample() ? kCounterexample : kOk;
}

int cmd_semantics(const Ctx& ctx, std::ostream& out) {
  SourceProgram sp = parse_source(slurp(ctx.file), ctx.file);
  Json result;
  Json powers = Json::array();
  for (int n = 1; n <= ctx.powers; ++n) {
    PiInterpretation p = tpi_power(sp.program, n, sp.supply);
    out << "power " << n << ": " << p.atoms.size() << " atoms\n";
    powers.push_back(to_json(p));
  }
  result["powers"] = powers;
  OSemantics o = o_semantics_approx(sp.program, ctx.budget(), sp.supply);
  out << "computed-answer approximation: " << o.interpretation.atoms.size() << " atoms ("
      << (o.complete ? "complete" : "truncated") << ")\n";
  result["o_semantics"] = to_json(o.interpretation);
  result["o_complete"] = o.complete;
  emit(ctx, "semantics", Json{{"file", ctx.file}, {"powers", ctx.powers}}, result, !o.complete);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"termination laboratory for logic meta-programs"};
  app.require_subcommand(1);
  Ctx ctx;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", ctx.max_nodes, "node budget");
    cmd->add_option("--depth", ctx.max_depth, "depth budget");
    cmd->add_option("--json", ctx.json_path, "write the machine report here");
  };

  CLI::App* check = app.add_subcommand("check", "parse and validate a program");
  check->add_option("file", ctx.file)->required();
  add_budget(check);

  CLI::App* run = app.add_subcommand("run", "answers and termination status");
  run->add_option("file", ctx.file)->required();
  run->add_option("-q,--query", ctx.query_text)->required();
  add_budget(run);

  CLI::App* tree = app.add_subcommand("tree", "dump the derivation tree");
  tree->add_option("file", ctx.file)->required();
  tree->add_option("-q,--query", ctx.query_text)->required();
  add_budget(tree);

  CLI::App* encode = app.add_subcommand("encode", "clause or ground encoding");
  encode->add_option("file", ctx.file)->required();
  encode->add_option("--kind", ctx.kind, "ce | ced:K | ground");
  add_budget(encode);

  CLI::App* meta = app.add_subcommand("meta", "run a catalog interpreter on a program");
  meta->add_option("file", ctx.file)->required();
  meta->add_option("--interp", ctx.interp_name)->required();
  meta->add_option("-q,--query", ctx.query_text)->required();
  meta->add_option("--extra", ctx.extra, "fresh | term;term;...");
  add_budget(meta);

  CLI::App* classify = app.add_subcommand("classify", "interpreter classification");
  classify->add_option("file", ctx.file);
  classify->add_option("--interp", ctx.interp_name);
  add_budget(classify);

  CLI::App* analyze = app.add_subcommand("analyze", "harvest obligations and search orderings");
  analyze->add_option("file", ctx.file)->required();
  analyze->add_option("-q,--query", ctx.seed_texts, "seed query (repeatable)");
  analyze->add_option("--strategy", ctx.strategy, "linear:BOUND | rpo");
  analyze->add_option("--given-mapping", ctx.given_mapping, "check this ordering instead");
  add_budget(analyze);

  CLI::App* compare = app.add_subcommand("compare", "preservation report");
  compare->add_option("file", ctx.file)->required();
  compare->add_option("--interp", ctx.interp_name)->required();
  compare->add_option("-q,--query", ctx.query_text)->required();
  compare->add_option("--extra", ctx.extra, "fresh | term;term;...");
  add_budget(compare);

  CLI::App* semantics = app.add_subcommand("semantics", "consequence-operator powers");
  semantics->add_option("file", ctx.file)->required();
  semantics->add_option("--powers", ctx.powers);
  add_budget(semantics);

  std::vector<const char*> argv;
  argv.push_back("metaterm");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(ctx, out);
    if (run->parsed()) return cmd_run(ctx, out);
    if (tree->parsed()) return cmd_tree(ctx, out);
    if (encode->parsed()) return cmd_encode(ctx, out);
    if (meta->parsed()) return cmd_meta(ctx, out);
    if (classify->parsed()) return cmd_classify(ctx, out);
    if (analyze->parsed()) return cmd_analyze(ctx, out);
    if (compare->parsed()) return cmd_compare(ctx, out);
    if (semantics->parsed()) return cmd_semantics(ctx, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error at " << e.line << ":" << e.column << ": " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition violation: " << e.what() << "\n";
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace metaterm
