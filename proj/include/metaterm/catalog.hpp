#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metaterm/encoding.hpp"
#include "metaterm/program.hpp"

namespace metaterm {

enum class EncodingKind { ce, ce_d, ground };
enum class InterpClass { vanilla, double_extended, restricted, normal, ground_rep, other };

std::string to_string(InterpClass c);

struct InterpreterSpec {
  std::string name;
  Program program;
  std::string meta_predicate = "solve";
  int solve_arity = 1;
  EncodingKind encoding = EncodingKind::ce;
  int extra_encoding_arity = 0;  // the k of clause/(2+k)
  InterpClass expected_class = InterpClass::other;
  std::string notes;
};

/// Built-in interpreters by their stable names: m0, m1, m2, m3, m4,
/// four_port, proof_tree, ex43, meta_ab, fail_body, fail_true, ap0,
/// loop_guard, foo_variant, idemo.
const InterpreterSpec& get_interpreter(const std::string& name);
std::vector<std::string> interpreter_names();

/// Interpreter clauses plus the encoded object program. For the ground
/// encoding the object program is carried as one list term instead.
struct MetaComposition {
  Program program;
  std::optional<Term> program_term;
  std::optional<SymbolTable> table;
};

MetaComposition compose_meta_program(const InterpreterSpec& i, const Program& p,
                                     VarSupply& supply);

struct ExtraArgsFresh {};
struct ExtraArgsGiven {
  std::vector<Term> terms;
};
using ExtraArgsMode = std::variant<ExtraArgsFresh, ExtraArgsGiven>;

/// solve(q, e1..en) (or the interpreter's meta predicate applied to the
/// encoded query). `restricted_query` records whether the extra arguments
/// satisfy the restricted-query shape for this interpreter.
struct MetaQuery {
  QuerySeq query;
  bool restricted_query = true;
};
MetaQuery make_meta_query(const InterpreterSpec& i, const MetaComposition& comp, const Term& q,
                          const ExtraArgsMode& mode, VarSupply& supply);

enum class RestrictedVerdict { yes, no, unknown, not_applicable };
std::string to_string(RestrictedVerdict v);

struct ClassificationReport {
  bool is_vanilla = false;
  bool is_normal_vanilla = false;
  bool is_double_extended = false;
  int solve_extra_args = 0;       // the n of solve/(1+n)
  int clause_extra_args = 0;      // the k of clause/(2+k)
  bool head_extra_args_fresh = false;  // the t_11/t_21/t_51 sequences are fresh linear
  RestrictedVerdict restricted = RestrictedVerdict::not_applicable;
  std::string restricted_condition;  // failed or undischarged condition
  std::vector<std::string> findings;

  InterpClass derived_class() const;
};

/// Shape check for the three-clause solve scheme with extra goals and extra
/// arguments, followed by the syntactic restricted conditions: extra-argument
/// sequences must be fresh linear variable sequences, extra goals must be
/// true, a fresh-variable unification not touching the meta-variables,
/// write/nl, or a call to a user predicate that cannot fail. A verdict of
/// `unknown` means a semantic condition could not be discharged
/// syntactically.
ClassificationReport classify_interpreter(const Program& interp);

/// Drops extra goals and extra arguments from a double extended interpreter,
/// leaving the plain three-clause core.
Program reduce_to_vanilla(const Program& interp);

}  // namespace metaterm
