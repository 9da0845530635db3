#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metaterm/catalog.hpp"
#include "metaterm/engine.hpp"

namespace metaterm {

enum class CheckOutcome { pass, fail, inconclusive };
std::string to_string(CheckOutcome c);

/// Both directions of the computed-answer relation between an interpreted
/// run and its meta run: meta answers must instantiate object answers
/// (soundness) and object answers must instantiate meta answers obtained
/// with fresh extra arguments (completeness).
struct AnswerCorrespondence {
  CheckOutcome sound = CheckOutcome::inconclusive;
  CheckOutcome complete = CheckOutcome::inconclusive;
  std::vector<Term> sound_failures;
  std::vector<Term> complete_failures;
  std::optional<bool> sets_equal;  // variant-set equality, when both runs complete
};

AnswerCorrespondence answer_correspondence(const InterpreterSpec& i, const Program& p,
                                           const Term& q, const Budget& b, VarSupply& supply);

enum class CallCheckMode { variant_bijection, instance_cover, partition };

struct CallCorrespondence {
  CallCheckMode mode = CallCheckMode::variant_bijection;
  CheckOutcome outcome = CheckOutcome::inconclusive;
  /// variant_bijection: atoms on either side without a variant on the other.
  /// instance_cover: meta goals with no more general plain-interpreter goal.
  std::vector<Term> failures;
  /// instance_cover only: meta goals that have no variant on the plain side
  /// (they are covered, if at all, by a strictly more general goal).
  std::vector<Term> variant_missing;
  std::string note;
};

CallCorrespondence call_correspondence(const InterpreterSpec& i, const Program& p, const Term& q,
                                       CallCheckMode mode, const Budget& b, VarSupply& supply);

struct PreservationReport {
  TerminationStatus object_status;
  TerminationStatus meta_status;
  AnswerCorrespondence answers;
  std::optional<CallCorrespondence> calls;
  bool object_floundered = false;
  bool meta_floundered = false;
  bool restricted_query = true;

  enum class Verdict {
    consistent,
    violation_counterexample,    // object terminates, meta loops
    improvement_counterexample,  // meta terminates, object loops
    inconclusive
  };
  Verdict verdict = Verdict::inconclusive;
  Budget budget;

  bool counterexample() const {
    return verdict == Verdict::violation_counterexample ||
           verdict == Verdict::improvement_counterexample;
  }
  std::string verdict_str() const;
};

/// Runs both sides under the budget and cross-checks statuses, answers and
/// flounder flags. Counterexample verdicts require definite statuses on both
/// sides (a loop witness, never an exhausted budget).
PreservationReport preservation_report(const InterpreterSpec& i, const Program& p, const Term& q,
                                       const ExtraArgsMode& mode, const Budget& b,
                                       VarSupply& supply);

}  // namespace metaterm
