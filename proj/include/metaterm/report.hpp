#pragma once

#include <json.hpp>

#include "metaterm/catalog.hpp"
#include "metaterm/engine.hpp"
#include "metaterm/ordering.hpp"
#include "metaterm/preservation.hpp"
#include "metaterm/search.hpp"
#include "metaterm/semantics.hpp"

namespace metaterm {

using Json = nlohmann::json;

Json to_json(const TerminationStatus& s);
Json to_json(const AnswerSet& a);
Json to_json(const CallSet& c);
Json to_json(const ObligationSet& o);
Json to_json(const ObligationReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const AnswerCorrespondence& a);
Json to_json(const CallCorrespondence& c);
Json to_json(const PreservationReport& r);
Json to_json(const PiInterpretation& i);

/// Coefficients keyed by "symbol/arity"; rpo precedence as an ordered list.
Json to_json(const OrderingSpec& o);
OrderingSpec ordering_from_json(const Json& j);

Json budget_json(const Budget& b);

}  // namespace metaterm
