#pragma once

#include <string>
#include <vector>

#include "metaterm/program.hpp"
#include "metaterm/term.hpp"

namespace metaterm {

/// Parsed source with its variable supply; ids issued by `supply` are unique
/// across the whole parse, variables are scoped per clause.
struct SourceProgram {
  Program program;
  VarSupply supply;
  std::string path;
};

/// Accepts lowercase functors/predicates, uppercase/underscore variables,
/// `:-` clauses ending in `.`, `,` conjunction, `\+` (or not/1) negation,
/// lists, anonymous `_` (fresh per occurrence), `=` and `\=` built-ins,
/// quoted atoms, and integer/decimal constants. Cut and arithmetic are
/// rejected with a located error.
Program parse_program(const std::string& text, VarSupply& supply);
SourceProgram parse_source(const std::string& text, std::string path = "<string>");

/// One term; variables named consistently within the call.
Term parse_term(const std::string& text, VarSupply& supply);

/// One query (comma-separated literals, optional trailing dot).
QuerySeq parse_query(const std::string& text, VarSupply& supply);

}  // namespace metaterm
