#pragma once

#include <string>
#include <variant>

#include "metaterm/ordering.hpp"

namespace metaterm {

struct SearchFound {
  OrderingSpec spec;
};

/// A bounded-search outcome, not a proof of impossibility.
struct NoneWithinBound {
  std::string note;
};

using SearchResult = std::variant<SearchFound, NoneWithinBound>;

inline bool found(const SearchResult& r) { return std::holds_alternative<SearchFound>(r); }

/// Enumerates non-negative integer norm and level-mapping coefficients up to
/// `coeff_bound` over exactly the symbols occurring in the obligations, with
/// constraint propagation. The predicate solve keeps c = 0 and a_1 = 1.
/// Variables in obligation atoms are treated as universally quantified norm
/// parameters: a decrease must hold for every value they may take, so each
/// obligation induces one strict constraint on the constant parts and one
/// >=-constraint per variable on its coefficient parts.
struct LinearStrategy {
  int coeff_bound = 10;
  long node_limit = 20'000'000;
};

/// Backtracking over precedence constraints derived from the obligations,
/// trying all-lex statuses first and all-mul second.
struct RpoStrategy {
  int max_symbols = 12;
  long node_limit = 2'000'000;
};

SearchResult search_ordering(const ObligationSet& obs, const LinearStrategy& strategy);
SearchResult search_ordering(const ObligationSet& obs, const RpoStrategy& strategy);

}  // namespace metaterm
