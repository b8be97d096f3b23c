#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "idpda/automaton.hpp"
#include "idpda/relation.hpp"

namespace idpda {

/// Deterministic automaton whose states are behavior relations of the
/// source automaton and whose stack symbols are (relation, left bracket)
/// pairs. Only states reachable by the worklist are built.
struct DeterminizationResult {
  Didpda automaton;
  std::vector<BehaviorRelation> state_label;                    // [det state]
  std::vector<std::pair<BehaviorRelation, Symbol>> pushed_label;  // [det stack symbol]
};

/// Builds the deterministic equivalent of `a`. The empty relation is an
/// absorbing rejecting state; a left bracket read in it pushes the full
/// relation instead of the empty one, so no stack symbol carries the empty
/// relation.
DeterminizationResult determinize(const Nidpda& a);

struct ReachabilitySummary {
  /// States occurring in some run on a well-nested prefix, ascending.
  std::vector<State> surface_states;
  /// (p, q): from p at the start of a segment some well-nested input leads to
  /// q. Only segment starts that occur in reachable runs are listed.
  std::vector<std::pair<State, State>> summary;
  /// Stack symbols pushed by some reachable left-bracket transition, ascending.
  std::vector<StackSymbol> pushed;
};

ReachabilitySummary summarize(const Didpda& d);

struct Metrics {
  std::size_t states = 0;
  std::size_t stack_symbols = 0;
  std::size_t reachable_states = 0;
  std::size_t reachable_pushed = 0;
};

Metrics metrics(const DeterminizationResult& r);

}  // namespace idpda
