#pragma once

// Saturation of pushdown reachability with summary edges, shared by
// summarize() and the product equivalence check. The engine explores a
// deterministic input-driven system given by callbacks; states and stack
// symbols are ids handed out by the caller.

#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "idpda/alphabet.hpp"
#include "idpda/automaton.hpp"

namespace idpda::detail {

struct StepSystem {
  std::function<State(State, Symbol)> neutral;
  std::function<Push(State, Symbol)> open;
  std::function<State(State, Symbol, StackSymbol)> close;
};

class SummaryEngine {
 public:
  SummaryEngine(const Alphabet& alphabet, StepSystem system);

  /// Runs to saturation from `initial`, or until `stop` returns true for a
  /// state newly reached from `initial` at nesting level zero.
  void run(State initial, const std::function<bool(State)>& stop = {});

  /// Entry states (segment starts), in discovery order; entry 0 is initial.
  const std::vector<State>& entries() const { return entries_; }
  /// States reached from the given entry, in discovery order.
  const std::vector<State>& reached(std::size_t entry) const { return facts_[entry].order; }
  const std::vector<StackSymbol>& pushed() const { return pushed_; }
  /// The top-level state that satisfied `stop`, if any.
  std::optional<State> stopped_at() const { return stopped_at_; }

  /// A well-nested input leading from entry `entry` to `target`.
  InputString word(std::size_t entry, State target) const;

 private:
  struct Parent {
    enum class Kind { root, neutral, close } kind = Kind::root;
    State prev = 0;        // state before the step (or before the bracket)
    Symbol symbol = 0;     // neutral symbol, or opening bracket
    Symbol close = 0;      // closing bracket
    std::size_t inner = 0; // entry of the bracketed segment
    State inner_end = 0;   // state at the end of the bracketed segment
  };
  struct Facts {
    std::unordered_map<State, Parent> parent;
    std::vector<State> order;
  };
  struct Caller {
    std::size_t entry;
    State before;
    Symbol open;
    StackSymbol pushed;
  };

  std::size_t entry_of(State q);
  void add(std::size_t entry, State q, Parent why);

  const Alphabet& alphabet_;
  StepSystem system_;
  std::vector<Symbol> neutral_, open_, close_;
  std::vector<State> entries_;
  std::unordered_map<State, std::size_t> entry_index_;
  std::vector<Facts> facts_;
  std::vector<std::vector<Caller>> callers_;
  std::deque<std::pair<std::size_t, State>> work_;
  std::vector<StackSymbol> pushed_;
  std::unordered_map<StackSymbol, bool> pushed_seen_;
  std::function<bool(State)> stop_;
  std::optional<State> stopped_at_;
};

}  // namespace idpda::detail
