#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "idpda/alphabet.hpp"

namespace idpda {

/// Outcome of a left bracket: the next state and the symbol pushed.
struct Push {
  State state = 0;
  StackSymbol symbol = 0;
  friend auto operator<=>(const Push&, const Push&) = default;
};

/// Nondeterministic input-driven pushdown automaton over states 0..n_states-1.
/// Missing transition keys denote the empty set.
struct Nidpda {
  Alphabet alphabet;
  std::uint32_t n_states = 0;
  std::vector<std::string> stack_symbols;
  std::vector<State> initial;    // sorted, unique
  std::vector<State> accepting;  // sorted, unique
  std::map<std::pair<Symbol, State>, std::vector<State>> neutral;
  std::map<std::pair<Symbol, State>, std::vector<Push>> open;
  std::map<std::tuple<Symbol, State, StackSymbol>, std::vector<State>> close;

  std::span<const State> next_neutral(Symbol a, State q) const;
  std::span<const Push> next_open(Symbol a, State q) const;
  std::span<const State> next_close(Symbol b, State q, StackSymbol g) const;

  bool is_initial(State q) const;
  bool is_accepting(State q) const;
  StackSymbol stack_symbol(std::string_view name) const;

  /// Sorts and deduplicates every set and drops empty transition entries.
  void normalize();

  friend bool operator==(const Nidpda&, const Nidpda&) = default;
};

/// Complete deterministic input-driven pushdown automaton. Transition tables
/// are dense; entries for symbols of another class are left empty.
struct Didpda {
  Alphabet alphabet;
  std::uint32_t n_states = 0;
  std::vector<std::string> stack_symbols;
  State initial = 0;
  std::vector<bool> accepting;                  // [state]
  std::vector<std::vector<State>> neutral;      // [symbol][state]
  std::vector<std::vector<Push>> open;          // [symbol][state]
  std::vector<std::vector<State>> close;        // [symbol][state * |stack| + g]

  State next_neutral(Symbol a, State q) const { return neutral[a][q]; }
  Push next_open(Symbol a, State q) const { return open[a][q]; }
  State next_close(Symbol b, State q, StackSymbol g) const {
    return close[b][std::size_t{q} * stack_symbols.size() + g];
  }

  /// Allocates tables for the given alphabet and sizes, every entry 0.
  static Didpda with_shape(Alphabet alphabet, std::uint32_t n_states,
                           std::vector<std::string> stack_symbols);

  friend bool operator==(const Didpda&, const Didpda&) = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Nidpda& a);
/// Checks shape, ranges and totality of the dense tables.
ValidationReport validate(const Didpda& d);
/// Checks whether `a` is a complete deterministic automaton.
ValidationReport validate_deterministic(const Nidpda& a);

/// Throws ValidationError carrying every problem if the report is not clean.
void require_valid(const Nidpda& a);
void require_valid(const Didpda& d);

/// Every outcome widened to a singleton set.
Nidpda widen(const Didpda& d);
/// Narrows a complete single-valued Nidpda; throws ValidationError otherwise.
Didpda to_didpda(const Nidpda& a);

}  // namespace idpda
