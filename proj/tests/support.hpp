#pragma once

// Shared helpers for the unit tests. reference_run is a deliberately naive
// simulator (explicit stack copies, depth-first over all runs) used as an
// oracle that shares no code with the frontier simulation.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "idpda/automaton.hpp"
#include "idpda/format.hpp"
#include "idpda/relation.hpp"

namespace testing_support {

using namespace idpda;

inline InputString enc(const Nidpda& a, std::string_view text) { return format::tokenize(text, a.alphabet); }

// Every state reachable from `start` with empty stack after reading all of w,
// ending with empty stack.
inline void reference_run(const Nidpda& a, const InputString& w, std::size_t pos, State q,
                          std::vector<StackSymbol>& stack, std::vector<bool>& out) {
  if (pos == w.size()) {
    if (stack.empty()) out[q] = true;
    return;
  }
  const Symbol c = w[pos];
  switch (a.alphabet.class_of(c)) {
    case SymbolClass::neutral:
      for (State t : a.next_neutral(c, q)) reference_run(a, w, pos + 1, t, stack, out);
      break;
    case SymbolClass::open:
      for (const Push& p : a.next_open(c, q)) {
        stack.push_back(p.symbol);
        reference_run(a, w, pos + 1, p.state, stack, out);
        stack.pop_back();
      }
      break;
    case SymbolClass::close: {
      if (stack.empty()) return;
      const StackSymbol g = stack.back();
      stack.pop_back();
      for (State t : a.next_close(c, q, g)) reference_run(a, w, pos + 1, t, stack, out);
      stack.push_back(g);
      break;
    }
  }
}

inline BehaviorRelation reference_relation(const Nidpda& a, const InputString& w) {
  BehaviorRelation r(a.n_states);
  for (State i = 0; i < a.n_states; ++i) {
    std::vector<bool> reach(a.n_states, false);
    std::vector<StackSymbol> stack;
    reference_run(a, w, 0, i, stack, reach);
    for (State j = 0; j < a.n_states; ++j)
      if (reach[j]) r.insert(i, j);
  }
  return r;
}

inline bool reference_accepts(const Nidpda& a, const InputString& w) {
  const auto r = reference_relation(a, w);
  for (State q0 : a.initial)
    for (State f : a.accepting)
      if (r.member(q0, f)) return true;
  return false;
}

// Random well-nested string of exactly `len` symbols (len is rounded down
// to keep room for closing brackets when the alphabet has no neutral symbol).
inline InputString random_well_nested(const Alphabet& alphabet, std::size_t len, std::mt19937_64& rng) {
  const auto neutral = alphabet.symbols_of(SymbolClass::neutral);
  const auto open = alphabet.symbols_of(SymbolClass::open);
  const auto close = alphabet.symbols_of(SymbolClass::close);
  InputString w;
  std::size_t depth = 0;
  while (w.size() < len) {
    const std::size_t room = len - w.size();
    std::vector<int> moves;
    if (!neutral.empty() && depth < room) moves.push_back(0);
    if (depth + 2 <= room) moves.push_back(1);
    if (depth > 0) moves.push_back(2);
    if (moves.empty()) break;
    switch (moves[rng() % moves.size()]) {
      case 0: w.push_back(neutral[rng() % neutral.size()]); break;
      case 1: w.push_back(open[rng() % open.size()]); ++depth; break;
      default: w.push_back(close[rng() % close.size()]); --depth; break;
    }
  }
  while (depth > 0) {
    w.push_back(close[rng() % close.size()]);
    --depth;
  }
  return w;
}

}  // namespace testing_support
