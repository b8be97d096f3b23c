#include "idpda/determinize.hpp"

#include <algorithm>
#include <unordered_map>

#include "idpda/relation_calculus.hpp"
#include "summary_engine.hpp"

namespace idpda {

namespace {

struct LabelHash {
  std::size_t operator()(const std::pair<BehaviorRelation, Symbol>& k) const {
    return k.first.hash() * 31 + k.second;
  }
};

class Builder {
 public:
  explicit Builder(const Nidpda& a) : a_(a), calc_(a) {}

  DeterminizationResult build() {
    const auto& alphabet = a_.alphabet;
    const auto neutral = alphabet.symbols_of(SymbolClass::neutral);
    const auto open = alphabet.symbols_of(SymbolClass::open);
    const auto close = alphabet.symbols_of(SymbolClass::close);

    intern_state(calc_.start());
    std::size_t processed = 0;
    // Close transitions are known for the rectangle [0, done_states) x [0, done_symbols).
    std::size_t done_states = 0, done_symbols = 0;
    while (true) {
      for (; processed < states_.size(); ++processed) {
        const State q = static_cast<State>(processed);
        for (Symbol c : neutral) neutral_[{c, q}] = intern_state(calc_.after_neutral(states_[q], c));
        for (Symbol a : open) open_[{a, q}] = open_step(q, a);
      }
      if (done_states == states_.size() && done_symbols == symbols_.size()) break;
      const std::size_t ns = states_.size(), ng = symbols_.size();
      for (std::size_t q = 0; q < ns; ++q)
        for (std::size_t g = 0; g < ng; ++g) {
          if (q < done_states && g < done_symbols) continue;
          for (Symbol b : close) {
            // Copies: intern_state may reallocate the label vectors.
            const BehaviorRelation inner = states_[q];
            const auto [saved, bracket] = symbols_[g];
            close_[{b, static_cast<State>(q), static_cast<StackSymbol>(g)}] =
                intern_state(calc_.after_close(saved, bracket, inner, b));
          }
        }
      done_states = ns;
      done_symbols = ng;
    }
    return assemble();
  }

 private:
  State intern_state(BehaviorRelation r) {
    auto [it, inserted] = state_index_.try_emplace(r, static_cast<State>(states_.size()));
    if (inserted) states_.push_back(std::move(r));
    return it->second;
  }

  StackSymbol intern_symbol(BehaviorRelation r, Symbol bracket) {
    auto key = std::pair{std::move(r), bracket};
    auto [it, inserted] = symbol_index_.try_emplace(key, static_cast<StackSymbol>(symbols_.size()));
    if (inserted) symbols_.push_back(std::move(key));
    return it->second;
  }

  Push open_step(State q, Symbol a) {
    const BehaviorRelation current = states_[q];
    if (current.empty()) {
      const StackSymbol g = intern_symbol(BehaviorRelation::full(a_.n_states), a);
      return Push{q, g};
    }
    const StackSymbol g = intern_symbol(current, a);
    return Push{intern_state(calc_.entry(a)), g};
  }

  DeterminizationResult assemble() {
    std::vector<std::string> names;
    for (const auto& [r, bracket] : symbols_) names.push_back(r.bits() + ":" + a_.alphabet.name(bracket));
    DeterminizationResult out;
    out.automaton = Didpda::with_shape(a_.alphabet, static_cast<std::uint32_t>(states_.size()), names);
    auto& d = out.automaton;
    d.initial = 0;
    for (State q = 0; q < states_.size(); ++q) d.accepting[q] = calc_.accepting(states_[q]);
    for (const auto& [key, t] : neutral_) d.neutral[key.first][key.second] = t;
    for (const auto& [key, p] : open_) d.open[key.first][key.second] = p;
    for (const auto& [key, t] : close_) {
      const auto& [b, q, g] = key;
      d.close[b][std::size_t{q} * names.size() + g] = t;
    }
    out.state_label = std::move(states_);
    out.pushed_label = std::move(symbols_);
    return out;
  }

  const Nidpda& a_;
  RelationCalculus calc_;
  std::vector<BehaviorRelation> states_;
  std::unordered_map<BehaviorRelation, State> state_index_;
  std::vector<std::pair<BehaviorRelation, Symbol>> symbols_;
  std::unordered_map<std::pair<BehaviorRelation, Symbol>, StackSymbol, LabelHash> symbol_index_;
  std::map<std::pair<Symbol, State>, State> neutral_;
  std::map<std::pair<Symbol, State>, Push> open_;
  std::map<std::tuple<Symbol, State, StackSymbol>, State> close_;
};

}  // namespace

DeterminizationResult determinize(const Nidpda& a) { return Builder(a).build(); }

ReachabilitySummary summarize(const Didpda& d) {
  require_valid(d);
  detail::SummaryEngine engine(
      d.alphabet, detail::StepSystem{
                      [&](State q, Symbol c) { return d.next_neutral(c, q); },
                      [&](State q, Symbol a) { return d.next_open(a, q); },
                      [&](State q, Symbol b, StackSymbol g) { return d.next_close(b, q, g); },
                  });
  engine.run(d.initial);

  ReachabilitySummary out;
  for (std::size_t e = 0; e < engine.entries().size(); ++e)
    for (State q : engine.reached(e)) {
      out.surface_states.push_back(q);
      out.summary.emplace_back(engine.entries()[e], q);
    }
  std::sort(out.surface_states.begin(), out.surface_states.end());
  out.surface_states.erase(std::unique(out.surface_states.begin(), out.surface_states.end()),
                           out.surface_states.end());
  std::sort(out.summary.begin(), out.summary.end());
  out.pushed = engine.pushed();
  std::sort(out.pushed.begin(), out.pushed.end());
  return out;
}

Metrics metrics(const DeterminizationResult& r) {
  const auto s = summarize(r.automaton);
  return Metrics{r.automaton.n_states, r.automaton.stack_symbols.size(), s.surface_states.size(),
                 s.pushed.size()};
}

}  // namespace idpda
