#include "summary_engine.hpp"

namespace idpda::detail {

SummaryEngine::SummaryEngine(const Alphabet& alphabet, StepSystem system)
    : alphabet_(alphabet),
      system_(std::move(system)),
      neutral_(alphabet.symbols_of(SymbolClass::neutral)),
      open_(alphabet.symbols_of(SymbolClass::open)),
      close_(alphabet.symbols_of(SymbolClass::close)) {}

std::size_t SummaryEngine::entry_of(State q) {
  if (auto it = entry_index_.find(q); it != entry_index_.end()) return it->second;
  const std::size_t idx = entries_.size();
  entries_.push_back(q);
  entry_index_.emplace(q, idx);
  facts_.emplace_back();
  callers_.emplace_back();
  add(idx, q, Parent{});
  return idx;
}

void SummaryEngine::add(std::size_t entry, State q, Parent why) {
  auto& facts = facts_[entry];
  if (!facts.parent.emplace(q, why).second) return;
  facts.order.push_back(q);
  work_.emplace_back(entry, q);
  if (entry == 0 && stop_ && !stopped_at_ && stop_(q)) stopped_at_ = q;
}

void SummaryEngine::run(State initial, const std::function<bool(State)>& stop) {
  stop_ = stop;
  entry_of(initial);
  while (!work_.empty() && !stopped_at_) {
    const auto [e, q] = work_.front();
    work_.pop_front();

    for (Symbol c : neutral_)
      add(e, system_.neutral(q, c), Parent{Parent::Kind::neutral, q, c, 0, 0, 0});

    for (Symbol a : open_) {
      const Push p = system_.open(q, a);
      if (pushed_seen_.emplace(p.symbol, true).second) pushed_.push_back(p.symbol);
      const std::size_t inner = entry_of(p.state);
      callers_[inner].push_back(Caller{e, q, a, p.symbol});
      for (std::size_t k = 0; k < facts_[inner].order.size(); ++k) {
        const State t = facts_[inner].order[k];
        for (Symbol b : close_)
          add(e, system_.close(t, b, p.symbol), Parent{Parent::Kind::close, q, a, b, inner, t});
      }
    }

    for (std::size_t k = 0; k < callers_[e].size(); ++k) {
      const Caller c = callers_[e][k];
      for (Symbol b : close_)
        add(c.entry, system_.close(q, b, c.pushed),
            Parent{Parent::Kind::close, c.before, c.open, b, e, q});
    }
  }
}

InputString SummaryEngine::word(std::size_t entry, State target) const {
  struct Task {
    bool emit;
    Symbol symbol;
    std::size_t entry;
    State state;
  };
  InputString out;
  std::vector<Task> todo{{false, 0, entry, target}};
  while (!todo.empty()) {
    const Task t = todo.back();
    todo.pop_back();
    if (t.emit) {
      out.push_back(t.symbol);
      continue;
    }
    const Parent& p = facts_[t.entry].parent.at(t.state);
    switch (p.kind) {
      case Parent::Kind::root: break;
      case Parent::Kind::neutral:
        todo.push_back({true, p.symbol, 0, 0});
        todo.push_back({false, 0, t.entry, p.prev});
        break;
      case Parent::Kind::close:
        todo.push_back({true, p.close, 0, 0});
        todo.push_back({false, 0, p.inner, p.inner_end});
        todo.push_back({true, p.symbol, 0, 0});
        todo.push_back({false, 0, t.entry, p.prev});
        break;
    }
  }
  return out;
}

}  // namespace idpda::detail
