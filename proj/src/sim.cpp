#include "idpda/sim.hpp"

#include <algorithm>

#include "idpda/error.hpp"

namespace idpda::sim {

namespace {

void require_well_nested(const Alphabet& alphabet, std::span<const Symbol> w) {
  const long depth = nesting_depth(w, alphabet);
  if (depth != 0)
    throw PreconditionError(depth < 0 ? "ill-nested input: unmatched right bracket"
                                      : "ill-nested input: unmatched left bracket");
}

}  // namespace

StackPool::StackPool() { nodes_.push_back(Entry{kEmpty, 0, 0}); }

StackPool::Node StackPool::push(Node below, StackSymbol top) {
  const std::uint64_t key = (std::uint64_t{below} << 32) | top;
  auto [it, inserted] = index_.try_emplace(key, static_cast<Node>(nodes_.size()));
  if (inserted) nodes_.push_back(Entry{below, top, nodes_[below].height + 1});
  return it->second;
}

std::vector<StackSymbol> StackPool::contents(Node s) const {
  std::vector<StackSymbol> out;
  for (; s != kEmpty; s = nodes_[s].below) out.push_back(nodes_[s].top);
  std::reverse(out.begin(), out.end());
  return out;
}

FrontierRunner::FrontierRunner(const Nidpda& a, std::span<const State> starts, SimOptions options)
    : a_(&a), pool_(std::make_shared<StackPool>()), options_(options) {
  for (State q : starts) configs_.push_back(Configuration{q, q, StackPool::kEmpty});
  std::sort(configs_.begin(), configs_.end());
  configs_.erase(std::unique(configs_.begin(), configs_.end()), configs_.end());
}

void FrontierRunner::step(Symbol s) {
  if (s >= a_->alphabet.size()) throw ValidationError("symbol not in the automaton's alphabet");
  std::vector<Configuration> next;
  switch (a_->alphabet.class_of(s)) {
    case SymbolClass::neutral:
      for (const auto& c : configs_)
        for (State t : a_->next_neutral(s, c.state)) next.push_back({c.origin, t, c.stack});
      break;
    case SymbolClass::open:
      for (const auto& c : configs_)
        for (const Push& p : a_->next_open(s, c.state))
          next.push_back({c.origin, p.state, pool_->push(c.stack, p.symbol)});
      ++depth_;
      break;
    case SymbolClass::close:
      if (depth_ == 0) throw PreconditionError("ill-nested input: unmatched right bracket");
      for (const auto& c : configs_)
        for (State t : a_->next_close(s, c.state, pool_->top(c.stack)))
          next.push_back({c.origin, t, pool_->below(c.stack)});
      --depth_;
      break;
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  if (next.size() > options_.max_configurations)
    throw ResourceError("frontier exceeded " + std::to_string(options_.max_configurations) +
                        " configurations at position " + std::to_string(position_ + 1));
  configs_ = std::move(next);
  ++position_;
}

std::vector<State> FrontierRunner::states() const {
  std::vector<State> out;
  for (const auto& c : configs_) out.push_back(c.state);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FrontierRunner::any_accepting() const {
  return std::any_of(configs_.begin(), configs_.end(), [&](const Configuration& c) {
    return c.stack == StackPool::kEmpty && a_->is_accepting(c.state);
  });
}

RelationRunner::RelationRunner(const RelationCalculus& calc)
    : calc_(&calc), current_(calc.start()) {}

void RelationRunner::step(Symbol s) {
  const auto& alphabet = calc_->alphabet();
  if (s >= alphabet.size()) throw ValidationError("symbol not in the automaton's alphabet");
  switch (alphabet.class_of(s)) {
    case SymbolClass::neutral: current_ = calc_->after_neutral(current_, s); break;
    case SymbolClass::open:
      if (current_.empty()) {
        stack_.emplace_back(BehaviorRelation::full(calc_->n()), s);
      } else {
        stack_.emplace_back(std::move(current_), s);
        current_ = calc_->entry(s);
      }
      break;
    case SymbolClass::close: {
      if (stack_.empty()) throw PreconditionError("ill-nested input: unmatched right bracket");
      auto [saved, open] = std::move(stack_.back());
      stack_.pop_back();
      current_ = calc_->after_close(saved, open, current_, s);
      break;
    }
  }
}

DidpdaRunner::DidpdaRunner(const Didpda& d) : d_(&d), state_(d.initial) {}

void DidpdaRunner::step(Symbol s) {
  if (s >= d_->alphabet.size()) throw ValidationError("symbol not in the automaton's alphabet");
  switch (d_->alphabet.class_of(s)) {
    case SymbolClass::neutral: state_ = d_->next_neutral(s, state_); break;
    case SymbolClass::open: {
      const Push p = d_->next_open(s, state_);
      state_ = p.state;
      stack_.push_back(p.symbol);
      break;
    }
    case SymbolClass::close:
      if (stack_.empty()) throw PreconditionError("ill-nested input: unmatched right bracket");
      state_ = d_->next_close(s, state_, stack_.back());
      stack_.pop_back();
      break;
  }
}

bool nidpda_accepts(const Nidpda& a, std::span<const Symbol> w, SimOptions options) {
  require_well_nested(a.alphabet, w);
  FrontierRunner run(a, a.initial, options);
  for (Symbol s : w) run.step(s);
  return run.any_accepting();
}

BehaviorRelation behavior_relation(const Nidpda& a, std::span<const Symbol> w, SimOptions options) {
  require_well_nested(a.alphabet, w);
  std::vector<State> all(a.n_states);
  for (State q = 0; q < a.n_states; ++q) all[q] = q;
  FrontierRunner run(a, all, options);
  for (Symbol s : w) run.step(s);
  BehaviorRelation out(a.n_states);
  for (const auto& c : run.configurations()) out.insert(c.origin, c.state);
  return out;
}

bool relation_accepts(const Nidpda& a, std::span<const Symbol> w) {
  require_well_nested(a.alphabet, w);
  RelationCalculus calc(a);
  RelationRunner run(calc);
  for (Symbol s : w) run.step(s);
  return run.accepting();
}

RunResult didpda_run(const Didpda& d, std::span<const Symbol> w) {
  if (nesting_depth(w, d.alphabet) < 0)
    throw PreconditionError("ill-nested input: unmatched right bracket");
  DidpdaRunner run(d);
  for (Symbol s : w) run.step(s);
  return RunResult{run.state(), run.stack()};
}

bool didpda_accepts(const Didpda& d, std::span<const Symbol> w) {
  require_well_nested(d.alphabet, w);
  DidpdaRunner run(d);
  for (Symbol s : w) run.step(s);
  return run.accepting();
}

std::vector<TraceLine> nidpda_trace(const Nidpda& a, std::span<const Symbol> w, std::size_t max_steps,
                                    SimOptions options) {
  std::vector<TraceLine> out;
  FrontierRunner run(a, a.initial, options);
  for (std::size_t i = 0; i < w.size() && i < max_steps; ++i) {
    run.step(w[i]);
    out.push_back(TraceLine{i + 1, a.alphabet.name(w[i]), run.states(), run.depth()});
  }
  return out;
}

std::string render_trace_line(const TraceLine& line) {
  std::string states = "{";
  for (std::size_t i = 0; i < line.states.size(); ++i)
    states += (i ? "," : "") + std::to_string(line.states[i]);
  states += "}";
  return std::to_string(line.position) + " " + line.token + " " + states + " " +
         std::to_string(line.stack_height);
}

}  // namespace idpda::sim
