#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <string>
#include <vector>

#include "idpda/automaton.hpp"
#include "idpda/relation.hpp"
#include "idpda/relation_calculus.hpp"

namespace idpda::sim {

struct SimOptions {
  /// Frontier size beyond which simulation stops with ResourceError.
  std::size_t max_configurations = 1'000'000;
};

/// Interned stack contents: every node is a stack, identified by its parent
/// (the stack below the top) and its top symbol. Node 0 is the empty stack.
class StackPool {
 public:
  using Node = std::uint32_t;
  static constexpr Node kEmpty = 0;

  StackPool();
  Node push(Node below, StackSymbol top);
  Node below(Node s) const { return nodes_[s].below; }
  StackSymbol top(Node s) const { return nodes_[s].top; }
  std::size_t height(Node s) const { return nodes_[s].height; }
  std::vector<StackSymbol> contents(Node s) const;  // bottom first
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Entry {
    Node below;
    StackSymbol top;
    std::uint32_t height;
  };
  std::vector<Entry> nodes_;
  std::unordered_map<std::uint64_t, Node> index_;
};

struct Configuration {
  State origin = 0;  // state the tracked run started in
  State state = 0;
  StackPool::Node stack = StackPool::kEmpty;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Symbol-by-symbol expansion of the set of all configurations reachable on
/// the consumed prefix. Copies share the stack pool, so a copy is a cheap
/// snapshot for depth-first enumeration.
class FrontierRunner {
 public:
  /// Starts one run per state in `starts`, each remembered as its origin.
  FrontierRunner(const Nidpda& a, std::span<const State> starts, SimOptions options = {});

  /// Throws PreconditionError on a right bracket at depth zero and
  /// ResourceError when the frontier exceeds the configured cap.
  void step(Symbol s);

  std::size_t depth() const { return depth_; }
  std::size_t position() const { return position_; }
  const std::vector<Configuration>& configurations() const { return configs_; }
  const StackPool& pool() const { return *pool_; }
  /// Distinct current states, ascending.
  std::vector<State> states() const;
  bool any_accepting() const;

 private:
  const Nidpda* a_;
  std::shared_ptr<StackPool> pool_;
  std::vector<Configuration> configs_;
  std::size_t depth_ = 0;
  std::size_t position_ = 0;
  SimOptions options_;
};

/// Lazy evaluation of the determinized automaton: current relation plus a
/// stack of (saved relation, opening bracket).
class RelationRunner {
 public:
  explicit RelationRunner(const RelationCalculus& calc);
  void step(Symbol s);
  const BehaviorRelation& relation() const { return current_; }
  std::size_t depth() const { return stack_.size(); }
  bool accepting() const { return calc_->accepting(current_); }

 private:
  const RelationCalculus* calc_;
  BehaviorRelation current_;
  std::vector<std::pair<BehaviorRelation, Symbol>> stack_;
};

struct RunResult {
  State state = 0;
  std::vector<StackSymbol> stack;  // bottom first
  friend auto operator<=>(const RunResult&, const RunResult&) = default;
};

class DidpdaRunner {
 public:
  explicit DidpdaRunner(const Didpda& d);
  void step(Symbol s);
  State state() const { return state_; }
  const std::vector<StackSymbol>& stack() const { return stack_; }
  bool accepting() const { return d_->accepting[state_]; }

 private:
  const Didpda* d_;
  State state_;
  std::vector<StackSymbol> stack_;
};

/// Some computation from an initial state with empty stack ends accepting.
/// Throws PreconditionError on ill-nested input.
bool nidpda_accepts(const Nidpda& a, std::span<const Symbol> w, SimOptions options = {});

/// (i, j) iff some computation entering w in i with empty stack leaves in j.
BehaviorRelation behavior_relation(const Nidpda& a, std::span<const Symbol> w,
                                   SimOptions options = {});

/// Acceptance through the relation calculus; agrees with nidpda_accepts.
bool relation_accepts(const Nidpda& a, std::span<const Symbol> w);

/// The unique computation's final state and stack. Accepts well-nested
/// prefixes; throws PreconditionError if some prefix closes more brackets
/// than it opens.
RunResult didpda_run(const Didpda& d, std::span<const Symbol> w);
bool didpda_accepts(const Didpda& d, std::span<const Symbol> w);

struct TraceLine {
  std::size_t position = 0;  // 1-based index of the consumed symbol
  std::string token;
  std::vector<State> states;
  std::size_t stack_height = 0;
};

/// One line per consumed symbol (at most `max_steps`) of the frontier run.
std::vector<TraceLine> nidpda_trace(const Nidpda& a, std::span<const Symbol> w,
                                    std::size_t max_steps = 10'000, SimOptions options = {});

std::string render_trace_line(const TraceLine& line);

}  // namespace idpda::sim
