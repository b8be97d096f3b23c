#pragma once

#include <vector>

#include "idpda/automaton.hpp"
#include "idpda/relation.hpp"

namespace idpda {

/// Transition rules of the behavior-relation determinization, evaluated
/// against a fixed Nidpda, which must outlive the calculus. A relation R describes the current well-nested
/// segment: (p, q) in R iff the automaton can enter the segment in p and be
/// in q now.
class RelationCalculus {
 public:
  explicit RelationCalculus(const Nidpda& a);

  std::uint32_t n() const { return n_; }
  const Alphabet& alphabet() const { return a_->alphabet; }

  /// The identity relation on all states.
  BehaviorRelation start() const;
  BehaviorRelation after_neutral(const BehaviorRelation& r, Symbol c) const;
  /// Relation at the start of the segment opened by bracket `a`: the
  /// diagonal over the states some `a`-transition can enter.
  const BehaviorRelation& entry(Symbol a) const { return entry_[a]; }
  /// Stitches the saved outer relation, the opening bracket's transitions,
  /// the inner segment relation and the closing bracket's transitions.
  BehaviorRelation after_close(const BehaviorRelation& saved, Symbol open,
                               const BehaviorRelation& inner, Symbol close) const;
  /// Contains a pair (q0, f) with q0 initial and f accepting.
  bool accepting(const BehaviorRelation& r) const;

 private:
  const Nidpda* a_;
  std::uint32_t n_;
  std::vector<BehaviorRelation> neutral_;  // [symbol] step relation, neutral symbols only
  std::vector<BehaviorRelation> entry_;    // [symbol], open symbols only
};

}  // namespace idpda
