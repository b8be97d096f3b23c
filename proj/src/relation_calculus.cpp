#include "idpda/relation_calculus.hpp"

namespace idpda {

RelationCalculus::RelationCalculus(const Nidpda& a) : a_(&a), n_(a.n_states) {
  require_valid(a);
  neutral_.resize(a.alphabet.size());
  entry_.resize(a.alphabet.size());
  for (Symbol s = 0; s < a.alphabet.size(); ++s) {
    if (a.alphabet.class_of(s) == SymbolClass::neutral) {
      BehaviorRelation step(n_);
      for (State p = 0; p < n_; ++p)
        for (State q : a.next_neutral(s, p)) step.insert(p, q);
      neutral_[s] = std::move(step);
    } else if (a.alphabet.class_of(s) == SymbolClass::open) {
      BehaviorRelation diag(n_);
      for (State p = 0; p < n_; ++p)
        for (const Push& t : a.next_open(s, p)) diag.insert(t.state, t.state);
      entry_[s] = std::move(diag);
    }
  }
}

BehaviorRelation RelationCalculus::start() const { return BehaviorRelation::diagonal(n_); }

BehaviorRelation RelationCalculus::after_neutral(const BehaviorRelation& r, Symbol c) const {
  return compose(r, neutral_[c]);
}

BehaviorRelation RelationCalculus::after_close(const BehaviorRelation& saved, Symbol open,
                                               const BehaviorRelation& inner, Symbol close) const {
  // through(p', q): from p' read the bracket pair around the inner segment.
  BehaviorRelation through(n_);
  for (State p = 0; p < n_; ++p)
    for (const Push& t : a_->next_open(open, p))
      for (State r = 0; r < n_; ++r) {
        if (!inner.member(t.state, r)) continue;
        for (State q : a_->next_close(close, r, t.symbol)) through.insert(p, q);
      }
  return compose(saved, through);
}

bool RelationCalculus::accepting(const BehaviorRelation& r) const {
  for (State q0 : a_->initial)
    for (State f : a_->accepting)
      if (r.member(q0, f)) return true;
  return false;
}

}  // namespace idpda
