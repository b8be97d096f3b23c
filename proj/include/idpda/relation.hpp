#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "idpda/alphabet.hpp"

namespace idpda {

/// A binary relation on the states {0..n-1}, stored as n*n membership bits
/// in row-major (i, j) order.
class BehaviorRelation {
 public:
  BehaviorRelation() = default;
  /// The empty relation on n states.
  explicit BehaviorRelation(std::uint32_t n);

  static BehaviorRelation full(std::uint32_t n);
  static BehaviorRelation diagonal(std::uint32_t n);
  /// Parses a row-major string of exactly n*n '0'/'1' characters.
  static BehaviorRelation from_bits(std::uint32_t n, std::string_view bits);
  /// The relation whose bit k (row-major) is bit k of `mask`; requires n*n <= 64.
  static BehaviorRelation from_mask(std::uint32_t n, std::uint64_t mask);

  std::uint32_t n() const { return n_; }
  bool member(State i, State j) const;
  void insert(State i, State j);
  void erase(State i, State j);
  std::size_t count() const;
  bool empty() const;

  /// Row-major '0'/'1' string.
  std::string bits() const;
  /// Set notation, e.g. "{(0,1),(1,0)}".
  std::string to_string() const;

  std::size_t hash() const;

  friend bool operator==(const BehaviorRelation&, const BehaviorRelation&) = default;
  friend auto operator<=>(const BehaviorRelation&, const BehaviorRelation&) = default;

 private:
  std::size_t index(State i, State j) const;
  std::uint64_t& word(std::size_t k) { return k == 0 ? low_ : high_[k - 1]; }
  std::uint64_t word(std::size_t k) const { return k == 0 ? low_ : high_[k - 1]; }
  std::size_t word_count() const { return high_.size() + 1; }

  // Bits 0..63 live inline; relations over more than 8 states spill into high_.
  std::uint32_t n_ = 0;
  std::uint64_t low_ = 0;
  std::vector<std::uint64_t> high_;
};

struct RelationHash {
  std::size_t operator()(const BehaviorRelation& r) const { return r.hash(); }
};

/// R with the single pair (i, j) removed.
BehaviorRelation remove(BehaviorRelation r, State i, State j);

/// {(i,k) : exists j with (i,j) in a and (j,k) in b}. Throws PreconditionError
/// on mismatched sizes.
BehaviorRelation compose(const BehaviorRelation& a, const BehaviorRelation& b);

bool subset_of(const BehaviorRelation& a, const BehaviorRelation& b);

/// All 2^(n*n) relations on n states, ordered by their row-major mask.
std::vector<BehaviorRelation> all_relations(std::uint32_t n);

}  // namespace idpda

template <>
struct std::hash<idpda::BehaviorRelation> : idpda::RelationHash {};
