#include "idpda/relation.hpp"

#include <bit>

#include "idpda/error.hpp"

namespace idpda {

BehaviorRelation::BehaviorRelation(std::uint32_t n)
    : n_(n), high_(std::size_t{n} * n > 64 ? (std::size_t{n} * n - 1) / 64 : 0, 0) {}

BehaviorRelation BehaviorRelation::full(std::uint32_t n) {
  BehaviorRelation r(n);
  for (State i = 0; i < n; ++i)
    for (State j = 0; j < n; ++j) r.insert(i, j);
  return r;
}

BehaviorRelation BehaviorRelation::diagonal(std::uint32_t n) {
  BehaviorRelation r(n);
  for (State i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

BehaviorRelation BehaviorRelation::from_bits(std::uint32_t n, std::string_view bits) {
  if (bits.size() != std::size_t{n} * n)
    throw PreconditionError("relation: expected " + std::to_string(n * n) +
                            " bits, got " + std::to_string(bits.size()));
  BehaviorRelation r(n);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      r.insert(static_cast<State>(k / n), static_cast<State>(k % n));
    else if (bits[k] != '0')
      throw PreconditionError("relation: bit string may only contain '0' and '1'");
  }
  return r;
}

BehaviorRelation BehaviorRelation::from_mask(std::uint32_t n, std::uint64_t mask) {
  if (std::size_t{n} * n > 64) throw PreconditionError("relation: mask too narrow for n");
  BehaviorRelation r(n);
  r.low_ = n * n == 64 ? mask : mask & ((std::uint64_t{1} << (n * n)) - 1);
  return r;
}

std::size_t BehaviorRelation::index(State i, State j) const {
  if (i >= n_ || j >= n_)
    throw PreconditionError("relation: pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside " + std::to_string(n_) + " states");
  return std::size_t{i} * n_ + j;
}

bool BehaviorRelation::member(State i, State j) const {
  auto k = index(i, j);
  return (word(k / 64) >> (k % 64)) & 1;
}

void BehaviorRelation::insert(State i, State j) {
  auto k = index(i, j);
  word(k / 64) |= std::uint64_t{1} << (k % 64);
}

void BehaviorRelation::erase(State i, State j) {
  auto k = index(i, j);
  word(k / 64) &= ~(std::uint64_t{1} << (k % 64));
}

std::size_t BehaviorRelation::count() const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < word_count(); ++k) c += static_cast<std::size_t>(std::popcount(word(k)));
  return c;
}

bool BehaviorRelation::empty() const {
  for (std::size_t k = 0; k < word_count(); ++k)
    if (word(k)) return false;
  return true;
}

std::string BehaviorRelation::bits() const {
  std::string out;
  out.reserve(std::size_t{n_} * n_);
  for (State i = 0; i < n_; ++i)
    for (State j = 0; j < n_; ++j) out += member(i, j) ? '1' : '0';
  return out;
}

std::string BehaviorRelation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (State i = 0; i < n_; ++i)
    for (State j = 0; j < n_; ++j)
      if (member(i, j)) {
        if (!first) out += ',';
        first = false;
        out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
      }
  return out + "}";
}

std::size_t BehaviorRelation::hash() const {
  std::size_t h = n_;
  for (std::size_t k = 0; k < word_count(); ++k)
    h = h * 0x9e3779b97f4a7c15ULL + std::hash<std::uint64_t>{}(word(k));
  return h;
}

BehaviorRelation remove(BehaviorRelation r, State i, State j) {
  r.erase(i, j);
  return r;
}

BehaviorRelation compose(const BehaviorRelation& a, const BehaviorRelation& b) {
  if (a.n() != b.n())
    throw PreconditionError("compose: relations over " + std::to_string(a.n()) + " and " +
                            std::to_string(b.n()) + " states");
  const auto n = a.n();
  BehaviorRelation out(n);
  for (State i = 0; i < n; ++i)
    for (State j = 0; j < n; ++j) {
      if (!a.member(i, j)) continue;
      for (State k = 0; k < n; ++k)
        if (b.member(j, k)) out.insert(i, k);
    }
  return out;
}

bool subset_of(const BehaviorRelation& a, const BehaviorRelation& b) {
  if (a.n() != b.n()) return false;
  for (State i = 0; i < a.n(); ++i)
    for (State j = 0; j < a.n(); ++j)
      if (a.member(i, j) && !b.member(i, j)) return false;
  return true;
}

std::vector<BehaviorRelation> all_relations(std::uint32_t n) {
  if (std::size_t{n} * n > 20) throw PreconditionError("all_relations: n too large to enumerate");
  std::vector<BehaviorRelation> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(BehaviorRelation::from_mask(n, mask));
  return out;
}

}  // namespace idpda
