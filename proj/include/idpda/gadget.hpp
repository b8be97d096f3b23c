#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idpda/alphabet.hpp"
#include "idpda/relation.hpp"

namespace idpda::gadget {

/// A token sequence together with the construction that produced it.
/// Tokens are names, so one gadget can be encoded over any witness alphabet
/// that declares them.
struct GadgetString {
  std::vector<std::string> tokens;
  std::string provenance;

  InputString encode(const Alphabet& alphabet) const;
  /// Tokens separated by `separator` (tokenize() reads the result back).
  std::string text(std::string_view separator = " ") const;

  GadgetString& operator+=(const GadgetString& rhs);
  friend GadgetString operator+(GadgetString lhs, const GadgetString& rhs) { return lhs += rhs; }
  friend bool operator==(const GadgetString& a, const GadgetString& b) { return a.tokens == b.tokens; }
};

/// Builds a GadgetString from tokens: from_tokens({"<", "-", "-"}).
GadgetString from_tokens(std::initializer_list<std::string_view> toks);

/// The left bracket used inside w_R-based strings ("<", or "<0" for the
/// numbered-bracket family).
inline constexpr std::string_view kPlainOpen = "<";

/// (-)^i < (-)^(n-i). Throws PreconditionError unless i < n.
GadgetString u(std::uint32_t i, std::uint32_t n, std::string_view open = kPlainOpen);
/// (-)^j > (-)^(n-j).
GadgetString v(std::uint32_t j, std::uint32_t n);

/// A string whose behavior relation on the witness automata equals `r`: the
/// pairs missing from r, in lexicographic order p_1..p_k, give
/// u(i_k)...u(i_1) # v(j_1)...v(j_k).
GadgetString w(const BehaviorRelation& r, std::string_view open = kPlainOpen);

/// w of the relation {(i,i)}: entered in i it leaves in i, otherwise rejects.
GadgetString y(std::uint32_t i, std::uint32_t n, std::string_view open = kPlainOpen);
/// (<>-)^i - (<>-)^(n-i), the bracket-only variant.
GadgetString y_explicit(std::uint32_t i, std::uint32_t n, std::string_view open = kPlainOpen);

struct Anchors {
  GadgetString push;  // u-block of the diagonal relation's w
  GadgetString pop;   // matching v-block
};
Anchors anchors(std::uint32_t n, std::string_view open = kPlainOpen);

/// <_{l1} w_{R1} <_{l2} ... w_{Rm} <_{l(m+1)}. With s == 1 the brackets are
/// the plain "<"; otherwise "<l" and the inner w strings use "<0".
/// Relations must be non-empty and indices.size() == relations.size() + 1.
GadgetString f(std::span<const BehaviorRelation> relations, std::span<const std::uint64_t> indices,
               std::uint32_t n, std::uint64_t s);

/// (# >>)^(m-k) # y_0 >> y_j # y_1 >> y_i (# >>)^(k-1), 1 <= k <= m, n >= 2.
GadgetString g(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t m, std::uint32_t n,
               std::string_view open = kPlainOpen);

/// (# >>)^(m-k+1) # y_(x mod n) >>> y_(x/n) (# >>)^(k-1), 1 <= k <= m+1,
/// 0 <= x <= floor(log2(s-1)), x/n < n. Uses "<0" inside the y strings.
GadgetString h(std::uint32_t k, std::uint32_t x, std::uint32_t m, std::uint32_t n, std::uint64_t s);

/// Open-bracket count minus close-bracket count, classifying tokens by the
/// canonical names (anything starting with '<' opens, with '>' closes).
long bracket_balance(const GadgetString& s);

}  // namespace idpda::gadget
