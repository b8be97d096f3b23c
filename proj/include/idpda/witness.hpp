#pragma once

#include <cstdint>
#include <string_view>

#include "idpda/automaton.hpp"

namespace idpda::witness {

/// Largest bracket count allowed for n states: 2^(n*n), saturated at UINT64_MAX.
std::uint64_t max_brackets(std::uint32_t n);

/// Highest bit index used to number s left brackets: floor(log2(s-1)), s >= 2.
std::uint32_t top_bit(std::uint64_t s);

/// n-state automaton over {-, #, <, >} whose determinization needs 2^(n^2)
/// states. '#' moves anywhere, '-' decrements mod n, '<' pushes whether the
/// state is nonzero, '>' rejects exactly in state 0 over stack symbol 0.
Nidpda build_A(std::uint32_t n);

/// build_A(n) extended with a double right bracket ">>" and stack symbols
/// h{i} (old state) and r{j} (new state) that only ">>" may pop.
Nidpda build_B(std::uint32_t n);

/// s numbered left brackets "<0".."<{s-1}" and a triple right bracket ">>>".
/// Bracket l may additionally push c{x} for every set bit x of l; ">>>" pops
/// c{x} moving from state x mod n to x / n. Delegates s == 1 to build_B(n)
/// and (n, s) == (1, 2) to build_B12().
Nidpda build_Bns(std::uint32_t n, std::uint64_t s);

/// One state, brackets {<, <<} and {>, >>}; accepts exactly the strings in
/// which every bracket pair has matching type.
Nidpda build_B12();

}  // namespace idpda::witness
