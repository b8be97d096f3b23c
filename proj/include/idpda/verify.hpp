#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idpda/automaton.hpp"
#include "idpda/report.hpp"
#include "idpda/sim.hpp"

namespace idpda::verify {

/// Budgets for run_suite. Built from a named profile and then overridden
/// field by field from the command line.
struct Profile {
  std::string name = "desk";
  std::uint32_t n = 3;                     // determinization checks run n = 1..n
  std::uint32_t stack_n = 2;               // states for the stack-bound families
  std::vector<std::uint64_t> s_values{2, 3, 4};
  std::uint32_t m_max = 3;
  std::uint32_t equiv_n = 2;               // witnesses compared in bounded equivalence
  std::size_t max_len = 12;
  std::size_t max_len_wide = 10;           // for the numbered-bracket witness
  std::uint64_t seed = 0;
  std::size_t samples = 200;               // acceptance triples for n >= 3
  std::size_t tuple_samples = 100;         // relation tuples per m >= 2
  sim::SimOptions sim;

  static Profile desk();
  static Profile quick();
  /// Throws ConfigError when a budget is out of range.
  void validate() const;
};

/// Every acceptance evaluation runs the frontier simulation and the relation
/// calculus; disagreements between the two are counted here.
struct OracleTally {
  std::size_t evaluated = 0;
  std::size_t disagreements = 0;
  std::string first;
};

std::vector<CheckResult> check_state_bound(std::uint32_t n, const Profile& profile, OracleTally* oracle = nullptr);
std::vector<CheckResult> check_stack_bound(std::uint32_t n, std::uint32_t m_max, const Profile& profile,
                                        OracleTally* oracle = nullptr);
std::vector<CheckResult> check_bracket_bound(std::uint32_t n, std::uint64_t s, std::uint32_t m_max,
                                        const Profile& profile, OracleTally* oracle = nullptr);

struct BoundedComparison {
  std::size_t strings = 0;
  std::optional<InputString> mismatch;  // shortest, first in enumeration order
};

/// Compares a and d on every well-nested string of length <= max_len.
BoundedComparison bounded_compare(const Nidpda& a, const Didpda& d, std::size_t max_len,
                                  OracleTally* oracle = nullptr, sim::SimOptions options = {});

CheckResult bounded_equivalence(const Nidpda& a, const Didpda& d, std::size_t max_len,
                                OracleTally* oracle = nullptr, sim::SimOptions options = {});

/// A well-nested string accepted by exactly one of d1, d2, or nothing if they
/// are equivalent. Throws PreconditionError when the alphabets differ.
std::optional<InputString> product_inequivalence(const Didpda& d1, const Didpda& d2);

/// Calls visit on every well-nested string over `alphabet` of length <= max_len.
void for_each_well_nested(const Alphabet& alphabet, std::size_t max_len,
                          const std::function<void(const InputString&)>& visit);

/// The one-state, two-bracket witness: state and pushed-symbol counts and
/// acceptance of exactly the type-matched strings up to length 10.
std::vector<CheckResult> check_one_state(const Profile& profile);

/// Determinizes `a` and compares both on all well-nested strings up to
/// max_len, plus a product self-check of the result.
std::vector<CheckResult> check_language_preservation(const std::string& tag, const Nidpda& a, std::size_t max_len,
                                                     const Profile& profile, OracleTally* oracle = nullptr);

/// All checks enabled by the profile, in a fixed order.
std::vector<CheckResult> run_suite(const Profile& profile);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace idpda::verify
