#include <doctest.h>

#include <random>
#include <set>

#include "idpda/determinize.hpp"
#include "idpda/format.hpp"
#include "idpda/sim.hpp"
#include "idpda/verify.hpp"
#include "idpda/witness.hpp"
#include "support.hpp"

using namespace idpda;

namespace {

void check_structure(const DeterminizationResult& det) {
  CHECK(validate(det.automaton).ok());
  CHECK(det.state_label.size() == det.automaton.n_states);
  CHECK(det.pushed_label.size() == det.automaton.stack_symbols.size());
  const std::set<BehaviorRelation> labels(det.state_label.begin(), det.state_label.end());
  CHECK(labels.size() == det.state_label.size());
  for (const auto& [r, bracket] : det.pushed_label) {
    CHECK_FALSE(r.empty());
    CHECK(det.automaton.alphabet.class_of(bracket) == SymbolClass::open);
  }
}

}  // namespace

TEST_CASE("state counts of det(A_n)") {
  const std::size_t expected[] = {0, 2, 16, 512};
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto det = determinize(witness::build_A(n));
    check_structure(det);
    const auto m = metrics(det);
    CHECK(m.reachable_states == expected[n]);
    CHECK(m.states <= expected[n]);
    CHECK(m.reachable_pushed == expected[n] - 1);
  }
  const auto det1 = determinize(witness::build_A(1));
  CHECK(summarize(det1.automaton).surface_states.size() == 2);
}

TEST_CASE("pushed-symbol counts") {
  CHECK(metrics(determinize(witness::build_B(2))).reachable_pushed == 15);
  CHECK(summarize(determinize(witness::build_Bns(2, 2)).automaton).pushed.size() == 30);
  CHECK(summarize(determinize(witness::build_A(2)).automaton).pushed.size() == 15);
  for (const auto& a : {witness::build_B(2), witness::build_Bns(2, 3), witness::build_B12()}) check_structure(determinize(a));
}

TEST_CASE("summary contains the initial state and is closed") {
  const auto det = determinize(witness::build_B(2));
  const auto sum = summarize(det.automaton);
  CHECK(std::count(sum.surface_states.begin(), sum.surface_states.end(), det.automaton.initial) == 1);
  for (const auto& [p, q] : sum.summary) {
    CHECK(p < det.automaton.n_states);
    CHECK(q < det.automaton.n_states);
  }
  CHECK(std::is_sorted(sum.pushed.begin(), sum.pushed.end()));
}

TEST_CASE("the deterministic state after a well-nested input is labeled with its behavior relation") {
  std::mt19937_64 rng(17);
  for (const auto& a : {witness::build_A(2), witness::build_B(2), witness::build_Bns(2, 2), witness::build_A(3)}) {
    const auto det = determinize(a);
    for (int t = 0; t < 200; ++t) {
      const auto w = testing_support::random_well_nested(a.alphabet, rng() % 16, rng);
      const auto run = sim::didpda_run(det.automaton, w);
      CHECK(run.stack.empty());
      REQUIRE(det.state_label[run.state] == sim::behavior_relation(a, w));
    }
  }
}

TEST_CASE("determinization preserves the language on short strings") {
  for (const auto& a : {witness::build_A(2), witness::build_B(2), witness::build_B12()}) {
    const auto det = determinize(a);
    const auto r = verify::bounded_compare(a, det.automaton, 8);
    CHECK_FALSE(r.mismatch.has_value());
    CHECK(r.strings > 0);
  }
}

TEST_CASE("determinizing a hand-written automaton") {
  // Parity counter; brackets open only in state 0 and close only in state 1.
  const auto a = format::parse_automaton(R"(idpda-format 1
alphabet neutral: -
alphabet open: <
alphabet close: >
states: 2
initial: 0
accepting: 0
stack: s
t0 - 0 -> 1
t0 - 1 -> 0
t+ < 0 -> (0,s)
t- > 1 s -> 0
)");
  const auto det = determinize(a);
  check_structure(det);
  auto accepts = [&](std::string_view text) {
    return sim::didpda_accepts(det.automaton, format::tokenize(text, a.alphabet));
  };
  CHECK(accepts("<->"));
  CHECK(accepts("<--->--"));
  CHECK_FALSE(accepts("<>"));
  CHECK_FALSE(accepts("-"));
  CHECK_FALSE(accepts("<-<->>"));
  CHECK(accepts("<<->->"));
  CHECK_FALSE(verify::bounded_compare(a, det.automaton, 10).mismatch);
}
