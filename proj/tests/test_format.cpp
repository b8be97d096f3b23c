#include <doctest.h>

#include <string>

#include "idpda/determinize.hpp"
#include "idpda/error.hpp"
#include "idpda/format.hpp"
#include "idpda/witness.hpp"

using namespace idpda;

namespace {

std::string names(const Alphabet& a, const InputString& w) { return render(a, w, "|"); }

const char* kTiny = R"(idpda-format 1
#! two states, one bracket
alphabet neutral: -
alphabet open: <
alphabet close: >
states: 2
initial: 0
accepting: 1
stack: z
t0 - 0 -> 1
t+ < 1 -> (0,z)
t- > 0 z -> 1
)";

}  // namespace

TEST_CASE("tokenize uses longest match") {
  const auto a2 = witness::build_A(2);
  CHECK(names(a2.alphabet, format::tokenize("<--", a2.alphabet)) == "<|-|-");
  CHECK(names(a2.alphabet, format::tokenize(" # < > ", a2.alphabet)) == "#|<|>");

  const auto b24 = witness::build_Bns(2, 4);
  CHECK(names(b24.alphabet, format::tokenize(">>>", b24.alphabet)) == ">>>");
  CHECK(names(b24.alphabet, format::tokenize(">>>>", b24.alphabet)) == ">>>|>");
  CHECK(names(b24.alphabet, format::tokenize("<3>-", b24.alphabet)) == "<3|>|-");

  const auto b12 = witness::build_B12();
  CHECK(names(b12.alphabet, format::tokenize("<<>><>", b12.alphabet)) == "<<|>>|<|>");
}

TEST_CASE("tokenize reports the offset of an unknown character") {
  const auto a2 = witness::build_A(2);
  try {
    format::tokenize("<-?>", a2.alphabet);
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("witness documents round-trip") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto a = witness::build_A(n);
    CHECK(format::parse_automaton(format::serialize_automaton(a)) == a);
    const auto b = witness::build_B(n);
    CHECK(format::parse_automaton(format::serialize_automaton(b)) == b);
  }
  for (std::uint64_t s = 2; s <= 4; ++s) {
    for (std::uint32_t n = 2; n <= 3; ++n) {
      const auto b = witness::build_Bns(n, s);
      const auto text = format::serialize_automaton(b);
      CHECK(format::parse_automaton(text) == b);
      CHECK(format::serialize_automaton(format::parse_automaton(text)) == text);
    }
  }
  const auto b12 = witness::build_B12();
  CHECK(format::parse_automaton(format::serialize_automaton(b12)) == b12);
}

TEST_CASE("deterministic documents round-trip") {
  const auto d = determinize(witness::build_A(2)).automaton;
  CHECK(format::parse_didpda(format::serialize_automaton(d)) == d);
  CHECK_THROWS_AS(format::parse_didpda(format::serialize_automaton(witness::build_A(2))), ValidationError);
}

TEST_CASE("parse a hand-written document") {
  const auto a = format::parse_automaton(kTiny);
  CHECK(a.n_states == 2);
  CHECK(a.accepting == std::vector<State>{1});
  CHECK(a.next_open(a.alphabet.symbol("<"), 1).size() == 1);
  CHECK(a.next_open(a.alphabet.symbol("<"), 0).empty());
  CHECK(a.next_close(a.alphabet.symbol(">"), 0, 0).front() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  std::string text = kTiny;
  SUBCASE("missing accepting line") {
    text.replace(text.find("accepting: 1\n"), 13, "");
    CHECK_THROWS_AS(format::parse_automaton(text), ParseError);
  }
  SUBCASE("missing version line") {
    CHECK_THROWS_AS(format::parse_automaton(text.substr(text.find('\n') + 1)), ParseError);
  }
  SUBCASE("garbled transition") {
    text += "t+ < 0 -> 0,z\n";
    try {
      format::parse_automaton(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 13);
    }
  }
  SUBCASE("duplicate header") {
    text += "states: 3\n";
    CHECK_THROWS_AS(format::parse_automaton(text), ParseError);
  }
}

TEST_CASE("semantic errors are validation errors") {
  std::string text = kTiny;
  SUBCASE("undeclared stack symbol") {
    text += "t- > 1 q -> 0\n";
    CHECK_THROWS_AS(format::parse_automaton(text), ValidationError);
  }
  SUBCASE("undeclared token") {
    text += "t0 # 0 -> 0\n";
    CHECK_THROWS_AS(format::parse_automaton(text), ValidationError);
  }
  SUBCASE("state out of range") {
    text += "t0 - 1 -> 2\n";
    CHECK_THROWS_AS(format::parse_automaton(text), ValidationError);
  }
  SUBCASE("token used with the wrong class") {
    text += "t0 < 1 -> 0\n";
    CHECK_THROWS_AS(format::parse_automaton(text), ValidationError);
  }
}

TEST_CASE("report rendering") {
  std::vector<CheckResult> results{make_check("a.one", "16", "16"), make_check("a.two", "15", "14")};
  CheckResult budget;
  budget.id = "a.three";
  budget.status = CheckStatus::budget;
  budget.observed = "frontier exceeded 10 configurations";
  results.push_back(budget);

  CHECK(format::render_check(results[0]) == "CHECK a.one PASS");
  CHECK(format::render_check(results[1]) == "CHECK a.two FAIL expected=15 got=14");
  CHECK(format::render_check(results[2]) == "CHECK a.three BUDGET frontier_exceeded_10_configurations");

  const auto text = format::render_report(results);
  CHECK(text.rfind("idpda-format 1\n", 0) == 0);
  CHECK(text.find("FAILED 2 OF 3\n") != std::string::npos);

  const auto back = format::parse_report(text);
  REQUIRE(back.size() == 3);
  CHECK(back[1].status == CheckStatus::fail);
  CHECK(back[1].expected == "15");
  CHECK(back[1].observed == "14");
  CHECK(back[2].status == CheckStatus::budget);

  std::vector<CheckResult> good{make_check("x", "1", "1")};
  CHECK(format::render_report(good) == "idpda-format 1\nCHECK x PASS\nALL PASS\n");
}
