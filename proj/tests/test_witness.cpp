#include <doctest.h>

#include <algorithm>

#include "idpda/error.hpp"
#include "idpda/sim.hpp"
#include "idpda/verify.hpp"
#include "idpda/witness.hpp"
#include "support.hpp"

using namespace idpda;
using testing_support::enc;

namespace {

std::vector<Push> opens(const Nidpda& a, std::string_view tok, State q) {
  const auto span = a.next_open(a.alphabet.symbol(tok), q);
  return {span.begin(), span.end()};
}

std::vector<State> closes(const Nidpda& a, std::string_view tok, State q, std::string_view sym) {
  const auto span = a.next_close(a.alphabet.symbol(tok), q, a.stack_symbol(sym));
  return {span.begin(), span.end()};
}

}  // namespace

TEST_CASE("A_2 transition tables") {
  const auto a = witness::build_A(2);
  const Symbol minus = a.alphabet.symbol("-");
  CHECK(std::vector<State>(a.next_neutral(minus, 0).begin(), a.next_neutral(minus, 0).end()) == std::vector<State>{1});
  CHECK(std::vector<State>(a.next_neutral(minus, 1).begin(), a.next_neutral(minus, 1).end()) == std::vector<State>{0});
  CHECK(opens(a, "<", 0) == std::vector<Push>{{0, a.stack_symbol("0")}});
  CHECK(opens(a, "<", 1) == std::vector<Push>{{1, a.stack_symbol("1")}});
  CHECK(closes(a, ">", 0, "0").empty());
  CHECK(closes(a, ">", 1, "0") == std::vector<State>{1});
  CHECK(closes(a, ">", 0, "1") == std::vector<State>{0});
}

TEST_CASE("A_n shape") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto a = witness::build_A(n);
    CHECK(validate(a).ok());
    CHECK(a.n_states == n);
    CHECK(a.stack_symbols.size() == 2);
    CHECK(a.accepting.size() == n);
    CHECK(a.initial == std::vector<State>{0});
    for (Symbol c = 0; c < a.alphabet.size(); ++c) {
      if (a.alphabet.name(c) == "#") continue;
      for (State q = 0; q < n; ++q) {
        switch (a.alphabet.class_of(c)) {
          case SymbolClass::neutral: CHECK(a.next_neutral(c, q).size() <= 1); break;
          case SymbolClass::open: CHECK(a.next_open(c, q).size() <= 1); break;
          case SymbolClass::close:
            for (StackSymbol g = 0; g < 2; ++g) CHECK(a.next_close(c, q, g).size() <= 1);
            break;
        }
      }
    }
  }
}

TEST_CASE("B_2 transition tables") {
  const auto b = witness::build_B(2);
  CHECK(validate(b).ok());
  CHECK(b.stack_symbols.size() == 6);
  const auto from0 = opens(b, "<", 0);
  CHECK(from0.size() == 5);
  for (const auto& [q, sym] : std::vector<std::pair<State, std::string>>{{0, "0"}, {0, "h0"}, {1, "h0"}, {0, "r0"}, {1, "r1"}})
    CHECK(std::count(from0.begin(), from0.end(), Push{q, b.stack_symbol(sym)}) == 1);
  CHECK(closes(b, ">>", 1, "r0") == std::vector<State>{0});
  CHECK(closes(b, ">>", 0, "r0").empty());
  CHECK(closes(b, ">>", 0, "h1") == std::vector<State>{1});
  CHECK(closes(b, ">>", 1, "h1").empty());
  CHECK(closes(b, ">", 1, "h0").empty());
  CHECK(closes(b, ">>", 1, "0").empty());
}

TEST_CASE("B_{n,s} shape") {
  const auto b22 = witness::build_Bns(2, 2);
  CHECK(b22.stack_symbols.size() == 7);
  CHECK(b22.alphabet.size() == 7);
  const auto b24 = witness::build_Bns(2, 4);
  CHECK(b24.alphabet.size() == 9);
  CHECK(b24.stack_symbols.size() == 8);

  const auto c0 = b22.stack_symbol("c0");
  auto pushes_c = [&](std::string_view tok) {
    std::vector<State> out;
    for (State q = 0; q < 2; ++q)
      for (const Push& p : opens(b22, tok, q))
        if (p.symbol == c0) out.push_back(p.state);
    return out;
  };
  CHECK(pushes_c("<0").empty());
  CHECK(pushes_c("<1") == std::vector<State>{0, 1, 0, 1});

  // ">>>" moves from x mod n to x / n over c{x}.
  CHECK(closes(b24, ">>>", 0, "c0") == std::vector<State>{0});
  CHECK(closes(b24, ">>>", 1, "c1") == std::vector<State>{0});
  CHECK(closes(b24, ">>>", 0, "c1").empty());
  CHECK_THROWS_AS(b24.stack_symbol("c2"), ValidationError);
  const auto b25 = witness::build_Bns(2, 5);
  CHECK(closes(b25, ">>>", 0, "c2") == std::vector<State>{1});

  for (std::uint64_t s = 2; s <= 16; ++s) {
    const auto b = witness::build_Bns(2, s);
    CHECK(validate(b).ok());
    CHECK(b.alphabet.size() == s + 5);
    // 2 + 2n + floor(log2(2s - 1))
    std::size_t log = 0;
    while ((std::uint64_t{1} << (log + 1)) <= 2 * s - 1) ++log;
    CHECK(b.stack_symbols.size() == 2 + 4 + log);
  }
}

TEST_CASE("B_{n,s} parameter handling") {
  CHECK(witness::build_Bns(2, 1) == witness::build_B(2));
  CHECK(witness::build_Bns(1, 2) == witness::build_B12());
  CHECK_THROWS_AS(witness::build_Bns(2, 17), PreconditionError);
  CHECK_THROWS_AS(witness::build_Bns(2, 0), PreconditionError);
  CHECK_THROWS_AS(witness::build_Bns(1, 3), PreconditionError);
  CHECK(witness::max_brackets(2) == 16);
  CHECK(witness::max_brackets(9) == UINT64_MAX);
  CHECK(witness::top_bit(2) == 0);
  CHECK(witness::top_bit(4) == 1);
  CHECK(witness::top_bit(5) == 2);
}

TEST_CASE("B_{1,2} accepts exactly the type-matched strings") {
  const auto b = witness::build_B12();
  CHECK(b.alphabet.size() == 4);
  CHECK(b.stack_symbols.size() == 2);
  CHECK(sim::nidpda_accepts(b, enc(b, "<>")));
  CHECK_FALSE(sim::nidpda_accepts(b, enc(b, "< >>")));
  CHECK(sim::nidpda_accepts(b, enc(b, "<< >> < >")));
  CHECK_THROWS_AS(sim::nidpda_accepts(b, enc(b, "< > >")), PreconditionError);
  // Longest match reads "<>>" as "<" ">>", a mismatched pair.
  CHECK_FALSE(sim::nidpda_accepts(b, enc(b, "<>>")));
}

TEST_CASE("B_2 restricted to A_2 symbols behaves like A_2") {
  const auto a = witness::build_A(2);
  const auto b = witness::build_B(2);
  std::size_t compared = 0;
  verify::for_each_well_nested(a.alphabet, 10, [&](const InputString& w) {
    InputString wb;
    for (Symbol c : w) wb.push_back(b.alphabet.symbol(a.alphabet.name(c)));
    REQUIRE(sim::behavior_relation(b, wb) == sim::behavior_relation(a, w));
    ++compared;
  });
  CHECK(compared > 10000);
}

TEST_CASE("B_{2,2} with both brackets read as '<' accepts like B_2") {
  const auto b = witness::build_B(2);
  const auto bs = witness::build_Bns(2, 2);
  verify::for_each_well_nested(bs.alphabet, 8, [&](const InputString& w) {
    InputString wb;
    for (Symbol c : w) {
      const auto& name = bs.alphabet.name(c);
      if (name == ">>>") return;
      wb.push_back(b.alphabet.symbol(name.rfind("<", 0) == 0 ? "<" : name));
    }
    REQUIRE(sim::nidpda_accepts(bs, w) == sim::nidpda_accepts(b, wb));
  });
}
