#include <doctest.h>

#include <random>

#include "idpda/error.hpp"
#include "idpda/gadget.hpp"
#include "idpda/sim.hpp"
#include "idpda/witness.hpp"
#include "support.hpp"

using namespace idpda;
namespace gd = idpda::gadget;

namespace {

BehaviorRelation rel(std::uint32_t n, std::string_view bits) { return BehaviorRelation::from_bits(n, bits); }

BehaviorRelation relation_of(const Nidpda& a, const gd::GadgetString& g) {
  return sim::behavior_relation(a, g.encode(a.alphabet));
}

std::size_t count(const gd::GadgetString& g, std::string_view tok) {
  return static_cast<std::size_t>(std::count(g.tokens.begin(), g.tokens.end(), tok));
}

}  // namespace

TEST_CASE("u and v") {
  CHECK(gd::u(0, 2).text("") == "<--");
  CHECK(gd::u(1, 2).text("") == "-<-");
  CHECK(gd::v(1, 2).text("") == "->-");
  CHECK(gd::u(0, 2, "<0").text() == "<0 - -");
  CHECK_THROWS_AS(gd::u(2, 2), PreconditionError);
  CHECK_THROWS_AS(gd::v(3, 2), PreconditionError);
}

TEST_CASE("w strings") {
  CHECK(gd::w(BehaviorRelation::full(2)).text("") == "#");
  const auto expected = gd::u(1, 2) + gd::u(0, 2) + gd::u(0, 2) + gd::from_tokens({"#"}) + gd::v(0, 2) +
                        gd::v(1, 2) + gd::v(0, 2);
  CHECK(gd::w(rel(2, "0001")) == expected);
  CHECK(gd::bracket_balance(gd::w(BehaviorRelation(2))) == 0);
}

TEST_CASE("w_R realizes R on A_2 (exhaustive) and A_3 (sampled)") {
  const auto a2 = witness::build_A(2);
  for (const auto& r : all_relations(2)) {
    const auto g = gd::w(r);
    CHECK(relation_of(a2, g) == r);
    CHECK(testing_support::reference_relation(a2, g.encode(a2.alphabet)) == r);
  }
  const auto a3 = witness::build_A(3);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto r = BehaviorRelation::from_mask(3, rng() % 512);
    CHECK(relation_of(a3, gd::w(r)) == r);
  }
}

TEST_CASE("u_i w v_j removes exactly (i, j)") {
  const auto a2 = witness::build_A(2);
  for (const auto& r : all_relations(2)) {
    const auto inner = gd::w(r);
    for (State i = 0; i < 2; ++i)
      for (State j = 0; j < 2; ++j)
        CHECK(relation_of(a2, gd::u(i, 2) + inner + gd::v(j, 2)) == remove(relation_of(a2, inner), i, j));
  }
}

TEST_CASE("y filters a single state") {
  CHECK(gd::y(1, 2) == gd::w(rel(2, "0001")));
  for (std::uint32_t n = 2; n <= 3; ++n) {
    const auto a = witness::build_A(n);
    for (State i = 0; i < n; ++i) {
      BehaviorRelation only(n);
      only.insert(i, i);
      CHECK(relation_of(a, gd::y(i, n)) == only);
    }
  }
}

TEST_CASE("explicit y") {
  CHECK(gd::y_explicit(1, 2).text("") == "<>--<>-");
  for (std::uint32_t n = 2; n <= 3; ++n) {
    const auto a = witness::build_A(n);
    // Entered in 0, the trailing (<>-)^n reads "<>" in state 0, so nothing survives.
    CHECK(relation_of(a, gd::y_explicit(0, n)).empty());
    for (State i = 1; i < n; ++i) {
      const auto r = relation_of(a, gd::y_explicit(i, n));
      REQUIRE(r.count() == 1);
      State exit = n;
      for (State j = 0; j < n; ++j)
        if (r.member(i, j)) exit = j;
      REQUIRE(exit < n);
      // n + 1 decrements in total: the run leaves one state below its entry.
      CHECK(exit == i - 1);
    }
  }
}

TEST_CASE("anchors") {
  const auto a2 = witness::build_A(2);
  const auto anchor = gd::anchors(2);
  CHECK(anchor.push == gd::u(1, 2) + gd::u(0, 2));
  CHECK(anchor.pop == gd::v(1, 2) + gd::v(0, 2));
  CHECK(count(anchor.push, ">") == 0);
  CHECK(count(anchor.push, "#") == 0);
  CHECK(count(anchor.push, "<") == 2);
  CHECK(count(anchor.pop, ">") == 2);
  for (std::uint32_t n = 2; n <= 3; ++n) {
    const auto a = witness::build_A(n);
    const auto an = gd::anchors(n);
    CHECK(relation_of(a, an.push + gd::from_tokens({"#"}) + an.pop) == BehaviorRelation::diagonal(n));
  }
}

TEST_CASE("f strings") {
  const std::vector<BehaviorRelation> full{BehaviorRelation::full(2)};
  const std::vector<std::uint64_t> zeros{0, 0}, one_zero{1, 0};
  CHECK(gd::f(full, zeros, 2, 1).text("") == "<#<");
  CHECK(gd::f(full, one_zero, 2, 2).text("") == "<1#<0");
  CHECK(gd::bracket_balance(gd::f(full, zeros, 2, 1)) == 2);

  std::mt19937_64 rng(3);
  for (std::uint32_t m = 1; m <= 4; ++m) {
    std::vector<BehaviorRelation> rs;
    for (std::uint32_t k = 0; k < m; ++k) rs.push_back(BehaviorRelation::from_mask(2, 1 + rng() % 15));
    const std::vector<std::uint64_t> ls(m + 1, 0);
    CHECK(gd::bracket_balance(gd::f(rs, ls, 2, 1)) == static_cast<long>(m + 1));
  }

  const std::vector<BehaviorRelation> with_empty{BehaviorRelation(2)};
  CHECK_THROWS_AS(gd::f(with_empty, zeros, 2, 1), PreconditionError);
  CHECK_THROWS_AS(gd::f(full, std::vector<std::uint64_t>{0}, 2, 1), PreconditionError);
  CHECK_THROWS_AS(gd::f(full, std::vector<std::uint64_t>{2, 0}, 2, 2), PreconditionError);
}

TEST_CASE("g and h strings") {
  const auto hash = gd::from_tokens({"#"});
  const auto dbl = gd::from_tokens({">>"});
  const auto tpl = gd::from_tokens({">>>"});
  CHECK(gd::g(0, 0, 1, 1, 2) == hash + gd::y(0, 2) + dbl + gd::y(0, 2) + hash + gd::y(1, 2) + dbl + gd::y(0, 2));
  CHECK(gd::h(1, 0, 1, 2, 2) ==
        hash + dbl + hash + gd::y(0, 2, "<0") + tpl + gd::y(0, 2, "<0"));

  for (std::uint32_t m = 1; m <= 3; ++m)
    for (std::uint32_t k = 1; k <= m; ++k)
      CHECK(gd::bracket_balance(gd::g(1, 0, k, m, 2)) == -static_cast<long>(m + 1));
  for (std::uint32_t m = 1; m <= 3; ++m)
    for (std::uint32_t k = 1; k <= m + 1; ++k)
      CHECK(gd::bracket_balance(gd::h(k, 1, m, 2, 4)) == -static_cast<long>(m + 1));

  CHECK_THROWS_AS(gd::g(0, 0, 0, 1, 2), PreconditionError);
  CHECK_THROWS_AS(gd::g(0, 0, 2, 1, 2), PreconditionError);
  CHECK_THROWS_AS(gd::g(0, 0, 1, 1, 1), PreconditionError);
  CHECK_THROWS_AS(gd::h(1, 4, 1, 2, 16), PreconditionError);  // x = n^2
  CHECK_THROWS_AS(gd::h(3, 0, 1, 2, 2), PreconditionError);
  CHECK_THROWS_AS(gd::h(1, 1, 1, 2, 2), PreconditionError);  // bit 1 unused for s = 2
}

TEST_CASE("f then g is well nested") {
  const auto b = witness::build_B(2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::uint32_t m = 1 + rng() % 3;
    std::vector<BehaviorRelation> rs;
    for (std::uint32_t k = 0; k < m; ++k) rs.push_back(BehaviorRelation::from_mask(2, 1 + rng() % 15));
    const std::vector<std::uint64_t> ls(m + 1, 0);
    const auto word = gd::f(rs, ls, 2, 1) + gd::g(rng() % 2, rng() % 2, 1 + rng() % m, m, 2);
    CHECK(is_well_nested(word.encode(b.alphabet), b.alphabet));
  }
}

TEST_CASE("h selects bits of the bracket index") {
  const auto b = witness::build_Bns(2, 2);
  const std::vector<BehaviorRelation> full{BehaviorRelation::full(2)};
  const auto h = gd::h(1, 0, 1, 2, 2);
  CHECK(sim::nidpda_accepts(b, (gd::f(full, std::vector<std::uint64_t>{1, 0}, 2, 2) + h).encode(b.alphabet)));
  CHECK_FALSE(sim::nidpda_accepts(b, (gd::f(full, std::vector<std::uint64_t>{0, 0}, 2, 2) + h).encode(b.alphabet)));
}
