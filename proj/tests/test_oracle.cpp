#include <catch2/catch_amalgamated.hpp>

#include "pcg/collector.hpp"
#include "pcg/oracle.hpp"
#include "pcg/presentation.hpp"

using namespace pcg;

static PcGroup c3() {
  return PcGroup::build(parse("pgroup p=3\ngen a order 3\n"));
}
static PcGroup c9() {
  return PcGroup::build(parse("pgroup p=3\ngen a order 9\n"));
}
static PcGroup heisenberg() {
  return PcGroup::build(parse(
      "pgroup p=3\n"
      "gen x order 3\ngen y order 3\ngen z order 3\n"
      "comm [y,x] = z\n"));
}
static PcGroup m27() {
  return PcGroup::build(parse(
      "pgroup p=3\n"
      "gen g1 order 3\ngen g2 order 3\ngen g3 order 3\n"
      "pow g2 = g3\n"
      "comm [g2,g1] = g3\n"));
}
static PcGroup c3wrc3() {
  return PcGroup::build(parse(
      "pgroup p=3\n"
      "gen g1 order 3\ngen g2 order 3\ngen g3 order 3\ngen g4 order 3\n"
      "comm [g2,g1] = g3\n"
      "comm [g3,g1] = g4\n"));
}

TEST_CASE("c3 table is addition mod 3") {
  PcGroup g = c3();
  CayleyTable t = CayleyTable::build(g);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) CHECK(t.mul(a, b) == (a + b) % 3);
  CHECK(t.inv(1) == 2);
  CHECK(t.element_order(1) == 3);
  CHECK(t.element_order(0) == 1);
}

TEST_CASE("cross validation agrees on all catalog-sized groups") {
  for (const PcGroup& g : {c9(), heisenberg(), m27(), c3wrc3()}) {
    CayleyTable t = CayleyTable::build(g);
    CrossValidation cv = cross_validate(g, t);
    CHECK(cv.ok);
    CHECK(cv.disagreements.empty());
    CHECK(cv.checked == g.order() * g.order());
  }
}

TEST_CASE("corrupted table is detected") {
  PcGroup g = heisenberg();
  CayleyTable t = CayleyTable::build(g);
  t.corrupt(1, 2, t.mul(1, 2) == 0 ? 1 : 0);
  CHECK_THROWS_AS(t.verify_latin_square(), Error);
  CrossValidation cv = cross_validate(g, t);
  CHECK_FALSE(cv.ok);
  CHECK_FALSE(cv.disagreements.empty());
}

TEST_CASE("oracle semi-abelian verdicts") {
  {
    PcGroup g = c9();
    CayleyTable t = CayleyTable::build(g);
    CHECK(oracle_semi_abelian(g, t, 1).holds == Tri::yes);
    CHECK(oracle_semi_abelian(g, t, 2).holds == Tri::yes);
  }
  {
    PcGroup g = heisenberg();
    CayleyTable t = CayleyTable::build(g);
    CHECK(oracle_semi_abelian(g, t, 1).holds == Tri::yes);
  }
  {
    PcGroup g = m27();
    CayleyTable t = CayleyTable::build(g);
    CHECK(oracle_semi_abelian(g, t, 1).holds == Tri::yes);
    CHECK(oracle_semi_abelian(g, t, 2).holds == Tri::yes);
  }
  {
    PcGroup g = c3wrc3();
    CayleyTable t = CayleyTable::build(g);
    Verdict v = oracle_semi_abelian(g, t, 1);
    REQUIRE(v.holds == Tri::no);
    REQUIRE(v.witness);
    // re-verify the witness with collector arithmetic
    auto [a, b] = *v.witness;
    bool lhs = g.power(g.multiply(a, b), 3).is_identity();
    bool rhs = g.multiply(g.power(a, 3), g.power(b, 3)).is_identity();
    CHECK(lhs != rhs);
    CHECK(oracle_semi_abelian(g, t, 2).holds == Tri::yes);
  }
}

TEST_CASE("oracle capacity guard") {
  std::string text = "pgroup p=3\n";
  for (int i = 0; i < 8; ++i)
    text += "gen t" + std::to_string(i) + " order 3\n";
  PcGroup g = PcGroup::build(parse(text));  // order 3^8 > 3^7
  CHECK_THROWS_AS(CayleyTable::build(g), Error);
}
