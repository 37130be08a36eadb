#include <catch2/catch_amalgamated.hpp>

#include "pcg/presentation.hpp"

using namespace pcg;

static const char* kC9 = R"(pgroup p=3
gen a order 9
)";

TEST_CASE("parse minimal cyclic presentation") {
  Presentation p = parse(kC9);
  CHECK(p.prime == 3);
  REQUIRE(p.generators.size() == 1);
  CHECK(p.generators[0].name == "a");
  CHECK(p.generators[0].order == 9);
  CHECK(p.power_tails.empty());
  CHECK(p.commutator_tails.empty());
  CHECK(validate(p).empty());
}

TEST_CASE("parse relations and words") {
  Presentation p = parse(
      "pgroup p=3\n"
      "gen x order 3\n"
      "gen y order 3\n"
      "gen z order 3\n"
      "# a comment line\n"
      "comm [y,x] = z\n"
      "pow z = 1\n");
  REQUIRE(p.commutator_tails.size() == 1);
  Word w = p.commutator_tails.at({1, 0});
  REQUIRE(w.terms.size() == 1);
  CHECK(w.terms[0] == std::pair<int, long long>{2, 1});
  CHECK(p.power_tails.empty());  // "pow z = 1" is the trivial tail
  CHECK(validate(p).empty());
}

TEST_CASE("parse errors") {
  SECTION("unknown generator in a relation") {
    try {
      parse("pgroup p=3\ngen b order 3\ngen a order 3\ncomm [b,a] = q\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == ErrorCode::unknown_generator);
      CHECK(e.line == 4);
    }
  }
  SECTION("duplicate generator") {
    CHECK_THROWS_AS(parse("pgroup p=3\ngen a order 3\ngen a order 9\n"), Error);
  }
  SECTION("order not a power of the prime") {
    try {
      parse("pgroup p=3\ngen a order 6\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == ErrorCode::bad_order);
    }
  }
  SECTION("syntax error carries line number") {
    try {
      parse("pgroup p=3\ngen a order 3\nfrobnicate\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == ErrorCode::syntax);
      CHECK(e.line == 3);
    }
  }
  SECTION("composite p rejected") {
    CHECK_THROWS_AS(parse("pgroup p=4\ngen a order 4\n"), Error);
  }
}

TEST_CASE("serialize round trip and idempotence") {
  Presentation p = parse(
      "pgroup p=3\n"
      "gen a order 9\n"
      "gen b order 3\n"
      "gen c order 3\n"
      "comm [c,a] = 1\n"
      "comm [b,a] = c\n"
      "pow a = c\n");
  std::string s = serialize(p);
  Presentation q = parse(s);
  CHECK(p == q);
  CHECK(serialize(q) == s);
  // relation lines are emitted sorted by (leading index, second index)
  CHECK(s.find("comm [b,a]") < s.find("comm [c,a]"));
}

TEST_CASE("validate shape rules") {
  // tail of [g3,g1] may mention g2 (index between the two), not g3 itself
  Presentation ok = parse(
      "pgroup p=3\ngen g1 order 3\ngen g2 order 3\ngen g3 order 3\n"
      "comm [g3,g1] = g2\n");
  CHECK(validate(ok).empty());

  Presentation self = parse(
      "pgroup p=3\ngen g1 order 3\ngen g2 order 3\ngen g3 order 3\n"
      "comm [g3,g1] = g3\n");
  auto diags = validate(self);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].rule == "comm-shape");

  Presentation low = parse(
      "pgroup p=3\ngen g1 order 3\ngen g2 order 3\ngen g3 order 3\n"
      "comm [g3,g2] = g1\n");
  CHECK_FALSE(validate(low).empty());

  Presentation pow_bad = parse(
      "pgroup p=3\ngen g1 order 3\ngen g2 order 3\n"
      "pow g2 = g1\n");
  auto pd = validate(pow_bad);
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].rule == "power-shape");
}
