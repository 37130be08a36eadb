#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcg/catalog.hpp"
#include "pcg/collector.hpp"
#include "pcg/presentation.hpp"

using namespace pcg;

static PcGroup c9() {
  return PcGroup::build(parse("pgroup p=3\ngen a order 9\n"));
}

// extraspecial 3^{1+2} of exponent 3
static PcGroup heisenberg() {
  return PcGroup::build(parse(
      "pgroup p=3\n"
      "gen x order 3\ngen y order 3\ngen z order 3\n"
      "comm [y,x] = z\n"));
}

// modular group of order 27 (extraspecial of exponent 9)
static PcGroup m27() {
  return PcGroup::build(parse(
      "pgroup p=3\n"
      "gen g1 order 3\ngen g2 order 3\ngen g3 order 3\n"
      "pow g2 = g3\n"
      "comm [g2,g1] = g3\n"));
}

TEST_CASE("cyclic group of order 9") {
  PcGroup g = c9();
  CHECK(g.order() == 9);
  Element a = g.generator(0);
  CHECK(g.normalize(Word{{{0, 11}}}) == g.element({2}));
  CHECK(g.multiply(g.element({2}), g.element({2})) == g.element({4}));
  CHECK(g.inverse(g.element({4})) == g.element({5}));
  CHECK(g.power(g.element({1}), 9) == g.identity());
  CHECK(g.power(a, 1) == a);
  CHECK(g.power(a, -1) == g.inverse(a));
  CHECK(g.element_order(a) == 9);
  CHECK(g.element_order(g.element({3})) == 3);
  CHECK(g.element_order(g.identity()) == 1);
  CHECK(g.check_consistency().empty());
}

TEST_CASE("empty word is the identity") {
  PcGroup g = heisenberg();
  CHECK(g.normalize(Word{}) == g.identity());
}

TEST_CASE("heisenberg group arithmetic") {
  PcGroup g = heisenberg();
  CHECK(g.order() == 27);
  CHECK(g.check_consistency().empty());
  Element x = g.generator(0), y = g.generator(1), z = g.generator(2);
  // y*x = x*y*z
  CHECK(g.normalize(Word{{{1, 1}, {0, 1}}}) == g.element({1, 1, 1}));
  CHECK(g.commutator({y, x}) == z);
  CHECK(g.commutator({x, y}) == g.inverse(z));
  // class 2: [x,y,x] = 1
  CHECK(g.commutator({x, y, x}) == g.identity());
  // exponent 3
  for (std::uint64_t v = 0; v < g.order(); ++v)
    CHECK(g.power(g.unpack(v), 3) == g.identity());
}

TEST_CASE("m27 has exponent 9") {
  PcGroup g = m27();
  CHECK(g.order() == 27);
  CHECK(g.check_consistency().empty());
  CHECK(g.element_order(g.generator(1)) == 9);
  std::uint64_t maxo = 1;
  for (std::uint64_t v = 0; v < g.order(); ++v)
    maxo = std::max(maxo, g.element_order(g.unpack(v)));
  CHECK(maxo == 9);
}

TEST_CASE("group properties on random elements") {
  std::mt19937_64 rng(12345);
  for (PcGroup g : {heisenberg(), m27()}) {
    std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
    for (int t = 0; t < 200; ++t) {
      Element a = g.unpack(d(rng)), b = g.unpack(d(rng)), c = g.unpack(d(rng));
      CHECK(g.multiply(g.identity(), a) == a);
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    }
  }
}

TEST_CASE("inconsistent presentation is rejected") {
  Presentation bad = parse(
      "pgroup p=3\n"
      "gen g1 order 3\ngen g2 order 3\n"
      "comm [g2,g1] = g1\n");
  CHECK_FALSE(validate(bad).empty());  // shape diagnostic, and:
  try {
    PcGroup::build(bad, {.checked = true, .collection_budget = 1 << 14});
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::inconsistent);
  }
  PcGroup g = PcGroup::build(bad, {.checked = false, .collection_budget = 1 << 14});
  CHECK_FALSE(g.check_consistency().empty());
}

TEST_CASE("mixed group elements are rejected") {
  PcGroup g = heisenberg(), h = heisenberg();
  CHECK_THROWS_AS(g.multiply(g.identity(), h.identity()), Error);
}

TEST_CASE("capacity guards") {
  // 41 generators of order 9 exceed the 2^62 order bound
  std::string text = "pgroup p=3\n";
  for (int i = 0; i < 41; ++i)
    text += "gen t" + std::to_string(i) + " order 9\n";
  try {
    PcGroup::build(parse(text));
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::capacity);
  }
}

TEST_CASE("pack/unpack is a bijection in lex order") {
  PcGroup g = m27();
  Element prev = g.unpack(0);
  for (std::uint64_t v = 1; v < g.order(); ++v) {
    Element cur = g.unpack(v);
    CHECK(g.pack(cur) == v);
    CHECK(prev < cur);
    prev = cur;
  }
}

TEST_CASE("table-driven product matches term-by-term collection") {
  std::mt19937_64 rng(777);
  auto check_group = [&](const std::string& name, int trials) {
    PcGroup g = PcGroup::build(catalog_get(name));
    std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
    for (int t = 0; t < trials; ++t) {
      Element a = g.unpack(d(rng)), b = g.unpack(d(rng));
      PcGroup::Buf fast{}, slow{};
      g.load(fast, a);
      g.mul_raw(fast.data(), b.exps().data());
      g.load(slow, a);
      for (int i = 0; i < g.ngens(); ++i)
        if (b[i]) g.mul_term(slow.data(), i, b[i]);
      CHECK(g.to_element(fast) == g.to_element(slow));
    }
  };
  for (const char* name : {"heisenberg", "m27", "c3wrc3", "b23", "m27xc9"})
    check_group(name, 300);
  check_group("example38", 500);
}
