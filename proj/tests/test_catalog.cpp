#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "pcg/catalog.hpp"
#include "pcg/collector.hpp"
#include "pcg/presentation.hpp"
#include "pcg/properties.hpp"
#include "pcg/structure.hpp"

using namespace pcg;

static std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("every entry validates and is consistent at default parameters") {
  for (const CatalogEntry& e : catalog()) {
    INFO(e.name);
    Presentation pres = catalog_get(e.name);
    CHECK(validate(pres).empty());
    PcGroup g = PcGroup::build(pres);
    CHECK(g.check_consistency().empty());
  }
}

TEST_CASE("shipped .pcp files match the embedded sources") {
  for (const CatalogEntry& e : catalog()) {
    INFO(e.name);
    CHECK(slurp(std::string(PCG_DATA_DIR) + "/catalog/" + e.name + ".pcp") ==
          catalog_source(e.name));
  }
}

TEST_CASE("documented orders") {
  auto order_of = [](const std::string& name, const Params& ps = {}) {
    return PcGroup::build(catalog_get(name, ps)).order();
  };
  CHECK(order_of("cyclic") == 3);
  CHECK(order_of("cyclic", {{"k", 2}}) == 9);
  CHECK(order_of("elementary") == 9);
  CHECK(order_of("elementary", {{"d", 3}}) == 27);
  CHECK(order_of("heisenberg") == 27);
  CHECK(order_of("m27") == 27);
  CHECK(order_of("c3wrc3") == 81);
  CHECK(order_of("b23") == 2187);
  CHECK(order_of("c3xc9") == 27);
  CHECK(order_of("heisenbergxc3") == 81);
  CHECK(order_of("m27xc9") == 243);
  CHECK(order_of("example38") == 14348907);            // 3^15
  CHECK(order_of("example38", {{"n", 4}}) == 43046721);  // 3^16
}

TEST_CASE("documented classes and exponents") {
  auto build = [](const std::string& name) {
    return PcGroup::build(catalog_get(name));
  };
  {
    PcGroup g = build("b23");
    CHECK(nilpotency_class(g) == 3);
    CHECK(group_exponent(g) == 3);
  }
  CHECK(nilpotency_class(build("c3wrc3")) == 3);
  CHECK(nilpotency_class(build("heisenberg")) == 2);
  CHECK(nilpotency_class(build("m27")) == 2);
  CHECK(group_exponent(build("m27xc9")) == 9);
}

TEST_CASE("example38 construction facts, stable in n") {
  for (long long n : {3LL, 4LL}) {
    PcGroup g = PcGroup::build(catalog_get("example38", {{"n", n}}));
    INFO("n=" << n);
    Element a1 = g.generator(0), a2 = g.generator(1);
    CHECK(g.element_order(a1) == 9);
    std::uint64_t a2ord = 1;
    for (long long i = 0; i < n; ++i) a2ord *= 3;
    CHECK(g.element_order(a2) == a2ord);
    Element c1 = g.commutator({a1, a2, a1});
    Element c2 = g.commutator({a1, a2, a2});
    CHECK(g.element_order(c1) == 3);
    CHECK(g.element_order(c2) == 9);
    CHECK(g.power(c2, 3) == g.commutator({a1, a2, a2, a1, a1}));
    CHECK(nilpotency_class(g) == 5);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(catalog_get("example38", {{"n", 2}}), Error);
  CHECK_THROWS_AS(catalog_get("cyclic", {{"k", 0}}), Error);
  CHECK_THROWS_AS(catalog_get("cyclic", {{"bogus", 1}}), Error);
  CHECK_THROWS_AS(catalog_get("nosuchgroup"), Error);
  try {
    catalog_get("example38", {{"n", 2}});
    FAIL("expected bad_parameter");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::bad_parameter);
  }
}

TEST_CASE("spec string parsing") {
  Presentation p = catalog_get_spec("cyclic:p=3,k=2");
  CHECK(PcGroup::build(p).order() == 9);
  CHECK(PcGroup::build(catalog_get_spec("heisenberg")).order() == 27);
  CHECK_THROWS_AS(catalog_get_spec("cyclic:k"), Error);
  CHECK_THROWS_AS(catalog_get_spec("cyclic:k=two"), Error);
}

TEST_CASE("bad fixtures are rejected") {
  const std::string dir = std::string(PCG_DATA_DIR) + "/bad/";
  // shape/parse errors
  for (const char* f : {"shape_comm.pcp", "shape_pow.pcp", "bad_order.pcp"}) {
    INFO(f);
    bool rejected = false;
    try {
      Presentation pres = parse(slurp(dir + f));
      rejected = !validate(pres).empty();
    } catch (const Error&) {
      rejected = true;
    }
    CHECK(rejected);
  }
  // shape-valid but inconsistent: check_consistency names the failing overlap
  for (const char* f : {"twisted_exponent3.pcp", "power_overlap.pcp"}) {
    INFO(f);
    Presentation pres = parse(slurp(dir + f));
    CHECK(validate(pres).empty());
    BuildOptions unchecked;
    unchecked.checked = false;
    auto defects = PcGroup::build(pres, unchecked).check_consistency();
    REQUIRE_FALSE(defects.empty());
    CHECK_FALSE(defects.front().overlap.empty());
  }
}
