#include <catch2/catch_amalgamated.hpp>

#include "pcg/catalog.hpp"
#include "pcg/collector.hpp"
#include "pcg/identities.hpp"
#include "pcg/presentation.hpp"

using namespace pcg;

static PcGroup cat(const char* name) {
  return PcGroup::build(catalog_get(name));
}

TEST_CASE("hall-witt holds exhaustively on small groups") {
  for (const char* name : {"heisenberg", "m27", "c3wrc3"}) {
    PcGroup g = cat(name);
    ClaimReport r = hall_witt(g);
    CHECK(r.verdict == ClaimVerdict::holds);
    CHECK(r.checked == g.order() * g.order() * g.order());
  }
}

TEST_CASE("hall-witt sampled on a larger group") {
  PcGroup g = cat("b23");
  IdentityOptions opts;
  opts.mode = Mode::sampled;
  opts.samples = 2000;
  ClaimReport r = hall_witt(g, opts);
  CHECK(r.verdict == ClaimVerdict::holds);
  CHECK(r.checked == 2000);
}

TEST_CASE("lemma31 exhaustive on semi-3-abelian groups") {
  for (const char* name : {"heisenberg", "m27", "c3xc9"}) {
    PcGroup g = cat(name);
    FactCache f(g);
    ClaimReport r = lemma31(f);
    INFO(name);
    CHECK(r.verdict == ClaimVerdict::holds);
    CHECK(r.hypothesis == HypothesisStatus::satisfied);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("lemma31 sampled when Omega_1 is the whole group") {
  PcGroup g = cat("b23");
  FactCache f(g);
  IdentityOptions opts;
  opts.mode = Mode::sampled;
  opts.samples = 2000;
  ClaimReport r = lemma31(f, opts);
  CHECK(r.verdict == ClaimVerdict::holds);
  CHECK(r.checked == 2000);
}

TEST_CASE("lemma31 vacuous without the hypothesis") {
  // all generators of c3wrc3 have order 3 yet their product has order 9,
  // so it is not semi-3-abelian
  PcGroup g = cat("c3wrc3");
  FactCache f(g);
  REQUIRE(f.semi(1).holds == Tri::no);
  ClaimReport r = lemma31(f);
  CHECK(r.verdict == ClaimVerdict::vacuous);
  CHECK(r.hypothesis == HypothesisStatus::violated);
}

TEST_CASE("lemma32 with k=2 agrees with lemma31 pointwise") {
  // [x,a,b][x,b,a] = 1 iff [x,b,a] = [x,a,b]^-1; with k=2 the identity says
  // [x,b,a] = [x,a,b]^2, equivalent when the commutator has order dividing 3
  for (const char* name : {"heisenberg", "m27", "c3xc9"}) {
    PcGroup g = cat(name);
    FactCache f(g);
    ClaimReport r2 = lemma32(f, 2);
    ClaimReport r1 = lemma31(f);
    INFO(name);
    CHECK(r2.verdict == r1.verdict);
  }
}

TEST_CASE("lemma32 k=3 exhaustive on small semi-3 groups") {
  for (const char* name : {"heisenberg", "m27"}) {
    PcGroup g = cat(name);
    FactCache f(g);
    ClaimReport r = lemma32(f, 3);
    INFO(name);
    CHECK(r.verdict == ClaimVerdict::holds);
  }
}

TEST_CASE("lemma32 rejects bad k") {
  PcGroup g = cat("m27");
  CHECK_THROWS_AS(lemma32(g, 1), Error);
  CHECK_THROWS_AS(lemma32(g, 5), Error);
}

TEST_CASE("lemma33 structural check") {
  for (const char* name : {"heisenberg", "m27", "c3xc9", "b23"}) {
    PcGroup g = cat(name);
    FactCache f(g);
    ClaimReport r = lemma33(f);
    INFO(name);
    CHECK(r.verdict == ClaimVerdict::holds);
    CHECK(r.mode == Mode::structural);
  }
}

TEST_CASE("lemma34 exhaustive on class <= 3 groups") {
  for (const char* name : {"cyclic", "heisenberg", "m27", "c3wrc3"}) {
    PcGroup g = cat(name);
    ClaimReport r = lemma34(g);
    INFO(name);
    CHECK(r.verdict == ClaimVerdict::holds);
    CHECK(r.checked == g.order() * g.order());
  }
}

TEST_CASE("lemma34 sampled on b23") {
  PcGroup g = cat("b23");
  IdentityOptions opts;
  opts.mode = g.order() <= opts.pair_cap ? Mode::exhaustive : Mode::sampled;
  ClaimReport r = lemma34(g, opts);
  CHECK((r.verdict == ClaimVerdict::holds || r.verdict == ClaimVerdict::fails));
  if (r.verdict == ClaimVerdict::fails) {
    // witness must re-verify: re-evaluate both sides directly
    REQUIRE(r.witness.size() == 2);
    const Element &a = r.witness[0], &b = r.witness[1];
    Element ab = g.multiply(a, b);
    Element c = g.commutator({ab, b});
    Element lhs = g.multiply(g.power(a, 3), g.power(b, 3));
    Element rhs = g.multiply(
        g.multiply(g.multiply(g.power(ab, 3), g.power(c, 3)),
                   g.conjugate(g.commutator({c, ab}), g.power(c, 2))),
        g.commutator({c, b}));
    CHECK(lhs != rhs);
  }
}

TEST_CASE("thm36 vacuous on groups without the hypothesis") {
  for (const char* name : {"cyclic", "heisenberg"}) {
    PcGroup g = cat(name);
    FactCache f(g);
    for (int c : {1, 2}) {
      ClaimReport r = thm36(f, c);
      INFO(name << " case " << c);
      CHECK(r.verdict == ClaimVerdict::vacuous);
    }
  }
}

TEST_CASE("thm36 rejects bad case") {
  PcGroup g = cat("m27");
  CHECK_THROWS_AS(thm36(g, 0), Error);
  CHECK_THROWS_AS(thm36(g, 3), Error);
}

TEST_CASE("fact cache basics on m27") {
  PcGroup g = cat("m27");
  FactCache f(g);
  CHECK(f.rank() == 2);
  CHECK(f.nclass() == 2);
  CHECK(f.metabelian());
  CHECK(f.exponent() == 9);
  CHECK(f.exponent_log() == 2);
  CHECK(f.semi(1).holds == Tri::yes);
  CHECK(f.semi(2).holds == Tri::yes);
  CHECK(f.inner(2).holds == Tri::no);
  CHECK(f.strongly() == Tri::yes);
}

TEST_CASE("agemo subgroup matches the direct scan") {
  for (const char* name : {"m27", "c3wrc3", "b23", "c3xc9"}) {
    PcGroup g = cat(name);
    FactCache f(g);
    for (int i : {1, 2}) {
      INFO(name << " i=" << i);
      CHECK(f.agemo_sub(i).order() == agemo(g, i).subgroup.order());
    }
  }
}

TEST_CASE("verify_claims covers the registry and respects filters") {
  PcGroup g = cat("m27");
  auto all = verify_claims(g);
  CHECK(all.size() == claim_ids().size());
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].id == claim_ids()[i]);
  auto some = verify_claims(g, {"L3.4", "T1.3"});
  REQUIRE(some.size() == 2);
  CHECK(some[0].id == "L3.4");
  CHECK(some[1].id == "T1.3");
}

TEST_CASE("claims on m27") {
  PcGroup g = cat("m27");
  auto rs = verify_claims(g);
  for (const ClaimReport& r : rs) {
    INFO(r.id << ": " << r.note);
    CHECK(r.verdict != ClaimVerdict::fails);
    if (r.id == "L2.1" || r.id == "L2.2" || r.id == "L2.3" || r.id == "T1.3" ||
        r.id == "L3.1")
      CHECK(r.verdict == ClaimVerdict::holds);
    if (r.id == "L2.5" || r.id == "T1.2" || r.id == "R1")
      CHECK(r.verdict == ClaimVerdict::vacuous);  // not inner semi-9
  }
}

TEST_CASE("claims on c3wrc3 and b23 never fail") {
  for (const char* name : {"c3wrc3", "b23"}) {
    PcGroup g = cat(name);
    IdentityOptions opts;
    opts.samples = 2000;
    auto rs = verify_claims(g, {}, opts);
    for (const ClaimReport& r : rs) {
      INFO(name << " " << r.id << ": " << r.note);
      CHECK(r.verdict != ClaimVerdict::fails);
    }
  }
}

TEST_CASE("failing witnesses re-verify") {
  // force a semi-3 failure to surface through T1.3 on a metabelian group
  PcGroup g = PcGroup::build(parse(
      "pgroup p=3\n"
      "gen g1 order 9\ngen g2 order 3\ngen g3 order 3\ngen g4 order 3\n"
      "comm [g2,g1] = g3\n"
      "comm [g3,g1] = g4\n"));
  FactCache f(g);
  if (f.metabelian() && f.semi(1).holds == Tri::yes) {
    ClaimReport r = claim_t13(f);
    if (r.verdict == ClaimVerdict::fails) {
      REQUIRE(r.witness.size() == 2);
      // the recorded pair violates (ab)^q = a^q b^q at the failing level
      long long q = 1;
      for (int j = 0; j < f.strongly_fail_i(); ++j) q *= 3;
      Element a = r.witness[0], b = r.witness[1];
      CHECK(g.power(g.multiply(a, b), q) !=
            g.multiply(g.power(a, q), g.power(b, q)));
    }
  }
}
