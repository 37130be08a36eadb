#pragma once

// Commutator-identity checkers and the claim registry: each claim first
// evaluates its hypothesis with the property deciders (vacuous when unmet),
// and every failing verdict carries a witness tuple that re-verifies under
// plain collector arithmetic. A FactCache shares the expensive facts
// (series, torsion, semi-p^i verdicts, agemo subgroups) across claims.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pcg/collector.hpp"
#include "pcg/properties.hpp"
#include "pcg/report.hpp"
#include "pcg/structure.hpp"

namespace pcg {

struct IdentityOptions {
  Mode mode = Mode::exhaustive;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 12345;
  int tasks = 1;
  std::uint64_t cap = kDefaultEnumCap;
  std::uint64_t pair_cap = 2187;        // |G| cap for exhaustive pair scans
  std::uint64_t tuple_cap = 20000000;   // combination cap for exhaustive scans
  std::uint64_t witness_budget = 100;   // classified witnesses per thm36 case
};

inline PropOptions to_prop(const IdentityOptions& o) {
  PropOptions p;
  p.mode = Mode::exhaustive;
  p.samples = o.samples;
  p.seed = o.seed;
  p.tasks = o.tasks;
  p.cap = o.cap;
  p.pair_cap = o.pair_cap;
  return p;
}

namespace detail {

// out := [a, b] = a^{-1} b^{-1} a b
inline void comm_raw(const PcGroup& g, const Exp* a, const Exp* b,
                     PcGroup::Buf& out) {
  PcGroup::Buf bi{};
  inv_raw(g, a, out);
  inv_raw(g, b, bi);
  g.mul_raw(out.data(), bi.data());
  g.mul_raw(out.data(), a);
  g.mul_raw(out.data(), b);
}

inline int perm_parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv & 1;
}

}  // namespace detail

// Lazily computed, memoized structural facts of one group.
class FactCache {
 public:
  explicit FactCache(const PcGroup& g, const PropOptions& opts = {})
      : g_(g), opts_(opts), whole_(Subgroup::whole(g)) {}

  const PcGroup& group() const { return g_; }
  const Subgroup& whole() const { return whole_; }
  const PropOptions& options() const { return opts_; }

  const std::vector<Subgroup>& lcs() {
    if (!lcs_) lcs_ = lower_central_series(g_);
    return *lcs_;
  }
  // G_i (1-based); terms past the end of the series are trivial
  const Subgroup& term(int i) {
    const auto& s = lcs();
    return s[std::min((size_t)(i - 1), s.size() - 1)];
  }
  int nclass() { return (int)lcs().size() - 1; }
  const Subgroup& derived() { return term(2); }

  bool metabelian() {
    if (!metabelian_)
      metabelian_ = commutator_subgroup(derived(), derived()).is_trivial();
    return *metabelian_;
  }

  const FrattiniResult& frattini() {
    if (!frat_) frat_ = frattini_and_maximals(g_);
    return *frat_;
  }
  int rank() { return (int)frattini().quotient_basis.size(); }

  const TorsionInfo& torsion(int i) {
    auto it = torsion_.find(i);
    if (it == torsion_.end())
      it = torsion_.emplace(i, torsion_generators(whole_, i, opts_)).first;
    return it->second;
  }

  const Verdict& semi(int i) {
    auto it = semi_.find(i);
    if (it == semi_.end())
      it = semi_.emplace(i, is_semi_abelian_pi(whole_, i, torsion(i), opts_))
               .first;
    return it->second;
  }

  const Verdict& inner(int i) {
    auto it = inner_.find(i);
    if (it != inner_.end()) return it->second;
    Verdict v;
    v.property = "inner semi-p^" + std::to_string(i) + "-abelian";
    v.mode = Mode::exhaustive;
    const Verdict& whole_v = semi(i);
    v.checked = whole_v.checked;
    if (whole_v.holds == Tri::yes) {
      v.holds = Tri::no;
      v.note = "the group itself is semi-p^" + std::to_string(i) + "-abelian";
    } else {
      v.holds = Tri::yes;
      const auto& maximals = frattini().maximals;
      for (size_t m = 0; m < maximals.size(); ++m) {
        Verdict vm = is_semi_abelian_pi(maximals[m], i, opts_);
        v.checked += vm.checked;
        if (vm.holds != Tri::yes) {
          v.holds = Tri::no;
          v.witness = vm.witness;
          v.note = "maximal subgroup #" + std::to_string(m) + " fails";
          break;
        }
      }
      if (v.holds == Tri::yes) {
        v.witness = whole_v.witness;
        v.note = "group fails, all " + std::to_string(maximals.size()) +
                 " maximal subgroups pass";
      }
    }
    return inner_.emplace(i, std::move(v)).first->second;
  }

  std::uint64_t exponent() {
    if (!exp_) exp_ = group_exponent(whole_, opts_);
    return *exp_;
  }
  int exponent_log() {
    int r = 0;
    for (std::uint64_t e = exponent(); e > 1; e /= g_.prime()) ++r;
    return r;
  }
  std::uint64_t subgroup_exponent(const Subgroup& h) {
    return group_exponent(h, opts_);
  }

  // conjunction of semi(i) over i = 1..r, refuting cheaply before the exact
  // exponent is needed (generator orders bound r from below)
  Tri strongly(std::string* why = nullptr) {
    int r_lb = 0;
    for (int i = 0; i < g_.ngens(); ++i) {
      std::uint64_t o = g_.element_order(g_.generator(i));
      int r = 0;
      while (o > 1) {
        o /= g_.prime();
        ++r;
      }
      r_lb = std::max(r_lb, r);
    }
    auto fail = [&](int i) {
      if (why) *why = "fails at i=" + std::to_string(i);
      strongly_fail_i_ = i;
      return Tri::no;
    };
    for (int i = 1; i <= r_lb; ++i)
      if (semi(i).holds != Tri::yes) return fail(i);
    const int r = exponent_log();
    for (int i = r_lb + 1; i <= r; ++i)
      if (semi(i).holds != Tri::yes) return fail(i);
    return Tri::yes;
  }
  int strongly_fail_i() const { return strongly_fail_i_; }

  // Agemo_i as a subgroup (i in {1,2}); large groups are scanned over the
  // central-core transversal: (rz)^q = r^q z^q, so the q-th powers of the
  // representatives together with those of the (abelian) core generate.
  const Subgroup& agemo_sub(int i) {
    auto it = agemo_.find(i);
    if (it != agemo_.end()) return it->second;
    Subgroup u = Subgroup::trivial(g_);
    const TorsionInfo& t1 = torsion(1);
    if (t1.trans) {
      const CentralTransversal& tr = *t1.trans;
      long long q = 1;
      for (int r = 0; r < i; ++r) q *= g_.prime();
      for (const Element& c : tr.core().basis()) {
        Element cp = g_.power(c, q);
        if (!cp.is_identity() && !u.contains(cp)) u.add(cp);
      }
      std::unordered_set<std::uint64_t> seen;
      PcGroup::Buf y{};
      tr.enumerate(0, tr.size(), [&](const PcGroup::Buf& r) {
        detail::pow_pi_raw(g_, r.data(), i, y);
        if (seen.insert(g_.pack_raw(y.data())).second &&
            !u.contains_raw(y.data()))
          u.add_raw(y);
      });
    } else {
      u = agemo(g_, i, opts_.cap, opts_.tasks).subgroup;
    }
    return agemo_.emplace(i, std::move(u)).first->second;
  }

  bool central(const Element& x) {
    PcGroup::Buf b{};
    g_.load(b, x);
    return detail::raw_central(g_, b.data());
  }

 private:
  const PcGroup& g_;
  PropOptions opts_;
  Subgroup whole_;
  std::optional<std::vector<Subgroup>> lcs_;
  std::optional<bool> metabelian_;
  std::optional<FrattiniResult> frat_;
  std::optional<std::uint64_t> exp_;
  std::map<int, TorsionInfo> torsion_;
  std::map<int, Verdict> semi_;
  std::map<int, Verdict> inner_;
  std::map<int, Subgroup> agemo_;
  int strongly_fail_i_ = 0;
};

// ---------------------------------------------------------------------------
// Universal identity: [[x,y^-1],z]^y [[y,z^-1],x]^z [[z,x^-1],y]^x = 1.
// A violation would be a collector defect, not a group-theoretic finding.
inline ClaimReport hall_witt(const PcGroup& g, const IdentityOptions& opts = {}) {
  ClaimReport r;
  r.id = "HW";
  r.statement = "[[x,y^-1],z]^y [[y,z^-1],x]^z [[z,x^-1],y]^x = 1";
  r.hypothesis = HypothesisStatus::satisfied;
  r.mode = opts.mode;
  auto violated = [&](const Element& x, const Element& y, const Element& z) {
    Element t1 = g.conjugate(g.commutator({x, g.inverse(y), z}), y);
    Element t2 = g.conjugate(g.commutator({y, g.inverse(z), x}), z);
    Element t3 = g.conjugate(g.commutator({z, g.inverse(x), y}), x);
    return !g.multiply(g.multiply(t1, t2), t3).is_identity();
  };
  if (opts.mode == Mode::exhaustive) {
    const std::uint64_t n = g.order();
    if (n * n > opts.tuple_cap / n)
      throw Error(ErrorCode::capacity,
                  "group too large for the exhaustive triple scan");
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c) {
          ++r.checked;
          Element x = g.unpack(a), y = g.unpack(b), z = g.unpack(c);
          if (violated(x, y, z)) {
            r.verdict = ClaimVerdict::fails;
            r.witness = {x, y, z};
            r.note = "collector defect: the identity is universal";
            return r;
          }
        }
  } else {
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      ++r.checked;
      Element x = g.unpack(d(rng)), y = g.unpack(d(rng)), z = g.unpack(d(rng));
      if (violated(x, y, z)) {
        r.verdict = ClaimVerdict::fails;
        r.witness = {x, y, z};
        r.note = "collector defect: the identity is universal";
        return r;
      }
    }
  }
  r.verdict = ClaimVerdict::holds;
  return r;
}

// ---------------------------------------------------------------------------
// For x with x^p = 1 and all a, b: [x,b,a][x,a,b] = 1. Under the semi-p
// hypothesis the p-torsion set is closed under products, so it coincides
// with the subgroup it generates; x ranges over that subgroup.
inline ClaimReport lemma31(FactCache& f, const IdentityOptions& opts = {}) {
  const PcGroup& g = f.group();
  ClaimReport r;
  r.id = "L3.1";
  r.statement = "x^p = 1 implies [x,b,a][x,a,b] = 1";
  r.mode = opts.mode;
  if (f.semi(1).holds != Tri::yes) {
    r.hypothesis = HypothesisStatus::violated;
    r.verdict = ClaimVerdict::vacuous;
    r.note = "group is not semi-p-abelian";
    return r;
  }
  r.hypothesis = HypothesisStatus::satisfied;
  const Subgroup& om = f.torsion(1).omega;
  auto violated = [&](const PcGroup::Buf& x, const PcGroup::Buf& a,
                      const PcGroup::Buf& b) {
    PcGroup::Buf u{}, t1{}, t2{};
    detail::comm_raw(g, x.data(), b.data(), u);
    detail::comm_raw(g, u.data(), a.data(), t1);
    detail::comm_raw(g, x.data(), a.data(), u);
    detail::comm_raw(g, u.data(), b.data(), t2);
    g.mul_raw(t1.data(), t2.data());
    return !g.raw_is_identity(t1.data());
  };
  if (opts.mode == Mode::exhaustive) {
    const std::uint64_t n = g.order();
    if (om.order() * n > opts.tuple_cap / n)
      throw Error(ErrorCode::capacity,
                  "group too large for the exhaustive triple scan");
    bool bad = false;
    PcGroup::Buf a{}, b{};
    om.enumerate(0, om.order(), [&](const PcGroup::Buf& x) {
      if (bad) return;
      for (std::uint64_t i = 0; i < n && !bad; ++i) {
        g.unpack_raw(i, a.data());
        for (std::uint64_t j = 0; j < n && !bad; ++j) {
          g.unpack_raw(j, b.data());
          ++r.checked;
          if (violated(x, a, b)) {
            r.verdict = ClaimVerdict::fails;
            r.witness = {g.to_element(x), g.to_element(a), g.to_element(b)};
            bad = true;
          }
        }
      }
    });
    if (bad) return r;
  } else {
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dg(0, g.order() - 1);
    std::uniform_int_distribution<std::uint64_t> dm(0, om.order() - 1);
    PcGroup::Buf x{}, a{}, b{};
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      g.load(x, om.element_at(dm(rng)));
      g.unpack_raw(dg(rng), a.data());
      g.unpack_raw(dg(rng), b.data());
      ++r.checked;
      if (violated(x, a, b)) {
        r.verdict = ClaimVerdict::fails;
        r.witness = {g.to_element(x), g.to_element(a), g.to_element(b)};
        return r;
      }
    }
  }
  r.verdict = ClaimVerdict::holds;
  return r;
}

inline ClaimReport lemma31(const PcGroup& g, const IdentityOptions& opts = {}) {
  FactCache f(g, to_prop(opts));
  return lemma31(f, opts);
}

// ---------------------------------------------------------------------------
// For x with x^p = 1: [x,g_s(1),...,g_s(k)] = [x,g_1,...,g_k]^(2^d(s)) for
// every permutation s, d(s) = 0 for even, 1 for odd.
inline ClaimReport lemma32(FactCache& f, int k,
                           const IdentityOptions& opts = {}) {
  const PcGroup& g = f.group();
  if (k < 2 || k > 4)
    throw Error(ErrorCode::bad_parameter, "lemma32: k must be in 2..4");
  ClaimReport r;
  r.id = "L3.2";
  r.statement =
      "x^p = 1 implies [x,g_s(1),...,g_s(k)] = [x,g_1,...,g_k]^(2^parity(s))";
  r.mode = opts.mode;
  if (f.semi(1).holds != Tri::yes) {
    r.hypothesis = HypothesisStatus::violated;
    r.verdict = ClaimVerdict::vacuous;
    r.note = "group is not semi-p-abelian";
    return r;
  }
  r.hypothesis = HypothesisStatus::satisfied;
  r.note = "k=" + std::to_string(k);
  const Subgroup& om = f.torsion(1).omega;
  std::vector<PcGroup::Buf> tup((size_t)k);
  // returns the index of a violating permutation, or -1
  auto violating_perm = [&](const PcGroup::Buf& x) {
    PcGroup::Buf base{}, sq{}, w{};
    base = x;
    for (int j = 0; j < k; ++j) {
      detail::comm_raw(g, base.data(), tup[(size_t)j].data(), w);
      base = w;
    }
    sq = base;
    g.mul_raw(sq.data(), base.data());
    std::vector<int> perm((size_t)k);
    for (int j = 0; j < k; ++j) perm[(size_t)j] = j;
    int pidx = 0;
    do {
      PcGroup::Buf acc = x;
      for (int j = 0; j < k; ++j) {
        detail::comm_raw(g, acc.data(), tup[(size_t)perm[(size_t)j]].data(), w);
        acc = w;
      }
      if (acc != (detail::perm_parity(perm) ? sq : base)) return pidx;
      ++pidx;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return -1;
  };
  auto report_fail = [&](const PcGroup::Buf& x, int pidx) {
    r.verdict = ClaimVerdict::fails;
    r.witness = {g.to_element(x)};
    for (int j = 0; j < k; ++j) r.witness.push_back(g.to_element(tup[(size_t)j]));
    r.note += "; permutation #" + std::to_string(pidx) + " disagrees";
  };
  if (opts.mode == Mode::exhaustive) {
    std::uint64_t combos = om.order();
    for (int j = 0; j < k; ++j) {
      if (combos > opts.tuple_cap / g.order())
        throw Error(ErrorCode::capacity,
                    "group too large for the exhaustive tuple scan");
      combos *= g.order();
    }
    bool bad = false;
    om.enumerate(0, om.order(), [&](const PcGroup::Buf& x) {
      if (bad) return;
      std::uint64_t tuples = 1;
      for (int j = 0; j < k; ++j) tuples *= g.order();
      for (std::uint64_t idx = 0; idx < tuples && !bad; ++idx) {
        std::uint64_t v = idx;
        for (int j = k - 1; j >= 0; --j) {
          g.unpack_raw(v % g.order(), tup[(size_t)j].data());
          v /= g.order();
        }
        ++r.checked;
        int pidx = violating_perm(x);
        if (pidx >= 0) {
          report_fail(x, pidx);
          bad = true;
        }
      }
    });
    if (bad) return r;
  } else {
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dg(0, g.order() - 1);
    std::uniform_int_distribution<std::uint64_t> dm(0, om.order() - 1);
    PcGroup::Buf x{};
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      g.load(x, om.element_at(dm(rng)));
      for (int j = 0; j < k; ++j) g.unpack_raw(dg(rng), tup[(size_t)j].data());
      ++r.checked;
      int pidx = violating_perm(x);
      if (pidx >= 0) {
        report_fail(x, pidx);
        return r;
      }
    }
  }
  r.verdict = ClaimVerdict::holds;
  return r;
}

inline ClaimReport lemma32(const PcGroup& g, int k,
                           const IdentityOptions& opts = {}) {
  FactCache f(g, to_prop(opts));
  return lemma32(f, k, opts);
}

// ---------------------------------------------------------------------------
// Omega_1(G) <= Z_{d+1}(G) for d-generated G, and powers of the minimal
// generators lying in Omega_1 already lie in Z_d(G). Subgroup containment is
// decided on the Omega_1 basis.
inline ClaimReport lemma33(FactCache& f, const IdentityOptions& opts = {}) {
  (void)opts;
  const PcGroup& g = f.group();
  ClaimReport r;
  r.id = "L3.3";
  r.statement =
      "Omega_1(G) <= Z_{d+1}(G); minimal-generator powers in Omega_1 lie in "
      "Z_d(G)";
  r.mode = Mode::structural;
  if (f.semi(1).holds != Tri::yes) {
    r.hypothesis = HypothesisStatus::violated;
    r.verdict = ClaimVerdict::vacuous;
    r.note = "group is not semi-p-abelian";
    return r;
  }
  r.hypothesis = HypothesisStatus::satisfied;
  const int d = f.rank();
  for (const Element& b : f.torsion(1).omega.basis()) {
    ++r.checked;
    if (!in_upper_central(g, b, d + 1)) {
      r.verdict = ClaimVerdict::fails;
      r.witness = {b};
      r.note = "Omega_1 basis element outside Z_" + std::to_string(d + 1);
      return r;
    }
  }
  for (int j : f.frattini().quotient_basis) {
    Element a = g.generator(j);
    std::uint64_t o = g.element_order(a);
    if (o <= 1) continue;
    for (unsigned t = 1; t < g.prime(); ++t) {
      Element x = g.power(a, (long long)(t * (o / g.prime())));
      ++r.checked;
      if (!in_upper_central(g, x, d)) {
        r.verdict = ClaimVerdict::fails;
        r.witness = {x};
        r.note = "power of generator " + g.generator_name(j) + " outside Z_" +
                 std::to_string(d);
        return r;
      }
    }
  }
  r.verdict = ClaimVerdict::holds;
  return r;
}

inline ClaimReport lemma33(const PcGroup& g, const IdentityOptions& opts = {}) {
  FactCache f(g, to_prop(opts));
  return lemma33(f, opts);
}

// ---------------------------------------------------------------------------
// a^3 b^3 = (ab)^3 [ab,b]^3 [ab,b,ab]^([ab,b]^2) [ab,b,b], x^y = y^-1 x y.
// Stated without hypotheses; verdicts on high-class groups are informative.
inline ClaimReport lemma34(const PcGroup& g, const IdentityOptions& opts = {}) {
  ClaimReport r;
  r.id = "L3.4";
  r.statement = "a^3 b^3 = (ab)^3 [ab,b]^3 [ab,b,ab]^([ab,b]^2) [ab,b,b]";
  r.hypothesis = HypothesisStatus::satisfied;
  r.mode = opts.mode;
  auto violated = [&](const PcGroup::Buf& a, const PcGroup::Buf& b) {
    PcGroup::Buf u = a, lhs{}, rhs{}, c{}, w{}, t{}, ti{}, y{};
    g.mul_raw(u.data(), b.data());  // u = ab
    detail::pow_pi_raw(g, a.data(), 1, lhs);
    detail::pow_pi_raw(g, b.data(), 1, y);
    g.mul_raw(lhs.data(), y.data());  // a^3 b^3
    detail::pow_pi_raw(g, u.data(), 1, rhs);  // (ab)^3
    detail::comm_raw(g, u.data(), b.data(), c);  // [ab,b]
    detail::pow_pi_raw(g, c.data(), 1, y);
    g.mul_raw(rhs.data(), y.data());  // * [ab,b]^3
    detail::comm_raw(g, c.data(), u.data(), w);  // [ab,b,ab]
    t = c;
    g.mul_raw(t.data(), c.data());  // [ab,b]^2
    inv_raw(g, t.data(), ti);
    g.mul_raw(ti.data(), w.data());
    g.mul_raw(ti.data(), t.data());  // conjugate
    g.mul_raw(rhs.data(), ti.data());
    detail::comm_raw(g, c.data(), b.data(), w);  // [ab,b,b]
    g.mul_raw(rhs.data(), w.data());
    return lhs != rhs;
  };
  if (opts.mode == Mode::exhaustive) {
    if (g.order() > opts.pair_cap)
      throw Error(ErrorCode::capacity,
                  "group too large for the exhaustive pairwise check");
    PcGroup::Buf a{}, b{};
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      g.unpack_raw(i, a.data());
      for (std::uint64_t j = 0; j < g.order(); ++j) {
        g.unpack_raw(j, b.data());
        ++r.checked;
        if (violated(a, b)) {
          r.verdict = ClaimVerdict::fails;
          r.witness = {g.to_element(a), g.to_element(b)};
          return r;
        }
      }
    }
  } else {
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
    PcGroup::Buf a{}, b{};
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      g.unpack_raw(d(rng), a.data());
      g.unpack_raw(d(rng), b.data());
      ++r.checked;
      if (violated(a, b)) {
        r.verdict = ClaimVerdict::fails;
        r.witness = {g.to_element(a), g.to_element(b)};
        return r;
      }
    }
  }
  r.verdict = ClaimVerdict::holds;
  return r;
}

// ---------------------------------------------------------------------------
// For semi-3-abelian, inner semi-9-abelian groups: witnesses of the semi-9
// failure satisfy, per case,
//   (1) (ab)^9 = 1, a^9 b^9 != 1:  [ab,b,b]^3 = [ab,b,b,ab,ab] and
//       [ab,b,b,ab,b] in Z(G);
//   (2) a^9 b^9 = 1, (ab)^9 != 1:  [b,a,b,b,b], [b,a,b,b,a], [a,b,a,a,a],
//       [a,b,a,a,b] in Z(G) and their product with [a,b,a,b,a,b] is 1.
// Witnesses are found by seeded sampling up to a classified-witness budget.
inline ClaimReport thm36(FactCache& f, int caseno,
                         const IdentityOptions& opts = {}) {
  const PcGroup& g = f.group();
  if (caseno != 1 && caseno != 2)
    throw Error(ErrorCode::bad_parameter, "thm36: case must be 1 or 2");
  ClaimReport r;
  r.id = caseno == 1 ? "T3.6.1" : "T3.6.2";
  r.statement =
      caseno == 1
          ? "(ab)^9 = 1, a^9 b^9 != 1 implies [ab,b,b]^3 = [ab,b,b,ab,ab] and "
            "[ab,b,b,ab,b] in Z(G)"
          : "a^9 b^9 = 1, (ab)^9 != 1 implies [b,a,b,b,b], [b,a,b,b,a], "
            "[a,b,a,a,a], [a,b,a,a,b] in Z(G) and "
            "[b,a,b,b,b][b,a,b,b,a][a,b,a,a,a][a,b,a,a,b][a,b,a,b,a,b] = 1";
  r.mode = Mode::sampled;
  r.seed = opts.seed;
  if (f.semi(1).holds != Tri::yes || f.inner(2).holds != Tri::yes) {
    r.hypothesis = HypothesisStatus::violated;
    r.verdict = ClaimVerdict::vacuous;
    r.note = f.semi(1).holds != Tri::yes
                 ? "group is not semi-3-abelian"
                 : "group is not inner semi-9-abelian";
    return r;
  }
  r.hypothesis = HypothesisStatus::satisfied;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
  const std::uint64_t attempts =
      std::max(opts.samples, opts.witness_budget * 2000);
  std::uint64_t classified = 0;
  PcGroup::Buf ab{}, bb{}, u9{}, a9{}, b9{};
  for (std::uint64_t s = 0; s < attempts && classified < opts.witness_budget;
       ++s) {
    g.unpack_raw(d(rng), ab.data());
    g.unpack_raw(d(rng), bb.data());
    Element a = g.to_element(ab), b = g.to_element(bb);
    PcGroup::Buf u = ab;
    g.mul_raw(u.data(), bb.data());
    detail::pow_pi_raw(g, u.data(), 2, u9);
    detail::pow_pi_raw(g, ab.data(), 2, a9);
    detail::pow_pi_raw(g, bb.data(), 2, b9);
    g.mul_raw(a9.data(), b9.data());
    const bool lhs = g.raw_is_identity(u9.data());
    const bool rhs = g.raw_is_identity(a9.data());
    if (caseno == 1 ? !(lhs && !rhs) : !(rhs && !lhs)) continue;
    ++classified;
    ++r.checked;
    std::string clause;
    Element prod = g.multiply(a, b);
    if (caseno == 1) {
      Element c = g.commutator({prod, b, b});
      if (g.power(c, 3) != g.commutator({prod, b, b, prod, prod}))
        clause = "[ab,b,b]^3 != [ab,b,b,ab,ab]";
      else if (!f.central(g.commutator({prod, b, b, prod, b})))
        clause = "[ab,b,b,ab,b] not central";
    } else {
      Element w1 = g.commutator({b, a, b, b, b});
      Element w2 = g.commutator({b, a, b, b, a});
      Element w3 = g.commutator({a, b, a, a, a});
      Element w4 = g.commutator({a, b, a, a, b});
      if (!f.central(w1) || !f.central(w2) || !f.central(w3) || !f.central(w4))
        clause = "a fifth-weight commutator is not central";
      else {
        Element prod5 = g.multiply(
            g.multiply(g.multiply(g.multiply(w1, w2), w3), w4),
            g.commutator({a, b, a, b, a, b}));
        if (!prod5.is_identity()) clause = "five-factor product != 1";
      }
    }
    if (!clause.empty()) {
      r.verdict = ClaimVerdict::fails;
      r.witness = {a, b};
      r.note = clause;
      return r;
    }
  }
  r.verdict = ClaimVerdict::holds;
  r.note = "classified " + std::to_string(classified) + " case-(" +
           std::to_string(caseno) + ") witnesses from " +
           std::to_string(attempts) + " samples";
  if (classified == 0) r.note += " (none found: the implication is vacuous)";
  return r;
}

inline ClaimReport thm36(const PcGroup& g, int caseno,
                         const IdentityOptions& opts = {}) {
  FactCache f(g, to_prop(opts));
  return thm36(f, caseno, opts);
}

// ---------------------------------------------------------------------------
// Registered structural claims.

namespace detail {

inline ClaimReport make_claim(const char* id, const char* statement) {
  ClaimReport r;
  r.id = id;
  r.statement = statement;
  return r;
}

inline ClaimReport vacuous(ClaimReport r, const std::string& why) {
  r.hypothesis = HypothesisStatus::violated;
  r.verdict = ClaimVerdict::vacuous;
  r.note = why;
  return r;
}

// first element of order > bound in h, scanning the same decomposition the
// exponent computation uses
inline std::optional<Element> element_of_order_gt(FactCache& f,
                                                  const Subgroup& h,
                                                  std::uint64_t bound) {
  const PcGroup& g = f.group();
  std::optional<Element> out;
  auto consider = [&](const PcGroup::Buf& x) {
    if (out) return;
    PcGroup::Buf y = x;
    std::uint64_t o = 1;
    while (!g.raw_is_identity(y.data())) {
      g.pow_prime_raw(y);
      o *= g.prime();
    }
    if (o > bound) out = g.to_element(x);
  };
  if (h.order() > kCollapseCutoff) {
    Subgroup core = central_core(h);
    if (core.order() > 1) {
      CentralTransversal trans(h, core);
      PcGroup::Buf b{};
      for (const Element& c : core.basis()) {
        g.load(b, c);
        consider(b);
      }
      trans.enumerate(0, trans.size(),
                      [&](const PcGroup::Buf& x) { consider(x); });
      return out;
    }
  }
  h.enumerate(0, h.order(), [&](const PcGroup::Buf& x) { consider(x); });
  return out;
}

}  // namespace detail

inline ClaimReport claim_l21(FactCache& f, const IdentityOptions& opts) {
  const PcGroup& g = f.group();
  const unsigned p = g.prime();
  ClaimReport r = detail::make_claim(
      "L2.1", "two-generated metabelian: p-abelian iff exp(G') <= p and c(G) < p");
  if (!(f.rank() == 2 && f.metabelian()))
    return detail::vacuous(std::move(r), "group is not two-generated metabelian");
  r.hypothesis = HypothesisStatus::satisfied;
  const bool rhs =
      f.subgroup_exponent(f.derived()) <= p && f.nclass() < (int)p;
  PropOptions popts = f.options();
  popts.mode = g.order() <= opts.pair_cap ? Mode::exhaustive : Mode::sampled;
  popts.samples = opts.samples;
  Verdict pa = is_p_abelian(g, popts);
  r.mode = popts.mode;
  r.checked = pa.checked;
  r.seed = pa.seed;
  if (pa.holds == Tri::unknown) {
    r.verdict = ClaimVerdict::unknown;
    r.note = "p-abelianness undecided by sampling";
    return r;
  }
  const bool lhs = pa.holds == Tri::yes;
  if (lhs == rhs) {
    r.verdict = ClaimVerdict::holds;
    r.note = lhs ? "both sides true" : "both sides false";
    return r;
  }
  r.verdict = ClaimVerdict::fails;
  if (!lhs && pa.witness) {
    r.witness = {pa.witness->first, pa.witness->second};
    r.note = "exp(G') <= p and c(G) < p, yet (ab)^p != a^p b^p";
  } else {
    if (auto w = detail::element_of_order_gt(f, f.derived(), p)) {
      r.witness = {*w};
      r.note = "p-abelian, yet G' has an element of order > p";
    } else {
      for (const Element& b : f.term((int)p + 1).basis()) r.witness.push_back(b);
      r.note = "p-abelian, yet c(G) >= p";
    }
  }
  return r;
}

inline ClaimReport claim_l22(FactCache& f, const IdentityOptions& opts) {
  const PcGroup& g = f.group();
  ClaimReport r = detail::make_claim(
      "L2.2", "semi-p^i-abelian: [a^(p^i),b] = 1 iff [a,b]^(p^i) = 1");
  std::vector<int> levels;
  for (int i : {1, 2})
    if (f.semi(i).holds == Tri::yes) levels.push_back(i);
  if (levels.empty())
    return detail::vacuous(std::move(r),
                           "group is not semi-p^i-abelian for i in {1,2}");
  r.hypothesis = HypothesisStatus::satisfied;
  auto violated = [&](const PcGroup::Buf& a, const PcGroup::Buf& b, int i) {
    PcGroup::Buf aq{}, c1{}, c2{}, cq{};
    detail::pow_pi_raw(g, a.data(), i, aq);
    detail::comm_raw(g, aq.data(), b.data(), c1);
    detail::comm_raw(g, a.data(), b.data(), c2);
    detail::pow_pi_raw(g, c2.data(), i, cq);
    return g.raw_is_identity(c1.data()) != g.raw_is_identity(cq.data());
  };
  const bool exhaustive = g.order() <= opts.pair_cap;
  r.mode = exhaustive ? Mode::exhaustive : Mode::sampled;
  for (int i : levels) {
    if (exhaustive) {
      PcGroup::Buf a{}, b{};
      for (std::uint64_t x = 0; x < g.order(); ++x) {
        g.unpack_raw(x, a.data());
        for (std::uint64_t y = 0; y < g.order(); ++y) {
          g.unpack_raw(y, b.data());
          ++r.checked;
          if (violated(a, b, i)) {
            r.verdict = ClaimVerdict::fails;
            r.witness = {g.to_element(a), g.to_element(b)};
            r.note = "biconditional fails at i=" + std::to_string(i);
            return r;
          }
        }
      }
    } else {
      r.seed = opts.seed;
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
      PcGroup::Buf a{}, b{};
      for (std::uint64_t s = 0; s < opts.samples; ++s) {
        g.unpack_raw(d(rng), a.data());
        g.unpack_raw(d(rng), b.data());
        ++r.checked;
        if (violated(a, b, i)) {
          r.verdict = ClaimVerdict::fails;
          r.witness = {g.to_element(a), g.to_element(b)};
          r.note = "biconditional fails at i=" + std::to_string(i);
          return r;
        }
      }
    }
  }
  r.verdict = ClaimVerdict::holds;
  r.note = "checked i in {";
  for (size_t j = 0; j < levels.size(); ++j)
    r.note += (j ? "," : "") + std::to_string(levels[j]);
  r.note += "}";
  return r;
}

inline ClaimReport claim_l23(FactCache& f) {
  ClaimReport r = detail::make_claim(
      "L2.3",
      "metabelian semi-p-abelian and semi-p^2-abelian implies strongly "
      "semi-p-abelian");
  if (!(f.metabelian() && f.semi(1).holds == Tri::yes &&
        f.semi(2).holds == Tri::yes))
    return detail::vacuous(
        std::move(r), "group is not metabelian semi-p- and semi-p^2-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  std::string why;
  if (f.strongly(&why) == Tri::yes) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    const Verdict& v = f.semi(f.strongly_fail_i());
    if (v.witness) r.witness = {v.witness->first, v.witness->second};
    r.note = why;
  }
  return r;
}

inline ClaimReport claim_l25(FactCache& f) {
  const PcGroup& g = f.group();
  const std::uint64_t p = g.prime();
  ClaimReport r = detail::make_claim(
      "L2.5",
      "semi-p-abelian inner semi-p^2-abelian: exp(G') <= p^2, mho_2(G) <= "
      "Z(G), mho_1(G)' = 1");
  if (!(f.semi(1).holds == Tri::yes && f.inner(2).holds == Tri::yes))
    return detail::vacuous(std::move(r),
                           "group is not semi-p-abelian inner semi-p^2-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  if (f.subgroup_exponent(f.derived()) > p * p) {
    r.verdict = ClaimVerdict::fails;
    if (auto w = detail::element_of_order_gt(f, f.derived(), p * p))
      r.witness = {*w};
    r.note = "exp(G') > p^2";
    return r;
  }
  for (const Element& b : f.agemo_sub(2).basis()) {
    ++r.checked;
    if (!f.central(b)) {
      r.verdict = ClaimVerdict::fails;
      r.witness = {b};
      r.note = "mho_2 basis element is not central";
      return r;
    }
  }
  const Subgroup& u1 = f.agemo_sub(1);
  for (const Element& a : u1.basis())
    for (const Element& b : u1.basis()) {
      ++r.checked;
      if (!g.commutator({a, b}).is_identity()) {
        r.verdict = ClaimVerdict::fails;
        r.witness = {a, b};
        r.note = "mho_1 is not abelian";
        return r;
      }
    }
  r.verdict = ClaimVerdict::holds;
  return r;
}

inline ClaimReport claim_l35(FactCache& f) {
  const PcGroup& g = f.group();
  const std::uint64_t p = g.prime();
  ClaimReport r = detail::make_claim(
      "L3.5",
      "semi-3-abelian inner semi-9-abelian: G_3 <= mho_1(G), exp(G_4) <= 3, "
      "G_7 = 1");
  if (!(f.semi(1).holds == Tri::yes && f.inner(2).holds == Tri::yes))
    return detail::vacuous(std::move(r),
                           "group is not semi-3-abelian inner semi-9-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  for (const Element& b : f.term(3).basis()) {
    ++r.checked;
    if (!f.agemo_sub(1).contains(b)) {
      r.verdict = ClaimVerdict::fails;
      r.witness = {b};
      r.note = "G_3 basis element outside mho_1(G)";
      return r;
    }
  }
  if (f.subgroup_exponent(f.term(4)) > p) {
    r.verdict = ClaimVerdict::fails;
    if (auto w = detail::element_of_order_gt(f, f.term(4), p)) r.witness = {*w};
    r.note = "exp(G_4) > 3";
    return r;
  }
  if (f.nclass() > 6) {
    r.verdict = ClaimVerdict::fails;
    for (const Element& b : f.term(7).basis()) r.witness.push_back(b);
    r.note = "G_7 != 1 (class " + std::to_string(f.nclass()) + ")";
    return r;
  }
  (void)g;
  r.verdict = ClaimVerdict::holds;
  return r;
}

inline ClaimReport claim_t11(FactCache& f) {
  ClaimReport r = detail::make_claim(
      "T1.1",
      "strongly semi-3-abelian, exp(G) <= 3^r, d generators: c(G) <= "
      "(r-1)(d+1)+3");
  if (f.strongly() != Tri::yes)
    return detail::vacuous(std::move(r), "group is not strongly semi-p-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  const int rr = f.exponent_log(), d = f.rank();
  const int bound = (rr - 1) * (d + 1) + 3;
  r.note = "class " + std::to_string(f.nclass()) + ", bound " +
           std::to_string(bound) + " (r=" + std::to_string(rr) +
           ", d=" + std::to_string(d) + ")";
  if (f.nclass() <= bound) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    for (const Element& b : f.term(bound + 2).basis()) r.witness.push_back(b);
  }
  return r;
}

inline ClaimReport claim_t12(FactCache& f) {
  ClaimReport r = detail::make_claim(
      "T1.2",
      "semi-3-abelian with every proper subgroup semi-9-abelian but not "
      "semi-9-abelian itself: G_7 = 1");
  if (!(f.semi(1).holds == Tri::yes && f.inner(2).holds == Tri::yes))
    return detail::vacuous(std::move(r),
                           "group is not semi-3-abelian inner semi-9-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  if (f.nclass() <= 6) {
    r.verdict = ClaimVerdict::holds;
    r.note = "class " + std::to_string(f.nclass());
  } else {
    r.verdict = ClaimVerdict::fails;
    for (const Element& b : f.term(7).basis()) r.witness.push_back(b);
    r.note = "G_7 != 1 (class " + std::to_string(f.nclass()) + ")";
  }
  return r;
}

inline ClaimReport claim_t13(FactCache& f) {
  ClaimReport r = detail::make_claim(
      "T1.3", "metabelian semi-p-abelian implies strongly semi-p-abelian");
  if (!(f.metabelian() && f.semi(1).holds == Tri::yes))
    return detail::vacuous(std::move(r), "group is not metabelian semi-p-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  std::string why;
  if (f.strongly(&why) == Tri::yes) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    const Verdict& v = f.semi(f.strongly_fail_i());
    if (v.witness) r.witness = {v.witness->first, v.witness->second};
    r.note = why;
  }
  return r;
}

namespace detail {

// hypothesis shared by the construction claims: semi-3-abelian, inner
// semi-9-abelian, two-generated; a1 is the minimal generator of order 9
inline bool construction_setup(FactCache& f, ClaimReport& r, Element& a1,
                               Element& a2) {
  const PcGroup& g = f.group();
  if (!(f.semi(1).holds == Tri::yes && f.inner(2).holds == Tri::yes &&
        f.rank() == 2)) {
    r = vacuous(std::move(r),
                "group is not a two-generated semi-3-abelian inner "
                "semi-9-abelian group");
    return false;
  }
  const auto& qb = f.frattini().quotient_basis;
  a1 = g.generator(qb[0]);
  a2 = g.generator(qb[1]);
  if (g.element_order(a1) != 9 && g.element_order(a2) == 9) std::swap(a1, a2);
  r.hypothesis = HypothesisStatus::satisfied;
  return true;
}

}  // namespace detail

inline ClaimReport claim_c381(FactCache& f) {
  const PcGroup& g = f.group();
  ClaimReport r = detail::make_claim("C3.8.1", "o(a1) = 9 and o(a2) = 3^n, n >= 3");
  Element a1 = g.identity(), a2 = g.identity();
  if (!detail::construction_setup(f, r, a1, a2)) return r;
  const std::uint64_t o1 = g.element_order(a1), o2 = g.element_order(a2);
  r.note = "o(a1)=" + std::to_string(o1) + ", o(a2)=" + std::to_string(o2);
  if (o1 == 9 && o2 >= 27) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    r.witness = {a1, a2};
  }
  return r;
}

inline ClaimReport claim_c382(FactCache& f) {
  const PcGroup& g = f.group();
  ClaimReport r = detail::make_claim(
      "C3.8.2", "o([a1,a2,a1]) = 3 and o([a1,a2,a2]) = 9");
  Element a1 = g.identity(), a2 = g.identity();
  if (!detail::construction_setup(f, r, a1, a2)) return r;
  Element c1 = g.commutator({a1, a2, a1}), c2 = g.commutator({a1, a2, a2});
  const std::uint64_t o1 = g.element_order(c1), o2 = g.element_order(c2);
  r.note = "o([a1,a2,a1])=" + std::to_string(o1) +
           ", o([a1,a2,a2])=" + std::to_string(o2);
  if (o1 == 3 && o2 == 9) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    r.witness = {c1, c2};
  }
  return r;
}

inline ClaimReport claim_c383(FactCache& f) {
  const PcGroup& g = f.group();
  ClaimReport r = detail::make_claim(
      "C3.8.3", "[a1,a2,a2]^3 = [a1,a2,a2,a1,a1]");
  Element a1 = g.identity(), a2 = g.identity();
  if (!detail::construction_setup(f, r, a1, a2)) return r;
  Element lhs = g.power(g.commutator({a1, a2, a2}), 3);
  Element rhs = g.commutator({a1, a2, a2, a1, a1});
  if (lhs == rhs) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    r.witness = {lhs, rhs};
  }
  return r;
}

inline ClaimReport claim_c384(FactCache& f) {
  const PcGroup& g = f.group();
  ClaimReport r = detail::make_claim(
      "C3.8.4", "when c(G) = 5, G_4 is elementary abelian of rank 9");
  Element a1 = g.identity(), a2 = g.identity();
  if (!detail::construction_setup(f, r, a1, a2)) return r;
  if (f.nclass() != 5) return detail::vacuous(std::move(r), "class is not 5");
  const Subgroup& g4 = f.term(4);
  bool abelian = commutator_subgroup(g4, g4).is_trivial();
  bool exp_p = f.subgroup_exponent(g4) <= g.prime();
  int rank = 0;
  for (std::uint64_t o = g4.order(); o > 1; o /= g.prime()) ++rank;
  r.note = "G_4 has order " + std::to_string(g4.order()) +
           (abelian ? ", abelian" : ", nonabelian") +
           (exp_p ? ", exponent 3" : ", exponent > 3") + ", rank " +
           std::to_string(abelian && exp_p ? rank : 0);
  if (abelian && exp_p && rank == 9) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    for (const Element& b : g4.basis()) r.witness.push_back(b);
  }
  return r;
}

inline ClaimReport claim_c385(FactCache& f) {
  const PcGroup& g = f.group();
  ClaimReport r = detail::make_claim(
      "C3.8.5", "when c(G) = 5, [a1,a2]^3 is not in G_4");
  Element a1 = g.identity(), a2 = g.identity();
  if (!detail::construction_setup(f, r, a1, a2)) return r;
  if (f.nclass() != 5) return detail::vacuous(std::move(r), "class is not 5");
  Element b3 = g.power(g.commutator({a1, a2}), 3);
  if (!f.term(4).contains(b3)) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
    r.witness = {b3};
  }
  return r;
}

inline ClaimReport claim_r1(FactCache& f) {
  ClaimReport r = detail::make_claim(
      "R1", "semi-3-abelian inner semi-9-abelian: c(G) = 5 or 6");
  if (!(f.semi(1).holds == Tri::yes && f.inner(2).holds == Tri::yes))
    return detail::vacuous(std::move(r),
                           "group is not semi-3-abelian inner semi-9-abelian");
  r.hypothesis = HypothesisStatus::satisfied;
  r.note = "class " + std::to_string(f.nclass());
  if (f.nclass() == 5 || f.nclass() == 6) {
    r.verdict = ClaimVerdict::holds;
  } else {
    r.verdict = ClaimVerdict::fails;
  }
  return r;
}

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "L2.1", "L2.2", "L2.3", "L2.5",   "L3.1",   "L3.2",   "L3.3",
      "L3.4", "L3.5", "T1.1", "T1.2",   "T1.3",   "T3.6.1", "T3.6.2",
      "C3.8.1", "C3.8.2", "C3.8.3", "C3.8.4", "C3.8.5", "R1"};
  return ids;
}

inline std::vector<ClaimReport> verify_claims(
    FactCache& f, const std::vector<std::string>& filter = {},
    const IdentityOptions& opts = {}) {
  auto want = [&](const std::string& id) {
    return filter.empty() ||
           std::find(filter.begin(), filter.end(), id) != filter.end();
  };
  auto run = [&](const std::string& id) -> ClaimReport {
    if (id == "L2.1") return claim_l21(f, opts);
    if (id == "L2.2") return claim_l22(f, opts);
    if (id == "L2.3") return claim_l23(f);
    if (id == "L2.5") return claim_l25(f);
    if (id == "L3.1") return lemma31(f, opts);
    if (id == "L3.2") return lemma32(f, 3, opts);
    if (id == "L3.3") return lemma33(f, opts);
    if (id == "L3.4") return lemma34(f.group(), opts);
    if (id == "L3.5") return claim_l35(f);
    if (id == "T1.1") return claim_t11(f);
    if (id == "T1.2") return claim_t12(f);
    if (id == "T1.3") return claim_t13(f);
    if (id == "T3.6.1") return thm36(f, 1, opts);
    if (id == "T3.6.2") return thm36(f, 2, opts);
    if (id == "C3.8.1") return claim_c381(f);
    if (id == "C3.8.2") return claim_c382(f);
    if (id == "C3.8.3") return claim_c383(f);
    if (id == "C3.8.4") return claim_c384(f);
    if (id == "C3.8.5") return claim_c385(f);
    return claim_r1(f);
  };
  std::vector<ClaimReport> out;
  for (const std::string& id : claim_ids()) {
    if (!want(id)) continue;
    try {
      out.push_back(run(id));
    } catch (const Error& e) {
      if (e.code != ErrorCode::capacity) throw;
      ClaimReport r;
      r.id = id;
      r.verdict = ClaimVerdict::unknown;
      r.hypothesis = HypothesisStatus::not_checked;
      r.note = std::string("capacity: ") + e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::vector<ClaimReport> verify_claims(
    const PcGroup& g, const std::vector<std::string>& filter = {},
    const IdentityOptions& opts = {}) {
  FactCache f(g, to_prop(opts));
  return verify_claims(f, filter, opts);
}

}  // namespace pcg
