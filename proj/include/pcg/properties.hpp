#pragma once

// Decision procedures for the power-structure properties: p-abelian,
// semi-p^i-abelian (definitional and pi-based), strongly semi-abelian,
// regularity, the inner property, and the per-i power-structure report.

#include <cstdint>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "pcg/collector.hpp"
#include "pcg/report.hpp"
#include "pcg/scan.hpp"
#include "pcg/structure.hpp"

namespace pcg {

struct PropOptions {
  Mode mode = Mode::exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 12345;
  int tasks = 1;
  std::uint64_t cap = kDefaultEnumCap;  // single-scan cap (elements)
  std::uint64_t pair_cap = 2187;        // |H| cap for pairwise-exhaustive scans
};

namespace detail {

inline std::uint64_t p_power(unsigned p, int i) {
  std::uint64_t q = 1;
  for (int r = 0; r < i; ++r) q *= p;
  return q;
}

// out := x^(p^i) by repeated p-th powers (cheaper than generic pow_raw)
inline void pow_pi_raw(const PcGroup& g, const Exp* x, int i, PcGroup::Buf& out) {
  out.fill(0);
  for (int j = 0; j < g.ngens(); ++j) out[j] = x[j];
  for (int r = 0; r < i; ++r) g.pow_prime_raw(out);
}

inline bool raw_central(const PcGroup& g, const Exp* t) {
  PcGroup::Buf ti{}, c{};
  for (int j = 0; j < g.ngens(); ++j) {
    inv_raw(g, t, ti);
    c = ti;
    g.mul_term(c.data(), j, -1);
    for (int k = 0; k < g.ngens(); ++k)
      if (t[k]) g.mul_term(c.data(), k, t[k]);
    g.mul_term(c.data(), j, 1);
    if (!g.raw_is_identity(c.data())) return false;
  }
  return true;
}

}  // namespace detail

// Scans over subgroups larger than this collapse modulo a central subgroup.
constexpr std::uint64_t kCollapseCutoff = 65536;

// Central elements of G lying in H: for each pc generator, the smallest
// central power contained in H. Used to collapse full-subgroup scans, since
// (hz)^q = h^q z^q for central z.
inline Subgroup central_core(const Subgroup& h) {
  const PcGroup& g = h.group();
  Subgroup c = Subgroup::trivial(g);
  PcGroup::Buf x{}, y{};
  for (int i = 0; i < g.ngens(); ++i) {
    x.fill(0);
    x[i] = 1;
    for (std::uint64_t q = 1; q < g.modulus(i); q *= g.prime()) {
      pow_raw(g, x.data(), (long long)q, y);
      if (g.raw_is_identity(y.data())) break;
      if (detail::raw_central(g, y.data()) && h.contains_raw(y.data())) {
        c.add_raw(y);
        break;
      }
    }
  }
  return c;
}

// Transversal of a central subgroup C <= H: every h in H factors uniquely as
// (prod_j b_j^{e_j}) * c with e_j < d_j and c in C, where b_j runs over the
// induced pc basis of H and d_j is the index of <C, b_{j+1},...> steps.
// Enumeration mirrors Subgroup::enumerate (amortized one product per rep).
class CentralTransversal {
 public:
  CentralTransversal(const Subgroup& h, const Subgroup& c)
      : g_(&h.group()), core_(c) {
    std::vector<Element> hb = h.basis();
    const int k = (int)hb.size();
    // tails[m] = <C, b_{k-m}, ..., b_{k-1}>
    std::vector<Subgroup> tails;
    tails.reserve((size_t)k + 1);
    tails.push_back(c);
    for (int j = k - 1; j >= 0; --j) {
      Subgroup t = tails.back();
      t.add(hb[(size_t)j]);
      tails.push_back(std::move(t));
    }
    for (int j = 0; j < k; ++j) {
      const Subgroup& below = tails[(size_t)(k - 1 - j)];
      PcGroup::Buf b{}, y{};
      g_->load(b, hb[(size_t)j]);
      std::uint64_t d = 1;
      while (true) {
        pow_raw(*g_, b.data(), (long long)d, y);
        if (below.contains_raw(y.data())) break;
        d *= g_->prime();
      }
      if (d > 1) {
        basis_.push_back(b);
        radix_.push_back(d);
      }
    }
    for (std::uint64_t d : radix_) size_ *= d;
  }

  std::uint64_t size() const { return size_; }
  const Subgroup& core() const { return core_; }

  template <typename Fn>
  void enumerate(std::uint64_t begin, std::uint64_t end, Fn fn) const {
    if (begin >= end) return;
    const int k = (int)basis_.size();
    std::vector<std::uint64_t> digits = to_digits(begin);
    std::vector<PcGroup::Buf> prefix((size_t)k + 1);
    prefix[0].fill(0);
    for (int j = 0; j < k; ++j) {
      prefix[j + 1] = prefix[j];
      if (digits[j]) {
        PcGroup::Buf t{};
        pow_raw(*g_, basis_[(size_t)j].data(), (long long)digits[j], t);
        g_->mul_raw(prefix[j + 1].data(), t.data());
      }
    }
    for (std::uint64_t idx = begin;;) {
      fn(prefix[(size_t)k]);
      if (++idx >= end) break;
      int j = k - 1;
      while (true) {
        if (++digits[j] < radix_[(size_t)j]) break;
        digits[j] = 0;
        --j;
      }
      g_->mul_raw(prefix[j + 1].data(), basis_[(size_t)j].data());
      for (int t = j + 1; t < k; ++t) prefix[t + 1] = prefix[t];
    }
  }

  Element element_at(std::uint64_t idx) const {
    std::vector<std::uint64_t> digits = to_digits(idx);
    PcGroup::Buf acc{};
    for (size_t j = 0; j < basis_.size(); ++j)
      if (digits[j]) {
        PcGroup::Buf t{};
        pow_raw(*g_, basis_[j].data(), (long long)digits[j], t);
        g_->mul_raw(acc.data(), t.data());
      }
    return g_->to_element(acc);
  }

 private:
  std::vector<std::uint64_t> to_digits(std::uint64_t idx) const {
    std::vector<std::uint64_t> digits(basis_.size());
    for (int j = (int)basis_.size() - 1; j >= 0; --j) {
      digits[(size_t)j] = idx % radix_[(size_t)j];
      idx /= radix_[(size_t)j];
    }
    return digits;
  }

  const PcGroup* g_;
  Subgroup core_;
  std::vector<PcGroup::Buf> basis_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t size_ = 1;
};

// Generators of Omega_i(H): a small set of p^i-torsion elements generating
// the subgroup generated by all of them. Scan order is the subgroup's
// enumeration order, so the result is deterministic.
struct TorsionInfo {
  std::vector<Element> gens;  // torsion generators, in discovery order
  Subgroup omega;             // the subgroup they generate
  // set when the scan was collapsed modulo a central subgroup; the pi check
  // then only ranges over these coset representatives
  std::shared_ptr<const CentralTransversal> trans;
};

inline TorsionInfo torsion_generators(const Subgroup& h, int i,
                                      const PropOptions& opts = {}) {
  const PcGroup& g = h.group();
  if (h.order() > opts.cap)
    throw Error(ErrorCode::capacity, "subgroup too large for torsion scan");
  const std::uint64_t q = detail::p_power(g.prime(), i);
  if (h.order() > kCollapseCutoff) {
    Subgroup core = central_core(h);
    if (core.order() > 1) {
      auto trans = std::make_shared<CentralTransversal>(h, core);
      TorsionInfo out{{}, Subgroup::trivial(g), trans};
      // c^q -> c over the core (abelian), first solution wins; torsion core
      // elements in core enumeration order
      std::unordered_map<std::uint64_t, std::uint64_t> qmap;
      std::vector<std::uint64_t> core_torsion;
      {
        PcGroup::Buf y{};
        core.enumerate(0, core.order(), [&](const PcGroup::Buf& c) {
          detail::pow_pi_raw(g, c.data(), i, y);
          std::uint64_t key = g.pack_raw(y.data());
          if (key == 0) core_torsion.push_back(g.pack_raw(c.data()));
          qmap.emplace(key, g.pack_raw(c.data()));
        });
      }
      // x = r*c is torsion iff c^q = r^{-q}: solutions form c0 * Omega_i(core)
      int tasks = std::max(opts.tasks, 1);
      std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> parts(
          (size_t)tasks);
      parallel_chunks(trans->size(), tasks,
                      [&](int t, std::uint64_t b, std::uint64_t e) {
        PcGroup::Buf y{}, yi{};
        std::uint64_t idx = b;
        trans->enumerate(b, e, [&](const PcGroup::Buf& r) {
          detail::pow_pi_raw(g, r.data(), i, y);
          inv_raw(g, y.data(), yi);
          auto it = qmap.find(g.pack_raw(yi.data()));
          if (it != qmap.end()) parts[t].push_back({idx, it->second});
          ++idx;
        });
      });
      std::vector<std::pair<std::uint64_t, std::uint64_t>> cand;
      for (const auto& part : parts)
        cand.insert(cand.end(), part.begin(), part.end());
      PcGroup::Buf cb{};
      for (std::uint64_t v : core_torsion) {
        g.unpack_raw(v, cb.data());
        if (!out.omega.contains_raw(cb.data())) {
          out.omega.add_raw(cb);
          out.gens.push_back(g.to_element(cb));
        }
      }
      std::size_t next = 0;
      std::uint64_t idx = 0;
      std::uint64_t last = cand.empty() ? 0 : cand.back().first + 1;
      trans->enumerate(0, last, [&](const PcGroup::Buf& r) {
        if (next < cand.size() && cand[next].first == idx) {
          PcGroup::Buf x = r;
          g.unpack_raw(cand[next].second, cb.data());
          g.mul_raw(x.data(), cb.data());
          ++next;
          if (!out.omega.contains_raw(x.data())) {
            out.omega.add_raw(x);
            out.gens.push_back(g.to_element(x));
          }
        }
        ++idx;
      });
      return out;
    }
  }
  // phase 1: collect packed torsion elements (parallel, deterministic merge)
  int tasks = std::max(opts.tasks, 1);
  std::vector<std::vector<std::uint64_t>> parts((size_t)tasks);
  parallel_chunks(h.order(), tasks, [&](int t, std::uint64_t b, std::uint64_t e) {
    std::uint64_t idx = b;
    PcGroup::Buf y{};
    h.enumerate(b, e, [&](const PcGroup::Buf& x) {
      pow_raw(g, x.data(), (long long)q, y);
      if (g.raw_is_identity(y.data())) parts[t].push_back(idx);
      ++idx;
    });
  });
  std::vector<std::uint64_t> torsion;
  for (const auto& part : parts)
    torsion.insert(torsion.end(), part.begin(), part.end());
  TorsionInfo out{{}, Subgroup::trivial(g)};
  // single incremental pass; sift only the torsion indices
  std::size_t next = 0;
  std::uint64_t idx = 0;
  std::uint64_t last = torsion.empty() ? 0 : torsion.back() + 1;
  h.enumerate(0, last, [&](const PcGroup::Buf& x) {
    if (next < torsion.size() && torsion[next] == idx) {
      ++next;
      if (!out.omega.contains_raw(x.data())) {
        out.omega.add_raw(x);
        out.gens.push_back(g.to_element(x));
      }
    }
    ++idx;
  });
  return out;
}

// Semi-p^i-abelian via well-definedness of pi_i on Omega_i-cosets:
// (h t)^(p^i) = h^(p^i) for every h in H and every torsion generator t.
// A failure converts to the definitional witness pair (h t, h^{-1}):
// ((h t) h^{-1})^(p^i) = h t^(p^i) h^{-1} = 1 while (h t)^(p^i) (h^{-1})^(p^i) != 1.
inline Verdict is_semi_abelian_pi(const Subgroup& h, int i,
                                  const TorsionInfo& tor,
                                  const PropOptions& opts = {}) {
  const PcGroup& g = h.group();
  Verdict v;
  v.property = "semi-p^" + std::to_string(i) + "-abelian (pi)";
  v.mode = Mode::exhaustive;
  // central torsion generators commute into the power and can never fail
  std::vector<PcGroup::Buf> tgens;
  for (const Element& t : tor.gens) {
    PcGroup::Buf b{};
    g.load(b, t);
    if (!detail::raw_central(g, b.data())) tgens.push_back(b);
  }
  const std::uint64_t none = ~0ull;
  int tasks = std::max(opts.tasks, 1);
  std::vector<std::uint64_t> best((size_t)tasks, none);
  std::vector<int> best_gen((size_t)tasks, 0);
  auto scan_chunk = [&](auto&& enumerate_chunk, int tk, std::uint64_t b) {
    PcGroup::Buf hq{}, ht{}, htq{};
    std::uint64_t idx = b;
    enumerate_chunk([&](const PcGroup::Buf& x) {
      if (best[tk] != none) {
        ++idx;
        return;
      }
      detail::pow_pi_raw(g, x.data(), i, hq);
      for (size_t ti = 0; ti < tgens.size(); ++ti) {
        ht = x;
        g.mul_raw(ht.data(), tgens[ti].data());
        detail::pow_pi_raw(g, ht.data(), i, htq);
        if (htq != hq) {
          best[tk] = idx;
          best_gen[tk] = (int)ti;
          break;
        }
      }
      ++idx;
    });
  };
  // (rz)^q = (r)^q z^q for central z, so coset representatives of the central
  // core cover every element of H
  const std::uint64_t total = tor.trans ? tor.trans->size() : h.order();
  parallel_chunks(total, tasks, [&](int tk, std::uint64_t b, std::uint64_t e) {
    if (tor.trans)
      scan_chunk([&](auto&& fn) { tor.trans->enumerate(b, e, fn); }, tk, b);
    else
      scan_chunk([&](auto&& fn) { h.enumerate(b, e, fn); }, tk, b);
  });
  std::uint64_t win = none;
  int win_gen = 0;
  for (int t = 0; t < tasks; ++t)
    if (best[t] < win) {
      win = best[t];
      win_gen = best_gen[t];
    }
  v.checked = total;
  if (tor.trans)
    v.note = "scanned " + std::to_string(total) +
             " coset representatives of a central subgroup of order " +
             std::to_string(tor.trans->core().order());
  if (win == none) {
    v.holds = Tri::yes;
    return v;
  }
  Element hh = tor.trans ? tor.trans->element_at(win) : h.element_at(win);
  Element t = g.to_element(tgens[(size_t)win_gen]);
  v.holds = Tri::no;
  v.witness = {g.multiply(hh, t), g.inverse(hh)};
  v.note = "(ab)^q = 1 but a^q b^q != 1";
  return v;
}

inline Verdict is_semi_abelian_pi(const Subgroup& h, int i,
                                  const PropOptions& opts = {}) {
  return is_semi_abelian_pi(h, i, torsion_generators(h, i, opts), opts);
}

inline Verdict is_semi_abelian_pi(const PcGroup& g, int i,
                                  const PropOptions& opts = {}) {
  return is_semi_abelian_pi(Subgroup::whole(g), i, opts);
}

// Definitional check: (ab)^(p^i) = 1 <=> a^(p^i) b^(p^i) = 1 over ordered
// pairs; exhaustive when |H| fits the pair cap, otherwise sampled.
inline Verdict is_semi_abelian_definitional(const Subgroup& h, int i,
                                            const PropOptions& opts = {}) {
  const PcGroup& g = h.group();
  Verdict v;
  v.property = "semi-p^" + std::to_string(i) + "-abelian (definitional)";
  v.mode = opts.mode;
  const std::uint64_t q = detail::p_power(g.prime(), i);
  auto violation = [&](const PcGroup::Buf& a, const PcGroup::Buf& b,
                       std::string& note) {
    PcGroup::Buf ab = a, aq{}, bq{};
    g.mul_raw(ab.data(), b.data());
    pow_raw(g, ab.data(), (long long)q, aq);
    bool lhs = g.raw_is_identity(aq.data());
    pow_raw(g, a.data(), (long long)q, aq);
    pow_raw(g, b.data(), (long long)q, bq);
    g.mul_raw(aq.data(), bq.data());
    bool rhs = g.raw_is_identity(aq.data());
    if (lhs == rhs) return false;
    note = lhs ? "(ab)^q = 1 but a^q b^q != 1" : "a^q b^q = 1 but (ab)^q != 1";
    return true;
  };
  if (opts.mode == Mode::exhaustive) {
    if (h.order() > opts.pair_cap)
      throw Error(ErrorCode::capacity,
                  "group too large for the exhaustive pairwise check");
    const std::uint64_t m = h.order();
    std::vector<PcGroup::Buf> all;
    all.reserve(m);
    h.enumerate(0, m, [&](const PcGroup::Buf& x) { all.push_back(x); });
    for (std::uint64_t a = 0; a < m; ++a)
      for (std::uint64_t b = 0; b < m; ++b) {
        ++v.checked;
        std::string note;
        if (violation(all[a], all[b], note)) {
          v.holds = Tri::no;
          v.witness = {g.to_element(all[a]), g.to_element(all[b])};
          v.note = note;
          return v;
        }
      }
    v.holds = Tri::yes;
    return v;
  }
  v.seed = opts.seed;
  v.samples = opts.samples;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> d(0, h.order() - 1);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    Element ea = h.element_at(d(rng)), eb = h.element_at(d(rng));
    PcGroup::Buf a{}, b{};
    g.load(a, ea);
    g.load(b, eb);
    ++v.checked;
    std::string note;
    if (violation(a, b, note)) {
      v.holds = Tri::no;
      v.witness = {ea, eb};
      v.note = note;
      return v;
    }
  }
  v.holds = Tri::unknown;  // sampling can only refute
  return v;
}

inline Verdict is_semi_abelian_definitional(const PcGroup& g, int i,
                                            const PropOptions& opts = {}) {
  return is_semi_abelian_definitional(Subgroup::whole(g), i, opts);
}

// (ab)^p = a^p b^p for all pairs.
inline Verdict is_p_abelian(const PcGroup& g, const PropOptions& opts = {}) {
  Verdict v;
  v.property = "p-abelian";
  v.mode = opts.mode;
  const long long p = g.prime();
  auto violation = [&](const PcGroup::Buf& a, const PcGroup::Buf& b) {
    PcGroup::Buf ab = a, l{}, r{}, bq{};
    g.mul_raw(ab.data(), b.data());
    pow_raw(g, ab.data(), p, l);
    pow_raw(g, a.data(), p, r);
    pow_raw(g, b.data(), p, bq);
    g.mul_raw(r.data(), bq.data());
    return l != r;
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
        ++v.checked;
        if (violation(a, b)) {
          v.holds = Tri::no;
          v.witness = {g.unpack(i), g.unpack(j)};
          return v;
        }
      }
    }
    v.holds = Tri::yes;
    return v;
  }
  v.seed = opts.seed;
  v.samples = opts.samples;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
  PcGroup::Buf a{}, b{};
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    std::uint64_t i = d(rng), j = d(rng);
    g.unpack_raw(i, a.data());
    g.unpack_raw(j, b.data());
    ++v.checked;
    if (violation(a, b)) {
      v.holds = Tri::no;
      v.witness = {g.unpack(i), g.unpack(j)};
      return v;
    }
  }
  v.holds = Tri::unknown;
  return v;
}

// Exponent p^r by element scan (cap-guarded); large subgroups are scanned
// modulo a central core, since (rz)^e = r^e z^e for central z.
inline std::uint64_t group_exponent(const Subgroup& h,
                                    const PropOptions& opts = {}) {
  const PcGroup& g = h.group();
  if (h.order() > opts.cap)
    throw Error(ErrorCode::capacity, "group too large for exponent scan");
  int tasks = std::max(opts.tasks, 1);
  std::vector<std::uint64_t> per((size_t)tasks, 1);
  auto order_of = [&](PcGroup::Buf x) {
    std::uint64_t o = 1;
    while (!g.raw_is_identity(x.data())) {
      g.pow_prime_raw(x);
      o *= g.prime();
    }
    return o;
  };
  std::uint64_t e = 1;
  if (h.order() > kCollapseCutoff) {
    Subgroup core = central_core(h);
    if (core.order() > 1) {
      CentralTransversal trans(h, core);
      // core is abelian, so its exponent is the maximal basis-element order
      PcGroup::Buf b{};
      for (const Element& c : core.basis()) {
        g.load(b, c);
        e = std::max(e, order_of(b));
      }
      parallel_chunks(trans.size(), tasks,
                      [&](int t, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t best = 1;
        trans.enumerate(lo, hi, [&](const PcGroup::Buf& r) {
          best = std::max(best, order_of(r));
        });
        per[t] = best;
      });
      for (std::uint64_t v : per) e = std::max(e, v);
      return e;
    }
  }
  parallel_chunks(h.order(), tasks, [&](int t, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t best = 1;
    h.enumerate(lo, hi, [&](const PcGroup::Buf& x) {
      best = std::max(best, order_of(x));
    });
    per[t] = best;
  });
  for (std::uint64_t v : per) e = std::max(e, v);
  return e;
}

inline std::uint64_t group_exponent(const PcGroup& g,
                                    const PropOptions& opts = {}) {
  return group_exponent(Subgroup::whole(g), opts);
}

// Conjunction of is_semi_abelian_pi over i = 1..r (exp(G) = p^r); i > r is
// vacuous.
inline Verdict is_strongly_semi_abelian(const PcGroup& g,
                                        const PropOptions& opts = {}) {
  Verdict v;
  v.property = "strongly semi-p-abelian";
  v.mode = Mode::exhaustive;
  std::uint64_t exp = group_exponent(g, opts);
  int r = 0;
  for (std::uint64_t e = exp; e > 1; e /= g.prime()) ++r;
  for (int i = 1; i <= r; ++i) {
    Verdict vi = is_semi_abelian_pi(g, i, opts);
    v.checked += vi.checked;
    if (vi.holds != Tri::yes) {
      v.holds = Tri::no;
      v.witness = vi.witness;
      v.note = "fails at i=" + std::to_string(i) +
               (vi.note.empty() ? "" : ": " + vi.note);
      return v;
    }
  }
  v.holds = Tri::yes;
  return v;
}

struct PowerStructureRow {
  int i = 0;
  std::uint64_t omega_set_size = 0, omega_subgroup_order = 0;
  std::uint64_t agemo_set_size = 0, agemo_subgroup_order = 0;
  bool property1 = false;       // mho_i set is a subgroup
  bool property2 = false;       // Omega_i set is a subgroup
  bool pi_well_defined = false;
  bool pi_injective = false;    // |image| = |G : Omega_i|
  bool pi_surjective = false;   // image = mho_i subgroup (same as property1)
  bool index_equality = false;  // |G : Omega_i| = |mho_i|
};

struct PowerStructureReport {
  std::uint64_t exponent = 0;
  std::vector<PowerStructureRow> rows;  // i = 1..r
};

inline PowerStructureReport power_structure_report(const PcGroup& g,
                                                   const PropOptions& opts = {}) {
  PowerStructureReport rep;
  rep.exponent = group_exponent(g, opts);
  int r = 0;
  for (std::uint64_t e = rep.exponent; e > 1; e /= g.prime()) ++r;
  for (int i = 1; i <= r; ++i) {
    PowerStructureRow row;
    row.i = i;
    PowerSet om = omega(g, i, opts.cap, opts.tasks);
    PowerSet ag = agemo(g, i, opts.cap, opts.tasks);
    row.omega_set_size = om.set.size();
    row.omega_subgroup_order = om.subgroup.order();
    row.agemo_set_size = ag.set.size();
    row.agemo_subgroup_order = ag.subgroup.order();
    row.property1 = row.agemo_set_size == row.agemo_subgroup_order;
    row.property2 = row.omega_set_size == row.omega_subgroup_order;
    row.pi_well_defined =
        is_semi_abelian_pi(g, i, opts).holds == Tri::yes;
    row.pi_injective =
        row.agemo_set_size == g.order() / row.omega_subgroup_order;
    row.pi_surjective = row.property1;
    row.index_equality =
        g.order() / row.omega_subgroup_order == row.agemo_subgroup_order;
    rep.rows.push_back(row);
  }
  return rep;
}

// Regularity at i=1: for all a, b, (a^p b^p)^{-1} (ab)^p lies in
// mho_1(<a,b>').
inline Verdict is_regular(const PcGroup& g, const PropOptions& opts = {}) {
  Verdict v;
  v.property = "regular";
  v.mode = opts.mode;
  const long long p = g.prime();
  auto violation = [&](const Element& a, const Element& b) {
    Element ab3 = g.power(g.multiply(a, b), p);
    Element rhs = g.multiply(g.power(a, p), g.power(b, p));
    Element delta = g.multiply(g.inverse(rhs), ab3);
    if (delta.is_identity()) return false;
    Subgroup ab = closure(g, {a, b});
    Subgroup der = commutator_subgroup(ab, ab);
    Subgroup u = Subgroup::trivial(g);
    der.enumerate(0, der.order(), [&](const PcGroup::Buf& x) {
      PcGroup::Buf y{};
      pow_raw(g, x.data(), p, y);
      if (!u.contains_raw(y.data())) u.add_raw(y);
    });
    return !u.contains(delta);
  };
  if (opts.mode == Mode::exhaustive) {
    if (g.order() > opts.pair_cap)
      throw Error(ErrorCode::capacity,
                  "group too large for the exhaustive regularity check");
    for (std::uint64_t i = 0; i < g.order(); ++i)
      for (std::uint64_t j = 0; j < g.order(); ++j) {
        ++v.checked;
        Element a = g.unpack(i), b = g.unpack(j);
        if (violation(a, b)) {
          v.holds = Tri::no;
          v.witness = {a, b};
          return v;
        }
      }
    v.holds = Tri::yes;
    return v;
  }
  v.seed = opts.seed;
  v.samples = opts.samples;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> d(0, g.order() - 1);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    Element a = g.unpack(d(rng)), b = g.unpack(d(rng));
    ++v.checked;
    if (violation(a, b)) {
      v.holds = Tri::no;
      v.witness = {a, b};
      return v;
    }
  }
  v.holds = Tri::unknown;
  return v;
}

// Inner semi-p^i: the group fails semi-p^i but every maximal subgroup passes
// (subgroup heredity reduces "every proper subgroup" to maximal ones).
inline Verdict is_inner_semi_abelian(const PcGroup& g, int i,
                                     const PropOptions& opts = {}) {
  Verdict v;
  v.property = "inner semi-p^" + std::to_string(i) + "-abelian";
  v.mode = Mode::exhaustive;
  Verdict whole = is_semi_abelian_pi(g, i, opts);
  v.checked += whole.checked;
  if (whole.holds == Tri::yes) {
    v.holds = Tri::no;
    v.note = "the group itself is semi-p^" + std::to_string(i) + "-abelian";
    return v;
  }
  FrattiniResult fr = frattini_and_maximals(g);
  for (size_t m = 0; m < fr.maximals.size(); ++m) {
    Verdict vm = is_semi_abelian_pi(fr.maximals[m], i, opts);
    v.checked += vm.checked;
    if (vm.holds != Tri::yes) {
      v.holds = Tri::no;
      v.witness = vm.witness;
      v.note = "maximal subgroup #" + std::to_string(m) + " fails";
      return v;
    }
  }
  v.holds = Tri::yes;
  v.witness = whole.witness;  // the pair witnessing the group's own failure
  v.note = "group fails, all " + std::to_string(fr.maximals.size()) +
           " maximal subgroups pass";
  return v;
}

}  // namespace pcg
