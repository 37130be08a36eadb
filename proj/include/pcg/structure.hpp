#pragma once

// Subgroups (via induced polycyclic sequences), central series, omega/agemo,
// Frattini subgroup and maximal subgroups, and summary statistics.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pcg/collector.hpp"
#include "pcg/scan.hpp"

namespace pcg {

namespace detail {

inline long long egcd(long long a, long long b, long long& x, long long& y) {
  if (!b) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1, g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long long modinv(long long a, long long m) {
  long long x, y;
  egcd(((a % m) + m) % m, m, x, y);
  return ((x % m) + m) % m;
}

}  // namespace detail

// out := a^k (raw buffers; k may be negative)
inline void pow_raw(const PcGroup& g, const Exp* a, long long k,
                    PcGroup::Buf& out) {
  out.fill(0);
  PcGroup::Buf sq{};
  if (k < 0) {
    for (int i = g.ngens() - 1; i >= 0; --i)
      if (a[i]) g.mul_term(sq.data(), i, -a[i]);
    k = -k;
  } else {
    for (int i = 0; i < g.ngens(); ++i) sq[i] = a[i];
  }
  unsigned long long u = (unsigned long long)k;
  while (u) {
    if (u & 1) g.mul_raw(out.data(), sq.data());
    u >>= 1;
    if (u) {
      PcGroup::Buf t = sq;
      g.mul_raw(t.data(), sq.data());
      sq = t;
    }
  }
}

inline void inv_raw(const PcGroup& g, const Exp* a, PcGroup::Buf& out) {
  out.fill(0);
  for (int i = g.ngens() - 1; i >= 0; --i)
    if (a[i]) g.mul_term(out.data(), i, -a[i]);
}

// A subgroup held as an induced polycyclic sequence: at most one basis
// element per leading generator index, leading coefficient a power of p,
// closed under power overflow and conjugation. Membership is decided by
// sifting; enumeration runs over the mixed-radix product coordinates.
class Subgroup {
 public:
  explicit Subgroup(const PcGroup* g) : g_(g), slot_(g->ngens()) {}

  static Subgroup trivial(const PcGroup& g) { return Subgroup(&g); }

  static Subgroup whole(const PcGroup& g) {
    Subgroup s(&g);
    for (int i = 0; i < g.ngens(); ++i) s.add(g.generator(i));
    return s;
  }

  static Subgroup generated(const PcGroup& g, const std::vector<Element>& gens) {
    Subgroup s(&g);
    for (const auto& x : gens) s.add(x);
    return s;
  }

  const PcGroup& group() const { return *g_; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (int l = 0; l < g_->ngens(); ++l)
      if (slot_[l]) o *= relord(l);
    return o;
  }

  const std::vector<Element>& generators() const { return gens_; }

  // Induced pc sequence, ascending by leading index.
  std::vector<Element> basis() const {
    std::vector<Element> out;
    for (int l = 0; l < g_->ngens(); ++l)
      if (slot_[l]) out.push_back(g_->to_element(*slot_[l]));
    return out;
  }

  bool contains(const Element& x) const {
    PcGroup::Buf b{};
    g_->load(b, x);
    return contains_raw(b.data());
  }

  bool contains_raw(const Exp* x) const {
    PcGroup::Buf b{};
    for (int i = 0; i < g_->ngens(); ++i) b[i] = x[i];
    sift(b);
    return g_->raw_is_identity(b.data());
  }

  // Adds x and restores closure; returns true if the subgroup grew.
  bool add(const Element& x) {
    PcGroup::Buf b{};
    g_->load(b, x);
    bool grew = add_raw(b);
    if (grew) gens_.push_back(x);
    return grew;
  }

  bool add_raw(PcGroup::Buf x) {
    sift(x);
    if (g_->raw_is_identity(x.data())) return false;
    insert(x);
    close();
    return true;
  }

  // Element at enumeration index idx, last basis coordinate fastest.
  Element element_at(std::uint64_t idx) const {
    PcGroup::Buf acc{};
    std::vector<std::uint64_t> digits = to_digits(idx);
    int k = 0;
    for (int l = 0; l < g_->ngens(); ++l)
      if (slot_[l]) {
        if (digits[k]) {
          PcGroup::Buf t{};
          pow_raw(*g_, slot_[l]->data(), (long long)digits[k], t);
          g_->mul_raw(acc.data(), t.data());
        }
        ++k;
      }
    return g_->to_element(acc);
  }

  // Sequential enumeration of [begin, end) in index order; fn(const Buf&).
  // Amortizes to O(1) multiplications per element via prefix products.
  template <typename Fn>
  void enumerate(std::uint64_t begin, std::uint64_t end, Fn fn) const {
    if (begin >= end) return;
    std::vector<int> lead;
    for (int l = 0; l < g_->ngens(); ++l)
      if (slot_[l]) lead.push_back(l);
    const int k = (int)lead.size();
    std::vector<std::uint64_t> digits = to_digits(begin);
    // prefix[j] = product of slot^digit over the first j coordinates
    std::vector<PcGroup::Buf> prefix(k + 1);
    prefix[0].fill(0);
    for (int j = 0; j < k; ++j) {
      prefix[j + 1] = prefix[j];
      if (digits[j]) {
        PcGroup::Buf t{};
        pow_raw(*g_, slot_[lead[j]]->data(), (long long)digits[j], t);
        g_->mul_raw(prefix[j + 1].data(), t.data());
      }
    }
    for (std::uint64_t idx = begin;;) {
      fn(prefix[k]);
      if (++idx >= end) break;
      int j = k - 1;
      while (true) {
        if (++digits[j] < relord(lead[j])) break;
        digits[j] = 0;
        --j;
      }
      // prefix[j+1] gains one more right factor; suffix digits reset to zero
      g_->mul_raw(prefix[j + 1].data(), slot_[lead[j]]->data());
      for (int t = j + 1; t < k; ++t) prefix[t + 1] = prefix[t];
    }
  }

  // All members, lexicographically sorted; guarded by cap.
  std::vector<Element> members(std::uint64_t cap = kDefaultEnumCap) const {
    std::uint64_t o = order();
    if (o > cap)
      throw Error(ErrorCode::capacity, "subgroup too large to materialize");
    std::vector<Element> out;
    out.reserve(o);
    enumerate(0, o, [&](const PcGroup::Buf& b) { out.push_back(g_->to_element(b)); });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_trivial() const { return order() == 1; }

  // Relative order of the basis element with leading index l.
  std::uint64_t relord(int l) const { return g_->modulus(l) / (*slot_[l])[l]; }

 private:
  std::vector<std::uint64_t> to_digits(std::uint64_t idx) const {
    std::vector<std::uint64_t> radii;
    for (int l = 0; l < g_->ngens(); ++l)
      if (slot_[l]) radii.push_back(relord(l));
    std::vector<std::uint64_t> digits(radii.size());
    for (int j = (int)radii.size() - 1; j >= 0; --j) {
      digits[j] = idx % radii[j];
      idx /= radii[j];
    }
    return digits;
  }

  static int lead_of(const PcGroup& g, const Exp* x) {
    for (int i = 0; i < g.ngens(); ++i)
      if (x[i]) return i;
    return -1;
  }

  // Reduce x modulo the echelon: afterwards x is the identity, or its leading
  // slot is empty, or its leading coefficient has smaller p-valuation than
  // the slot's.
  void sift(PcGroup::Buf& x) const {
    while (true) {
      int l = lead_of(*g_, x.data());
      if (l < 0) return;
      if (!slot_[l]) return;
      Exp d = (*slot_[l])[l];
      if (x[l] % d != 0) return;
      PcGroup::Buf t{};
      pow_raw(*g_, slot_[l]->data(), -(long long)(x[l] / d), t);
      g_->mul_raw(t.data(), x.data());
      x = t;
    }
  }

  void insert(PcGroup::Buf x) {
    int l = lead_of(*g_, x.data());
    // normalize the leading coefficient to a pure power of p
    long long m = (long long)g_->modulus(l);
    long long c = x[l], pv = 1;
    while (c % (long long)g_->prime() == 0) {
      pv *= g_->prime();
      c /= g_->prime();
    }
    if (c != 1) {
      long long e = detail::modinv(c, m / pv);
      PcGroup::Buf t{};
      pow_raw(*g_, x.data(), e, t);
      x = t;
    }
    std::optional<PcGroup::Buf> old = slot_[l];
    slot_[l] = x;
    if (old) {
      // the displaced element still belongs to the subgroup; re-add
      PcGroup::Buf o = *old;
      sift(o);
      if (!g_->raw_is_identity(o.data())) insert(o);
    }
  }

  // Restore closure under power overflow and conjugation.
  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> lead;
      for (int l = 0; l < g_->ngens(); ++l)
        if (slot_[l]) lead.push_back(l);
      auto try_add = [&](PcGroup::Buf b) {
        sift(b);
        if (!g_->raw_is_identity(b.data())) {
          insert(b);
          changed = true;
        }
      };
      for (int l : lead) {
        PcGroup::Buf t{};
        pow_raw(*g_, slot_[l]->data(), (long long)relord(l), t);
        try_add(t);
        if (changed) break;
      }
      if (changed) continue;
      for (int a : lead) {
        for (int b : lead) {
          if (a == b) continue;
          // slot[a]^{slot[b]} and slot[a]^{slot[b]^{-1}}
          for (int dir = 0; dir < 2; ++dir) {
            PcGroup::Buf y = *slot_[b];
            if (dir) {
              PcGroup::Buf yi{};
              inv_raw(*g_, y.data(), yi);
              y = yi;
            }
            PcGroup::Buf yi{};
            inv_raw(*g_, y.data(), yi);
            PcGroup::Buf t = yi;
            g_->mul_raw(t.data(), slot_[a]->data());
            g_->mul_raw(t.data(), y.data());
            try_add(t);
            if (changed) break;
          }
          if (changed) break;
        }
        if (changed) break;
      }
    }
  }

  const PcGroup* g_;
  std::vector<Element> gens_;
  std::vector<std::optional<PcGroup::Buf>> slot_;
};

// Smallest subgroup containing gens.
inline Subgroup closure(const PcGroup& g, const std::vector<Element>& gens) {
  return Subgroup::generated(g, gens);
}

// Normal closure of `seeds` under conjugation by `conjugators`.
inline Subgroup normal_closure(const PcGroup& g,
                               const std::vector<Element>& seeds,
                               const std::vector<Element>& conjugators) {
  Subgroup s = Subgroup::generated(g, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Element& b : s.basis())
      for (const Element& c : conjugators) {
        Element y = g.conjugate(b, c);
        if (!s.contains(y)) {
          s.add(y);
          changed = true;
        }
      }
  }
  return s;
}

// [H, K]: normal closure in <H, K> of the generator commutators.
inline Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  const PcGroup& g = h.group();
  if (&k.group() != &g)
    throw Error(ErrorCode::mixed_group, "subgroups of different groups");
  std::vector<Element> seeds;
  std::vector<Element> hb = h.basis(), kb = k.basis();
  for (const Element& a : hb)
    for (const Element& b : kb) seeds.push_back(g.commutator({a, b}));
  std::vector<Element> conj = hb;
  conj.insert(conj.end(), kb.begin(), kb.end());
  return normal_closure(g, seeds, conj);
}

// G_1 = G, G_{i+1} = [G_i, G], down to the trivial subgroup (inclusive).
inline std::vector<Subgroup> lower_central_series(const PcGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole(g));
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), series.front());
    if (next.order() == series.back().order())
      throw Error(ErrorCode::inconsistent,
                  "lower central series does not descend (non-nilpotent?)");
    series.push_back(next);
  }
  return series;
}

inline int nilpotency_class(const PcGroup& g) {
  return (int)lower_central_series(g).size() - 1;
}

// Membership test for the upper central series term Z_level without
// materializing it: Z_0 = 1 and x in Z_{i+1} iff [x, g_j] in Z_i for all
// pc generators g_j.
inline bool in_upper_central(const PcGroup& g, const Element& x, int level) {
  if (x.is_identity()) return true;
  if (level <= 0) return false;
  for (int j = 0; j < g.ngens(); ++j) {
    if (!in_upper_central(g, g.commutator({x, g.generator(j)}), level - 1))
      return false;
  }
  return true;
}

// Z_0 = 1 < Z_1 <= ... <= Z_c = G by full enumeration (cap-guarded).
inline std::vector<Subgroup> center_and_upper_series(
    const PcGroup& g, std::uint64_t cap = kDefaultEnumCap) {
  if (g.order() > cap)
    throw Error(ErrorCode::capacity, "group too large for upper series scan");
  std::vector<Subgroup> series;
  series.push_back(Subgroup::trivial(g));
  while (series.back().order() != g.order()) {
    const Subgroup& z = series.back();
    Subgroup next = Subgroup::trivial(g);
    PcGroup::Buf x{}, c{}, xi{};
    for (std::uint64_t v = 0; v < g.order(); ++v) {
      g.unpack_raw(v, x.data());
      if (next.contains_raw(x.data())) continue;
      bool central = true;
      for (int j = 0; j < g.ngens() && central; ++j) {
        // [x, g_j] = x^{-1} g_j^{-1} x g_j
        inv_raw(g, x.data(), xi);
        c = xi;
        g.mul_term(c.data(), j, -1);
        g.mul_raw(c.data(), x.data());
        g.mul_term(c.data(), j, 1);
        if (!z.contains_raw(c.data())) central = false;
      }
      if (central) next.add_raw(x);
    }
    if (next.order() == z.order())
      throw Error(ErrorCode::inconsistent, "upper central series stalled");
    series.push_back(next);
  }
  return series;
}

inline Subgroup center(const PcGroup& g, std::uint64_t cap = kDefaultEnumCap) {
  if (g.order() > cap)
    throw Error(ErrorCode::capacity, "group too large for center scan");
  Subgroup z = Subgroup::trivial(g);
  PcGroup::Buf x{}, c{}, xi{};
  for (std::uint64_t v = 0; v < g.order(); ++v) {
    g.unpack_raw(v, x.data());
    if (z.contains_raw(x.data())) continue;
    bool central = true;
    for (int j = 0; j < g.ngens() && central; ++j) {
      inv_raw(g, x.data(), xi);
      c = xi;
      g.mul_term(c.data(), j, -1);
      g.mul_raw(c.data(), x.data());
      g.mul_term(c.data(), j, 1);
      if (!g.raw_is_identity(c.data())) central = false;
    }
    if (central) z.add_raw(x);
  }
  return z;
}

struct PowerSet {
  std::vector<std::uint64_t> set;  // packed, ascending
  Subgroup subgroup;
};

// Omega_i: the set {x : x^(p^i) = 1} and the subgroup it generates.
inline PowerSet omega(const PcGroup& g, int i,
                      std::uint64_t cap = kDefaultEnumCap, int tasks = 1) {
  if (g.order() > cap)
    throw Error(ErrorCode::capacity, "group too large for omega scan");
  std::uint64_t q = 1;
  for (int r = 0; r < i; ++r) q *= g.prime();
  std::vector<std::vector<std::uint64_t>> parts((size_t)std::max(tasks, 1));
  parallel_chunks(g.order(), tasks, [&](int t, std::uint64_t b, std::uint64_t e) {
    PcGroup::Buf x{}, y{};
    for (std::uint64_t v = b; v < e; ++v) {
      g.unpack_raw(v, x.data());
      pow_raw(g, x.data(), (long long)q, y);
      if (g.raw_is_identity(y.data())) parts[t].push_back(v);
    }
  });
  PowerSet out{{}, Subgroup::trivial(g)};
  for (auto& part : parts)
    out.set.insert(out.set.end(), part.begin(), part.end());
  PcGroup::Buf x{};
  for (std::uint64_t v : out.set) {
    g.unpack_raw(v, x.data());
    if (!out.subgroup.contains_raw(x.data())) out.subgroup.add_raw(x);
  }
  return out;
}

// Agemo_i: the set {x^(p^i) : x in G} and the subgroup it generates.
inline PowerSet agemo(const PcGroup& g, int i,
                      std::uint64_t cap = kDefaultEnumCap, int tasks = 1) {
  if (g.order() > cap)
    throw Error(ErrorCode::capacity, "group too large for agemo scan");
  std::uint64_t q = 1;
  for (int r = 0; r < i; ++r) q *= g.prime();
  std::vector<std::vector<std::uint64_t>> parts((size_t)std::max(tasks, 1));
  parallel_chunks(g.order(), tasks, [&](int t, std::uint64_t b, std::uint64_t e) {
    PcGroup::Buf x{}, y{};
    for (std::uint64_t v = b; v < e; ++v) {
      g.unpack_raw(v, x.data());
      pow_raw(g, x.data(), (long long)q, y);
      parts[t].push_back(g.pack_raw(y.data()));
    }
  });
  PowerSet out{{}, Subgroup::trivial(g)};
  for (auto& part : parts)
    out.set.insert(out.set.end(), part.begin(), part.end());
  std::sort(out.set.begin(), out.set.end());
  out.set.erase(std::unique(out.set.begin(), out.set.end()), out.set.end());
  PcGroup::Buf x{};
  for (std::uint64_t v : out.set) {
    g.unpack_raw(v, x.data());
    if (!out.subgroup.contains_raw(x.data())) out.subgroup.add_raw(x);
  }
  return out;
}

// Phi(G) = G' * mho_1(G) = <[g_i,g_j], g_i^p>; maximal subgroups are the
// preimages of the hyperplanes of G/Phi(G).
struct FrattiniResult {
  Subgroup frattini;
  std::vector<int> quotient_basis;  // pc generator indices spanning G/Phi
  std::vector<Subgroup> maximals;
};

inline FrattiniResult frattini_and_maximals(const PcGroup& g) {
  Subgroup frat = Subgroup::trivial(g);
  for (int i = 0; i < g.ngens(); ++i)
    for (int j = i + 1; j < g.ngens(); ++j)
      frat.add(g.commutator({g.generator(j), g.generator(i)}));
  for (int i = 0; i < g.ngens(); ++i)
    frat.add(g.power(g.generator(i), g.prime()));

  std::vector<int> qbasis;
  Subgroup span = frat;
  for (int i = 0; i < g.ngens(); ++i)
    if (!span.contains(g.generator(i))) {
      qbasis.push_back(i);
      span.add(g.generator(i));
    }
  const int d = (int)qbasis.size();
  const long long p = g.prime();

  std::vector<Subgroup> maximals;
  // hyperplanes = kernels of nonzero functionals lambda, first nonzero
  // coefficient 1 (canonical representatives)
  std::vector<std::vector<long long>> lambdas;
  std::vector<long long> lam(d, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == d) {
      bool nz = false;
      for (long long c : lam) nz |= (c != 0);
      if (!nz) return;
      int first = 0;
      while (lam[first] == 0) ++first;
      if (lam[first] != 1) return;
      lambdas.push_back(lam);
      return;
    }
    for (long long c = 0; c < p; ++c) {
      lam[pos] = c;
      rec(pos + 1);
    }
    lam[pos] = 0;
  };
  rec(0);
  std::sort(lambdas.begin(), lambdas.end());
  for (const auto& l : lambdas) {
    Subgroup m = frat;
    // kernel basis of the functional l over F_p^d
    int pivot = 0;
    while (l[pivot] == 0) ++pivot;
    for (int j = 0; j < d; ++j) {
      if (j == pivot) continue;
      // e_j - l_j * e_pivot lies in the kernel
      Element v = g.multiply(
          g.generator(qbasis[j]),
          g.power(g.generator(qbasis[pivot]), ((p - l[j]) % p + p) % p));
      m.add(v);
    }
    // generators with zero functional coefficient that are not in the span
    // are already covered by the e_j loop above
    maximals.push_back(std::move(m));
  }
  return {std::move(frat), std::move(qbasis), std::move(maximals)};
}

struct GroupStats {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  int nilpotency_class = 0;
  int rank = 0;  // minimal generator count d
  bool metabelian = false;
};

inline GroupStats group_stats(const PcGroup& g,
                              std::uint64_t cap = kDefaultEnumCap,
                              int tasks = 1) {
  GroupStats s;
  s.order = g.order();
  s.nilpotency_class = nilpotency_class(g);
  s.rank = (int)frattini_and_maximals(g).quotient_basis.size();
  Subgroup whole = Subgroup::whole(g);
  Subgroup derived = commutator_subgroup(whole, whole);
  s.metabelian = commutator_subgroup(derived, derived).is_trivial();
  if (g.order() > cap)
    throw Error(ErrorCode::capacity, "group too large for exponent scan");
  std::vector<std::uint64_t> per((size_t)std::max(tasks, 1), 1);
  parallel_chunks(g.order(), tasks, [&](int t, std::uint64_t b, std::uint64_t e) {
    PcGroup::Buf x{};
    std::uint64_t best = 1;
    for (std::uint64_t v = b; v < e; ++v) {
      g.unpack_raw(v, x.data());
      std::uint64_t o = 1;
      while (!g.raw_is_identity(x.data())) {
        g.pow_prime_raw(x);
        o *= g.prime();
      }
      best = std::max(best, o);
    }
    per[t] = best;
  });
  for (std::uint64_t v : per) s.exponent = std::max(s.exponent, v);
  return s;
}

}  // namespace pcg
