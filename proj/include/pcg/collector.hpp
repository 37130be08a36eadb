#pragma once

// Normal-form arithmetic for power-commutator presentations: collection from
// the left, plus the overlap-based consistency test.

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "pcg/presentation.hpp"

namespace pcg {

using Exp = long long;

constexpr int kMaxGenerators = 64;
constexpr std::uint64_t kMaxOrder = 1ull << 62;
constexpr long long kDefaultEnumCap = 1594323;  // 3^13

class PcGroup;

// A collected normal form: exponent vector with 0 <= x_i < m_i.
class Element {
 public:
  Element() = default;
  Element(const PcGroup* g, std::vector<Exp> exps)
      : grp_(g), exps_(std::move(exps)) {}

  const PcGroup* group() const { return grp_; }
  const std::vector<Exp>& exps() const { return exps_; }
  Exp operator[](int i) const { return exps_[i]; }

  bool is_identity() const {
    for (Exp e : exps_)
      if (e) return false;
    return true;
  }
  bool operator==(const Element& o) const {
    return grp_ == o.grp_ && exps_ == o.exps_;
  }
  // Lexicographic by exponent vector; used for minimal-witness selection.
  bool operator<(const Element& o) const { return exps_ < o.exps_; }

 private:
  const PcGroup* grp_ = nullptr;
  std::vector<Exp> exps_;
};

struct OverlapFailure {
  std::string overlap;  // human-readable description of the violated relation
  std::string detail;
};

struct BuildOptions {
  bool checked = true;
  long long collection_budget = 1u << 22;
};

// Immutable arithmetic engine for one consistency-checked presentation.
class PcGroup {
 public:
  using Buf = std::array<Exp, kMaxGenerators>;

  static PcGroup build(const Presentation& pres, BuildOptions opts = {});

  unsigned prime() const { return p_; }
  int ngens() const { return n_; }
  std::uint64_t modulus(int i) const { return m_[i]; }
  std::uint64_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const Presentation& presentation() const { return pres_; }
  const std::string& generator_name(int i) const {
    return pres_.generators[i].name;
  }

  Element identity() const { return Element(this, std::vector<Exp>(n_, 0)); }
  Element generator(int i) const {
    std::vector<Exp> v(n_, 0);
    v[i] = 1;
    return Element(this, std::move(v));
  }
  Element element(std::vector<Exp> exps) const {
    if (static_cast<int>(exps.size()) != n_)
      throw Error(ErrorCode::bad_parameter, "exponent vector has wrong length");
    for (int i = 0; i < n_; ++i)
      if (exps[i] < 0 || exps[i] >= static_cast<Exp>(m_[i]))
        throw Error(ErrorCode::bad_parameter, "exponent out of range");
    return Element(this, std::move(exps));
  }

  Element normalize(const Word& w) const {
    Buf x{};
    for (const auto& [g, e] : w.terms) {
      if (g < 0 || g >= n_)
        throw Error(ErrorCode::bad_parameter, "word references invalid index");
      mul_term(x.data(), g, e);
    }
    return to_element(x);
  }

  Element multiply(const Element& a, const Element& b) const {
    check_same(a, b);
    Buf x{};
    load(x, a);
    mul_elem(x.data(), b);
    return to_element(x);
  }

  Element inverse(const Element& a) const {
    check_same(a, a);
    Buf x{};
    for (int i = n_ - 1; i >= 0; --i)
      if (a[i]) mul_term(x.data(), i, -a[i]);
    return to_element(x);
  }

  // a^m by square-and-multiply; m may be negative.
  Element power(const Element& a, long long m) const {
    Element base = m < 0 ? inverse(a) : a;
    unsigned long long k = m < 0 ? -(unsigned long long)m : (unsigned long long)m;
    Buf acc{};
    Buf sq{};
    load(sq, base);
    while (k) {
      if (k & 1) mul_raw(acc.data(), sq.data());
      k >>= 1;
      if (k) {
        Buf t = sq;
        mul_raw(t.data(), sq.data());
        sq = t;
      }
    }
    return to_element(acc);
  }

  // Least p^k with a^(p^k) = 1.
  std::uint64_t element_order(const Element& a) const {
    Buf x{};
    load(x, a);
    std::uint64_t ord = 1;
    while (!raw_is_identity(x.data())) {
      pow_prime_raw(x);
      ord *= p_;
    }
    return ord;
  }

  // Left-normed iterated commutator [[..[x1,x2],x3..],xk], length >= 2.
  Element commutator(const std::vector<Element>& xs) const {
    if (xs.size() < 2)
      throw Error(ErrorCode::bad_parameter,
                  "commutator needs at least two elements");
    Element acc = comm2(xs[0], xs[1]);
    for (size_t i = 2; i < xs.size(); ++i) acc = comm2(acc, xs[i]);
    return acc;
  }
  Element conjugate(const Element& x, const Element& y) const {
    return multiply(multiply(inverse(y), x), y);
  }

  std::vector<OverlapFailure> check_consistency() const;

  // Mixed-radix packing of exponent vectors into [0, order).
  std::uint64_t pack(const Element& a) const {
    std::uint64_t v = 0;
    for (int i = 0; i < n_; ++i) v += stride_[i] * (std::uint64_t)a[i];
    return v;
  }
  Element unpack(std::uint64_t v) const {
    std::vector<Exp> e(n_);
    for (int i = 0; i < n_; ++i) {
      e[i] = (Exp)((v / stride_[i]) % m_[i]);
    }
    return Element(this, std::move(e));
  }

  // --- raw-buffer interface (hot paths in structure/properties) ---

  void load(Buf& x, const Element& a) const {
    x.fill(0);
    for (int i = 0; i < n_; ++i) x[i] = a[i];
  }
  Element to_element(const Buf& x) const {
    return Element(this, std::vector<Exp>(x.begin(), x.begin() + n_));
  }
  bool raw_is_identity(const Exp* x) const {
    for (int i = 0; i < n_; ++i)
      if (x[i]) return false;
    return true;
  }
  // x := x * y; both operands must be collected normal forms.
  void mul_raw(Exp* x, const Exp* y) const {
    if (fast_ok_) {
      fmul(x, y, 0);
      return;
    }
    for (int i = 0; i < n_; ++i)
      if (y[i]) mul_term(x, i, y[i]);
  }
  void mul_elem(Exp* x, const Element& y) const {
    if (fast_ok_) {
      for (int i = 0; i < n_; ++i)
        if (y[i]) finsert(x, i, y[i]);
      return;
    }
    for (int i = 0; i < n_; ++i)
      if (y[i]) mul_term(x, i, y[i]);
  }
  // x := x^p (in place)
  void pow_prime_raw(Buf& x) const {
    Buf acc{};
    for (unsigned r = 0; r < p_; ++r) mul_raw(acc.data(), x.data());
    x = acc;
  }
  std::uint64_t pack_raw(const Exp* x) const {
    std::uint64_t v = 0;
    for (int i = 0; i < n_; ++i) v += stride_[i] * (std::uint64_t)x[i];
    return v;
  }
  void unpack_raw(std::uint64_t v, Exp* x) const {
    for (int i = 0; i < n_; ++i) x[i] = (Exp)((v / stride_[i]) % m_[i]);
  }

  // x := x * g_i^e, collecting to normal form. Throws on budget exhaustion.
  void mul_term(Exp* x, int i, Exp e) const {
    long long budget = budget_;
    mul_term_b(x, i, e, budget);
  }

 private:
  // --- table-driven multiplication of normal forms ---
  //
  // x := x * y restricted to generators with index >= lo. Recursion is on the
  // generator index, so it terminates unconditionally; the conjugation tables
  // conj_ carry all the rewriting information.
  void fmul(Exp* x, const Exp* y, int lo) const {
    for (int i = lo; i < n_; ++i)
      if (y[i]) finsert(x, i, y[i]);
  }

  // x := x * g_i^e with 0 < e < m_i and x a normal form.
  void finsert(Exp* x, int i, Exp e) const {
    const Exp m = (Exp)m_[i];
    std::uint64_t sup = 0;
    for (int j = i + 1; j < n_; ++j)
      if (x[j]) sup |= 1ull << j;
    if (sup & noncomm_[i]) {
      // x = g_i^{x_i} S: pull S out, conjugate it by g_i^e, push it back.
      Exp s[kMaxGenerators];
      for (int j = i + 1; j < n_; ++j) {
        s[j] = x[j];
        x[j] = 0;
      }
      Buf acc{};
      for (int j = i + 1; j < n_; ++j) {
        if (!s[j]) continue;
        if (noncomm_[i] >> j & 1) {
          const Buf& w = conj_[(size_t)j * n_ + i][(size_t)(e - 1) *
                                                       (m_[j] - 1) +
                                                   (s[j] - 1)];
          fmul(acc.data(), w.data(), i + 1);
        } else {
          finsert(acc.data(), j, s[j]);
        }
      }
      x[i] += e;
      if (x[i] >= m) {
        x[i] -= m;
        Buf t = pow_tail_buf_[i];
        fmul(t.data(), acc.data(), i + 1);
        for (int j = i + 1; j < n_; ++j) x[j] = t[j];
      } else {
        for (int j = i + 1; j < n_; ++j) x[j] = acc[j];
      }
    } else {
      x[i] += e;
      if (x[i] >= m) {
        x[i] -= m;
        if (!pow_tail_[i].empty()) {
          Buf rest{};
          for (int j = i + 1; j < n_; ++j) {
            rest[j] = x[j];
            x[j] = 0;
          }
          Buf t = pow_tail_buf_[i];
          fmul(t.data(), rest.data(), i + 1);
          for (int j = i + 1; j < n_; ++j) x[j] = t[j];
        }
      }
    }
  }
  PcGroup() = default;

  struct CompiledWord {
    // flat (gen, exp) pairs, exps already reduced into [0, m).
    std::vector<std::pair<int, Exp>> terms;
    bool empty() const { return terms.empty(); }
  };

  void check_same(const Element& a, const Element& b) const {
    if (a.group() != this || b.group() != this)
      throw Error(ErrorCode::mixed_group,
                  "elements belong to a different group");
  }

  Element comm2(const Element& a, const Element& b) const {
    Buf x{};
    load(x, inverse(a));
    mul_elem(x.data(), inverse(b));
    mul_elem(x.data(), a);
    mul_elem(x.data(), b);
    return to_element(x);
  }

  [[noreturn]] void budget_fail() const {
    throw Error(ErrorCode::inconsistent,
                "collection exceeded its step budget (non-terminating "
                "rewriting; presentation is inconsistent or malformed)");
  }

  void mul_word_b(Exp* x, const CompiledWord& w, long long& budget) const {
    for (const auto& [g, e] : w.terms) mul_term_b(x, g, e, budget);
  }

  void mul_term_b(Exp* x, int i, Exp e, long long& budget) const {
    if (e == 0) return;
    if (--budget <= 0) budget_fail();
    const Exp m = (Exp)m_[i];
    if (e < 0) {
      Exp t = (-e + m - 1) / m;
      mul_term_b(x, i, e + t * m, budget);
      // g_i^{-t m} = (inverse of power tail)^t; the tail commutes with g_i.
      for (Exp r = 0; r < t; ++r) mul_word_b(x, inv_pow_tail_[i], budget);
      return;
    }
    // fast path: nothing above i in x interferes with g_i
    std::uint64_t sup = 0;
    for (int j = i + 1; j < n_; ++j)
      if (x[j]) sup |= 1ull << j;
    if ((sup & noncomm_[i]) == 0) {
      if (x[i] + e >= m && !pow_tail_[i].empty() && sup != 0) {
        // the power tail lands to the left of everything above i
        Exp disp[kMaxGenerators];
        for (int j = i + 1; j < n_; ++j) {
          disp[j] = x[j];
          x[j] = 0;
        }
        x[i] += e;
        while (x[i] >= m) {
          x[i] -= m;
          mul_word_b(x, pow_tail_[i], budget);
        }
        for (int j = i + 1; j < n_; ++j)
          if (disp[j]) mul_term_b(x, j, disp[j], budget);
      } else {
        x[i] += e;
        while (x[i] >= m) {
          x[i] -= m;
          if (!pow_tail_[i].empty()) mul_word_b(x, pow_tail_[i], budget);
        }
      }
      return;
    }
    for (Exp r = 0; r < e; ++r) mul_single_b(x, i, budget);
  }

  // x := x * g_i (interfering case): displace everything above i, then
  // reinsert it conjugated by g_i.
  void mul_single_b(Exp* x, int i, long long& budget) const {
    if (--budget <= 0) budget_fail();
    Exp disp[kMaxGenerators];
    for (int j = i + 1; j < n_; ++j) {
      disp[j] = x[j];
      x[j] = 0;
    }
    x[i] += 1;
    const Exp m = (Exp)m_[i];
    while (x[i] >= m) {
      x[i] -= m;
      if (!pow_tail_[i].empty()) mul_word_b(x, pow_tail_[i], budget);
    }
    for (int j = i + 1; j < n_; ++j) {
      if (!disp[j]) continue;
      const CompiledWord& t = comm_tail_[j * n_ + i];
      if (t.empty()) {
        mul_term_b(x, j, disp[j], budget);
      } else {
        for (Exp r = 0; r < disp[j]; ++r) {
          mul_term_b(x, j, 1, budget);
          mul_word_b(x, t, budget);
        }
      }
    }
  }

  unsigned p_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> m_;
  std::vector<std::uint64_t> stride_;
  std::vector<CompiledWord> pow_tail_;      // g_i^{m_i}
  std::vector<CompiledWord> inv_pow_tail_;  // (g_i^{m_i})^{-1}
  std::vector<CompiledWord> comm_tail_;     // [g_j, g_i] at j*n+i, j > i
  std::vector<std::uint64_t> noncomm_;      // bitmask of j > i interfering with g_i
  // conj_[j*n+i] (interfering pairs only) holds (g_j^{g_i^e})^f at flat index
  // (e-1)*(m_j-1) + (f-1); pow_tail_buf_[i] is g_i^{m_i} as a buffer.
  std::vector<std::vector<Buf>> conj_;
  std::vector<Buf> pow_tail_buf_;
  bool fast_ok_ = false;  // tables built; falls back to mul_term otherwise
  std::uint64_t order_ = 0;
  long long budget_ = 1u << 22;
  std::string name_;
  Presentation pres_;
};

inline PcGroup PcGroup::build(const Presentation& pres, BuildOptions opts) {
  const int n = static_cast<int>(pres.generators.size());
  if (n > kMaxGenerators)
    throw Error(ErrorCode::capacity, "too many generators (max 64)");
  PcGroup g;
  g.p_ = pres.prime;
  g.n_ = n;
  g.pres_ = pres;
  g.budget_ = opts.collection_budget;
  g.m_.resize(n);
  g.stride_.assign(n, 0);
  unsigned __int128 order = 1;
  for (int i = 0; i < n; ++i) {
    g.m_[i] = pres.generators[i].order;
    order *= g.m_[i];
    if (order > kMaxOrder)
      throw Error(ErrorCode::capacity, "group order exceeds 2^62");
  }
  g.order_ = (std::uint64_t)order;
  // last generator varies fastest so packed order matches lex order on vectors
  std::uint64_t s = 1;
  for (int i = n - 1; i >= 0; --i) {
    g.stride_[i] = s;
    s *= g.m_[i];
  }

  auto compile = [&](const Word& w) {
    CompiledWord cw;
    for (const auto& [gen, e] : w.terms) cw.terms.emplace_back(gen, e);
    return cw;
  };
  g.pow_tail_.resize(n);
  g.inv_pow_tail_.resize(n);
  g.comm_tail_.resize((size_t)n * n);
  for (const auto& [i, w] : pres.power_tails) g.pow_tail_[i] = compile(w);
  for (const auto& [ji, w] : pres.commutator_tails)
    g.comm_tail_[(size_t)ji.first * n + ji.second] = compile(w);
  g.noncomm_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.comm_tail_[(size_t)j * n + i].empty())
        g.noncomm_[i] |= 1ull << j;

  // Normalize every tail so stored words are collected normal forms.
  auto to_word = [&](const Element& el) {
    CompiledWord cw;
    for (int i = 0; i < n; ++i)
      if (el[i]) cw.terms.emplace_back(i, el[i]);
    return cw;
  };
  for (int i = n - 1; i >= 0; --i) {
    if (!g.pow_tail_[i].empty()) {
      Buf x{};
      long long budget = g.budget_;
      g.mul_word_b(x.data(), g.pow_tail_[i], budget);
      g.pow_tail_[i] = to_word(g.to_element(x));
    }
    for (int k = 0; k < i; ++k) {
      auto& t = g.comm_tail_[(size_t)i * n + k];
      if (!t.empty()) {
        Buf x{};
        long long budget = g.budget_;
        g.mul_word_b(x.data(), t, budget);
        t = to_word(g.to_element(x));
        if (t.empty()) g.noncomm_[k] &= ~(1ull << i);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!g.pow_tail_[i].empty()) {
      Buf x{};
      long long budget = g.budget_;
      for (auto it = g.pow_tail_[i].terms.rbegin();
           it != g.pow_tail_[i].terms.rend(); ++it)
        g.mul_term_b(x.data(), it->first, -it->second, budget);
      g.inv_pow_tail_[i] = to_word(g.to_element(x));
    }
  }

  // Precompute the conjugation tables driving fmul/finsert; everything here
  // uses the slow word collector (mul_term_b), which never consults them.
  g.pow_tail_buf_.assign(n, Buf{});
  for (int i = 0; i < n; ++i)
    for (const auto& [gen, e] : g.pow_tail_[i].terms) g.pow_tail_buf_[i][gen] = e;
  g.conj_.resize((size_t)n * n);
  try {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!(g.noncomm_[i] >> j & 1)) continue;
        const Exp mi = (Exp)g.m_[i], mj = (Exp)g.m_[j];
        auto& tab = g.conj_[(size_t)j * n + i];
        tab.resize((size_t)(mi - 1) * (mj - 1));
        for (Exp e = 1; e < mi; ++e) {
          Buf c{};
          long long budget = g.budget_;
          g.mul_term_b(c.data(), i, -e, budget);
          g.mul_term_b(c.data(), j, 1, budget);
          g.mul_term_b(c.data(), i, e, budget);
          tab[(size_t)(e - 1) * (mj - 1)] = c;
          for (Exp f = 2; f < mj; ++f) {
            Buf acc = tab[(size_t)(e - 1) * (mj - 1) + (f - 2)];
            long long b2 = g.budget_;
            for (int t = 0; t < n; ++t)
              if (c[t]) g.mul_term_b(acc.data(), t, c[t], b2);
            tab[(size_t)(e - 1) * (mj - 1) + (f - 1)] = acc;
          }
        }
      }
    g.fast_ok_ = true;
  } catch (const Error&) {
    // Divergent rewriting (inconsistent presentation): leave the slow path in
    // place so check_consistency can still report the offending overlap.
    g.fast_ok_ = false;
  }

  if (opts.checked) {
    auto failures = g.check_consistency();
    if (!failures.empty()) {
      std::string msg = "presentation is inconsistent:";
      for (const auto& f : failures) msg += "\n  " + f.overlap + ": " + f.detail;
      throw Error(ErrorCode::inconsistent, msg);
    }
  }
  return g;
}

inline std::vector<OverlapFailure> PcGroup::check_consistency() const {
  std::vector<OverlapFailure> failures;
  const int n = n_;

  auto describe = [&](const Exp* x) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      if (!s.empty()) s += "*";
      s += generator_name(i);
      if (x[i] != 1) s += "^" + std::to_string(x[i]);
    }
    return s.empty() ? std::string("1") : s;
  };
  auto run = [&](const std::string& what, auto&& lhs_f, auto&& rhs_f) {
    Buf l{}, r{};
    try {
      lhs_f(l);
      rhs_f(r);
    } catch (const Error&) {
      failures.push_back({what, "collection did not terminate"});
      return;
    }
    if (std::memcmp(l.data(), r.data(), sizeof(Exp) * n) != 0)
      failures.push_back({what, describe(l.data()) + " != " + describe(r.data())});
  };

  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i)
        run("g" + std::to_string(k + 1) + "*(g" + std::to_string(j + 1) + "*g" +
                std::to_string(i + 1) + ") vs (g" + std::to_string(k + 1) +
                "*g" + std::to_string(j + 1) + ")*g" + std::to_string(i + 1),
            [&](Buf& x) {
              // g_k * NF(g_j g_i)
              Buf t{};
              mul_term(t.data(), j, 1);
              mul_term(t.data(), i, 1);
              mul_term(x.data(), k, 1);
              mul_raw(x.data(), t.data());
            },
            [&](Buf& x) {
              // NF(g_k g_j) * g_i
              mul_term(x.data(), k, 1);
              mul_term(x.data(), j, 1);
              mul_term(x.data(), i, 1);
            });

  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      // g_j^{m_j} * g_i = g_j^{m_j - 1} * (g_j g_i)
      run("g" + std::to_string(j + 1) + "^" + std::to_string(m_[j]) + "*g" +
              std::to_string(i + 1),
          [&](Buf& x) {
            if (!pow_tail_[j].empty()) {
              long long budget = budget_;
              mul_word_b(x.data(), pow_tail_[j], budget);
            }
            mul_term(x.data(), i, 1);
          },
          [&](Buf& x) {
            Buf t{};
            mul_term(t.data(), j, 1);
            mul_term(t.data(), i, 1);
            mul_term(x.data(), j, (Exp)m_[j] - 1);
            mul_raw(x.data(), t.data());
          });
      // g_j * g_i^{m_i} = (g_j g_i) * g_i^{m_i - 1}
      run("g" + std::to_string(j + 1) + "*g" + std::to_string(i + 1) + "^" +
              std::to_string(m_[i]),
          [&](Buf& x) {
            mul_term(x.data(), j, 1);
            if (!pow_tail_[i].empty()) {
              long long budget = budget_;
              mul_word_b(x.data(), pow_tail_[i], budget);
            }
          },
          [&](Buf& x) {
            mul_term(x.data(), j, 1);
            mul_term(x.data(), i, 1);
            mul_term(x.data(), i, (Exp)m_[i] - 1);
          });
    }

  for (int i = 0; i < n; ++i)
    // g_i * g_i^{m_i} = g_i^{m_i} * g_i
    run("g" + std::to_string(i + 1) + "^" + std::to_string(m_[i] + 1),
        [&](Buf& x) {
          mul_term(x.data(), i, 1);
          if (!pow_tail_[i].empty()) {
            long long budget = budget_;
            mul_word_b(x.data(), pow_tail_[i], budget);
          }
        },
        [&](Buf& x) {
          if (!pow_tail_[i].empty()) {
            long long budget = budget_;
            mul_word_b(x.data(), pow_tail_[i], budget);
          }
          mul_term(x.data(), i, 1);
        });

  return failures;
}

}  // namespace pcg
