#pragma once

// Brute-force ground truth: a verified Cayley table with table-only
// arithmetic and a table-only semi-p^i check, used to certify the collector
// and the property deciders on small groups.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcg/collector.hpp"
#include "pcg/report.hpp"

namespace pcg {

constexpr std::uint64_t kOracleCap = 2187;  // 3^7

class CayleyTable {
 public:
  // Indices are the group's packed element values in [0, N).
  static CayleyTable build(const PcGroup& g, std::uint64_t cap = kOracleCap) {
    if (g.order() > cap)
      throw Error(ErrorCode::capacity, "group too large for a Cayley table");
    CayleyTable t;
    t.n_ = (std::uint32_t)g.order();
    t.p_ = g.prime();
    t.mul_.resize((size_t)t.n_ * t.n_);
    t.inv_.assign(t.n_, 0);
    PcGroup::Buf a{}, x{};
    for (std::uint32_t i = 0; i < t.n_; ++i) {
      g.unpack_raw(i, a.data());
      for (std::uint32_t j = 0; j < t.n_; ++j) {
        x = a;
        PcGroup::Buf b{};
        g.unpack_raw(j, b.data());
        g.mul_raw(x.data(), b.data());
        std::uint64_t v = g.pack_raw(x.data());
        t.mul_[(size_t)i * t.n_ + j] = (std::uint32_t)v;
        if (v == 0) t.inv_[i] = j;
      }
    }
    t.verify_latin_square();
    return t;
  }

  std::uint32_t order() const { return n_; }
  unsigned prime() const { return p_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[(size_t)a * n_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  std::uint32_t pow(std::uint32_t a, long long k) const {
    if (k < 0) {
      a = inv_[a];
      k = -k;
    }
    std::uint32_t acc = 0, sq = a;
    unsigned long long u = (unsigned long long)k;
    while (u) {
      if (u & 1) acc = mul(acc, sq);
      u >>= 1;
      if (u) sq = mul(sq, sq);
    }
    return acc;
  }

  std::uint64_t element_order(std::uint32_t a) const {
    std::uint64_t o = 1;
    while (a != 0) {
      a = pow(a, p_);
      o *= p_;
      if (o > n_) return 0;  // possible on a corrupted table only
    }
    return o;
  }

  // Deliberate fault injection for testing the validators themselves.
  void corrupt(std::uint32_t a, std::uint32_t b, std::uint32_t value) {
    mul_[(size_t)a * n_ + b] = value;
  }

  void verify_latin_square() const {
    std::vector<char> seen(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::uint32_t j = 0; j < n_; ++j) {
        std::uint32_t v = mul(i, j);
        if (v >= n_ || seen[v])
          throw Error(ErrorCode::inconsistent, "Cayley table row is not a permutation");
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::uint32_t j = 0; j < n_; ++j) {
        std::uint32_t v = mul(j, i);
        if (v >= n_ || seen[v])
          throw Error(ErrorCode::inconsistent, "Cayley table column is not a permutation");
        seen[v] = 1;
      }
      if (mul(0, i) != i || mul(i, 0) != i)
        throw Error(ErrorCode::inconsistent, "identity row/column broken");
      if (mul(i, inv_[i]) != 0)
        throw Error(ErrorCode::inconsistent, "inverse table broken");
    }
  }

 private:
  std::uint32_t n_ = 0;
  unsigned p_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

struct CrossValidation {
  bool ok = true;
  std::uint64_t checked = 0;
  std::vector<std::string> disagreements;
};

// Collector arithmetic vs table arithmetic: all pairs when N <= full_cap,
// otherwise `samples` seeded random pairs.
inline CrossValidation cross_validate(const PcGroup& g, const CayleyTable& t,
                                      std::uint64_t full_cap = 729,
                                      std::uint64_t samples = 100000,
                                      std::uint64_t seed = 1) {
  CrossValidation r;
  auto check_pair = [&](std::uint64_t a, std::uint64_t b) {
    Element ea = g.unpack(a), eb = g.unpack(b);
    ++r.checked;
    if (g.pack(g.multiply(ea, eb)) != t.mul((std::uint32_t)a, (std::uint32_t)b)) {
      r.ok = false;
      if (r.disagreements.size() < 10)
        r.disagreements.push_back("multiply disagrees at (" + std::to_string(a) +
                                  "," + std::to_string(b) + ")");
    }
    if (g.pack(g.inverse(ea)) != t.inv((std::uint32_t)a)) {
      r.ok = false;
      if (r.disagreements.size() < 10)
        r.disagreements.push_back("inverse disagrees at " + std::to_string(a));
    }
    if (g.pack(g.power(ea, (long long)g.prime())) !=
        t.pow((std::uint32_t)a, (long long)g.prime())) {
      r.ok = false;
      if (r.disagreements.size() < 10)
        r.disagreements.push_back("power disagrees at " + std::to_string(a));
    }
    if (g.element_order(ea) != t.element_order((std::uint32_t)a)) {
      r.ok = false;
      if (r.disagreements.size() < 10)
        r.disagreements.push_back("element_order disagrees at " + std::to_string(a));
    }
  };
  const std::uint64_t n = t.order();
  if (n <= full_cap) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) check_pair(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    for (std::uint64_t s = 0; s < samples; ++s) check_pair(d(rng), d(rng));
  }
  return r;
}

// Definitional semi-p^i check using only table lookups.
inline Verdict oracle_semi_abelian(const PcGroup& g, const CayleyTable& t, int i) {
  Verdict v;
  v.property = "semi-p^" + std::to_string(i) + "-abelian (oracle)";
  v.mode = Mode::exhaustive;
  long long q = 1;
  for (int r = 0; r < i; ++r) q *= t.prime();
  const std::uint32_t n = t.order();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      ++v.checked;
      bool lhs = t.pow(t.mul(a, b), q) == 0;
      bool rhs = t.mul(t.pow(a, q), t.pow(b, q)) == 0;
      if (lhs != rhs) {
        v.holds = Tri::no;
        v.witness = {g.unpack(a), g.unpack(b)};
        v.note = lhs ? "(ab)^q = 1 but a^q b^q != 1" : "a^q b^q = 1 but (ab)^q != 1";
        return v;
      }
    }
  v.holds = Tri::yes;
  return v;
}

}  // namespace pcg
