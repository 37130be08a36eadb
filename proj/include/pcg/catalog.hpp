#pragma once

// Built-in, consistency-checked presentations: a small test corpus of
// 3-groups (plus parameterized cyclic/elementary families) and the
// two-generator example38 family.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcg/presentation.hpp"

namespace pcg {

using Params = std::map<std::string, long long>;

struct CatalogEntry {
  std::string name;
  std::string summary;     // one line: what the group is + headline facts
  std::string params_doc;  // accepted parameters, empty if none
  std::vector<std::string> param_names;
  std::function<std::string(const Params&)> source;  // .pcp text
  std::string notes;  // e.g. completion delta for example38
};

namespace detail {

inline long long param(const Params& ps, const std::string& key,
                       long long fallback) {
  auto it = ps.find(key);
  return it == ps.end() ? fallback : it->second;
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::bad_parameter, msg);
}

inline std::string cyclic_source(const Params& ps) {
  long long p = param(ps, "p", 3), k = param(ps, "k", 1);
  require(p >= 2, "cyclic: p must be a prime >= 2");
  require(k >= 1 && k <= 40, "cyclic: k must be in 1..40");
  long long m = 1;
  for (long long i = 0; i < k; ++i) m *= p;
  return "pgroup p=" + std::to_string(p) + "\ngen a order " + std::to_string(m) +
         "\n";
}

inline std::string elementary_source(const Params& ps) {
  long long p = param(ps, "p", 3), d = param(ps, "d", 2);
  require(p >= 2, "elementary: p must be a prime >= 2");
  require(d >= 1 && d <= 20, "elementary: d must be in 1..20");
  std::string out = "pgroup p=" + std::to_string(p) + "\n";
  for (long long i = 1; i <= d; ++i)
    out += "gen a" + std::to_string(i) + " order " + std::to_string(p) + "\n";
  return out;
}

inline std::string heisenberg_source(const Params&) {
  return
      "pgroup p=3\n"
      "gen x order 3\n"
      "gen y order 3\n"
      "gen z order 3\n"
      "comm [y,x] = z\n";
}

inline std::string m27_source(const Params&) {
  return
      "pgroup p=3\n"
      "gen x order 3\n"
      "gen y order 3\n"
      "gen z order 3\n"
      "pow y = z\n"
      "comm [y,x] = z\n";
}

inline std::string c3wrc3_source(const Params&) {
  return
      "pgroup p=3\n"
      "gen t order 3\n"
      "gen u1 order 3\n"
      "gen u2 order 3\n"
      "gen u3 order 3\n"
      "comm [u1,t] = u2\n"
      "comm [u2,t] = u3\n";
}

// Free 3-generator group of exponent 3: order 3^7, class 3.
inline std::string b23_source(const Params&) {
  return
      "pgroup p=3\n"
      "gen x1 order 3\n"
      "gen x2 order 3\n"
      "gen x3 order 3\n"
      "gen y12 order 3\n"
      "gen y13 order 3\n"
      "gen y23 order 3\n"
      "gen z order 3\n"
      "comm [x2,x1] = y12\n"
      "comm [x3,x1] = y13\n"
      "comm [x3,x2] = y23\n"
      "comm [y12,x3] = z\n"
      "comm [y13,x2] = z^2\n"
      "comm [y23,x1] = z\n";
}

inline std::string c3xc9_source(const Params&) {
  return
      "pgroup p=3\n"
      "gen a order 3\n"
      "gen b order 9\n";
}

inline std::string heisenbergxc3_source(const Params& ps) {
  return heisenberg_source(ps) + "gen w order 3\n";
}

inline std::string m27xc9_source(const Params& ps) {
  return m27_source(ps) + "gen w order 9\n";
}

// Two-generator group of order 3^(12+n), class 5: semi-3-abelian, not
// semi-9-abelian, with every maximal subgroup semi-9-abelian.
inline std::string example38_source(const Params& ps) {
  long long n = param(ps, "n", 3);
  require(n >= 3 && n <= 20, "example38: n must be in 3..20");
  long long m = 1;
  for (long long i = 0; i < n; ++i) m *= 3;
  return
      "pgroup p=3\n"
      "gen a1 order 9\n"
      "gen a2 order " + std::to_string(m) + "\n"
      "gen b order 9\n"
      "gen c1 order 3\n"
      "gen c2 order 3\n"
      "gen d1 order 3\n"
      "gen d2 order 3\n"
      "gen d4 order 3\n"
      "gen e3 order 3\n"
      "gen e7 order 3\n"
      "gen e8 order 3\n"
      "pow c2 = e3\n"
      "comm [a2,a1] = b^8\n"
      "comm [b,a1] = c1\n"
      "comm [b,a2] = c2\n"
      "comm [c1,a1] = d1\n"
      "comm [c1,a2] = d2\n"
      "comm [c1,b] = e3\n"
      "comm [c2,a1] = d2*e3^2*e7\n"
      "comm [c2,a2] = d4\n"
      "comm [c2,b] = e7^2\n"
      "comm [d1,a2] = e3^2\n"
      "comm [d2,a1] = e3\n"
      "comm [d4,a1] = e7\n"
      "comm [d4,a2] = e8\n";
}

inline const char* example38_notes() {
  return
      "Construction: G = <a1, a2> with b = [a1,a2], c_i = [b,a_i], "
      "d_{2i-2+j} = [c_i,a_j], e_{2r-2+j} = [d_r,a_j], a1^9 = b^9 = 1, "
      "a2^(3^n) = 1, c1^3 = 1, c2^3 = e3 (so c2 has order 9), e1 = e4 = 1, "
      "e2*e3 = 1, and all e_v of order dividing 3 and central. "
      "Setting every unlisted commutator of pc generators trivial does not "
      "give a consistent presentation; the shipped presentation is the "
      "maximal consistent completion preserving the listed relations. "
      "Forced adjustments relative to the all-trivial reading: "
      "[c1,b] = e3 and [c2,b] = e7^2 (not trivial); "
      "d3 = [c2,a1] collapses to d2*e3^2*e7 (no independent d3 generator); "
      "e2 = e3^2, e5 = e3, e6 = 1 (no independent e2/e5/e6 generators); "
      "consequently gamma_4 is elementary abelian of rank 6, not 9.";
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"cyclic", "cyclic group of order p^k", "p (default 3), k >= 1 (default 1)",
       {"p", "k"}, detail::cyclic_source, ""},
      {"elementary", "elementary abelian group of rank d",
       "p (default 3), d >= 1 (default 2)", {"p", "d"},
       detail::elementary_source, ""},
      {"heisenberg", "extraspecial 3^(1+2) of exponent 3 (class 2)", "", {},
       detail::heisenberg_source, ""},
      {"m27", "extraspecial 3^(1+2) of exponent 9 (modular group of order 27)",
       "", {}, detail::m27_source, ""},
      {"c3wrc3",
       "wreath product C3 wr C3, order 81, class 3, not semi-3-abelian", "", {},
       detail::c3wrc3_source, ""},
      {"b23", "free 3-generator group of exponent 3, order 3^7, class 3", "",
       {}, detail::b23_source, ""},
      {"c3xc9", "direct product C3 x C9", "", {}, detail::c3xc9_source, ""},
      {"heisenbergxc3", "direct product of heisenberg with C3, order 81", "",
       {}, detail::heisenbergxc3_source, ""},
      {"m27xc9", "direct product of m27 with C9, order 243", "", {},
       detail::m27xc9_source, ""},
      {"example38",
       "two-generator group of order 3^(12+n), class 5: semi-3-abelian, not "
       "semi-9-abelian, every maximal subgroup semi-9-abelian",
       "n >= 3 (default 3)", {"n"}, detail::example38_source,
       detail::example38_notes()},
  };
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::unknown_name, "no catalog entry named '" + name + "'");
}

inline std::string catalog_source(const std::string& name,
                                  const Params& ps = {}) {
  const CatalogEntry& e = catalog_entry(name);
  for (const auto& [k, v] : ps) {
    (void)v;
    bool known = false;
    for (const std::string& pn : e.param_names) known |= pn == k;
    if (!known)
      throw Error(ErrorCode::bad_parameter,
                  "catalog entry '" + name + "' has no parameter '" + k + "'");
  }
  return e.source(ps);
}

inline Presentation catalog_get(const std::string& name, const Params& ps = {}) {
  Presentation pres = parse(catalog_source(name, ps));
  auto diags = validate(pres);
  if (!diags.empty())
    throw Error(ErrorCode::inconsistent,
                "catalog entry '" + name + "' failed validation: " +
                    diags.front().message);
  return pres;
}

// Parses "name" or "name:k=v,k=v" as used by the CLI.
inline Presentation catalog_get_spec(const std::string& spec) {
  std::string name = spec;
  Params ps;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string kv = rest.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 >= kv.size())
        throw Error(ErrorCode::bad_parameter,
                    "malformed catalog parameter '" + kv + "'");
      try {
        ps[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::bad_parameter,
                    "catalog parameter value in '" + kv + "' is not an integer");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return catalog_get(name, ps);
}

}  // namespace pcg
