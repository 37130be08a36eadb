#pragma once

// Power-commutator presentations: text format, validation, canonical form.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

enum class ErrorCode {
  syntax,
  unknown_generator,
  duplicate_generator,
  bad_order,
  bad_parameter,
  inconsistent,
  capacity,
  mixed_group,
  unknown_name,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::unknown_generator: return "unknown_generator";
    case ErrorCode::duplicate_generator: return "duplicate_generator";
    case ErrorCode::bad_order: return "bad_order";
    case ErrorCode::bad_parameter: return "bad_parameter";
    case ErrorCode::inconsistent: return "inconsistent";
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::mixed_group: return "mixed_group";
    case ErrorCode::unknown_name: return "unknown_name";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(msg), code(code), line(line), column(column) {}
  ErrorCode code;
  int line;
  int column;
};

// A word over the pc generators: ordered (generator index, exponent) pairs.
// Indices are 0-based; the empty word is the identity.
struct Word {
  std::vector<std::pair<int, long long>> terms;

  bool empty() const { return terms.empty(); }
  bool operator==(const Word&) const = default;
};

struct GeneratorDecl {
  std::string name;
  unsigned long long order = 0;  // p^k, k >= 1
  bool operator==(const GeneratorDecl&) const = default;
};

struct Diagnostic {
  std::string rule;
  std::string location;
  std::string message;
};

struct Presentation {
  unsigned prime = 0;
  std::vector<GeneratorDecl> generators;
  // power_tails[i] is the word equal to g_i^order(i); absent means trivial.
  std::map<int, Word> power_tails;
  // commutator_tails[{j,i}] with j > i is [g_j, g_i]; absent means trivial.
  std::map<std::pair<int, int>, Word> commutator_tails;
  std::vector<std::string> metadata;  // '#:' annotation lines, carried verbatim

  bool operator==(const Presentation& o) const {
    return prime == o.prime && generators == o.generators &&
           power_tails == o.power_tails && commutator_tails == o.commutator_tails;
  }

  int index_of(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline bool is_prime(unsigned long long v) {
  if (v < 2) return false;
  for (unsigned long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Returns k >= 0 with v == p^k, or -1 if v is not a power of p.
inline int prime_power_log(unsigned long long v, unsigned p) {
  int k = 0;
  while (v > 1) {
    if (v % p != 0) return -1;
    v /= p;
    ++k;
  }
  return k;
}

struct Tokenizer {
  const std::string& s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::syntax, "line " + std::to_string(line) + ": " + msg,
                line, static_cast<int>(pos) + 1);
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace detail

// Parses a `.pcp` document.
//
//   document := "pgroup p=" INT line*
//   line     := "gen" NAME "order" INT
//             | "pow" NAME "=" word
//             | "comm" "[" NAME "," NAME "]" "=" word
//   word     := "1" | term ("*" term)* ; term := NAME ("^" INT)?
inline Presentation parse(const std::string& text) {
  Presentation pres;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;

  auto parse_word = [&](detail::Tokenizer& tok) {
    Word w;
    if (tok.accept('1')) return w;
    for (;;) {
      std::string nm = tok.name();
      int idx = pres.index_of(nm);
      if (idx < 0)
        throw Error(ErrorCode::unknown_generator,
                    "line " + std::to_string(tok.line) + ": unknown generator '" +
                        nm + "'",
                    tok.line);
      long long e = 1;
      if (tok.accept('^')) e = tok.integer();
      w.terms.emplace_back(idx, e);
      if (!tok.accept('*')) break;
    }
    return w;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) {
      if (s.compare(h, 2, "#:") == 0)
        pres.metadata.push_back(s.substr(h + 2));
      s = s.substr(0, h);
    }
    detail::Tokenizer tok{s, lineno};
    if (tok.done()) continue;

    if (!saw_header) {
      std::string kw = tok.name();
      if (kw != "pgroup") tok.fail("expected 'pgroup p=<prime>' header");
      if (tok.name() != "p") tok.fail("expected 'p='");
      tok.expect('=');
      long long p = tok.integer();
      if (p < 2 || !detail::is_prime(static_cast<unsigned long long>(p)))
        throw Error(ErrorCode::bad_order,
                    "line " + std::to_string(lineno) + ": p=" + std::to_string(p) +
                        " is not prime",
                    lineno);
      pres.prime = static_cast<unsigned>(p);
      saw_header = true;
      if (!tok.done()) tok.fail("trailing input after header");
      continue;
    }

    std::string kw = tok.name();
    if (kw == "gen") {
      std::string nm = tok.name();
      if (pres.index_of(nm) >= 0)
        throw Error(ErrorCode::duplicate_generator,
                    "line " + std::to_string(lineno) + ": duplicate generator '" +
                        nm + "'",
                    lineno);
      if (tok.name() != "order") tok.fail("expected 'order'");
      long long ord = tok.integer();
      int k = ord > 0 ? detail::prime_power_log(
                            static_cast<unsigned long long>(ord), pres.prime)
                      : -1;
      if (k < 1)
        throw Error(ErrorCode::bad_order,
                    "line " + std::to_string(lineno) + ": order " +
                        std::to_string(ord) + " is not a positive power of " +
                        std::to_string(pres.prime),
                    lineno);
      pres.generators.push_back({nm, static_cast<unsigned long long>(ord)});
    } else if (kw == "pow") {
      std::string nm = tok.name();
      int idx = pres.index_of(nm);
      if (idx < 0)
        throw Error(ErrorCode::unknown_generator,
                    "line " + std::to_string(lineno) + ": unknown generator '" +
                        nm + "'",
                    lineno);
      tok.expect('=');
      Word w = parse_word(tok);
      if (!w.empty()) pres.power_tails[idx] = std::move(w);
    } else if (kw == "comm") {
      tok.expect('[');
      std::string na = tok.name();
      tok.expect(',');
      std::string nb = tok.name();
      tok.expect(']');
      int ja = pres.index_of(na), jb = pres.index_of(nb);
      if (ja < 0 || jb < 0)
        throw Error(ErrorCode::unknown_generator,
                    "line " + std::to_string(lineno) + ": unknown generator '" +
                        (ja < 0 ? na : nb) + "'",
                    lineno);
      tok.expect('=');
      Word w = parse_word(tok);
      if (!w.empty()) pres.commutator_tails[{ja, jb}] = std::move(w);
    } else {
      tok.fail("unknown directive '" + kw + "'");
    }
    if (!tok.done()) tok.fail("trailing input");
  }
  if (!saw_header)
    throw Error(ErrorCode::syntax, "missing 'pgroup' header", lineno);
  return pres;
}

inline std::string word_to_string(const Presentation& pres, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t t = 0; t < w.terms.size(); ++t) {
    if (t) out += "*";
    out += pres.generators[w.terms[t].first].name;
    if (w.terms[t].second != 1)
      out += "^" + std::to_string(w.terms[t].second);
  }
  return out;
}

// Canonical text form: header, generators in order, pow lines in index order,
// comm lines sorted by (j, i). parse(serialize(p)) == p, and serialize is a
// fixed point on its own output.
inline std::string serialize(const Presentation& pres) {
  std::string out = "pgroup p=" + std::to_string(pres.prime) + "\n";
  for (const auto& m : pres.metadata) out += "#:" + m + "\n";
  for (const auto& g : pres.generators)
    out += "gen " + g.name + " order " + std::to_string(g.order) + "\n";
  for (const auto& [i, w] : pres.power_tails)
    out += "pow " + pres.generators[i].name + " = " + word_to_string(pres, w) + "\n";
  for (const auto& [ji, w] : pres.commutator_tails)
    out += "comm [" + pres.generators[ji.first].name + "," +
           pres.generators[ji.second].name + "] = " + word_to_string(pres, w) +
           "\n";
  return out;
}

// Structural (triangular-shape) diagnostics. Consistency of the collection
// rules is a separate, semantic check (collector::check_consistency).
inline std::vector<Diagnostic> validate(const Presentation& pres) {
  std::vector<Diagnostic> diags;
  const int n = static_cast<int>(pres.generators.size());

  for (const auto& [i, w] : pres.power_tails) {
    std::string loc = "pow " + pres.generators[i].name;
    for (const auto& [g, e] : w.terms) {
      if (g < 0 || g >= n) {
        diags.push_back({"index-range", loc, "generator index out of range"});
      } else if (g <= i) {
        diags.push_back({"power-shape", loc,
                         "power tail of " + pres.generators[i].name +
                             " references " + pres.generators[g].name +
                             " (index not greater than the base generator)"});
      }
      if (e == 0) diags.push_back({"zero-exponent", loc, "term with exponent 0"});
    }
  }
  for (const auto& [ji, w] : pres.commutator_tails) {
    auto [j, i] = ji;
    std::string loc =
        "comm [" + pres.generators[j].name + "," + pres.generators[i].name + "]";
    if (j <= i)
      diags.push_back({"comm-order", loc,
                       "left generator must have the larger index"});
    for (const auto& [g, e] : w.terms) {
      if (g < 0 || g >= n) {
        diags.push_back({"index-range", loc, "generator index out of range"});
        continue;
      }
      if (g == j)
        diags.push_back({"comm-shape", loc,
                         "tail references its own leading generator " +
                             pres.generators[g].name});
      else if (g <= i)
        diags.push_back({"comm-shape", loc,
                         "tail references " + pres.generators[g].name +
                             " (index not greater than the second generator)"});
      if (e == 0) diags.push_back({"zero-exponent", loc, "term with exponent 0"});
    }
  }
  return diags;
}

}  // namespace pcg
