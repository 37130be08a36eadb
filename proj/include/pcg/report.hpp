#pragma once

// Result types shared by the property deciders, identity checkers, and oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcg/collector.hpp"

namespace pcg {

enum class Tri { yes, no, unknown };

enum class Mode { exhaustive, structural, sampled };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "unknown";
  }
}
inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::exhaustive: return "exhaustive";
    case Mode::structural: return "structural";
    default: return "sampled";
  }
}

struct Verdict {
  std::string property;
  Tri holds = Tri::unknown;
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;   // sampled mode only
  std::uint64_t checked = 0;   // elements/pairs examined
  std::optional<std::pair<Element, Element>> witness;
  std::string note;            // e.g. which direction of a biconditional failed
};

enum class HypothesisStatus { satisfied, violated, not_checked };

enum class ClaimVerdict { holds, fails, vacuous, unknown };

inline const char* to_string(HypothesisStatus h) {
  switch (h) {
    case HypothesisStatus::satisfied: return "satisfied";
    case HypothesisStatus::violated: return "violated";
    default: return "not-checked";
  }
}
inline const char* to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::holds: return "holds";
    case ClaimVerdict::fails: return "fails";
    case ClaimVerdict::vacuous: return "vacuous";
    default: return "unknown";
  }
}

struct ClaimReport {
  std::string id;           // stable claim identifier, e.g. "L3.1", "T3.6.1"
  std::string statement;    // short human-readable restatement
  HypothesisStatus hypothesis = HypothesisStatus::not_checked;
  ClaimVerdict verdict = ClaimVerdict::unknown;
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::vector<Element> witness;  // tuple re-verifiable by collector arithmetic
  std::string note;
};

}  // namespace pcg
