#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhom/rep.hpp"

namespace qhom {

/// Structured analyzer outcome: a boolean verdict plus numeric evidence and
/// witness modules. Failures always carry at least one witness when the
/// failing object is nameable.
struct Verdict {
  enum class Outcome { Pass, Fail, PremiseNotMet, AmbientLimited };

  Outcome outcome = Outcome::Pass;
  std::vector<std::pair<std::string, std::string>> evidence;
  std::vector<std::pair<std::string, Rep>> witnesses;
  std::string note;
  bool undecided = false;  // a cutoff or budget was hit somewhere

  bool passed() const {
    return outcome == Outcome::Pass || outcome == Outcome::AmbientLimited;
  }

  void add_evidence(const std::string& claim, const std::string& value) {
    evidence.emplace_back(claim, value);
  }

  static const char* outcome_name(Outcome o) {
    switch (o) {
      case Outcome::Pass: return "pass";
      case Outcome::Fail: return "fail";
      case Outcome::PremiseNotMet: return "premise-not-met";
      case Outcome::AmbientLimited: return "ambient-limited";
    }
    return "?";
  }
};

/// Count-or-infinity: `finite` false means "not finite within the cutoff",
/// with `value` holding the cutoff that was exhausted.
struct DimValue {
  int value = 0;
  bool finite = true;

  static DimValue of(int v) { return {v, true}; }
  static DimValue at_least(int cutoff) { return {cutoff, false}; }

  bool operator==(const DimValue& o) const {
    return value == o.value && finite == o.finite;
  }

  std::string to_string() const {
    return finite ? std::to_string(value)
                  : ">=" + std::to_string(value) + " (not finite within cutoff)";
  }
};

}  // namespace qhom
