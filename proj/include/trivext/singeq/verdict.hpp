#pragma once

#include <string>

namespace trivext {

enum class Verdict { Pass, Fail, Undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    default: return "Undetermined";
  }
}

/// Conjunction: any Fail wins, then any Undetermined.
inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Undetermined || b == Verdict::Undetermined) return Verdict::Undetermined;
  return Verdict::Pass;
}

struct Check {
  std::string name;
  Verdict verdict = Verdict::Undetermined;
  std::string detail;
};

}  // namespace trivext
