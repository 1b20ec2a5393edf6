#pragma once

#include <string>
#include <vector>

namespace k3 {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace k3
