#pragma once

#include <string>
#include <vector>

namespace sl2fd {

/// One named pass/fail verification; `detail` explains a failure.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ordered list of checks. Failures are data, not exceptions.
struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace sl2fd
