#pragma once

#include <string>
#include <vector>

namespace modsym {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail results.
struct CheckList {
  std::vector<Check> items;

  void add(std::string name, bool passed, std::string detail = {}) {
    items.push_back({std::move(name), passed, std::move(detail)});
  }
  bool ok() const {
    for (const auto& c : items)
      if (!c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : items)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }
  /// Names of the failed checks, comma separated.
  std::string failures() const {
    std::string out;
    for (const auto& c : items)
      if (!c.passed) out += (out.empty() ? "" : ", ") + c.name;
    return out;
  }
};

}  // namespace modsym
