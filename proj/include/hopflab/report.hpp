#pragma once

#include <string>
#include <vector>

namespace hopflab {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // first counterexample, empty on success
};

/// Ordered list of named checks. Verifiers never throw on a failed identity;
/// they record it here.
class Report {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
  }

  bool all_passed() const {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace hopflab
