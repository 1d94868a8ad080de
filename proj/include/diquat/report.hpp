#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace diquat {

// Outcome of an exact verification pass: how many checks ran and which failed.
// Every verifier in the library returns one of these instead of asserting, so
// callers (tests, CLI) decide how to surface failures.
struct VerifyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }

  void require(bool cond, std::string what) {
    ++checks;
    if (!cond) failures.push_back(std::move(what));
  }

  void merge(const VerifyReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }

  // "412 checks, all passed" or "412 checks, 2 failed: ..." (for logs/tests).
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, ";
    if (ok()) return s + "all passed";
    s += std::to_string(failures.size()) + " failed:";
    for (const std::string& f : failures) s += "\n  " + f;
    return s;
  }
};

}  // namespace diquat
