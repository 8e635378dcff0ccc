#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tl {

// Outcome of a verification sweep. A failed identity is a report entry,
// not an exception.
struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void count() { ++checks; }
  void fail(std::string msg) {
    ++checks;
    if (failures.size() < 64) failures.push_back(std::move(msg));
  }
  void require(bool cond, const std::string& msg) {
    if (cond)
      count();
    else
      fail(msg);
  }
  void merge(const CheckReport& o) {
    checks += o.checks;
    for (const auto& f : o.failures)
      if (failures.size() < 64) failures.push_back(f);
  }
};

}  // namespace tl
