#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spincover {

/// Outcome of one exhaustive or sampled verification.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample, empty when passed.
  std::string failure;
  /// Ordered key/value facts (group orders, orbit sizes, ...).
  std::vector<std::pair<std::string, std::string>> facts;

  explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

  void fail(const std::string& why) {
    if (passed) failure = why;
    passed = false;
  }

  template <class Msg>
  bool expect(bool ok, Msg&& msg) {
    ++cases;
    if (!ok) fail(msg());
    return ok;
  }

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

  /// Folds a sub-report in; keeps the first failure.
  void absorb(const CheckReport& other) {
    cases += other.cases;
    if (!other.passed) fail(other.name + ": " + other.failure);
    for (const auto& [k, v] : other.facts) facts.emplace_back(other.name + "." + k, v);
  }
};

inline std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string s = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "]";
}

}  // namespace spincover
