#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bilocal {

/// One counterexample: which operator pair (or check), on which input, what
/// was expected and what came out.
struct Failure {
  std::string pair;
  std::string monomial;
  std::string expected;
  std::string got;
};

/// Outcome of one exact check. Only the first few failures are retained.
struct CheckReport {
  static constexpr std::size_t kMaxFailures = 5;

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  nlohmann::json details = nlohmann::json::object();

  explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

  void record(bool ok, Failure f);
  void fail(Failure f) { record(false, std::move(f)); }
  void absorb(const CheckReport& other);

  nlohmann::json to_json() const;
};

}  // namespace bilocal
