#include "bilocal/report.hpp"

namespace bilocal {

void CheckReport::record(bool ok, Failure f) {
  ++cases;
  if (ok) return;
  passed = false;
  ++failure_count;
  if (failures.size() < kMaxFailures) failures.push_back(std::move(f));
}

void CheckReport::absorb(const CheckReport& other) {
  cases += other.cases;
  failure_count += other.failure_count;
  passed = passed && other.passed;
  for (const auto& f : other.failures) {
    if (failures.size() >= kMaxFailures) break;
    failures.push_back(f);
  }
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : failures) {
    fs.push_back({{"pair", f.pair}, {"monomial", f.monomial}, {"expected", f.expected}, {"got", f.got}});
  }
  nlohmann::json out = {
      {"name", name},
      {"passed", passed},
      {"cases", cases},
      {"failure_count", failure_count},
      {"failures", fs},
  };
  if (!details.empty()) out["details"] = details;
  return out;
}

}  // namespace bilocal
