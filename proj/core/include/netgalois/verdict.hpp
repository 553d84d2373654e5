#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace netgalois {

/// One verified statement: whether it holds, whether a failure counts
/// against the exit status, the counterexample if any, and computed values.
struct CheckRecord {
  std::string id;
  bool holds = true;
  bool asserted = true;
  nlohmann::json witness;  // null when absent
  nlohmann::json detail;   // null or object
  double elapsed = 0.0;    // seconds
};

/// Serializes a record; `elapsed` only when `timings` is set, so default
/// reports stay byte-stable.
nlohmann::json to_json(const CheckRecord& record, bool timings);

/// True iff every asserted record holds.
bool all_asserted_hold(std::span<const CheckRecord> records);

/// Marks every record as report-only.
void unassert(std::vector<CheckRecord>& records);

/// Times a callable producing a CheckRecord.
template <class F>
CheckRecord timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckRecord r = f();
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace netgalois
