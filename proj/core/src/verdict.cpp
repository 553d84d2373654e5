#include "netgalois/verdict.hpp"

namespace netgalois {

nlohmann::json to_json(const CheckRecord& record, bool timings) {
  nlohmann::json j;
  j["id"] = record.id;
  j["holds"] = record.holds;
  j["asserted"] = record.asserted;
  if (!record.witness.is_null()) j["witness"] = record.witness;
  if (!record.detail.is_null()) j["detail"] = record.detail;
  if (timings) j["elapsed"] = record.elapsed;
  return j;
}

bool all_asserted_hold(std::span<const CheckRecord> records) {
  for (const auto& r : records)
    if (r.asserted && !r.holds) return false;
  return true;
}

void unassert(std::vector<CheckRecord>& records) {
  for (auto& r : records) r.asserted = false;
}

}  // namespace netgalois
