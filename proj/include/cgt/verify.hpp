#pragma once

#include <string>
#include <vector>

#include "cgt/catalog.hpp"

namespace cgt {

struct CheckRecord {
  std::string check_id;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::int64_t failure_count() const;
  std::int64_t count_for(const std::string& check_id) const;
  std::int64_t failures_for(const std::string& check_id) const;
};

/// Check ids in canonical execution order.
const std::vector<std::string>& available_checks();

/// Runs the selected checks (all when empty) over the catalog. Construction
/// failures become failed records rather than exceptions.
VerificationReport verify(const Catalog& catalog, const std::vector<std::string>& checks = {},
                          const Caps& caps = {});

/// check-id,instance,expected,computed,status rows; byte-stable.
std::string report_csv(const VerificationReport& report);
/// JSON document mirroring the CSV fields plus summary counts; byte-stable.
std::string report_json(const VerificationReport& report);

}  // namespace cgt
