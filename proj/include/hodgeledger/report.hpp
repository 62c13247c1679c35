#pragma once

#include <string>
#include <vector>

#include "hodgeledger/hodge_class.hpp"

namespace hodgeledger {

// One verified identity: `lhs`/`rhs` are short printable summaries of the
// two sides, `residual` the entrywise difference (empty exactly when the
// check passes, and always empty for scalar checks that report through
// lhs/rhs alone).
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  HodgeClass residual;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Canonical JSON document:
// {"format":"og6report/v1","checks":[{"id":...,"status":"pass"|"fail",
//  "lhs":...,"rhs":...,"residual":<serialized class>},...]}
std::string report_to_json(const VerificationReport& report);

// Line-per-check human-readable rendering ("PASS <id>" / "FAIL <id> ...").
std::string report_to_text(const VerificationReport& report);

}  // namespace hodgeledger
