#include "hodgeledger/report.hpp"

#include <json.hpp>

#include <sstream>

#include "hodgeledger/spaces.hpp"

namespace hodgeledger {

namespace {

// Residuals in this battery are overwhelmingly multiples of the twisted
// even table U<2>; show those by name instead of as raw entry lists.
std::string residual_display(const HodgeClass& residual) {
  static const HodgeClass u2 =
      tate(-2, shift_up(4, parity_part(abelian(2), Parity::even)));
  if (residual == u2) return "U<2>";
  if (scale(-1, residual) == u2) return "-(U<2>)";
  return serialize(residual);
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& check : checks)
    if (!check.pass) return false;
  return true;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["format"] = "og6report/v1";
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json row;
    row["id"] = check.id;
    row["status"] = check.pass ? "pass" : "fail";
    row["lhs"] = check.lhs;
    row["rhs"] = check.rhs;
    row["residual"] = serialize(check.residual);
    checks.push_back(std::move(row));
  }
  return doc.dump();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& check : report.checks) {
    out << (check.pass ? "PASS " : "FAIL ") << check.id;
    if (!check.pass) {
      out << "  lhs=" << check.lhs << "  rhs=" << check.rhs;
      if (!check.residual.empty()) out << "  residual=" << residual_display(check.residual);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hodgeledger
