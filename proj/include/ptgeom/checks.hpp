#pragma once

#include "ptgeom/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptgeom {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
  std::string name;     // suite/case
  std::string status;   // pass | fail | skipped
  std::string witness;  // empty when there is nothing to report
  long long wallMillis = 0;
};

// entries appear in registry order; inputDigest covers names, statuses and
// witnesses (never wallMillis) plus the tool version.
struct VerificationReport {
  std::vector<CheckResult> entries;
  std::string toolVersion;
  std::string inputDigest;
};

struct CheckOptions {
  std::optional<std::vector<QVec>> seedPoints;  // overrides the jacobian points
};

// Suite names in registry order.
const std::vector<std::string>& check_suites();

// suite "all" runs every registered check; a nonempty caseName keeps only
// the matching case. Unknown suite or case names throw invalid_argument.
VerificationReport run_checks(const std::string& suite,
                              const std::string& caseName = {},
                              const CheckOptions& options = {});

bool report_all_pass(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace ptgeom
