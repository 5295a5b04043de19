#pragma once

#include <string>
#include <vector>

#include "trident/json_io.hpp"

namespace trident {

enum class Status { Pass, Fail, Skip };

const char* status_name(Status s);

/// One named check. Failures carry the mismatching exact values in
/// `witness`.
struct CheckResult {
  std::string name;
  Status status = Status::Fail;
  std::string detail;
  json witness = json::object();
  double seconds = 0.0;
};

struct ReproReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  int count(Status s) const;
  /// Timing fields are left out when `timing` is false so reports compare
  /// byte for byte.
  json to_json(bool timing = true) const;
};

/// Names accepted by reproduce(), excluding "all".
const std::vector<std::string>& repro_suites();

/// Runs one suite or "all". Throws std::invalid_argument for an unknown
/// name; mathematical errors inside a check become FAIL results.
ReproReport reproduce(const std::string& suite);

}  // namespace trident
