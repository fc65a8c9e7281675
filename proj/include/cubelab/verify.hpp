#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubelab/oeis.hpp"

namespace cubelab {

enum class Status { Pass, Fail, DiscrepancyNoted };

std::string to_string(Status status);

struct ReportEntry {
  std::string claim;
  std::optional<int> n;  // absent for claims without a dimension parameter
  Status status = Status::Pass;
  double max_abs_err = 0.0;
  std::string details;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;

  bool any_failed() const;
  nlohmann::ordered_json to_json() const;
};

/// Claim ids accepted by `run_verification`, in report order.
const std::vector<std::string>& known_claims();

/// Default and admissible dimension ranges of a claim.
std::pair<int, int> default_range(std::string_view claim);
std::pair<int, int> claim_domain(std::string_view claim);

struct VerifyOptions {
  std::vector<std::string> claims;  // empty: all
  /// Overrides every claim's default range, clipped to its domain.
  std::optional<std::pair<int, int>> n_range;
  bool offline = true;
  oeis::ClientOptions oeis;
};

/// Parses "a..b" or a single "a".
std::pair<int, int> parse_range(std::string_view text);

VerificationReport run_verification(const VerifyOptions& options);

/// Runs a single (claim, n) pair; n is ignored for dimensionless claims.
ReportEntry verify_claim(std::string_view claim, int n, const VerifyOptions& options = {});

}  // namespace cubelab
