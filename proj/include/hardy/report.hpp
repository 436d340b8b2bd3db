#pragma once

#include <string>
#include <string_view>

#include "hardy/identities.hpp"
#include "hardy/sharpness.hpp"

namespace hardy {

inline constexpr std::string_view artifact_version = "1.0.0";

/// A report as stored on disk.
struct ReportRecord {
  VerificationReport report;
  double runtime_seconds = 0.0;
  std::string artifact_version;
};

/// One JSON object; numbers carry 17 significant digits, non-finite numbers become null.
/// beta and worst_radius are written only when present.
std::string report_to_json(const VerificationReport& report, double runtime_seconds);

/// Inverse of report_to_json. Throws DomainError on malformed input.
ReportRecord report_from_json(std::string_view text);

/// Header lambda,quotient,deficit,remainder_J,remainder_R,denominator; remainder_R is empty when absent.
std::string sweep_to_csv(const SweepResult& sweep);

/// Rows and post-hoc checks as one JSON object.
std::string sweep_to_json(const SweepResult& sweep, double runtime_seconds);

/// Decimal with 17 significant digits, or "null" for non-finite values.
std::string json_number(double x);

}  // namespace hardy
