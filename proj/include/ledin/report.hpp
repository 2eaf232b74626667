#pragma once

// JSON wire formats shared by the CLI and the verifier. Rationals always
// travel as lowest-terms strings ("num/den", or "num" when den = 1).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ledin/oracle.hpp"

namespace ledin {

/// Output of `sum --format json`:
///   {"value": "num/den", "routes": {route: "num/den", ...}, "guards": ["num/den", ...]}
struct SumReport {
  Scalar value;
  std::map<std::string, Scalar> routes;
  std::vector<Scalar> guards;

  friend bool operator==(const SumReport&, const SumReport&) = default;
};

std::string serialize(const SumReport& report);
SumReport parse_sum_report(std::string_view json_text);

std::string serialize(const VerificationReport& report);
/// Throws InvalidInput on malformed input.
VerificationReport parse_verification_report(std::string_view json_text);

}  // namespace ledin
