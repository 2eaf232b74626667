#pragma once

#include <stdexcept>
#include <string>

namespace ledin {

/// Malformed or out-of-domain input (bad literal, p = 0, q = 0, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula's hypothesis does not hold for the requested arguments
/// (x in {0, 1}, p != 1 for the restricted forms, V_h = 0, ...).
class GuardViolation : public std::domain_error {
 public:
  GuardViolation(std::string guard, const std::string& detail)
      : std::domain_error(guard + ": " + detail), guard_(std::move(guard)) {}

  /// The violated condition, e.g. "q - p + 1 = 0".
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// A displayed denominator vanishes (q - p + 1 = 0, 1 - V_h + q^h = 0).
class DegenerateDenominator : public GuardViolation {
 public:
  using GuardViolation::GuardViolation;
};

}  // namespace ledin
