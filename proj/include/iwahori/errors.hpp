#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iwahori {

// Bad parameters: wrong lengths, constraint violations, non-dominant input
// where a dominant coweight is required.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t budget)
      : std::runtime_error(what), estimate_(estimate), budget_(budget) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

// An identity that must hold did not (exact elimination left a residual,
// an exact division was not exact, ...).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iwahori
