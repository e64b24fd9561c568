#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nacoh {

enum class ErrorCode {
  InvalidGroup,
  InvalidHom,
  UnsupportedSize,
  NotNormal,
  NotAnAction,
  NotAbelian,
  NotACocycle,
  PeifferViolation,
  EquivarianceViolation,
  WellDefinednessViolation,
  EnumerationBudgetExceeded,
  NotInjective,
  NotSurjective,
  ImageKernelMismatch,
  NotEquivariant,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an exhaustive search would visit more candidate states than
// allowed. Never silently truncated.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, double estimated_space, const std::string& what)
      : Error(ErrorCode::EnumerationBudgetExceeded, what),
        budget_(budget),
        estimated_space_(estimated_space) {}

  std::uint64_t budget() const noexcept { return budget_; }
  double estimated_space() const noexcept { return estimated_space_; }

 private:
  std::uint64_t budget_;
  double estimated_space_;
};

}  // namespace nacoh
