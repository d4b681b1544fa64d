#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlogic {

enum class ErrorCode {
  not_a_partial_order,
  not_a_lattice,
  no_bounds,
  cartan_meet_violation,
  cartan_bounds_violation,
  kappa_not_injective,
  axioms_not_satisfied,
  component_invalid,
  isomorphism_not_found,
  too_large,
  unknown_experiment,
  invalid_model,
  dimension_mismatch,
  dimension_too_small,
  dimension_too_large,
  parse_error,
  invalid_argument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_a_partial_order: return "NotAPartialOrder";
    case ErrorCode::not_a_lattice: return "NotALattice";
    case ErrorCode::no_bounds: return "NoBounds";
    case ErrorCode::cartan_meet_violation: return "CartanMeetViolation";
    case ErrorCode::cartan_bounds_violation: return "CartanBoundsViolation";
    case ErrorCode::kappa_not_injective: return "KappaNotInjective";
    case ErrorCode::axioms_not_satisfied: return "AxiomsNotSatisfied";
    case ErrorCode::component_invalid: return "ComponentInvalid";
    case ErrorCode::isomorphism_not_found: return "IsomorphismNotFound";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::unknown_experiment: return "UnknownExperiment";
    case ErrorCode::invalid_model: return "InvalidModel";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::dimension_too_small: return "DimensionTooSmall";
    case ErrorCode::dimension_too_large: return "DimensionTooLarge";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness()` carries the element,
/// state or pair indices the message refers to, when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace qlogic
