// Exception types shared by all layers of the library.
//
// Input-contract violations (bad parameters, calls outside a stated validity
// domain) derive from InputError; failures of the numerics themselves
// (overflow, non-convergent iterations) derive from NumericError.  The CLI
// maps the two branches to distinct exit codes.
#ifndef HEUN_ERRORS_HPP
#define HEUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heun {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter value that makes the requested function undefined
// (e.g. confluent-hypergeometric c a non-positive integer).
struct DegenerateParameter : InputError {
  using InputError::InputError;
};

// Evaluation requested at a singular point of the function (e.g. the
// irregular confluent function at u = 0 in the non-polynomial case).
struct PoleAtOrigin : InputError {
  using InputError::InputError;
};

// Evaluation requested exactly on a branch cut.
struct BranchCut : InputError {
  using InputError::InputError;
};

// A structural invariant of an equation-parameter record is violated
// (z0 = 0, omega = 0 where forbidden, ...).
struct InvalidParameter : InputError {
  using InputError::InputError;
};

// Call outside the validity domain stated for an integral or relation.
struct OutsideDomain : InputError {
  using InputError::InputError;
};

// Result magnitude exceeds the floating-point range.
struct OverflowError : NumericError {
  using NumericError::NumericError;
};

// An iteration (series, continued fraction, root search) failed to reach
// its tolerance within the allowed depth.
struct NoConvergence : NumericError {
  using NumericError::NumericError;
};

} // namespace heun

#endif
