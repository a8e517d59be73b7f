#pragma once

#include <stdexcept>

namespace synlab {

// Input violated a precondition (bad index, malformed file, ...). CLI exit code 1.
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds a configured size or node budget. CLI exit code 2.
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked guarantee failed (certificate replay, gap law). CLI exit code 3.
class PropertyViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace synlab
