#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Caller broke a precondition: malformed input, value outside the domain,
// failed symmetry check, size guard exceeded.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeGuardError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Two independent computations of the same quantity disagreed. This always
// indicates a bug (or a misused shortcut such as a wrong length bound).
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qsym
