#pragma once

#include <stdexcept>

namespace modal_barrier {

// Error taxonomy mirrored by the CLI exit codes:
//   ValidationError -> 1, IoError -> 2, NumericError -> 3.

class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric failure (non-convergence, loss of positive definiteness, ...).
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace modal_barrier
