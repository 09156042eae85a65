#pragma once
#include <stdexcept>

// Error taxonomy used by the CLI exit-code mapping: ValidationError means the
// input (config, file, flag) is malformed or out of range; NumericError means a
// runtime numeric guard tripped (aliasing, non-convergence, rejected step).

namespace sfwm {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sfwm
