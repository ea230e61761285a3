#pragma once

#include <stdexcept>
#include <string>

namespace tropipath {

struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct eval_overflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tropipath
