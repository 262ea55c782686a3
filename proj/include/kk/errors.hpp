#pragma once

#include <stdexcept>
#include <string>

namespace kk {

/// Malformed or out-of-contract input (bad dimensions, out-of-range values,
/// unparseable files). CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A certificate hypothesis failed (matrix not positive definite, infeasible
/// triple, infinite Coxeter system). CLI maps this to exit code 1.
struct certificate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kk
