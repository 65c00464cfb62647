#pragma once

#include <stdexcept>

namespace skc {

// Parameter/precondition violations at an API boundary. CLI exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad or inconsistent input data: parse failures, malformed files,
// mismatched inputs. CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure, e.g. eigensolver non-convergence. CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skc
