#pragma once

#include <stdexcept>

namespace qcc {

/// Request exceeds what an exhaustive routine is built to enumerate.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bad command-line or run configuration (exit code 2 in the CLI).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qcc
