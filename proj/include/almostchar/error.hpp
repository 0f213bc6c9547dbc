#pragma once

#include <stdexcept>
#include <string>

namespace almostchar {

/// Malformed or out-of-domain input. The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource guard (rank cap, memo budget) was exceeded. Exit code 3.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace almostchar
