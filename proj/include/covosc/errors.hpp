#pragma once

#include <stdexcept>
#include <string>

namespace covosc {

// argument violates a documented bound or is not finite
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// a value-level precondition failed (e.g. a field that should be a unit-norm density is not)
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// requested mode does not cover the given parameters (analytic moments exist for n = 0 only)
class unsupported_mode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// I/O failure, message carries the offending path
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace covosc
