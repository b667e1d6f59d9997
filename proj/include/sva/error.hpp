#pragma once

#include <stdexcept>

namespace sva {

// Bad inputs: malformed files, schema violations, invalid options.
// Maps to exit code 1 at the CLI and SVA_STATUS_VALIDATION at the C API.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failures while executing an otherwise valid request (I/O, internal limits).
// Maps to exit code 2 / SVA_STATUS_RUNTIME.
class RuntimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sva
