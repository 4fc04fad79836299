#pragma once

#include <stdexcept>
#include <string>

namespace gems {

// Bad input data, malformed files, or invalid configuration. Maps to CLI
// exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Unexpected failure at run time (non-finite loss, I/O). Maps to CLI exit
// code 2.
class RuntimeAbort : public std::runtime_error {
 public:
  explicit RuntimeAbort(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gems
