#ifndef QVSL_ERRORS_HPP
#define QVSL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qvsl {

// Rejected input: out-of-range value, malformed document, bad argument.
// The CLI maps this to exit code 1. Messages name the offending field.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure inside a running stage of a composed computation (exit code 2).
// The message is prefixed with the stage name that raised it.
class StageError : public std::runtime_error {
 public:
  explicit StageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qvsl

#endif
