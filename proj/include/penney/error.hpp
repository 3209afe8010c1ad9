#pragma once

#include <stdexcept>
#include <string>

namespace penney {

/// Error classes. The CLI maps each to its own exit code.
enum class ErrorKind {
  malformed_word,
  length_mismatch,
  unknown_variant,
  oversize,
  invalid_argument,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace penney
