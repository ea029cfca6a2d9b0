#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepq {

enum class ErrorKind {
  LengthMismatch,
  NotNormalized,
  BadPermutation,
  BadLength,
  BadSplit,
  TooLarge,
  TooFewNonzero,
  AllZero,
  NotSeparable,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sepq
