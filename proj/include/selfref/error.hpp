#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfref {

enum class ErrorKind {
  SyntaxError,
  NotAQuotation,
  UnknownSchema,
  InvalidIdentifier,
  DuplicateStipulation,
  UnstipulatedName,
  NotCoreferent,
  IOError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure in the library is reported as an Error carrying its kind.
/// Scenario parsing additionally records the 1-based source line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

}  // namespace selfref
