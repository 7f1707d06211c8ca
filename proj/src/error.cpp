#include "selfref/error.hpp"

namespace selfref {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotAQuotation: return "NotAQuotation";
    case ErrorKind::UnknownSchema: return "UnknownSchema";
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::DuplicateStipulation: return "DuplicateStipulation";
    case ErrorKind::UnstipulatedName: return "UnstipulatedName";
    case ErrorKind::NotCoreferent: return "NotCoreferent";
    case ErrorKind::IOError: return "IOError";
  }
  return "Error";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, int line) {
  std::string out(error_kind_name(kind));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

}  // namespace selfref
