#include "kbound/error.hpp"

#include <utility>

namespace kbound {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Numeric: return "numeric";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(message), kind_(kind), code_(std::move(code)), offset_(offset) {}

void throw_input(std::string code, const std::string& message,
                 std::optional<std::size_t> offset) {
  throw Error(ErrorKind::Input, std::move(code), message, offset);
}

void throw_precondition(std::string code, const std::string& message) {
  throw Error(ErrorKind::Precondition, std::move(code), message);
}

void throw_numeric(std::string code, const std::string& message) {
  throw Error(ErrorKind::Numeric, std::move(code), message);
}

}  // namespace kbound
