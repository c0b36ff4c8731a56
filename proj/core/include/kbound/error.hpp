#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kbound {

/// Failure category. Maps one-to-one onto CLI exit codes.
enum class ErrorKind {
  Input,         // malformed input, bad arguments, out-of-range indices
  Precondition,  // input is well formed but the operation does not apply
  Numeric,       // solver failure, overflow, non-convergence
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. `code` is a stable machine-readable tag such as
/// "NOT_REGULAR" or "TOTAL_NONZERO_VIOLATION".
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  /// Byte offset into the parsed stream, for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
  ErrorKind kind_;
  std::string code_;
  std::optional<std::size_t> offset_;
};

[[noreturn]] void throw_input(std::string code, const std::string& message,
                              std::optional<std::size_t> offset = std::nullopt);
[[noreturn]] void throw_precondition(std::string code, const std::string& message);
[[noreturn]] void throw_numeric(std::string code, const std::string& message);

}  // namespace kbound
