#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgl {

enum class ErrorKind {
  domain,         // argument outside the function's domain
  capacity,       // request exceeds a storage or representable-value limit
  range,          // query beyond the extent of a table
  accuracy_loss,  // inputs outside the documented accuracy envelope
  pole,           // evaluation at a singularity
  branch,         // evaluation on a branch cut
  format,         // malformed input file
  empty_table,    // no data available
  divergence,     // series does not converge for this argument
  precondition,   // caller-side contract violated
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::range: return "range";
    case ErrorKind::accuracy_loss: return "accuracy-loss";
    case ErrorKind::pole: return "pole";
    case ErrorKind::branch: return "branch";
    case ErrorKind::format: return "format";
    case ErrorKind::empty_table: return "empty-table";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::precondition: return "precondition";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Error raised while reading a zeros file; carries the offending 1-based line.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(ErrorKind::format, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pgl
