#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlab {

enum class ErrorKind {
  invalid_parameter,
  capacity_exceeded,
  invalid_ideal,
  invalid_module,
  invalid_hom,
  invalid_subset,
  precondition_violation,
  not_applicable,
  internal_inconsistency,
  ring_mismatch,
  syntax_error,
  semantic_error,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this exception; `kind()` is the
// stable classification the CLI maps to exit codes.
class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw RingError(kind, what); }

}  // namespace ringlab
