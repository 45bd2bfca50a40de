#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hahnvar {

enum class ErrorCode {
  InvalidArgument,
  SyntaxError,
  UnknownIdentifier,
  UnboundVariable,
  ArityError,
  DomainError,
  NotDifferentiable,
  NonFiniteValue,
  DegenerateDenominator,
  InsufficientDepth,
  NotAVariation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the Lagrangian parser. `position` is a byte offset into the
/// input; `expected` lists the token classes that would have been accepted.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace hahnvar
