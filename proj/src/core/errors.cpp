#include "core/errors.hpp"

namespace hahnvar {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotDifferentiable: return "NotDifferentiable";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::InsufficientDepth: return "InsufficientDepth";
    case ErrorCode::NotAVariation: return "NotAVariation";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = "syntax error at position " + std::to_string(position) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::SyntaxError, describe(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace hahnvar
