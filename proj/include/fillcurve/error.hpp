#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fillcurve {

enum class ErrorKind {
  NotPrime,
  DivisionByZero,
  FieldMismatch,
  NotASubfield,
  ZeroPolynomial,
  SyntaxError,
  MixedBidegree,
  BadCoefficient,
  BidegreeMismatch,
  ZeroDivisor,
  Infeasible,
  NotFilling,
  BidegreeTooSmall,
  BadShape,
  SetupViolation,
  UnsupportedQ,
  BadParameters,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and tests) can dispatch on the reason rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors additionally carry the byte offset in the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fillcurve
