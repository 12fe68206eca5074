#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intaut {

enum class ErrorCode {
  NonPrime,
  EvenPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldMismatch,
  DivisionByZero,
  ExponentOutOfRange,
  DimensionMismatch,
  IndexOutOfRange,
  TooLarge,
  NotABijection,
  SizeMismatch,
  NotAGroup,
  NotOrthogonal,
  InternalInconsistency,
  UnsupportedSize,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace intaut
