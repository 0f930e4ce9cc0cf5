#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3ord {

enum class ErrorCode {
  NonSquare,
  NotSymmetric,
  DimensionMismatch,
  SingularFrame,
  ActionNotIsometric,
  InvalidGroupAction,
  OddEntry,
  OddSelfIntersection,
  SquareTooNegative,
  AmbiguousZeroPairing,
  GensDoNotSpan,
  NotAmple,
  UnsupportedParameter,
  DNotDividing,
  OutOfAssertedRange,
  UnsupportedAction,
  NotACocycle,
  NotANumericalSection,
  NotASingleSection,
  ParseError,
  SchemaError,
  MissingCorpus,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace k3ord
