#include "k3ord/error.hpp"

namespace k3ord {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularFrame: return "SingularFrame";
    case ErrorCode::ActionNotIsometric: return "ActionNotIsometric";
    case ErrorCode::InvalidGroupAction: return "InvalidGroupAction";
    case ErrorCode::OddEntry: return "OddEntry";
    case ErrorCode::OddSelfIntersection: return "OddSelfIntersection";
    case ErrorCode::SquareTooNegative: return "SquareTooNegative";
    case ErrorCode::AmbiguousZeroPairing: return "AmbiguousZeroPairing";
    case ErrorCode::GensDoNotSpan: return "GensDoNotSpan";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::DNotDividing: return "DNotDividing";
    case ErrorCode::OutOfAssertedRange: return "OutOfAssertedRange";
    case ErrorCode::UnsupportedAction: return "UnsupportedAction";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotANumericalSection: return "NotANumericalSection";
    case ErrorCode::NotASingleSection: return "NotASingleSection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::MissingCorpus: return "MissingCorpus";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace k3ord
