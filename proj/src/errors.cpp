#include "reachlab/errors.hpp"

namespace reachlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRankNMinus1: return "NotRankNMinus1";
    case ErrorCode::NotCircularNormalized: return "NotCircularNormalized";
    case ErrorCode::NotProperNonempty: return "NotProperNonempty";
    case ErrorCode::ChainIncomplete: return "ChainIncomplete";
    case ErrorCode::CosetNotInside: return "CosetNotInside";
    case ErrorCode::NotSubgroupPair: return "NotSubgroupPair";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::LemmaAFailure: return "LemmaAFailure";
    case ErrorCode::NotCompletelyReachable: return "NotCompletelyReachable";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

ReachError::ReachError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : "") +
                         ": " + message),
      line_(line),
      column_(column) {}

}  // namespace reachlab
