// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace reachlab {

// Failure categories. Each corresponds to a documented precondition,
// capacity limit, or analysis outcome; parse failures use ParseError below.
enum class ErrorCode {
  NotRankNMinus1,
  NotCircularNormalized,
  NotProperNonempty,
  ChainIncomplete,
  CosetNotInside,
  NotSubgroupPair,
  TooLarge,
  Unreachable,
  LemmaAFailure,
  NotCompletelyReachable,
  BadN,
  OutOfRange,
};

const char* error_code_name(ErrorCode code);

class ReachError : public std::runtime_error {
 public:
  ReachError(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed textual input (automaton files, inline a-maps, state sets).
// Positions are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace reachlab
