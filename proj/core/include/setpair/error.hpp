#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration or tabulation would exceed its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  Malformed,
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  BadWeight,
  CountMismatch,
  BadValue,
  MissingEntry,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

enum class Infeasibility {
  ZeroVector,
  ConstantVector,
  ZeroDenominator,
  ExcludedSet,
};

const char* to_string(Infeasibility kind) noexcept;

// A continuous objective was evaluated outside its feasible region.
class InfeasiblePoint : public Error {
 public:
  InfeasiblePoint(Infeasibility kind, const std::string& detail);

  Infeasibility kind() const noexcept { return kind_; }

 private:
  Infeasibility kind_;
};

}  // namespace setpair
