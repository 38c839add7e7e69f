#include "setpair/error.hpp"

namespace setpair {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::Malformed: return "malformed line";
    case ParseErrorKind::OutOfRange: return "vertex out of range";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::BadWeight: return "negative or non-finite weight";
    case ParseErrorKind::CountMismatch: return "count mismatch";
    case ParseErrorKind::BadValue: return "bad value";
    case ParseErrorKind::MissingEntry: return "missing entry";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + to_string(kind) +
            (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

const char* to_string(Infeasibility kind) noexcept {
  switch (kind) {
    case Infeasibility::ZeroVector: return "zero vector";
    case Infeasibility::ConstantVector: return "constant vector";
    case Infeasibility::ZeroDenominator: return "zero denominator";
    case Infeasibility::ExcludedSet: return "point in excluded set";
  }
  return "infeasible";
}

InfeasiblePoint::InfeasiblePoint(Infeasibility kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind) {}

}  // namespace setpair
