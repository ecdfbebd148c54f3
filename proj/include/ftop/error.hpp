#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftop {

enum class ErrorKind {
  CycleDetected,
  DuplicateElement,
  UnknownElement,
  EmptySpace,
  EmptyComplex,
  EmptyObject,
  TargetNotInduced,
  UnknownSimplex,
  UnknownMember,
  MismatchedSpaces,
  NotOrderPreserving,
  MalformedSpec,
  InvalidCover,
  NotAChain,
  GenerationExhausted,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::EmptyObject: return "EmptyObject";
    case ErrorKind::TargetNotInduced: return "TargetNotInduced";
    case ErrorKind::UnknownSimplex: return "UnknownSimplex";
    case ErrorKind::UnknownMember: return "UnknownMember";
    case ErrorKind::MismatchedSpaces: return "MismatchedSpaces";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace ftop
