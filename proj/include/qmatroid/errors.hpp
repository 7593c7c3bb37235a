#pragma once

#include <stdexcept>
#include <string>

namespace qmatroid {

enum class ErrorKind {
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  NotSquare,
  NotSymmetric,
  IndexOutOfRange,
  UnknownLabel,
  ZeroCoefficient,
  ZeroArgument,
  ZeroPropagatorConstant,
  LoopOrIsthmus,
  InvalidQ,
  InvalidRankFunction,
  ParseError,
  EnumerationBudgetExceeded,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception; `kind()` is stable and carries the error contract,
/// the message carries context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroPropagatorConstant: return "ZeroPropagatorConstant";
    case ErrorKind::LoopOrIsthmus: return "LoopOrIsthmus";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::InvalidRankFunction: return "InvalidRankFunction";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace qmatroid
