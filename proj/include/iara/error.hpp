#pragma once

#include <stdexcept>
#include <string>

namespace iara {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  InvalidCocycle,
  DegenerateBaseForm,
  InvalidSignMatrix,
  NotInvertible,
  NotHomogeneous,
  SplitFails,
  NotToral,
  DegenerateFormOnT,
  AxiomFails,
  BoundExceeded,
  CenterNonzero,
  NoWitness,
  NotDiagonalizable,
  RootMismatch,
  InconsistentDecomposition,
  FormDegenerate,
  WindowNotSymmetric,
  HypothesisUnmet,
  StringBroken,
  RankTooHigh,
  ConfigError,
  NotInSpan,
  InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidCocycle: return "InvalidCocycle";
    case ErrorCode::DegenerateBaseForm: return "DegenerateBaseForm";
    case ErrorCode::InvalidSignMatrix: return "InvalidSignMatrix";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SplitFails: return "SplitFails";
    case ErrorCode::NotToral: return "NotToral";
    case ErrorCode::DegenerateFormOnT: return "DegenerateFormOnT";
    case ErrorCode::AxiomFails: return "AxiomFails";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::CenterNonzero: return "CenterNonzero";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::RootMismatch: return "RootMismatch";
    case ErrorCode::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorCode::FormDegenerate: return "FormDegenerate";
    case ErrorCode::WindowNotSymmetric: return "WindowNotSymmetric";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::StringBroken: return "StringBroken";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iara
