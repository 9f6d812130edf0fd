#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdga {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  ModulusMismatch,
  DivisionByZero,
  D2Nonzero,
  IdealNotStable,
  InhomogeneousRelation,
  ParentMismatch,
  CapExceeded,
  CapTooLow,
  TruncatedInput,
  NoConjugateDeclared,
  NotClosed,
  DegreeOverflow,
  NoTopDeclared,
  NotChainMap,
  OrderMismatch,
  ConjugationBroken,
  RelationsNotPreserved,
  OddADegree,
  OrderUnsupported,
  BadOmegaDegree,
  NoTop,
  EulerNotClosed,
  EulerBadDegree,
  UnknownPreset,
  NotOneConnected,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ModulusMismatch: return "MODULUS_MISMATCH";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::D2Nonzero: return "D2_NONZERO";
    case ErrorCode::IdealNotStable: return "IDEAL_NOT_STABLE";
    case ErrorCode::InhomogeneousRelation: return "INHOMOGENEOUS_RELATION";
    case ErrorCode::ParentMismatch: return "PARENT_MISMATCH";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::CapTooLow: return "CAP_TOO_LOW";
    case ErrorCode::TruncatedInput: return "TRUNCATED_INPUT";
    case ErrorCode::NoConjugateDeclared: return "NO_CONJUGATE_DECLARED";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::DegreeOverflow: return "DEGREE_OVERFLOW";
    case ErrorCode::NoTopDeclared: return "NO_TOP_DECLARED";
    case ErrorCode::NotChainMap: return "NOT_CHAIN_MAP";
    case ErrorCode::OrderMismatch: return "ORDER_MISMATCH";
    case ErrorCode::ConjugationBroken: return "CONJUGATION_BROKEN";
    case ErrorCode::RelationsNotPreserved: return "RELATIONS_NOT_PRESERVED";
    case ErrorCode::OddADegree: return "ODD_A_DEGREE";
    case ErrorCode::OrderUnsupported: return "ORDER_UNSUPPORTED";
    case ErrorCode::BadOmegaDegree: return "BAD_OMEGA_DEGREE";
    case ErrorCode::NoTop: return "NO_TOP";
    case ErrorCode::EulerNotClosed: return "EULER_NOT_CLOSED";
    case ErrorCode::EulerBadDegree: return "EULER_BAD_DEGREE";
    case ErrorCode::UnknownPreset: return "UNKNOWN_PRESET";
    case ErrorCode::NotOneConnected: return "NOT_ONE_CONNECTED";
  }
  return "UNKNOWN";
}

/// Structured failure: a machine-readable code plus a human-readable
/// diagnostic that usually names the offending generator or a witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace cdga
