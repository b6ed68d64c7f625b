#ifndef EXCHAR_ERROR_HPP
#define EXCHAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exchar {

// Machine-readable failure categories. Everything the engine can reject is
// an Error with one of these codes; callers that need to distinguish cases
// switch on code() instead of parsing messages.
enum class ErrorCode {
  NonBijective,       // image list is not a permutation
  ParseError,         // malformed cycle string / group file / manifest
  NotSubgroup,        // H is not contained in G
  NotNormal,          // K is not normal in G
  GroupMismatch,      // degree or ambient-group mismatch between arguments
  OrderCapExceeded,   // enumeration refused: |G| above the configured cap
  InternalInconsistency, // exactness self-check failed (engine bug)
  CountMismatch,      // paired lists of different lengths
  NotInvariant,       // character is not invariant under the ambient group
  NoExtensionToNP,    // character does not extend to the required subgroup
  UnknownGroup,       // corpus lookup failed
  UnknownCheck,       // check name not recognized
  UnsupportedFamily,  // Lie-type operation not defined for this family
  ExcludedCase,       // (n, q) explicitly excluded for this formula
  OutsideTableConditions, // (n, q) outside the minimal-degree table's row conditions
  ShapeMismatch,      // centralizer shape does not fit the ambient rank
  NonDivisible,       // claimed exact division failed
  StoreError,         // result store I/O failure
  EquivalenceViolation, // the three extension/complement criteria disagree
  UniquenessViolation,  // more than one normal complement was found
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonBijective: return "NonBijective";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NoExtensionToNP: return "NoExtensionToNP";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::ExcludedCase: return "ExcludedCase";
    case ErrorCode::OutsideTableConditions: return "OutsideTableConditions";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::StoreError: return "StoreError";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::UniquenessViolation: return "UniquenessViolation";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace exchar

#endif
