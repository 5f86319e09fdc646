#include "ccshell/error.hpp"

namespace ccs {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BoundaryConditionViolated: return "BoundaryConditionViolated";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::EmptyTopDegree: return "EmptyTopDegree";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::InvalidScalar: return "InvalidScalar";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::OrderingConventionViolated: return "OrderingConventionViolated";
    case ErrorKind::FirstPosition: return "FirstPosition";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::StrictlyPrecriticalPresent: return "StrictlyPrecriticalPresent";
    case ErrorKind::InvalidAugmentation: return "InvalidAugmentation";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind)
{
}

}  // namespace ccs
