#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ccs {

enum class ErrorKind {
    BoundaryConditionViolated,
    DanglingReference,
    EmptyTopDegree,
    IndexOutOfRange,
    EmptyInput,
    InvalidRing,
    InvalidScalar,
    InvalidTarget,
    NotMaximal,
    OrderingConventionViolated,
    FirstPosition,
    NotPure,
    StrictlyPrecriticalPresent,
    InvalidAugmentation,
    MalformedCertificate,
    InvalidCertificate,
    InvalidInput,
    SearchBudgetExceeded,
    TooLarge,
    ParseError,
    ValidationError,
};

const char* to_string(ErrorKind kind);

// Every library failure is reported through this type. Optional fields
// locate the problem (degree/column for complexes, line/column for text).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const { return kind_; }

    std::optional<unsigned> degree;
    std::optional<std::size_t> index;
    std::optional<std::size_t> line;
    std::optional<std::size_t> column;
    std::string pointer;

private:
    ErrorKind kind_;
};

}  // namespace ccs
