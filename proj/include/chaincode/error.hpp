#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaincode {

/// Domain error categories. The CLI reports these names verbatim.
enum class ErrorKind {
    NonPrime,
    ReducibleModulus,
    UnsupportedExtension,
    InvalidArgument,
    NonUnit,
    RingMismatch,
    NonMonicDivisor,
    NotMonic,
    NotSquareFree,
    NotCoprimeToP,
    CapExceeded,
    NotADivisor,
    ZeroPolynomial,
    LengthMismatch,
    SizeMismatch,
    NonUnitA0,
    NonUnitConstantTerm,
    NotSquareFreeAmbient,
    NotInvariant,
    NotFree,
    ZeroCode,
    SingularGram,
    SigmaUnstableAmbient,
    BudgetExceeded,
    Overflow,
    ParseError,
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace chaincode
