#include "chaincode/error.hpp"

namespace chaincode {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonUnit: return "NonUnit";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotSquareFree: return "NotSquareFree";
        case ErrorKind::NotCoprimeToP: return "NotCoprimeToP";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NonUnitA0: return "NonUnitA0";
        case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case ErrorKind::NotSquareFreeAmbient: return "NotSquareFreeAmbient";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::NotFree: return "NotFree";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::SingularGram: return "SingularGram";
        case ErrorKind::SigmaUnstableAmbient: return "SigmaUnstableAmbient";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace chaincode
