#include "fuzzyq/error.hpp"

namespace fuzzyq {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LatticeMismatch: return "LatticeMismatch";
        case ErrorKind::LatticeValue: return "LatticeValueError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IterationLimitExceeded: return "IterationLimitExceeded";
        case ErrorKind::NotQuasiOrder: return "NotQuasiOrder";
        case ErrorKind::EquivalenceRequired: return "EquivalenceRequired";
        case ErrorKind::ContainmentViolated: return "ContainmentViolated";
        case ErrorKind::UnknownLetter: return "UnknownLetter";
        case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorKind::RecognizerRequired: return "RecognizerRequired";
        case ErrorKind::EmptySharedAlphabet: return "EmptySharedAlphabet";
        case ErrorKind::NotASuperset: return "NotASuperset";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotBoolean: return "NotBoolean";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Validation: return "ValidationError";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace fuzzyq
