#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzyq {

enum class ErrorKind {
    LatticeMismatch,
    LatticeValue,
    DimensionMismatch,
    IterationLimitExceeded,
    NotQuasiOrder,
    EquivalenceRequired,
    ContainmentViolated,
    UnknownLetter,
    SizeLimitExceeded,
    AlphabetMismatch,
    RecognizerRequired,
    EmptySharedAlphabet,
    NotASuperset,
    TooLarge,
    NotBoolean,
    Parse,
    Validation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers can branch
// without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fuzzyq
