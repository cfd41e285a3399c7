// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_ERROR_HPP
#define MDSLIFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdslift {

enum class ErrorCode {
    NotPrime,
    DegreeTooSmall,
    NotIrreducible,
    FieldMismatch,
    CharacteristicMismatch,
    DivisionByZero,
    FieldTooLarge,
    FieldTooSmall,
    DimensionMismatch,
    IndexOutOfRange,
    NotStrictlyIncreasing,
    NotSquare,
    Singular,
    RankDeficient,
    LeadingBlockSingular,
    TooLong,
    DuplicateAlpha,
    ZeroMultiplier,
    TooManyCodewords,
    ZeroScalar,
    ZeroDiagonalEntry,
    EmptyDiagonal,
    NotDh,
    TooManyErasures,
    Inconsistent,
    ParseError,
    InvalidArgument,
};

/// Stable identifier for an error code, e.g. "NotPrime". Used in CLI diagnostics.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail);

} // namespace mdslift

#endif // MDSLIFT_ERROR_HPP
