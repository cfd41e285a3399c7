// SPDX-License-Identifier: Apache-2.0

#include "mdslift/error.hpp"

namespace mdslift {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::LeadingBlockSingular: return "LeadingBlockSingular";
    case ErrorCode::TooLong: return "TooLong";
    case ErrorCode::DuplicateAlpha: return "DuplicateAlpha";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::TooManyCodewords: return "TooManyCodewords";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::ZeroDiagonalEntry: return "ZeroDiagonalEntry";
    case ErrorCode::EmptyDiagonal: return "EmptyDiagonal";
    case ErrorCode::NotDh: return "NotDh";
    case ErrorCode::TooManyErasures: return "TooManyErasures";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
{
}

void raise(ErrorCode code, const std::string& detail)
{
    throw Error(code, detail);
}

} // namespace mdslift
