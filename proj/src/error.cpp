#include "ramify/error.hpp"

namespace ramify {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotAPthPower: return "NotAPthPower";
        case ErrorKind::NotRationalFunctionField: return "NotRationalFunctionField";
        case ErrorKind::FieldTooSmall: return "FieldTooSmall";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorKind::ZeroSeries: return "ZeroSeries";
        case ErrorKind::ExtensionMismatch: return "ExtensionMismatch";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::DegenerateGenerator: return "DegenerateGenerator";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::TrivialExtension: return "TrivialExtension";
        case ErrorKind::SwanZero: return "SwanZero";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FieldLiteralError: return "FieldLiteralError";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

ParseError::ParseError(std::size_t offset, const std::string &message)
    : Error(ErrorKind::ParseError, "at offset " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

} // namespace ramify
