#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramify {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    ZeroInput,
    NotAPthPower,
    NotRationalFunctionField,
    FieldTooSmall,
    InvalidField,
    AmbientMismatch,
    InsufficientPrecision,
    ZeroSeries,
    ExtensionMismatch,
    ZeroElement,
    DegenerateGenerator,
    NotApplicable,
    TrivialExtension,
    SwanZero,
    InvalidSpec,
    ParseError,
    FieldLiteralError,
    Overflow,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI's
// exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures additionally record the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string &message);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace ramify
