#pragma once

#include <gtest/gtest.h>

#include "ramify/error.hpp"
#include "ramify/extension.hpp"
#include "ramify/series.hpp"

namespace ramify::testing {

template <class F>
ErrorKind kind_of(F &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Overflow;
}

inline LaurentSeries series(const std::string &field, const std::string &text,
                            std::int64_t precision = LaurentSeries::kExact)
{
    return parse_series(text, parse_field(field), precision);
}

inline ASExtension extension(const std::string &field, const std::string &text)
{
    return ASExtension(series(field, text));
}

inline LElement one(const ASExtension &ext)
{
    return LElement::from_base(ext, LaurentSeries::one(ext.field()));
}

} // namespace ramify::testing
