#include "ramify/value.hpp"

#include <charconv>

#include "ramify/error.hpp"

namespace ramify {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "64-bit multiplication overflow");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "64-bit addition overflow");
    }
    return out;
}

std::int64_t ipow(std::int64_t base, unsigned exp)
{
    std::int64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        out = checked_mul(out, base);
    }
    return out;
}

Value::Value(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "value with zero denominator");
    }
    r_ = rep(num, den);
}

std::int64_t Value::floor() const
{
    return floor_div(r_.numerator(), r_.denominator());
}

std::int64_t Value::ceil() const
{
    return ceil_div(r_.numerator(), r_.denominator());
}

Value &Value::operator+=(const Value &o)
{
    r_ += o.r_;
    return *this;
}

Value &Value::operator-=(const Value &o)
{
    r_ -= o.r_;
    return *this;
}

Value &Value::operator*=(const Value &o)
{
    r_ *= o.r_;
    return *this;
}

Value &Value::operator/=(const Value &o)
{
    if (o.r_.numerator() == 0) {
        throw Error(ErrorKind::DivisionByZero, "division of values by zero");
    }
    r_ /= o.r_;
    return *this;
}

std::strong_ordering operator<=>(const Value &a, const Value &b)
{
    if (a.r_ < b.r_) {
        return std::strong_ordering::less;
    }
    if (a.r_ == b.r_) {
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::greater;
}

std::string Value::to_string() const
{
    return std::to_string(num()) + "/" + std::to_string(den());
}

Value Value::parse(const std::string &text)
{
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw ParseError(0, "malformed value '" + text + "'");
        }
        return v;
    };
    std::string_view sv(text);
    if (slash == std::string::npos) {
        return Value(parse_int(sv));
    }
    return Value(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::ostream &operator<<(std::ostream &os, const Value &v)
{
    if (v.is_integer()) {
        return os << v.num();
    }
    return os << v.num() << '/' << v.den();
}

} // namespace ramify
