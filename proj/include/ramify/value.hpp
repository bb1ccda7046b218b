#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

namespace ramify {

// An exact rational valuation value, always kept as a reduced fraction with a
// positive denominator.
class Value {
public:
    using rep = boost::rational<std::int64_t>;

    Value() = default;
    Value(std::int64_t n) : r_(n) {}
    Value(std::int64_t num, std::int64_t den);
    explicit Value(const rep &r) : r_(r) {}

    std::int64_t num() const { return r_.numerator(); }
    std::int64_t den() const { return r_.denominator(); }
    const rep &raw() const { return r_; }

    bool is_integer() const { return r_.denominator() == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Value operator-() const { return Value(-r_); }
    Value &operator+=(const Value &o);
    Value &operator-=(const Value &o);
    Value &operator*=(const Value &o);
    Value &operator/=(const Value &o);

    friend Value operator+(Value a, const Value &b) { return a += b; }
    friend Value operator-(Value a, const Value &b) { return a -= b; }
    friend Value operator*(Value a, const Value &b) { return a *= b; }
    friend Value operator/(Value a, const Value &b) { return a /= b; }

    friend bool operator==(const Value &a, const Value &b) { return a.r_ == b.r_; }
    friend std::strong_ordering operator<=>(const Value &a, const Value &b);

    // "num/den", denominator always present.
    std::string to_string() const;
    static Value parse(const std::string &text);

private:
    rep r_{0};
};

std::ostream &operator<<(std::ostream &os, const Value &v);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, unsigned exp);

} // namespace ramify
