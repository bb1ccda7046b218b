#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramify/field.hpp"

namespace ramify {

// Truncated Laurent series over a residue field k: coefficients for exponents
// strictly below precision() are known, everything at or above is unknown.
// precision() == kExact marks a series known to be exactly its stored terms.
// Stored terms are sorted by exponent, nonzero and below the precision.
class LaurentSeries {
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;
    using Term = std::pair<std::int64_t, Residue>;

    LaurentSeries() = default;
    explicit LaurentSeries(Field k, std::int64_t precision = kExact);

    static LaurentSeries zero(const Field &k, std::int64_t precision = kExact);
    static LaurentSeries one(const Field &k);
    static LaurentSeries constant(const Residue &c);
    static LaurentSeries monomial(const Residue &c, std::int64_t exponent);
    static LaurentSeries t(const Field &k) { return monomial(Residue::one(k), 1); }
    static LaurentSeries from_terms(const Field &k, std::vector<Term> terms, std::int64_t precision = kExact);

    const Field &field() const { return field_; }
    std::int64_t precision() const { return precision_; }
    bool is_exact() const { return precision_ >= kExact; }
    const std::vector<Term> &terms() const { return terms_; }

    // Throws InsufficientPrecision when exponent >= precision().
    Residue coeff(std::int64_t exponent) const;
    // No nonzero coefficient in the known range.
    bool is_zero_known() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    // Exponent of the lowest nonzero coefficient; InsufficientPrecision if none
    // is known.
    std::int64_t valuation() const;
    std::optional<std::int64_t> valuation_if_known() const;
    // valuation() if known, else precision(): every known-range-zero series has
    // v >= precision.
    std::int64_t valuation_lower_bound() const;
    // Exponent of the highest stored term.
    std::int64_t top_exponent() const;

    LaurentSeries operator-() const;
    LaurentSeries &operator+=(const LaurentSeries &o);
    LaurentSeries &operator-=(const LaurentSeries &o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries &b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries &b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);

    LaurentSeries scaled(const Residue &c) const;
    LaurentSeries scaled(std::int64_t c) const;
    // Multiplication by t^k.
    LaurentSeries shifted(std::int64_t k) const;
    // Forgets everything at or above n (no-op when n >= precision()).
    LaurentSeries truncated(std::int64_t n) const;
    // Keeps only terms with exponent < 0 (the polar part), exact.
    LaurentSeries polar_part() const;

    // a * inverse(N) == 1 known below min(N, precision() - 2 v). The inverse of
    // an exact monomial is exact.
    LaurentSeries inverse(std::int64_t target_precision = kExact) const;
    LaurentSeries pow(std::int64_t e, std::int64_t target_precision = kExact) const;

    // t * d/dt, termwise.
    LaurentSeries t_derivative() const;
    // Coefficientwise d/du; requires k = F_p(u).
    LaurentSeries u_derivative() const;
    // x -> x^p.
    LaurentSeries frobenius() const;

    // Agreement on the common known range.
    bool agrees_with(const LaurentSeries &o) const;
    // Stored data and precision both equal.
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b);

    // "t^-4 + u*t^-2 + O(t^8)"; exact series carry no O-term.
    std::string to_string() const;

private:
    void trim();
    void require_same(const LaurentSeries &o) const;

    Field field_;
    std::int64_t precision_ = kExact;
    std::vector<Term> terms_;
};

// Saturating sum of precisions and exponents around kExact.
std::int64_t precision_add(std::int64_t a, std::int64_t b);

// Parses "t^-4 + u*t^-2" style input: a rational expression in t over k. The
// result is known below `precision` (or exact when the input is a Laurent
// polynomial and precision == kExact). An explicit O(t^N) caps the precision.
LaurentSeries parse_series(const std::string &text, const Field &k, std::int64_t precision);

} // namespace ramify
