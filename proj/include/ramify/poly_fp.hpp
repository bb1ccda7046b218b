#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <boost/container/small_vector.hpp>

namespace ramify {

// Dense univariate polynomial over the prime field F_p, coefficients stored
// low degree first with no trailing zeros. The prime is passed explicitly to
// every operation; the type itself is just the coefficient vector.
class PolyFp {
public:
    using coeff_t = std::uint32_t;
    using storage = boost::container::small_vector<coeff_t, 4>;

    PolyFp() = default;
    explicit PolyFp(storage coeffs);
    static PolyFp constant(coeff_t c);
    static PolyFp monomial(coeff_t c, unsigned degree);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    coeff_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    coeff_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const storage &coeffs() const { return c_; }

    friend bool operator==(const PolyFp &a, const PolyFp &b) { return a.c_ == b.c_; }

    static PolyFp add(const PolyFp &a, const PolyFp &b, coeff_t p);
    static PolyFp sub(const PolyFp &a, const PolyFp &b, coeff_t p);
    static PolyFp neg(const PolyFp &a, coeff_t p);
    static PolyFp mul(const PolyFp &a, const PolyFp &b, coeff_t p);
    static PolyFp scale(const PolyFp &a, coeff_t c, coeff_t p);
    // Euclidean division; b must be nonzero.
    static std::pair<PolyFp, PolyFp> divmod(const PolyFp &a, const PolyFp &b, coeff_t p);
    static PolyFp mod(const PolyFp &a, const PolyFp &b, coeff_t p);
    static PolyFp gcd(PolyFp a, PolyFp b, coeff_t p);
    static PolyFp monic(const PolyFp &a, coeff_t p);
    static PolyFp derivative(const PolyFp &a, coeff_t p);
    static PolyFp powmod(PolyFp base, std::uint64_t exp, const PolyFp &modulus, coeff_t p);

    // Ben-Or style test: no factor of degree <= deg/2 divides the polynomial.
    static bool is_irreducible(const PolyFp &f, coeff_t p);

    std::string to_string(const std::string &var) const;

private:
    void trim();
    storage c_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint32_t p);
bool is_prime(std::uint64_t n);

} // namespace ramify
