#include "ramify/poly_fp.hpp"

#include <vector>

#include "ramify/error.hpp"

namespace ramify {

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint32_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
    }
    return mod_pow(a, p - 2, p);
}

PolyFp::PolyFp(storage coeffs) : c_(std::move(coeffs))
{
    trim();
}

PolyFp PolyFp::constant(coeff_t c)
{
    PolyFp out;
    if (c != 0) {
        out.c_.push_back(c);
    }
    return out;
}

PolyFp PolyFp::monomial(coeff_t c, unsigned degree)
{
    PolyFp out;
    if (c != 0) {
        out.c_.assign(degree + 1, 0);
        out.c_[degree] = c;
    }
    return out;
}

void PolyFp::trim()
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

PolyFp PolyFp::add(const PolyFp &a, const PolyFp &b, coeff_t p)
{
    PolyFp out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = (a.coeff(i) + b.coeff(i)) % p;
    }
    out.trim();
    return out;
}

PolyFp PolyFp::neg(const PolyFp &a, coeff_t p)
{
    PolyFp out = a;
    for (auto &c : out.c_) {
        c = (p - c) % p;
    }
    return out;
}

PolyFp PolyFp::sub(const PolyFp &a, const PolyFp &b, coeff_t p)
{
    PolyFp out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = (a.coeff(i) + p - b.coeff(i)) % p;
    }
    out.trim();
    return out;
}

PolyFp PolyFp::mul(const PolyFp &a, const PolyFp &b, coeff_t p)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
        }
    }
    PolyFp out;
    out.c_.assign(acc.begin(), acc.end());
    out.trim();
    return out;
}

PolyFp PolyFp::scale(const PolyFp &a, coeff_t c, coeff_t p)
{
    PolyFp out = a;
    for (auto &x : out.c_) {
        x = static_cast<coeff_t>(std::uint64_t(x) * c % p);
    }
    out.trim();
    return out;
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp &a, const PolyFp &b, coeff_t p)
{
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    PolyFp rem = a;
    if (a.degree() < b.degree()) {
        return {PolyFp{}, rem};
    }
    const auto inv_lead = mod_inverse(b.leading(), p);
    PolyFp quot;
    quot.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    for (int d = rem.degree(); d >= b.degree(); --d) {
        const auto c = static_cast<coeff_t>(std::uint64_t(rem.c_[d]) * inv_lead % p);
        if (c == 0) {
            continue;
        }
        const auto shift = static_cast<std::size_t>(d - b.degree());
        quot.c_[shift] = c;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            rem.c_[shift + j] = static_cast<coeff_t>((rem.c_[shift + j] + std::uint64_t(p - c) * b.c_[j]) % p);
        }
    }
    rem.trim();
    quot.trim();
    return {quot, rem};
}

PolyFp PolyFp::mod(const PolyFp &a, const PolyFp &b, coeff_t p)
{
    return divmod(a, b, p).second;
}

PolyFp PolyFp::monic(const PolyFp &a, coeff_t p)
{
    if (a.is_zero()) {
        return a;
    }
    return scale(a, mod_inverse(a.leading(), p), p);
}

PolyFp PolyFp::gcd(PolyFp a, PolyFp b, coeff_t p)
{
    while (!b.is_zero()) {
        auto r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

PolyFp PolyFp::derivative(const PolyFp &a, coeff_t p)
{
    PolyFp out;
    if (a.c_.size() <= 1) {
        return out;
    }
    out.c_.resize(a.c_.size() - 1);
    for (std::size_t i = 1; i < a.c_.size(); ++i) {
        out.c_[i - 1] = static_cast<coeff_t>(std::uint64_t(a.c_[i]) * (i % p) % p);
    }
    out.trim();
    return out;
}

PolyFp PolyFp::powmod(PolyFp base, std::uint64_t exp, const PolyFp &modulus, coeff_t p)
{
    PolyFp result = constant(1 % p);
    base = mod(base, modulus, p);
    while (exp > 0) {
        if (exp & 1U) {
            result = mod(mul(result, base, p), modulus, p);
        }
        base = mod(mul(base, base, p), modulus, p);
        exp >>= 1U;
    }
    return result;
}

bool PolyFp::is_irreducible(const PolyFp &f, coeff_t p)
{
    const int n = f.degree();
    if (n < 1) {
        return false;
    }
    const PolyFp x = monomial(1, 1);
    PolyFp xq = mod(x, f, p);
    for (int i = 1; i <= n / 2; ++i) {
        xq = powmod(xq, p, f, p);
        const auto g = gcd(f, sub(xq, mod(x, f, p), p), p);
        if (g.degree() > 0) {
            return false;
        }
    }
    return true;
}

std::string PolyFp::to_string(const std::string &var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const auto c = c_[static_cast<std::size_t>(d)];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (d == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c) + "*";
        }
        out += var;
        if (d > 1) {
            out += "^" + std::to_string(d);
        }
    }
    return out;
}

} // namespace ramify
