#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramify/poly_fp.hpp"
#include "ramify/rng.hpp"

namespace ramify {

// Description of a residue field: either F_q = F_p[w]/(modulus) or the
// rational function field F_p(u).
struct FieldSpec {
    enum class Kind { FiniteField, RationalFunction };

    std::uint32_t p = 2;
    Kind kind = Kind::FiniteField;
    unsigned degree = 1;  // m, for finite fields
    PolyFp modulus;       // monic irreducible of degree m, finite fields only
    std::string variable; // name of the generator (w) or indeterminate (u)

    bool is_finite() const { return kind == Kind::FiniteField; }
    bool is_perfect() const { return is_finite(); }
    // q = p^m; only meaningful for finite fields.
    std::uint64_t order() const;
    // Textual form accepted by parse(): Fp:3, Fq:9:w^2+1, Fp(u):3.
    std::string to_string() const;

    friend bool operator==(const FieldSpec &a, const FieldSpec &b);
};

using Field = std::shared_ptr<const FieldSpec>;

Field prime_field(std::uint32_t p);
Field finite_field(std::uint32_t p, const PolyFp &modulus, std::string variable = "w");
Field rational_function_field(std::uint32_t p, std::string variable = "u");
// F_q with a fixed tabulated modulus for small q.
Field finite_field_of_order(std::uint64_t q);
Field parse_field(const std::string &text);

bool same_field(const Field &a, const Field &b);

// An element of a residue field in canonical form. For F_q the value is a
// polynomial of degree < m; for F_p(u) it is num/den in lowest terms with a
// monic denominator.
class Residue {
public:
    Residue() = default;

    static Residue zero(const Field &k);
    static Residue one(const Field &k);
    static Residue from_int(const Field &k, std::int64_t c);
    // w for F_q, u for F_p(u).
    static Residue generator(const Field &k);
    static Residue from_poly(const Field &k, const PolyFp &poly);
    static Residue from_fraction(const Field &k, const PolyFp &num, const PolyFp &den);
    static Residue random(const Field &k, Rng &rng);
    static Residue random_nonzero(const Field &k, Rng &rng);
    // All q elements of a finite field, in a fixed order.
    static std::vector<Residue> elements(const Field &k);

    const Field &field() const { return field_; }
    std::uint32_t characteristic() const { return field_->p; }
    const PolyFp &numerator() const { return num_; }
    const PolyFp &denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // Set when the element lies in the prime field; value in [0, p).
    bool is_prime_constant() const;
    std::uint32_t prime_constant() const;

    Residue operator-() const;
    Residue &operator+=(const Residue &o);
    Residue &operator-=(const Residue &o);
    Residue &operator*=(const Residue &o);
    Residue &operator/=(const Residue &o);
    friend Residue operator+(Residue a, const Residue &b) { return a += b; }
    friend Residue operator-(Residue a, const Residue &b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue &b) { return a *= b; }
    friend Residue operator/(Residue a, const Residue &b) { return a /= b; }
    friend bool operator==(const Residue &a, const Residue &b);

    Residue scaled(std::int64_t c) const;
    Residue inverse() const;
    Residue pow(std::int64_t e) const;
    Residue frobenius() const { return pow(field_->p); }

    bool is_pth_power() const;
    Residue frobenius_root() const;
    Residue derivative_u() const;
    // Absolute trace F_q -> F_p.
    std::uint32_t trace_to_prime() const;

    std::string to_string() const;

private:
    Residue(Field k, PolyFp num, PolyFp den);
    void canonicalize();
    void require_same(const Residue &o) const;

    Field field_;
    PolyFp num_;
    PolyFp den_;
};

} // namespace ramify
