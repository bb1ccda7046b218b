#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramify/cut.hpp"
#include "ramify/rng.hpp"
#include "ramify/series.hpp"

namespace ramify {

// Which alternative of the best-f normal form holds:
//   I   f lies in A (no polar part)
//   II  -v(f) = n > 0 with gcd(n, p) = 1
//   III p | n and the leading coefficient is not a p-th power in k
enum class BestCase { I, II, III };

enum class Classification { Trivial, Unramified, Wild, Ferocious, Unknown };

std::string to_string(BestCase c);
std::string to_string(Classification c);

struct BestForm {
    LaurentSeries f_best;
    BestCase best_case = BestCase::I;
    Value swan;
    // f_best = f - sum (h^p - h) over this log.
    std::vector<LaurentSeries> reduction_log;
};

// Repeatedly trades the most negative term c t^-m with p | m and c a p-th power
// for c^(1/p) t^(-m/p). Needs f.precision() >= 1 so the polar part is known.
BestForm reduce_to_best(const LaurentSeries &f);

// Wild / Ferocious from the case tag; for case I decides whether the constant
// term is in the image of x -> x^p - x on k, returning Unknown for F_p(u)
// constants whose denominator is not a power of u.
Classification classify(const BestForm &best);

struct ExtensionData {
    std::uint32_t p = 2;
    Field k;
    LaurentSeries f;
    std::int64_t work_precision = 48;
};

// L = K[T]/(T^p - T - f) with K = k((t)); the root of T is written alpha.
class ASExtension {
public:
    static constexpr std::int64_t kDefaultWorkPrecision = 48;

    // work_precision is the target used whenever a series must be inverted.
    explicit ASExtension(LaurentSeries f, std::int64_t work_precision = kDefaultWorkPrecision);

    std::uint32_t p() const { return data_->p; }
    const Field &field() const { return data_->k; }
    const LaurentSeries &f() const { return data_->f; }
    std::int64_t work_precision() const { return data_->work_precision; }
    const BestForm &best() const { return best_; }
    Classification classification() const { return classification_; }
    const Value &swan() const { return best_.swan; }
    std::int64_t n() const { return best_.swan.num(); }

    bool f_is_best() const;
    // The same field L presented by f_best.
    ASExtension with_best_f() const;
    // Wild or Ferocious.
    bool is_ramified() const;

    // Value groups in v_K units: Z for K, (1/p)Z for L when wild.
    ValueGroup gamma_K() const { return ValueGroup::discrete(Value(1)); }
    ValueGroup gamma_L() const;
    // n / p = v_L(1/alpha) for best f.
    Value v0() const { return best_.swan / Value(p()); }
    // v_L(alpha) for this presentation (0 when f is integral).
    Value v_alpha() const;

    // Ramification index, inertia degree and defect; all 1 unless L is a field.
    int e() const;
    int f_inertia() const;
    int defect() const { return 1; }

    const std::shared_ptr<const ExtensionData> &data() const { return data_; }

private:
    std::shared_ptr<const ExtensionData> data_;
    BestForm best_;
    Classification classification_;
};

// sum_i c_i alpha^i, i < p.
class LElement {
public:
    explicit LElement(const ASExtension &ext);
    static LElement from_base(const ASExtension &ext, const LaurentSeries &c);
    static LElement alpha(const ASExtension &ext);
    static LElement from_coeffs(const ASExtension &ext, std::vector<LaurentSeries> coeffs);

    std::uint32_t p() const { return ext_->p; }
    const Field &field() const { return ext_->k; }
    const std::vector<LaurentSeries> &coeffs() const { return c_; }
    const LaurentSeries &coeff(std::size_t i) const { return c_.at(i); }

    bool is_exact_zero() const;
    bool is_zero_known() const;
    // Coefficients of alpha^1..alpha^(p-1) are known to vanish.
    bool in_base() const;

    LElement operator-() const;
    LElement &operator+=(const LElement &o);
    LElement &operator-=(const LElement &o);
    friend LElement operator+(LElement a, const LElement &b) { return a += b; }
    friend LElement operator-(LElement a, const LElement &b) { return a -= b; }
    friend LElement operator*(const LElement &a, const LElement &b);
    // a * b^-1.
    friend LElement operator/(const LElement &a, const LElement &b);

    LElement scaled(const LaurentSeries &c) const;
    LElement pow(std::uint64_t e) const;
    // alpha -> alpha + k.
    LElement sigma(std::int64_t k = 1) const;
    // sigma(x) - x.
    LElement sigma_minus_one() const { return sigma(1) - *this; }

    // Product of all conjugates; its alpha-coefficients must vanish.
    LaurentSeries norm() const;
    LaurentSeries trace() const;
    // Column j holds the coordinates of x * alpha^j.
    std::vector<std::vector<LaurentSeries>> multiplication_matrix() const;

    // v_K(N(x)) / p. ZeroElement for exact zero, InsufficientPrecision when the
    // norm has no known nonzero coefficient.
    Value v_L() const;
    // A certified lower bound for v_L, from the coefficients and the norm.
    Value v_L_floor() const;
    // Certified membership in the ideal described by the cut (values in v_K
    // units); InsufficientPrecision when undecidable at the available precision.
    bool in_ideal(const Cut &ideal) const;
    bool is_integral() const;

    // prod_{i>=1} sigma^i(x) / N(x); N(x) is inverted to the extension's work
    // precision.
    LElement inverse() const;
    LElement truncated(std::int64_t n) const;
    bool agrees_with(const LElement &o) const;
    // Smallest coefficient precision.
    std::int64_t precision() const;

    std::string to_string() const;

private:
    LElement(std::shared_ptr<const ExtensionData> ext, std::vector<LaurentSeries> c);
    void require_same(const LElement &o) const;

    std::shared_ptr<const ExtensionData> ext_;
    std::vector<LaurentSeries> c_;
};

// D_0 = id, D_i(x) = (sigma - 1)(D_{i-1}(x)) / (sigma - 1)(D_{i-1}(b^i)).
// The p - 1 denominators are inverted once at construction.
class DOperator {
public:
    // DegenerateGenerator if some denominator is known to vanish.
    explicit DOperator(LElement b);

    const LElement &generator() const { return b_; }
    LElement apply(int i, const LElement &x) const;
    // D_0(x), ..., D_{p-1}(x).
    std::vector<LElement> apply_all(const LElement &x) const;

private:
    LElement b_;
    std::vector<LElement> inv_den_; // index i holds 1 / (sigma-1)(D_{i-1}(b^i)); slot 0 unused
};

LElement d_operator(int i, const LElement &b, const LElement &x);

struct BasisDescription {
    Classification kind = Classification::Wild;
    // Wild: A_i = {c in K : v_K(c) - i n / p >= 0} as cuts over Z, i < p.
    std::vector<Cut> coefficient_ideals;
    // Ferocious: gamma = t^(n/p), so gamma * alpha is a unit of B.
    LaurentSeries gamma;
    // An A-basis of B: t^ceil(i n / p) alpha^i (wild) or (gamma alpha)^i.
    std::vector<LElement> generators;
};

// Requires a ramified extension presented by its best f (NotApplicable
// otherwise).
BasisDescription integral_basis(const ASExtension &ext);

// An element b of B with sigma(b) - b generating I_sigma: a uniformizer
// t^ceil(i0 n / p) alpha^i0 with i0 n = -1 mod p (wild) or gamma * alpha
// (ferocious).
LElement boundary_generator(const ASExtension &ext);

// sum_i a_i g_i over the integral basis with a_i random polynomials in t of
// degree <= degree.
LElement random_integral(const ASExtension &ext, Rng &rng, int degree = 3);

// A random polynomial in t of degree <= degree with coefficients in k.
LaurentSeries random_integral_series(const Field &k, Rng &rng, int degree);

} // namespace ramify
