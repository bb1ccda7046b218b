#include "ramify/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ramify/error.hpp"
#include "ramify/expr.hpp"
#include "ramify/value.hpp"

namespace ramify {

std::int64_t precision_add(std::int64_t a, std::int64_t b)
{
    if (a >= LaurentSeries::kExact || b >= LaurentSeries::kExact) {
        return LaurentSeries::kExact;
    }
    return std::min(checked_add(a, b), LaurentSeries::kExact);
}

namespace {

std::int64_t precision_mul(std::int64_t a, std::int64_t k)
{
    if (a >= LaurentSeries::kExact) {
        return LaurentSeries::kExact;
    }
    return std::min(checked_mul(a, k), LaurentSeries::kExact);
}

// Sums coefficients of equal exponent and drops zeros; input need not be sorted.
std::vector<LaurentSeries::Term> combine(std::vector<LaurentSeries::Term> raw)
{
    std::stable_sort(raw.begin(), raw.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    std::vector<LaurentSeries::Term> out;
    for (auto &term : raw) {
        if (!out.empty() && out.back().first == term.first) {
            out.back().second += term.second;
        } else {
            if (!out.empty() && out.back().second.is_zero()) {
                out.pop_back();
            }
            out.push_back(std::move(term));
        }
    }
    if (!out.empty() && out.back().second.is_zero()) {
        out.pop_back();
    }
    return out;
}

bool is_plain_coefficient(const std::string &s)
{
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '^'; });
}

} // namespace

LaurentSeries::LaurentSeries(Field k, std::int64_t precision) : field_(std::move(k)), precision_(std::min(precision, kExact))
{
}

LaurentSeries LaurentSeries::zero(const Field &k, std::int64_t precision)
{
    return LaurentSeries(k, precision);
}

LaurentSeries LaurentSeries::one(const Field &k)
{
    return constant(Residue::one(k));
}

LaurentSeries LaurentSeries::constant(const Residue &c)
{
    return monomial(c, 0);
}

LaurentSeries LaurentSeries::monomial(const Residue &c, std::int64_t exponent)
{
    LaurentSeries s(c.field());
    if (!c.is_zero()) {
        s.terms_.emplace_back(exponent, c);
    }
    return s;
}

LaurentSeries LaurentSeries::from_terms(const Field &k, std::vector<Term> terms, std::int64_t precision)
{
    LaurentSeries s(k, precision);
    for (const auto &term : terms) {
        if (!same_field(term.second.field(), k)) {
            throw Error(ErrorKind::FieldMismatch, "series coefficient from another field");
        }
    }
    s.terms_ = combine(std::move(terms));
    s.trim();
    return s;
}

void LaurentSeries::trim()
{
    while (!terms_.empty() && terms_.back().first >= precision_) {
        terms_.pop_back();
    }
}

void LaurentSeries::require_same(const LaurentSeries &o) const
{
    if (!same_field(field_, o.field_)) {
        throw Error(ErrorKind::FieldMismatch, "series over different residue fields");
    }
}

Residue LaurentSeries::coeff(std::int64_t exponent) const
{
    if (exponent >= precision_) {
        throw Error(ErrorKind::InsufficientPrecision,
                    "coefficient of t^" + std::to_string(exponent) + " is beyond precision " + std::to_string(precision_));
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term &term, std::int64_t e) { return term.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        return it->second;
    }
    return Residue::zero(field_);
}

std::int64_t LaurentSeries::valuation() const
{
    if (terms_.empty()) {
        if (is_exact()) {
            throw Error(ErrorKind::ZeroSeries, "valuation of the zero series");
        }
        throw Error(ErrorKind::InsufficientPrecision,
                    "no nonzero coefficient below precision " + std::to_string(precision_));
    }
    return terms_.front().first;
}

std::optional<std::int64_t> LaurentSeries::valuation_if_known() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.front().first;
}

std::int64_t LaurentSeries::valuation_lower_bound() const
{
    return terms_.empty() ? precision_ : terms_.front().first;
}

std::int64_t LaurentSeries::top_exponent() const
{
    if (terms_.empty()) {
        throw Error(ErrorKind::ZeroSeries, "no stored terms");
    }
    return terms_.back().first;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto &term : r.terms_) {
        term.second = -term.second;
    }
    return r;
}

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &o)
{
    require_same(o);
    std::vector<Term> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    terms_ = combine(std::move(raw));
    precision_ = std::min(precision_, o.precision_);
    trim();
    return *this;
}

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &o)
{
    return *this += -o;
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
{
    a.require_same(b);
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return LaurentSeries::zero(a.field_);
    }
    const std::int64_t precision = std::min(precision_add(a.precision_, b.valuation_lower_bound()),
                                            precision_add(b.precision_, a.valuation_lower_bound()));
    std::vector<LaurentSeries::Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            const std::int64_t e = checked_add(x.first, y.first);
            if (e < precision) {
                raw.emplace_back(e, x.second * y.second);
            }
        }
    }
    LaurentSeries r(a.field_, precision);
    r.terms_ = combine(std::move(raw));
    return r;
}

LaurentSeries LaurentSeries::scaled(const Residue &c) const
{
    if (c.is_zero()) {
        return zero(field_);
    }
    LaurentSeries r = *this;
    for (auto &term : r.terms_) {
        term.second *= c;
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(std::int64_t c) const
{
    return scaled(Residue::from_int(field_, c));
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const
{
    LaurentSeries r = *this;
    for (auto &term : r.terms_) {
        term.first = checked_add(term.first, k);
    }
    if (!is_exact()) {
        r.precision_ = std::min(checked_add(precision_, k), kExact - 1);
    }
    return r;
}

LaurentSeries LaurentSeries::truncated(std::int64_t n) const
{
    if (n >= precision_) {
        return *this;
    }
    LaurentSeries r = *this;
    r.precision_ = n;
    r.trim();
    return r;
}

LaurentSeries LaurentSeries::polar_part() const
{
    LaurentSeries r(field_);
    for (const auto &term : terms_) {
        if (term.first < 0) {
            r.terms_.push_back(term);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::inverse(std::int64_t target_precision) const
{
    if (terms_.empty()) {
        if (is_exact()) {
            throw Error(ErrorKind::ZeroSeries, "inverse of the zero series");
        }
        throw Error(ErrorKind::InsufficientPrecision, "inverse of a series with no known nonzero coefficient");
    }
    const std::int64_t v = terms_.front().first;
    const Residue c0_inv = terms_.front().second.inverse();
    if (terms_.size() == 1 && is_exact()) {
        return monomial(c0_inv, -v);
    }
    const std::int64_t precision = std::min(target_precision, precision_add(precision_, checked_mul(-2, v)));
    if (precision >= kExact) {
        throw Error(ErrorKind::InsufficientPrecision, "inverse of an exact non-monomial series needs a target precision");
    }
    // this = t^v (c0 + sum_j u_j t^j), inverse = t^-v sum_k w_k t^k.
    const std::int64_t count = checked_add(precision, v);
    LaurentSeries r(field_, precision);
    if (count <= 0) {
        return r;
    }
    std::vector<std::pair<std::int64_t, Residue>> tail;
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        tail.emplace_back(terms_[i].first - v, terms_[i].second);
    }
    std::vector<Residue> w;
    w.reserve(static_cast<std::size_t>(count));
    w.push_back(c0_inv);
    for (std::int64_t k = 1; k < count; ++k) {
        Residue acc = Residue::zero(field_);
        for (const auto &[j, u] : tail) {
            if (j > k) {
                break;
            }
            const Residue &prev = w[static_cast<std::size_t>(k - j)];
            if (!prev.is_zero()) {
                acc += u * prev;
            }
        }
        w.push_back(-(acc * c0_inv));
    }
    for (std::int64_t k = 0; k < count; ++k) {
        if (!w[static_cast<std::size_t>(k)].is_zero()) {
            r.terms_.emplace_back(k - v, w[static_cast<std::size_t>(k)]);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::pow(std::int64_t e, std::int64_t target_precision) const
{
    if (e < 0) {
        // Each extra factor of valuation -v costs v digits of precision.
        const std::int64_t v = valuation();
        const std::int64_t extra = v > 0 ? checked_mul(-e - 1, v) : 0;
        return inverse(precision_add(target_precision, extra)).pow(-e, target_precision);
    }
    LaurentSeries result = one(field_);
    LaurentSeries base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result.truncated(target_precision);
}

LaurentSeries LaurentSeries::t_derivative() const
{
    LaurentSeries r(field_, precision_);
    for (const auto &[e, c] : terms_) {
        Residue d = c.scaled(e);
        if (!d.is_zero()) {
            r.terms_.emplace_back(e, d);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::u_derivative() const
{
    if (field_->is_finite()) {
        throw Error(ErrorKind::NotRationalFunctionField, "d/du needs the residue field F_p(u)");
    }
    LaurentSeries r(field_, precision_);
    for (const auto &[e, c] : terms_) {
        Residue d = c.derivative_u();
        if (!d.is_zero()) {
            r.terms_.emplace_back(e, d);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::frobenius() const
{
    const std::int64_t p = field_->p;
    LaurentSeries r(field_, precision_mul(precision_, p));
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_back(checked_mul(e, p), c.frobenius());
    }
    return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries &o) const
{
    require_same(o);
    const std::int64_t n = std::min(precision_, o.precision_);
    return truncated(n).terms_ == o.truncated(n).terms_;
}

bool operator==(const LaurentSeries &a, const LaurentSeries &b)
{
    return same_field(a.field_, b.field_) && a.precision_ == b.precision_ && a.terms_ == b.terms_;
}

std::string LaurentSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        std::string coef = c.to_string();
        if (!is_plain_coefficient(coef)) {
            coef = "(" + coef + ")";
        }
        if (e == 0) {
            os << coef;
            continue;
        }
        if (!c.is_one()) {
            os << coef << "*";
        }
        os << "t";
        if (e != 1) {
            os << "^" << e;
        }
    }
    if (!is_exact()) {
        if (!first) {
            os << " + ";
        }
        os << "O(t^" << precision_ << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

namespace {

// Intermediate inverses are expanded kMargin digits past the requested
// precision so that later multiplications by negative powers of t do not eat
// into it; the final result is truncated and its precision is honest either way.
constexpr std::int64_t kMargin = 64;

struct SeriesDomain {
    Field k;
    std::int64_t target;

    LaurentSeries from_int(std::int64_t c) const { return LaurentSeries::constant(Residue::from_int(k, c)); }
    LaurentSeries from_residue(const Residue &c) const { return LaurentSeries::constant(c); }
    LaurentSeries variable(const std::string &name) const
    {
        if (name == "t") {
            return LaurentSeries::t(k);
        }
        if (!k->variable.empty() && name == k->variable) {
            return LaurentSeries::constant(Residue::generator(k));
        }
        throw Error(ErrorKind::FieldLiteralError, "unknown symbol '" + name + "' over " + k->to_string());
    }
    LaurentSeries order(std::int64_t n) const { return LaurentSeries::zero(k, n); }
    LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b) const { return a + b; }
    LaurentSeries sub(const LaurentSeries &a, const LaurentSeries &b) const { return a - b; }
    LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b) const { return a * b; }
    LaurentSeries div(const LaurentSeries &a, const LaurentSeries &b) const
    {
        if (b.is_exact_zero()) {
            throw Error(ErrorKind::DivisionByZero, "division by the zero series");
        }
        return a * b.inverse(target);
    }
    LaurentSeries neg(const LaurentSeries &a) const { return -a; }
    LaurentSeries pow(const LaurentSeries &a, std::int64_t e) const
    {
        if (e < 0 && a.is_exact_zero()) {
            throw Error(ErrorKind::DivisionByZero, "negative power of the zero series");
        }
        return a.pow(e, e < 0 ? target : LaurentSeries::kExact);
    }
};

} // namespace

LaurentSeries parse_series(const std::string &text, const Field &k, std::int64_t precision)
{
    const Expr e = parse_expr(text);
    return evaluate(e, SeriesDomain{k, precision_add(precision, kMargin)}).truncated(precision);
}

} // namespace ramify
