#include "ramify/extension.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ramify/error.hpp"

namespace ramify {

std::string to_string(BestCase c)
{
    switch (c) {
        case BestCase::I: return "I";
        case BestCase::II: return "II";
        case BestCase::III: return "III";
    }
    return "?";
}

std::string to_string(Classification c)
{
    switch (c) {
        case Classification::Trivial: return "Trivial";
        case Classification::Unramified: return "Unramified";
        case Classification::Wild: return "Wild";
        case Classification::Ferocious: return "Ferocious";
        case Classification::Unknown: return "Unknown";
    }
    return "?";
}

BestForm reduce_to_best(const LaurentSeries &f)
{
    if (f.precision() < 1) {
        throw Error(ErrorKind::InsufficientPrecision,
                    "best-f reduction needs every coefficient below t^1 (precision >= 1), have "
                        + std::to_string(f.precision()));
    }
    const std::int64_t p = f.field()->p;
    BestForm out;
    out.f_best = f;
    for (;;) {
        const LaurentSeries::Term *target = nullptr;
        for (const auto &term : out.f_best.terms()) {
            if (term.first >= 0) {
                break;
            }
            if (term.first % p == 0 && term.second.is_pth_power()) {
                target = &term;
                break;
            }
        }
        if (target == nullptr) {
            break;
        }
        const LaurentSeries h = LaurentSeries::monomial(target->second.frobenius_root(), target->first / p);
        out.f_best -= h.frobenius() - h;
        out.reduction_log.push_back(h);
    }
    const auto v = out.f_best.valuation_if_known();
    if (!v || *v >= 0) {
        out.best_case = BestCase::I;
        out.swan = Value(0);
    } else {
        const std::int64_t n = -*v;
        out.swan = Value(n);
        out.best_case = n % p == 0 ? BestCase::III : BestCase::II;
    }
    return out;
}

namespace {

// Decides c in x^p - x (k) for k = F_p(u) when c is a Laurent polynomial in u.
Classification classify_rational_constant(const Residue &c)
{
    if (c.is_zero()) {
        return Classification::Trivial;
    }
    const std::uint32_t p = c.characteristic();
    const PolyFp &den = c.denominator();
    const auto shift = static_cast<std::int64_t>(den.degree());
    for (std::int64_t i = 0; i < shift; ++i) {
        if (den.coeff(static_cast<std::size_t>(i)) != 0) {
            return Classification::Unknown;
        }
    }
    // c = sum_j a_j u^(j - shift); a_j in F_p are their own p-th roots, so
    // a u^(pe) is equivalent to a u^e modulo x^p - x.
    std::map<std::int64_t, std::uint32_t> terms;
    const PolyFp &num = c.numerator();
    for (std::size_t j = 0; j <= static_cast<std::size_t>(num.degree()); ++j) {
        if (num.coeff(j) != 0) {
            terms[static_cast<std::int64_t>(j) - shift] = num.coeff(j);
        }
    }
    for (;;) {
        std::int64_t pick = 0;
        for (const auto &[e, a] : terms) {
            if (e != 0 && e % static_cast<std::int64_t>(p) == 0 && (pick == 0 || std::abs(e) > std::abs(pick))) {
                pick = e;
            }
        }
        if (pick == 0) {
            break;
        }
        const std::uint32_t a = terms[pick];
        terms.erase(pick);
        auto &slot = terms[pick / static_cast<std::int64_t>(p)];
        slot = (slot + a) % p;
        if (slot == 0) {
            terms.erase(pick / static_cast<std::int64_t>(p));
        }
    }
    // A surviving u^e with p not dividing e (e != 0) has a pole that no
    // x^p - x can produce; a nonzero constant of F_p is not in x^p - x (F_p).
    return terms.empty() ? Classification::Trivial : Classification::Unramified;
}

} // namespace

Classification classify(const BestForm &best)
{
    switch (best.best_case) {
        case BestCase::II: return Classification::Wild;
        case BestCase::III: return Classification::Ferocious;
        case BestCase::I: break;
    }
    const Residue c0 = best.f_best.coeff(0);
    if (c0.field()->is_finite()) {
        return c0.trace_to_prime() == 0 ? Classification::Trivial : Classification::Unramified;
    }
    return classify_rational_constant(c0);
}

ASExtension::ASExtension(LaurentSeries f, std::int64_t work_precision)
{
    if (!f.field()) {
        throw Error(ErrorKind::InvalidField, "extension needs a residue field");
    }
    auto data = std::make_shared<ExtensionData>();
    data->p = f.field()->p;
    data->k = f.field();
    data->f = std::move(f);
    data->work_precision = work_precision;
    data_ = std::move(data);
    best_ = reduce_to_best(data_->f);
    classification_ = classify(best_);
}

bool ASExtension::f_is_best() const
{
    return best_.reduction_log.empty();
}

ASExtension ASExtension::with_best_f() const
{
    return ASExtension(best_.f_best, data_->work_precision);
}

bool ASExtension::is_ramified() const
{
    return classification_ == Classification::Wild || classification_ == Classification::Ferocious;
}

ValueGroup ASExtension::gamma_L() const
{
    if (classification_ == Classification::Wild) {
        return ValueGroup::discrete(Value(1, p()));
    }
    return ValueGroup::discrete(Value(1));
}

Value ASExtension::v_alpha() const
{
    const auto v = data_->f.valuation_if_known();
    if (!v || *v >= 0) {
        return Value(0);
    }
    return Value(*v, p());
}

int ASExtension::e() const
{
    switch (classification_) {
        case Classification::Wild: return static_cast<int>(p());
        case Classification::Ferocious:
        case Classification::Unramified: return 1;
        default: break;
    }
    throw Error(ErrorKind::NotApplicable, "ramification index needs L to be a field of known type");
}

int ASExtension::f_inertia() const
{
    switch (classification_) {
        case Classification::Wild: return 1;
        case Classification::Ferocious:
        case Classification::Unramified: return static_cast<int>(p());
        default: break;
    }
    throw Error(ErrorKind::NotApplicable, "inertia degree needs L to be a field of known type");
}

// ---------------------------------------------------------------------------

LElement::LElement(std::shared_ptr<const ExtensionData> ext, std::vector<LaurentSeries> c)
    : ext_(std::move(ext)), c_(std::move(c))
{
}

LElement::LElement(const ASExtension &ext)
    : ext_(ext.data()), c_(ext.p(), LaurentSeries::zero(ext.field()))
{
}

LElement LElement::from_base(const ASExtension &ext, const LaurentSeries &c)
{
    LElement x(ext);
    x.c_[0] = c;
    return x;
}

LElement LElement::alpha(const ASExtension &ext)
{
    LElement x(ext);
    x.c_[1 % ext.p()] += LaurentSeries::one(ext.field());
    return x;
}

LElement LElement::from_coeffs(const ASExtension &ext, std::vector<LaurentSeries> coeffs)
{
    if (coeffs.size() != ext.p()) {
        throw Error(ErrorKind::ExtensionMismatch, "an element of L needs exactly p coefficients");
    }
    return LElement(ext.data(), std::move(coeffs));
}

void LElement::require_same(const LElement &o) const
{
    if (ext_ == o.ext_) {
        return;
    }
    if (ext_->p != o.ext_->p || !same_field(ext_->k, o.ext_->k) || !(ext_->f == o.ext_->f)) {
        throw Error(ErrorKind::ExtensionMismatch, "elements of different Artin-Schreier extensions");
    }
}

bool LElement::is_exact_zero() const
{
    for (const auto &c : c_) {
        if (!c.is_exact_zero()) {
            return false;
        }
    }
    return true;
}

bool LElement::is_zero_known() const
{
    for (const auto &c : c_) {
        if (!c.is_zero_known()) {
            return false;
        }
    }
    return true;
}

bool LElement::in_base() const
{
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero_known()) {
            return false;
        }
    }
    return true;
}

LElement LElement::operator-() const
{
    LElement r = *this;
    for (auto &c : r.c_) {
        c = -c;
    }
    return r;
}

LElement &LElement::operator+=(const LElement &o)
{
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

LElement &LElement::operator-=(const LElement &o)
{
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

LElement operator*(const LElement &a, const LElement &b)
{
    a.require_same(b);
    const std::size_t p = a.c_.size();
    std::vector<LaurentSeries> prod(2 * p - 1, LaurentSeries::zero(a.ext_->k));
    for (std::size_t i = 0; i < p; ++i) {
        if (a.c_[i].is_exact_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < p; ++j) {
            if (!b.c_[j].is_exact_zero()) {
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
    }
    // alpha^d = alpha^(d-p+1) + f alpha^(d-p) for d >= p.
    for (std::size_t d = 2 * p - 2; d >= p; --d) {
        if (prod[d].is_exact_zero()) {
            continue;
        }
        prod[d - p + 1] += prod[d];
        prod[d - p] += prod[d] * a.ext_->f;
    }
    prod.resize(p);
    return LElement(a.ext_, std::move(prod));
}

LElement operator/(const LElement &a, const LElement &b)
{
    return a * b.inverse();
}

LElement LElement::scaled(const LaurentSeries &c) const
{
    LElement r = *this;
    for (auto &x : r.c_) {
        x = x * c;
    }
    return r;
}

LElement LElement::pow(std::uint64_t e) const
{
    LElement result(ext_, std::vector<LaurentSeries>(c_.size(), LaurentSeries::zero(ext_->k)));
    result.c_[0] = LaurentSeries::one(ext_->k);
    LElement base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

LElement LElement::sigma(std::int64_t k) const
{
    const std::int64_t p = ext_->p;
    k = ((k % p) + p) % p;
    if (k == 0) {
        return *this;
    }
    // sum_i c_i (alpha + k)^i = sum_j alpha^j sum_{i>=j} c_i binom(i, j) k^(i-j).
    std::vector<std::vector<std::int64_t>> binom(c_.size(), std::vector<std::int64_t>(c_.size(), 0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) {
            binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % p;
        }
    }
    std::vector<LaurentSeries> out(c_.size(), LaurentSeries::zero(ext_->k));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) {
            continue;
        }
        std::int64_t kpow = 1;
        for (std::size_t j = i + 1; j-- > 0;) {
            const std::int64_t coef = (binom[i][j] * kpow) % p;
            if (coef != 0) {
                out[j] += c_[i].scaled(coef);
            }
            kpow = (kpow * k) % p;
        }
    }
    return LElement(ext_, std::move(out));
}

LaurentSeries LElement::norm() const
{
    LElement prod = *this;
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(ext_->p); ++i) {
        prod = prod * sigma(i);
    }
    if (!prod.in_base()) {
        throw std::logic_error("norm has a nonzero alpha-coefficient: " + prod.to_string());
    }
    return prod.c_[0];
}

std::vector<std::vector<LaurentSeries>> LElement::multiplication_matrix() const
{
    const std::size_t p = c_.size();
    std::vector<std::vector<LaurentSeries>> m(p, std::vector<LaurentSeries>(p, LaurentSeries::zero(ext_->k)));
    LElement column = *this;
    const LElement a = [&] {
        LElement r(ext_, std::vector<LaurentSeries>(p, LaurentSeries::zero(ext_->k)));
        r.c_[1 % p] += LaurentSeries::one(ext_->k);
        return r;
    }();
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            m[i][j] = column.c_[i];
        }
        column = column * a;
    }
    return m;
}

LaurentSeries LElement::trace() const
{
    const auto m = multiplication_matrix();
    LaurentSeries tr = LaurentSeries::zero(ext_->k);
    for (std::size_t i = 0; i < m.size(); ++i) {
        tr += m[i][i];
    }
    return tr;
}

Value LElement::v_L() const
{
    if (is_exact_zero()) {
        throw Error(ErrorKind::ZeroElement, "valuation of zero in L");
    }
    const LaurentSeries n = norm();
    const auto v = n.valuation_if_known();
    if (!v) {
        throw Error(ErrorKind::InsufficientPrecision,
                    "norm known only to vanish below t^" + std::to_string(n.precision()));
    }
    return Value(*v, static_cast<std::int64_t>(ext_->p));
}

Value LElement::v_L_floor() const
{
    const auto p = static_cast<std::int64_t>(ext_->p);
    const auto fv = ext_->f.valuation_if_known();
    const Value v_alpha = (!fv || *fv >= 0) ? Value(0) : Value(*fv, p);
    Value bound(LaurentSeries::kExact);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) {
            continue;
        }
        const Value vi = Value(c_[i].valuation_lower_bound()) + Value(static_cast<std::int64_t>(i)) * v_alpha;
        if (vi < bound) {
            bound = vi;
        }
    }
    const LaurentSeries n = norm();
    const Value from_norm(n.valuation_lower_bound(), p);
    return from_norm > bound ? from_norm : bound;
}

bool LElement::in_ideal(const Cut &ideal) const
{
    if (is_exact_zero()) {
        return true;
    }
    const LaurentSeries n = norm();
    if (const auto v = n.valuation_if_known()) {
        return ideal.contains(Value(*v, static_cast<std::int64_t>(ext_->p)));
    }
    if (ideal.contains(v_L_floor())) {
        return true;
    }
    throw Error(ErrorKind::InsufficientPrecision, "cannot decide membership in " + ideal.to_string()
                                                      + ": norm vanishes below t^" + std::to_string(n.precision()));
}

bool LElement::is_integral() const
{
    return in_ideal(Cut::closed(Value(0), ValueGroup::dense()));
}

LElement LElement::inverse() const
{
    if (is_exact_zero()) {
        throw Error(ErrorKind::ZeroElement, "inverse of zero in L");
    }
    LElement others(ext_, std::vector<LaurentSeries>(c_.size(), LaurentSeries::zero(ext_->k)));
    others.c_[0] = LaurentSeries::one(ext_->k);
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(ext_->p); ++i) {
        others = others * sigma(i);
    }
    const LElement full = others * *this;
    if (!full.in_base()) {
        throw std::logic_error("norm has a nonzero alpha-coefficient");
    }
    const LaurentSeries n = full.c_[0];
    if (n.is_zero_known()) {
        throw Error(ErrorKind::InsufficientPrecision, "norm of the element to invert has no known nonzero term");
    }
    const std::int64_t v = n.valuation();
    // Ask for the norm inverse to the work precision relative to its own size.
    return others.scaled(n.inverse(precision_add(ext_->work_precision, -v)));
}

LElement LElement::truncated(std::int64_t n) const
{
    LElement r = *this;
    for (auto &c : r.c_) {
        c = c.truncated(n);
    }
    return r;
}

bool LElement::agrees_with(const LElement &o) const
{
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].agrees_with(o.c_[i])) {
            return false;
        }
    }
    return true;
}

std::int64_t LElement::precision() const
{
    std::int64_t n = LaurentSeries::kExact;
    for (const auto &c : c_) {
        n = std::min(n, c.precision());
    }
    return n;
}

std::string LElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c_[i].to_string() << ")";
        if (i > 0) {
            os << "*alpha";
            if (i > 1) {
                os << "^" << i;
            }
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

DOperator::DOperator(LElement b) : b_(std::move(b))
{
    const int p = static_cast<int>(b_.p());
    inv_den_.reserve(static_cast<std::size_t>(p));
    inv_den_.push_back(b_); // slot 0 unused
    LElement b_pow = b_;
    for (int i = 1; i < p; ++i) {
        // b_pow = b^i
        LElement d = apply(i - 1, b_pow).sigma_minus_one();
        if (d.is_zero_known()) {
            throw Error(ErrorKind::DegenerateGenerator,
                        "(sigma - 1)(D_" + std::to_string(i - 1) + "(b^" + std::to_string(i) + ")) vanishes");
        }
        inv_den_.push_back(d.inverse());
        b_pow = b_pow * b_;
    }
}

LElement DOperator::apply(int i, const LElement &x) const
{
    if (i < 0 || i >= static_cast<int>(b_.p())) {
        throw Error(ErrorKind::NotApplicable, "D_i is defined for 0 <= i <= p - 1");
    }
    LElement y = x;
    for (int j = 1; j <= i; ++j) {
        y = y.sigma_minus_one() * inv_den_[static_cast<std::size_t>(j)];
    }
    return y;
}

std::vector<LElement> DOperator::apply_all(const LElement &x) const
{
    std::vector<LElement> out{x};
    for (int j = 1; j < static_cast<int>(b_.p()); ++j) {
        out.push_back(out.back().sigma_minus_one() * inv_den_[static_cast<std::size_t>(j)]);
    }
    return out;
}

LElement d_operator(int i, const LElement &b, const LElement &x)
{
    return DOperator(b).apply(i, x);
}

// ---------------------------------------------------------------------------

namespace {

void require_ramified_best(const ASExtension &ext, const char *what)
{
    if (!ext.is_ramified()) {
        throw Error(ErrorKind::NotApplicable, std::string(what) + " needs a wild or ferocious extension, have "
                                                  + to_string(ext.classification()));
    }
    if (!ext.f_is_best()) {
        throw Error(ErrorKind::NotApplicable, std::string(what) + " needs the extension presented by its best f");
    }
}

} // namespace

BasisDescription integral_basis(const ASExtension &ext)
{
    require_ramified_best(ext, "integral basis");
    const std::int64_t p = ext.p();
    const std::int64_t n = ext.n();
    const Field &k = ext.field();
    BasisDescription out;
    out.kind = ext.classification();
    if (out.kind == Classification::Wild) {
        LElement a = LElement::alpha(ext);
        LElement a_pow = LElement::from_base(ext, LaurentSeries::one(k));
        for (std::int64_t i = 0; i < p; ++i) {
            const Cut ideal = Cut::closed(Value(i * n, p), ext.gamma_K()).normalized();
            out.coefficient_ideals.push_back(ideal);
            out.generators.push_back(a_pow.scaled(LaurentSeries::monomial(Residue::one(k), ideal.value().num())));
            a_pow = a_pow * a;
        }
    } else {
        out.gamma = LaurentSeries::monomial(Residue::one(k), n / p);
        const LElement unit = LElement::alpha(ext).scaled(out.gamma);
        LElement u_pow = LElement::from_base(ext, LaurentSeries::one(k));
        for (std::int64_t i = 0; i < p; ++i) {
            out.generators.push_back(u_pow);
            u_pow = u_pow * unit;
        }
    }
    return out;
}

LElement boundary_generator(const ASExtension &ext)
{
    require_ramified_best(ext, "boundary generator");
    const std::int64_t p = ext.p();
    const std::int64_t n = ext.n();
    const Field &k = ext.field();
    if (ext.classification() == Classification::Ferocious) {
        return LElement::alpha(ext).scaled(LaurentSeries::monomial(Residue::one(k), n / p));
    }
    std::int64_t i0 = 1;
    while ((i0 * n + 1) % p != 0) {
        ++i0;
    }
    return LElement::alpha(ext).pow(static_cast<std::uint64_t>(i0))
        .scaled(LaurentSeries::monomial(Residue::one(k), ceil_div(i0 * n, p)));
}

LaurentSeries random_integral_series(const Field &k, Rng &rng, int degree)
{
    std::vector<LaurentSeries::Term> terms;
    for (int e = 0; e <= degree; ++e) {
        terms.emplace_back(e, Residue::random(k, rng));
    }
    return LaurentSeries::from_terms(k, std::move(terms));
}

LElement random_integral(const ASExtension &ext, Rng &rng, int degree)
{
    const BasisDescription basis = integral_basis(ext);
    LElement x(ext);
    for (const auto &g : basis.generators) {
        x += g.scaled(random_integral_series(ext.field(), rng, degree));
    }
    return x;
}

} // namespace ramify
