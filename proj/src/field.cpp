#include "ramify/field.hpp"
#include "ramify/value.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "ramify/error.hpp"
#include "ramify/expr.hpp"

namespace ramify {

namespace {

// Monic irreducible moduli (Conway polynomials) for the small fields the tools
// construct by order alone. Coefficients low degree first.
const std::map<std::uint64_t, std::pair<std::uint32_t, std::vector<std::uint32_t>>> &conway_table()
{
    static const std::map<std::uint64_t, std::pair<std::uint32_t, std::vector<std::uint32_t>>> table = {
        {4, {2, {1, 1, 1}}},
        {8, {2, {1, 1, 0, 1}}},
        {16, {2, {1, 1, 0, 0, 1}}},
        {32, {2, {1, 0, 1, 0, 0, 1}}},
        {64, {2, {1, 1, 0, 1, 1, 0, 1}}},
        {9, {3, {2, 2, 1}}},
        {27, {3, {1, 2, 0, 1}}},
        {81, {3, {2, 0, 0, 2, 1}}},
        {25, {5, {2, 4, 1}}},
        {125, {5, {3, 3, 0, 1}}},
        {49, {7, {3, 6, 1}}},
        {343, {7, {4, 0, 6, 1}}},
        {121, {11, {2, 7, 1}}},
        {169, {13, {2, 12, 1}}},
    };
    return table;
}

PolyFp poly_from(const std::vector<std::uint32_t> &c)
{
    return PolyFp(PolyFp::storage(c.begin(), c.end()));
}

// Evaluates a parsed modulus expression as a polynomial over F_p in `var`.
struct PolyDomain {
    std::uint32_t p;
    std::string var;

    PolyFp from_int(std::int64_t c) const
    {
        auto r = c % static_cast<std::int64_t>(p);
        return PolyFp::constant(static_cast<std::uint32_t>(r < 0 ? r + p : r));
    }
    PolyFp from_residue(const Residue &) const
    {
        throw Error(ErrorKind::InvalidField, "field constants are not allowed in a modulus");
    }
    PolyFp variable(const std::string &name) const
    {
        if (name != var) {
            throw Error(ErrorKind::InvalidField, "unknown variable '" + name + "' in modulus");
        }
        return PolyFp::monomial(1, 1);
    }
    PolyFp order(std::int64_t) const { throw Error(ErrorKind::InvalidField, "O() not allowed in a modulus"); }
    PolyFp add(const PolyFp &a, const PolyFp &b) const { return PolyFp::add(a, b, p); }
    PolyFp sub(const PolyFp &a, const PolyFp &b) const { return PolyFp::sub(a, b, p); }
    PolyFp mul(const PolyFp &a, const PolyFp &b) const { return PolyFp::mul(a, b, p); }
    PolyFp div(const PolyFp &, const PolyFp &) const
    {
        throw Error(ErrorKind::InvalidField, "division not allowed in a modulus");
    }
    PolyFp neg(const PolyFp &a) const { return PolyFp::neg(a, p); }
    PolyFp pow(const PolyFp &a, std::int64_t e) const
    {
        if (e < 0) {
            throw Error(ErrorKind::InvalidField, "negative power in a modulus");
        }
        PolyFp r = PolyFp::constant(1);
        for (std::int64_t i = 0; i < e; ++i) {
            r = PolyFp::mul(r, a, p);
        }
        return r;
    }
};

std::uint32_t reduce_int(std::int64_t c, std::uint32_t p)
{
    auto r = c % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

} // namespace

std::uint64_t FieldSpec::order() const
{
    return static_cast<std::uint64_t>(ipow(p, degree));
}

std::string FieldSpec::to_string() const
{
    if (kind == Kind::RationalFunction) {
        return "Fp(" + variable + "):" + std::to_string(p);
    }
    if (degree == 1) {
        return "Fp:" + std::to_string(p);
    }
    std::string mod = modulus.to_string(variable);
    mod.erase(std::remove(mod.begin(), mod.end(), ' '), mod.end());
    return "Fq:" + std::to_string(order()) + ":" + mod;
}

bool operator==(const FieldSpec &a, const FieldSpec &b)
{
    return a.p == b.p && a.kind == b.kind && a.degree == b.degree && a.modulus == b.modulus
           && a.variable == b.variable;
}

bool same_field(const Field &a, const Field &b)
{
    return a == b || (a && b && *a == *b);
}

Field prime_field(std::uint32_t p)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
    }
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->kind = FieldSpec::Kind::FiniteField;
    spec->degree = 1;
    spec->modulus = PolyFp::monomial(1, 1);
    spec->variable = "";
    return spec;
}

Field finite_field(std::uint32_t p, const PolyFp &modulus, std::string variable)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
    }
    if (modulus.degree() < 1 || modulus.leading() != 1) {
        throw Error(ErrorKind::InvalidField, "modulus must be monic of degree >= 1");
    }
    if (!PolyFp::is_irreducible(modulus, p)) {
        throw Error(ErrorKind::InvalidField, "modulus " + modulus.to_string(variable) + " is reducible over F_"
                                                 + std::to_string(p));
    }
    if (modulus.degree() == 1) {
        return prime_field(p);
    }
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->kind = FieldSpec::Kind::FiniteField;
    spec->degree = static_cast<unsigned>(modulus.degree());
    spec->modulus = modulus;
    spec->variable = std::move(variable);
    return spec;
}

Field rational_function_field(std::uint32_t p, std::string variable)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
    }
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->kind = FieldSpec::Kind::RationalFunction;
    spec->degree = 1;
    spec->variable = std::move(variable);
    return spec;
}

Field finite_field_of_order(std::uint64_t q)
{
    if (is_prime(q)) {
        return prime_field(static_cast<std::uint32_t>(q));
    }
    const auto &table = conway_table();
    auto it = table.find(q);
    if (it == table.end()) {
        throw Error(ErrorKind::InvalidField, "no tabulated modulus for q = " + std::to_string(q));
    }
    return finite_field(it->second.first, poly_from(it->second.second));
}

Field parse_field(const std::string &text)
{
    static const std::regex fp(R"(\s*Fp\s*:\s*(\d+)\s*)");
    static const std::regex fq(R"(\s*Fq\s*:\s*(\d+)\s*:\s*(.+))");
    static const std::regex fpu(R"(\s*Fp\s*\(\s*([A-Za-z_]\w*)\s*\)\s*:\s*(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, fp)) {
        return prime_field(static_cast<std::uint32_t>(std::stoul(m[1])));
    }
    if (std::regex_match(text, m, fpu)) {
        if (m[1] == "t") {
            throw Error(ErrorKind::InvalidField, "the indeterminate 't' is reserved for the series variable");
        }
        return rational_function_field(static_cast<std::uint32_t>(std::stoul(m[2])), m[1]);
    }
    if (std::regex_match(text, m, fq)) {
        const auto q = std::stoull(m[1]);
        std::uint32_t p = 0;
        unsigned degree = 0;
        for (std::uint32_t cand = 2; cand <= q; ++cand) {
            if (q % cand == 0) {
                p = cand;
                break;
            }
        }
        std::uint64_t rest = q;
        while (p != 0 && rest % p == 0) {
            rest /= p;
            ++degree;
        }
        if (p == 0 || rest != 1 || !is_prime(p)) {
            throw Error(ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power");
        }
        const std::string body = m[2];
        const auto expr = parse_expr(body);
        const auto vars = expr.variables();
        if (vars.size() > 1) {
            throw Error(ErrorKind::InvalidField, "modulus must use a single variable");
        }
        const std::string var = vars.empty() ? "w" : *vars.begin();
        if (var == "t") {
            throw Error(ErrorKind::InvalidField, "'t' is reserved for the series variable");
        }
        const auto modulus = evaluate(expr, PolyDomain{p, var});
        if (modulus.degree() != static_cast<int>(degree)) {
            throw Error(ErrorKind::InvalidField, "modulus degree does not match q");
        }
        return finite_field(p, PolyFp::monic(modulus, p), var);
    }
    throw Error(ErrorKind::InvalidField, "unrecognized field spec '" + text + "'");
}

// ---------------------------------------------------------------------------

Residue::Residue(Field k, PolyFp num, PolyFp den) : field_(std::move(k)), num_(std::move(num)), den_(std::move(den))
{
    canonicalize();
}

void Residue::canonicalize()
{
    const auto p = field_->p;
    if (field_->is_finite()) {
        num_ = PolyFp::mod(num_, field_->modulus, p);
        den_ = PolyFp{};
        return;
    }
    if (den_.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    }
    if (num_.is_zero()) {
        den_ = PolyFp::constant(1);
        return;
    }
    const auto g = PolyFp::gcd(num_, den_, p);
    if (g.degree() > 0) {
        num_ = PolyFp::divmod(num_, g, p).first;
        den_ = PolyFp::divmod(den_, g, p).first;
    }
    const auto lead = den_.leading();
    if (lead != 1) {
        const auto inv = mod_inverse(lead, p);
        num_ = PolyFp::scale(num_, inv, p);
        den_ = PolyFp::scale(den_, inv, p);
    }
}

void Residue::require_same(const Residue &o) const
{
    if (!same_field(field_, o.field_)) {
        throw Error(ErrorKind::FieldMismatch, "operands live in different residue fields");
    }
}

Residue Residue::zero(const Field &k)
{
    return Residue(k, PolyFp{}, PolyFp::constant(1));
}

Residue Residue::one(const Field &k)
{
    return Residue(k, PolyFp::constant(1), PolyFp::constant(1));
}

Residue Residue::from_int(const Field &k, std::int64_t c)
{
    return Residue(k, PolyFp::constant(reduce_int(c, k->p)), PolyFp::constant(1));
}

Residue Residue::generator(const Field &k)
{
    if (k->is_finite() && k->degree == 1) {
        throw Error(ErrorKind::FieldLiteralError, "prime field " + k->to_string() + " has no generator symbol");
    }
    return Residue(k, PolyFp::monomial(1, 1), PolyFp::constant(1));
}

Residue Residue::from_poly(const Field &k, const PolyFp &poly)
{
    return Residue(k, poly, PolyFp::constant(1));
}

Residue Residue::from_fraction(const Field &k, const PolyFp &num, const PolyFp &den)
{
    if (k->is_finite()) {
        return from_poly(k, num) / from_poly(k, den);
    }
    return Residue(k, num, den);
}

Residue Residue::random(const Field &k, Rng &rng)
{
    const auto p = k->p;
    if (k->is_finite()) {
        PolyFp::storage c(k->degree);
        for (auto &x : c) {
            x = static_cast<std::uint32_t>(rng.below(p));
        }
        return from_poly(k, PolyFp(c));
    }
    // Small-degree fractions keep rational-function arithmetic cheap.
    PolyFp::storage num(static_cast<std::size_t>(rng.between(1, 3)));
    for (auto &x : num) {
        x = static_cast<std::uint32_t>(rng.below(p));
    }
    PolyFp::storage den(static_cast<std::size_t>(rng.between(1, 2)));
    for (auto &x : den) {
        x = static_cast<std::uint32_t>(rng.below(p));
    }
    den.back() = 1;
    return Residue(k, PolyFp(num), PolyFp(den));
}

Residue Residue::random_nonzero(const Field &k, Rng &rng)
{
    for (;;) {
        auto r = random(k, rng);
        if (!r.is_zero()) {
            return r;
        }
    }
}

std::vector<Residue> Residue::elements(const Field &k)
{
    if (!k->is_finite()) {
        throw Error(ErrorKind::InvalidField, "cannot enumerate an infinite field");
    }
    std::vector<Residue> out;
    const auto q = k->order();
    out.reserve(q);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        PolyFp::storage c(k->degree);
        auto rest = idx;
        for (auto &x : c) {
            x = static_cast<std::uint32_t>(rest % k->p);
            rest /= k->p;
        }
        out.push_back(from_poly(k, PolyFp(c)));
    }
    return out;
}

bool Residue::is_one() const
{
    return num_.degree() == 0 && num_.leading() == 1 && (field_->is_finite() || den_.degree() == 0);
}

bool Residue::is_prime_constant() const
{
    return num_.degree() <= 0 && (field_->is_finite() || den_.degree() == 0);
}

std::uint32_t Residue::prime_constant() const
{
    if (!is_prime_constant()) {
        throw Error(ErrorKind::NotApplicable, "element is not in the prime field");
    }
    return num_.coeff(0);
}

Residue Residue::operator-() const
{
    Residue out = *this;
    out.num_ = PolyFp::neg(num_, field_->p);
    return out;
}

Residue &Residue::operator+=(const Residue &o)
{
    require_same(o);
    const auto p = field_->p;
    if (field_->is_finite()) {
        num_ = PolyFp::add(num_, o.num_, p);
        return *this;
    }
    if (den_ == o.den_) {
        num_ = PolyFp::add(num_, o.num_, p);
    } else {
        num_ = PolyFp::add(PolyFp::mul(num_, o.den_, p), PolyFp::mul(o.num_, den_, p), p);
        den_ = PolyFp::mul(den_, o.den_, p);
    }
    canonicalize();
    return *this;
}

Residue &Residue::operator-=(const Residue &o)
{
    return *this += -o;
}

Residue &Residue::operator*=(const Residue &o)
{
    require_same(o);
    const auto p = field_->p;
    if (field_->is_finite()) {
        num_ = PolyFp::mod(PolyFp::mul(num_, o.num_, p), field_->modulus, p);
        return *this;
    }
    num_ = PolyFp::mul(num_, o.num_, p);
    den_ = PolyFp::mul(den_, o.den_, p);
    canonicalize();
    return *this;
}

Residue &Residue::operator/=(const Residue &o)
{
    require_same(o);
    return *this *= o.inverse();
}

bool operator==(const Residue &a, const Residue &b)
{
    return same_field(a.field_, b.field_) && a.num_ == b.num_ && a.den_ == b.den_;
}

Residue Residue::scaled(std::int64_t c) const
{
    return *this * from_int(field_, c);
}

Residue Residue::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + field_->to_string());
    }
    const auto p = field_->p;
    if (!field_->is_finite()) {
        return Residue(field_, den_, num_);
    }
    // Extended Euclid against the modulus.
    PolyFp r0 = field_->modulus, r1 = num_;
    PolyFp s0, s1 = PolyFp::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = PolyFp::divmod(r0, r1, p);
        auto s = PolyFp::sub(s0, PolyFp::mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    return Residue(field_, PolyFp::scale(s0, mod_inverse(r0.leading(), p), p), PolyFp{});
}

Residue Residue::pow(std::int64_t e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    Residue result = one(field_);
    Residue base = *this;
    auto n = static_cast<std::uint64_t>(e);
    while (n > 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

bool Residue::is_pth_power() const
{
    if (is_zero()) {
        throw Error(ErrorKind::ZeroInput, "p-th power test on zero");
    }
    if (field_->is_finite()) {
        return true;
    }
    const auto p = field_->p;
    auto all_divisible = [p](const PolyFp &f) {
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            if (f.coeffs()[i] != 0 && i % p != 0) {
                return false;
            }
        }
        return true;
    };
    return all_divisible(num_) && all_divisible(den_);
}

Residue Residue::frobenius_root() const
{
    if (is_zero()) {
        return *this;
    }
    if (!is_pth_power()) {
        throw Error(ErrorKind::NotAPthPower, to_string() + " is not a p-th power");
    }
    const auto p = field_->p;
    if (field_->is_finite()) {
        // In F_q, x -> x^(q/p) inverts Frobenius.
        return pow(static_cast<std::int64_t>(field_->order() / p));
    }
    auto root = [p](const PolyFp &f) {
        PolyFp::storage c;
        for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
            c.push_back(f.coeffs()[i]);
        }
        return PolyFp(c);
    };
    return Residue(field_, root(num_), root(den_));
}

Residue Residue::derivative_u() const
{
    if (field_->is_finite()) {
        throw Error(ErrorKind::NotRationalFunctionField, "d/du requires a rational function field");
    }
    const auto p = field_->p;
    auto num = PolyFp::sub(PolyFp::mul(PolyFp::derivative(num_, p), den_, p),
                           PolyFp::mul(num_, PolyFp::derivative(den_, p), p), p);
    return Residue(field_, num, PolyFp::mul(den_, den_, p));
}

std::uint32_t Residue::trace_to_prime() const
{
    if (!field_->is_finite()) {
        throw Error(ErrorKind::NotApplicable, "absolute trace is defined for finite fields only");
    }
    Residue acc = zero(field_);
    Residue term = *this;
    for (unsigned i = 0; i < field_->degree; ++i) {
        acc += term;
        term = term.frobenius();
    }
    return acc.prime_constant();
}

std::string Residue::to_string() const
{
    if (field_->is_finite()) {
        return num_.to_string(field_->variable);
    }
    if (den_.degree() == 0) {
        return num_.to_string(field_->variable);
    }
    auto wrap = [](const PolyFp &f, const std::string &var) {
        auto s = f.to_string(var);
        const bool simple = f.coeffs().size() <= 1
                            || std::count_if(f.coeffs().begin(), f.coeffs().end(), [](auto c) { return c != 0; }) == 1;
        return simple && s.find('*') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_, field_->variable) + "/" + wrap(den_, field_->variable);
}

} // namespace ramify
