#include "ramify/expr.hpp"
#include "ramify/value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ramify {

Expr Expr::integer(std::int64_t value)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Int;
    n->int_value = value;
    return Expr(std::move(n));
}

Expr Expr::constant(const Residue &value)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->const_value = value;
    return Expr(std::move(n));
}

Expr Expr::var(const std::string &name)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->name = name;
    return Expr(std::move(n));
}

Expr Expr::order(std::int64_t exponent)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Order;
    n->int_value = exponent;
    return Expr(std::move(n));
}

Expr Expr::binary(Op op, const Expr &a, const Expr &b)
{
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::make_shared<const Expr>(a);
    n->rhs = std::make_shared<const Expr>(b);
    return Expr(std::move(n));
}

Expr Expr::operator-() const
{
    auto n = std::make_shared<Node>();
    n->op = Op::Neg;
    n->lhs = std::make_shared<const Expr>(*this);
    return Expr(std::move(n));
}

Expr Expr::pow(std::int64_t exponent) const
{
    auto n = std::make_shared<Node>();
    n->op = Op::Pow;
    n->lhs = std::make_shared<const Expr>(*this);
    n->int_value = exponent;
    return Expr(std::move(n));
}

std::set<std::string> Expr::variables() const
{
    std::set<std::string> out;
    switch (op()) {
        case Op::Var: out.insert(name()); break;
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div: {
            out = lhs().variables();
            auto r = rhs().variables();
            out.insert(r.begin(), r.end());
            break;
        }
        case Op::Neg:
        case Op::Pow: out = lhs().variables(); break;
        default: break;
    }
    return out;
}

std::string Expr::to_string() const
{
    switch (op()) {
        case Op::Int: return std::to_string(int_value());
        case Op::Const: return "(" + const_value().to_string() + ")";
        case Op::Var: return name();
        case Op::Order: return "O(t^" + std::to_string(int_value()) + ")";
        case Op::Add: return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
        case Op::Sub: return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
        case Op::Mul: return lhs().to_string() + "*" + rhs().to_string();
        case Op::Div: return lhs().to_string() + "/" + rhs().to_string();
        case Op::Neg: return "-" + lhs().to_string();
        case Op::Pow: return lhs().to_string() + "^" + std::to_string(int_value());
    }
    return "?";
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string &text) : s_(text) {}

    Expr parse()
    {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) {
            throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        }
        return e;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
    }

    std::int64_t integer_literal()
    {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            throw ParseError(start, "expected integer");
        }
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc()) {
            throw ParseError(start, "integer out of range");
        }
        return v;
    }

    std::int64_t signed_integer()
    {
        if (accept('-')) {
            return -integer_literal();
        }
        accept('+');
        return integer_literal();
    }

    Expr expr()
    {
        Expr acc = Expr::integer(0);
        if (accept('-')) {
            acc = -term();
        } else {
            accept('+');
            acc = term();
        }
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Expr term()
    {
        Expr acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                acc = acc / factor();
            } else {
                return acc;
            }
        }
    }

    Expr factor()
    {
        if (accept('-')) {
            return -factor();
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        if (accept('^')) {
            return base.pow(signed_integer());
        }
        return base;
    }

    Expr atom()
    {
        skip();
        if (pos_ >= s_.size()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Expr::integer(integer_literal());
        }
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            std::string name = s_.substr(start, pos_ - start);
            const auto save = pos_;
            if (name == "O" && accept('(')) {
                skip();
                if (!(pos_ < s_.size() && s_[pos_] == 't')) {
                    throw ParseError(pos_, "expected 't' inside O()");
                }
                ++pos_;
                std::int64_t e = 1;
                if (accept('^')) {
                    e = signed_integer();
                }
                expect(')');
                return Expr::order(e);
            }
            pos_ = save;
            return Expr::var(name);
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

struct ResidueDomain {
    const Field &k;
    const std::map<std::string, Residue> &env;

    Residue from_int(std::int64_t c) const { return Residue::from_int(k, c); }
    Residue from_residue(const Residue &r) const
    {
        if (!same_field(r.field(), k)) {
            throw Error(ErrorKind::FieldMismatch, "constant from a different field");
        }
        return r;
    }
    Residue variable(const std::string &name) const
    {
        if (auto it = env.find(name); it != env.end()) {
            return it->second;
        }
        if (!k->variable.empty() && name == k->variable) {
            return Residue::generator(k);
        }
        throw Error(ErrorKind::FieldLiteralError, "unknown symbol '" + name + "' in " + k->to_string());
    }
    Residue order(std::int64_t) const
    {
        throw Error(ErrorKind::FieldLiteralError, "O() is not a field element");
    }
    Residue add(const Residue &a, const Residue &b) const { return a + b; }
    Residue sub(const Residue &a, const Residue &b) const { return a - b; }
    Residue mul(const Residue &a, const Residue &b) const { return a * b; }
    Residue div(const Residue &a, const Residue &b) const { return a / b; }
    Residue neg(const Residue &a) const { return -a; }
    Residue pow(const Residue &a, std::int64_t e) const { return a.pow(e); }
};

using Monomial = std::map<std::string, std::int64_t>;

// Degree bounds for numerator and denominator of an expression written as one
// fraction. When a denominator (or numerator) is known to be a monomial its
// exponents are kept, so sums can be taken over the lcm of denominators
// rather than their product.
struct DegreeInfo {
    std::int64_t num = 0;
    std::int64_t den = 0;
    std::optional<Monomial> num_mono = Monomial{};
    std::optional<Monomial> den_mono = Monomial{};
};

std::int64_t total_degree(const Monomial &m)
{
    std::int64_t d = 0;
    for (const auto &[v, e] : m) {
        d += e;
    }
    return d;
}

std::optional<Monomial> mono_product(const std::optional<Monomial> &a, const std::optional<Monomial> &b)
{
    if (!a || !b) {
        return std::nullopt;
    }
    Monomial out = *a;
    for (const auto &[v, e] : *b) {
        out[v] += e;
    }
    return out;
}

std::optional<Monomial> mono_power(const std::optional<Monomial> &a, std::int64_t k)
{
    if (!a) {
        return std::nullopt;
    }
    Monomial out = *a;
    for (auto &[v, e] : out) {
        e = checked_mul(e, k);
    }
    return out;
}

DegreeInfo degree_of(const Expr &e, const std::set<std::string> &free)
{
    switch (e.op()) {
        case Expr::Op::Int:
        case Expr::Op::Const:
        case Expr::Op::Order: return {};
        case Expr::Op::Var: {
            if (!free.count(e.name())) {
                return {};
            }
            return {1, 0, Monomial{{e.name(), 1}}, Monomial{}};
        }
        case Expr::Op::Neg: return degree_of(e.lhs(), free);
        case Expr::Op::Add:
        case Expr::Op::Sub: {
            const auto a = degree_of(e.lhs(), free);
            const auto b = degree_of(e.rhs(), free);
            if (a.den_mono && b.den_mono) {
                Monomial lcm = *a.den_mono;
                for (const auto &[v, x] : *b.den_mono) {
                    lcm[v] = std::max(lcm[v], x);
                }
                const std::int64_t d = total_degree(lcm);
                return {std::max(a.num + d - a.den, b.num + d - b.den), d, std::nullopt, lcm};
            }
            return {std::max(a.num + b.den, b.num + a.den), a.den + b.den, std::nullopt, std::nullopt};
        }
        case Expr::Op::Mul: {
            const auto a = degree_of(e.lhs(), free);
            const auto b = degree_of(e.rhs(), free);
            return {a.num + b.num, a.den + b.den, mono_product(a.num_mono, b.num_mono),
                    mono_product(a.den_mono, b.den_mono)};
        }
        case Expr::Op::Div: {
            const auto a = degree_of(e.lhs(), free);
            const auto b = degree_of(e.rhs(), free);
            return {a.num + b.den, a.den + b.num, mono_product(a.num_mono, b.den_mono),
                    mono_product(a.den_mono, b.num_mono)};
        }
        case Expr::Op::Pow: {
            const auto a = degree_of(e.lhs(), free);
            const auto k = e.int_value();
            if (k >= 0) {
                return {a.num * k, a.den * k, mono_power(a.num_mono, k), mono_power(a.den_mono, k)};
            }
            return {a.den * -k, a.num * -k, mono_power(a.den_mono, -k), mono_power(a.num_mono, -k)};
        }
    }
    return {};
}

std::set<std::string> free_variables(const Expr &lhs, const Expr &rhs, const Field &k)
{
    auto vars = lhs.variables();
    auto more = rhs.variables();
    vars.insert(more.begin(), more.end());
    if (!k->variable.empty()) {
        vars.erase(k->variable);
    }
    return vars;
}

} // namespace

Expr parse_expr(const std::string &text)
{
    return Parser(text).parse();
}

Residue evaluate_residue(const Expr &e, const Field &k, const std::map<std::string, Residue> &env)
{
    return evaluate(e, ResidueDomain{k, env});
}

Residue parse_residue(const std::string &text, const Field &k)
{
    const auto e = parse_expr(text);
    try {
        return evaluate_residue(e, k);
    } catch (const Error &err) {
        if (err.kind() == ErrorKind::FieldLiteralError) {
            throw;
        }
        throw Error(ErrorKind::FieldLiteralError, "'" + text + "': " + err.what());
    }
}

std::int64_t identity_degree_bound(const Expr &lhs, const Expr &rhs, const Field &k)
{
    const auto free = free_variables(lhs, rhs, k);
    return degree_of(lhs - rhs, free).num;
}

IdentityVerdict check_identity(const Expr &lhs, const Expr &rhs, const Field &k, int trials, std::uint64_t seed,
                               int max_attempts)
{
    if (trials < 1) {
        throw Error(ErrorKind::InvalidSpec, "check_identity needs at least one trial");
    }
    const auto free = free_variables(lhs, rhs, k);
    IdentityVerdict verdict;
    verdict.degree_bound = identity_degree_bound(lhs, rhs, k);
    if (k->is_finite()) {
        verdict.false_pass_bound =
            std::min(1.0, static_cast<double>(verdict.degree_bound) / static_cast<double>(k->order()));
    }
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        bool evaluated = false;
        for (int attempt = 0; attempt < max_attempts && !evaluated; ++attempt) {
            std::map<std::string, Residue> env;
            for (const auto &v : free) {
                env.emplace(v, Residue::random(k, rng));
            }
            Residue a, b;
            try {
                a = evaluate_residue(lhs, k, env);
                b = evaluate_residue(rhs, k, env);
            } catch (const Error &err) {
                if (err.kind() == ErrorKind::DivisionByZero) {
                    continue;
                }
                throw;
            }
            evaluated = true;
            ++verdict.trials;
            if (!(a == b)) {
                verdict.pass = false;
                verdict.witness = std::move(env);
                return verdict;
            }
        }
        if (!evaluated) {
            throw Error(ErrorKind::FieldTooSmall, "no evaluation point avoiding denominator zeros found in "
                                                      + std::to_string(max_attempts) + " attempts over "
                                                      + k->to_string());
        }
    }
    return verdict;
}

} // namespace ramify
