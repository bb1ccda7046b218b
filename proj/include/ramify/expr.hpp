#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "ramify/error.hpp"
#include "ramify/field.hpp"

namespace ramify {

// Immutable expression tree over a residue field: integer and field constants,
// named variables, + - * /, negation and integer powers. The O(t^N) marker is
// only meaningful to the series evaluator.
class Expr {
public:
    enum class Op { Int, Const, Var, Add, Sub, Mul, Div, Neg, Pow, Order };

    static Expr integer(std::int64_t value);
    static Expr constant(const Residue &value);
    static Expr var(const std::string &name);
    static Expr order(std::int64_t exponent);

    Op op() const { return node_->op; }
    const Expr &lhs() const { return *node_->lhs; }
    const Expr &rhs() const { return *node_->rhs; }
    std::int64_t int_value() const { return node_->int_value; }
    const Residue &const_value() const { return *node_->const_value; }
    const std::string &name() const { return node_->name; }

    friend Expr operator+(const Expr &a, const Expr &b) { return binary(Op::Add, a, b); }
    friend Expr operator-(const Expr &a, const Expr &b) { return binary(Op::Sub, a, b); }
    friend Expr operator*(const Expr &a, const Expr &b) { return binary(Op::Mul, a, b); }
    friend Expr operator/(const Expr &a, const Expr &b) { return binary(Op::Div, a, b); }
    Expr operator-() const;
    Expr pow(std::int64_t exponent) const;

    std::set<std::string> variables() const;
    std::string to_string() const;

private:
    struct Node {
        Op op;
        std::shared_ptr<const Expr> lhs, rhs;
        std::int64_t int_value = 0;
        std::optional<Residue> const_value;
        std::string name;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Expr binary(Op op, const Expr &a, const Expr &b);

    std::shared_ptr<const Node> node_;
};

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ['^' ['+'|'-'] integer]
//   atom   := integer | identifier | '(' expr ')' | 'O' '(' 't' ['^' integer] ')'
// Whitespace is ignored. Throws ParseError with the byte offset on failure.
Expr parse_expr(const std::string &text);

// Folds an expression through a domain providing from_int, from_residue,
// variable, order, add, sub, mul, div, neg and pow.
template <class Domain>
auto evaluate(const Expr &e, const Domain &d) -> decltype(d.from_int(std::int64_t{}))
{
    switch (e.op()) {
        case Expr::Op::Int: return d.from_int(e.int_value());
        case Expr::Op::Const: return d.from_residue(e.const_value());
        case Expr::Op::Var: return d.variable(e.name());
        case Expr::Op::Order: return d.order(e.int_value());
        case Expr::Op::Add: return d.add(evaluate(e.lhs(), d), evaluate(e.rhs(), d));
        case Expr::Op::Sub: return d.sub(evaluate(e.lhs(), d), evaluate(e.rhs(), d));
        case Expr::Op::Mul: return d.mul(evaluate(e.lhs(), d), evaluate(e.rhs(), d));
        case Expr::Op::Div: return d.div(evaluate(e.lhs(), d), evaluate(e.rhs(), d));
        case Expr::Op::Neg: return d.neg(evaluate(e.lhs(), d));
        case Expr::Op::Pow: return d.pow(evaluate(e.lhs(), d), e.int_value());
    }
    throw Error(ErrorKind::ParseError, "corrupt expression node");
}

// Evaluates to a residue-field element. Free variables are looked up in `env`;
// the field's own generator symbol (w or u) evaluates to the generator.
Residue evaluate_residue(const Expr &e, const Field &k, const std::map<std::string, Residue> &env = {});

// Parses a residue-field literal such as "2", "w+1" or "u^2/(u+1)".
Residue parse_residue(const std::string &text, const Field &k);

// Upper bound on the total degree of the numerator of lhs - rhs when both are
// written as reduced-or-not fractions of polynomials in the free variables.
std::int64_t identity_degree_bound(const Expr &lhs, const Expr &rhs, const Field &k);

struct IdentityVerdict {
    bool pass = true;
    int trials = 0;
    std::map<std::string, Residue> witness; // set on failure
    std::int64_t degree_bound = 0;
    // Per-trial probability that a false identity survives, degree_bound / |k|
    // (capped at 1); zero when the field is infinite.
    double false_pass_bound = 0.0;
};

// Randomized polynomial identity test. Each trial draws a uniform point for the
// free variables, retrying up to max_attempts times when a denominator
// vanishes; a trial that never finds a valid point raises FieldTooSmall.
IdentityVerdict check_identity(const Expr &lhs, const Expr &rhs, const Field &k, int trials, std::uint64_t seed,
                               int max_attempts = 64);

} // namespace ramify
