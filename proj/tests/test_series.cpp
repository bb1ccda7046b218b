#include <gtest/gtest.h>

#include "ramify/cut.hpp"
#include "ramify/error.hpp"
#include "ramify/series.hpp"

using namespace ramify;

namespace {

template <class F>
ErrorKind kind_of(F &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Overflow;
}

LaurentSeries random_series(const Field &k, Rng &rng, std::int64_t lo, std::int64_t hi, std::int64_t precision)
{
    std::vector<LaurentSeries::Term> terms;
    for (std::int64_t e = lo; e <= hi; ++e) {
        if (rng.coin()) {
            terms.emplace_back(e, Residue::random(k, rng));
        }
    }
    return LaurentSeries::from_terms(k, terms, precision);
}

const ValueGroup Z = ValueGroup::discrete(Value(1));
const ValueGroup Q = ValueGroup::dense();

} // namespace

TEST(Series, ArithmeticExamples)
{
    const Field k = prime_field(3);
    const auto t = LaurentSeries::t(k);
    EXPECT_EQ(t.pow(-1) * t, LaurentSeries::one(k));
    const auto a = parse_series("t^-3 + t^-1", k, LaurentSeries::kExact);
    const auto b = parse_series("-t^-3", k, LaurentSeries::kExact);
    EXPECT_EQ(a + b, parse_series("t^-1", k, LaurentSeries::kExact));
    // (1 + t)(1 + 2t) = 1 + 3t + 2t^2 = 1 + 2t^2 over F_3.
    const auto x = parse_series("1 + t", k, 5);
    const auto y = parse_series("1 + 2*t", k, 4);
    const auto prod = x * y;
    EXPECT_EQ(prod.precision(), 4);
    EXPECT_EQ(prod, parse_series("1 + 2*t^2", k, 4));
}

TEST(Series, MultiplicationPrecision)
{
    const Field k = prime_field(5);
    const auto a = parse_series("t^-2 + 1", k, 3);
    const auto b = parse_series("t + t^2", k, 6);
    // min(3 + 1, 6 - 2) = 4
    EXPECT_EQ((a * b).precision(), 4);
    EXPECT_EQ((a * LaurentSeries::zero(k)).is_exact_zero(), true);
    EXPECT_EQ((a * LaurentSeries::zero(k, 2)).precision(), 0);
}

TEST(Series, Inverse)
{
    const Field k2 = prime_field(2);
    EXPECT_EQ(LaurentSeries::t(k2).inverse(), parse_series("t^-1", k2, LaurentSeries::kExact));
    const auto inv = parse_series("1 + t", k2, LaurentSeries::kExact).inverse(4);
    EXPECT_EQ(inv, parse_series("1 + t + t^2 + t^3", k2, 4));
    EXPECT_EQ(kind_of([&] { LaurentSeries::zero(k2, 5).inverse(10); }), ErrorKind::InsufficientPrecision);
    EXPECT_EQ(kind_of([&] { LaurentSeries::zero(k2).inverse(10); }), ErrorKind::ZeroSeries);
    Rng rng(3);
    const Field k = parse_field("Fq:9:w^2+1");
    for (int i = 0; i < 30; ++i) {
        auto a = random_series(k, rng, -3, 6, 8);
        if (a.is_zero_known()) {
            continue;
        }
        const auto v = a.valuation();
        const auto inv_a = a.inverse(5);
        EXPECT_EQ(inv_a.precision(), std::min<std::int64_t>(5, 8 - 2 * v));
        const auto prod = a * inv_a;
        EXPECT_TRUE(prod.agrees_with(LaurentSeries::one(k)));
        EXPECT_GE(prod.precision(), std::min<std::int64_t>(5, 8 - 2 * v) + v);
    }
}

TEST(Series, Valuation)
{
    const Field k2u = parse_field("Fp(u):2");
    EXPECT_EQ(parse_series("t^-3 + t^-1", prime_field(3), 4).valuation(), -3);
    EXPECT_EQ(parse_series("u/t^2", k2u, 4).valuation(), -2);
    EXPECT_EQ(kind_of([&] { LaurentSeries::zero(k2u, 3).valuation(); }), ErrorKind::InsufficientPrecision);
    EXPECT_EQ(parse_series("t^5", k2u, 3).valuation_lower_bound(), 3);
}

TEST(Series, UltrametricAndMultiplicativeValuation)
{
    Rng rng(21);
    for (const char *text : {"Fp:2", "Fp:3", "Fq:4:w^2+w+1", "Fp(u):3"}) {
        const Field k = parse_field(text);
        for (int i = 0; i < 60; ++i) {
            const auto a = random_series(k, rng, -4, 4, 10);
            const auto b = random_series(k, rng, -4, 4, 10);
            if (a.is_zero_known() || b.is_zero_known()) {
                continue;
            }
            const auto va = a.valuation();
            const auto vb = b.valuation();
            EXPECT_EQ((a * b).valuation(), va + vb);
            const auto sum = a + b;
            if (!sum.is_zero_known()) {
                EXPECT_GE(sum.valuation(), std::min(va, vb));
                if (va != vb) {
                    EXPECT_EQ(sum.valuation(), std::min(va, vb));
                }
            }
        }
    }
}

TEST(Series, Derivatives)
{
    const Field k3 = prime_field(3);
    // t d/dt (t^-2 + t^3) = -2 t^-2 + 3 t^3 = t^-2 over F_3.
    EXPECT_EQ(parse_series("t^-2 + t^3", k3, LaurentSeries::kExact).t_derivative(),
              parse_series("t^-2", k3, LaurentSeries::kExact));
    const Field ku = parse_field("Fp(u):2");
    EXPECT_EQ(parse_series("u*t^-2 + u^2*t", ku, 6).u_derivative(), parse_series("t^-2", ku, 6));
    EXPECT_EQ(kind_of([&] { LaurentSeries::one(k3).u_derivative(); }), ErrorKind::NotRationalFunctionField);
}

TEST(Series, Frobenius)
{
    const Field k = parse_field("Fq:4:w^2+w+1");
    const auto a = parse_series("w*t^-1 + t", k, 3);
    const auto f = a.frobenius();
    EXPECT_EQ(f.precision(), 6);
    EXPECT_TRUE(f.agrees_with(a * a));
}

TEST(Series, ParseExamples)
{
    const Field ku = parse_field("Fp(u):2");
    const auto s = parse_series("t^-4 + u*t^-2", ku, 8);
    ASSERT_EQ(s.terms().size(), 2U);
    EXPECT_EQ(s.terms()[0].first, -4);
    EXPECT_EQ(s.terms()[1].first, -2);
    const auto s3 = parse_series("2*t^-1", prime_field(3), 8);
    EXPECT_EQ(s3.coeff(-1), Residue::from_int(prime_field(3), 2));
    try {
        parse_series("t^", ku, 8);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.offset(), 2U);
    }
    EXPECT_EQ(kind_of([&] { parse_series("w*t", ku, 8); }), ErrorKind::FieldLiteralError);
    // Rational input expands to the requested precision; O() caps it.
    const auto r = parse_series("1/(1 + t)", prime_field(2), 4);
    EXPECT_EQ(r, parse_series("1 + t + t^2 + t^3", prime_field(2), 4));
    EXPECT_EQ(parse_series("1 + t + O(t^2)", prime_field(2), 8).precision(), 2);
}

TEST(Series, PrintParseRoundTrip)
{
    Rng rng(9);
    for (const char *text : {"Fp:3", "Fq:9:w^2+1", "Fp(u):2", "Fp(u):5"}) {
        const Field k = parse_field(text);
        for (int i = 0; i < 40; ++i) {
            const auto precision = rng.coin() ? LaurentSeries::kExact : rng.between(-2, 9);
            const auto a = random_series(k, rng, -5, 6, precision);
            const auto back = parse_series(a.to_string(), k, precision);
            EXPECT_EQ(back, a) << a.to_string();
        }
    }
}

TEST(Cut, ProductExamples)
{
    EXPECT_EQ(Cut::closed(Value(1, 2), Q) * Cut::closed(Value(1, 2), Q), Cut::closed(Value(1), Q));
    EXPECT_EQ(Cut::open(Value(3, 4), Q) * Cut::closed(Value(1, 4), Q), Cut::open(Value(1), Q));
    const Cut c = Cut::open(Value(2), Z) * Cut::closed(Value(0), Z);
    EXPECT_EQ(c.bound(), Bound::Closed);
    EXPECT_EQ(c.value(), Value(3));
    EXPECT_EQ(kind_of([] { (void)(Cut::closed(Value(1), Z) * Cut::closed(Value(1), Q)); }), ErrorKind::AmbientMismatch);
}

TEST(Cut, PowExamples)
{
    EXPECT_EQ(Cut::closed(Value(1, 2), Q).pow(2), Cut::closed(Value(1), Q));
    EXPECT_EQ(Cut::open(Value(1, 2), Q).pow(3), Cut::open(Value(3, 2), Q));
    const ValueGroup half = ValueGroup::discrete(Value(1, 2));
    EXPECT_EQ(Cut::closed(Value(2, 2), half).pow(1), Cut::closed(Value(1), half));
    EXPECT_EQ(Cut::open(Value(1, 3), ValueGroup::z_one_over_p(3)).pow(-2),
              Cut::open(Value(-2, 3), ValueGroup::z_one_over_p(3)));
    const Cut d = Cut::closed(Value(2, 3), ValueGroup::discrete(Value(1, 3)));
    EXPECT_EQ(d * d.inverse(), Cut::closed(Value(0), d.ambient()));
}

TEST(Cut, Principality)
{
    EXPECT_TRUE(Cut::closed(Value(1), Z).is_principal());
    EXPECT_FALSE(Cut::open(Value(3, 2), ValueGroup::z_one_over_p(3)).is_principal());
    EXPECT_FALSE(Cut::closed(Value(1, 2), Z).is_principal());
    EXPECT_TRUE(Cut::open(Value(2), Z).is_principal());
    EXPECT_FALSE(Cut::closed(Value(1, 2), ValueGroup::z_one_over_p(3)).is_principal());
    EXPECT_TRUE(Cut::closed(Value(1, 9), ValueGroup::z_one_over_p(3)).is_principal());
}

TEST(Cut, Normalization)
{
    const Cut a = Cut::open(Value(2, 3), Z).normalized();
    EXPECT_EQ(a.value(), Value(1));
    EXPECT_EQ(a.bound(), Bound::Closed);
    const Cut b = Cut::closed(Value(1, 2), ValueGroup::z_one_over_p(3)).normalized();
    EXPECT_EQ(b.bound(), Bound::Open);
    EXPECT_EQ(b.value(), Value(1, 2));
}

TEST(Cut, AlgebraicLaws)
{
    Rng rng(77);
    const std::vector<ValueGroup> groups = {Z, ValueGroup::discrete(Value(1, 3)), ValueGroup::z_one_over_p(2), Q};
    for (const auto &g : groups) {
        auto random_cut = [&] {
            return Cut(Value(rng.between(-12, 12), rng.between(1, 6)), rng.coin() ? Bound::Closed : Bound::Open, g);
        };
        const Cut one = Cut::closed(Value(0), g);
        for (int i = 0; i < 200; ++i) {
            const Cut a = random_cut();
            const Cut b = random_cut();
            const Cut c = random_cut();
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * one, a);
            EXPECT_EQ(a.normalized().normalized(), a.normalized());
            const Cut n = a.normalized();
            EXPECT_EQ(n.value(), a.normalized().value());
            EXPECT_EQ(n.bound(), a.normalized().bound());
            if (g.kind() == ValueGroup::Kind::DiscreteZ && g.contains(a.value())) {
                EXPECT_TRUE(a.is_principal());
            }
        }
    }
}
