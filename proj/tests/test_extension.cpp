#include <numeric>

#include "ramify/selftest.hpp"
#include "test_util.hpp"

using namespace ramify;
using namespace ramify::testing;

namespace {

// Leibniz expansion; independent of the conjugate-product norm.
LaurentSeries determinant(const std::vector<std::vector<LaurentSeries>> &m, const Field &k)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentSeries total = LaurentSeries::zero(k);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        LaurentSeries term = LaurentSeries::one(k);
        for (std::size_t i = 0; i < n; ++i) {
            term = term * m[i][perm[i]];
        }
        total = inversions % 2 == 0 ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

bool same(const LElement &a, const LElement &b)
{
    return (a - b).is_zero_known();
}

const std::vector<GridCase> kRamified = {
    {"Fp:2", "t^-1"},      {"Fp:2", "t^-3"},      {"Fp:3", "t^-1"},       {"Fp:3", "t^-2"},
    {"Fp(u):2", "u*t^-2"}, {"Fp(u):3", "u*t^-3"}, {"Fp:5", "t^-2"},       {"Fq:4:w^2+w+1", "w*t^-3"},
    {"Fp:7", "t^-3"},      {"Fp:2", "t^-5 + t^-3"}, {"Fp(u):3", "u*t^-3 + t^-1"},
};

} // namespace

TEST(ReduceToBest, Examples)
{
    const auto a = reduce_to_best(series("Fp:2", "t^-4"));
    EXPECT_EQ(a.f_best, series("Fp:2", "t^-1"));
    EXPECT_EQ(a.reduction_log.size(), 2U);
    EXPECT_EQ(a.swan, Value(1));
    EXPECT_EQ(a.best_case, BestCase::II);

    const auto b = reduce_to_best(series("Fp(u):3", "u*t^-3"));
    EXPECT_EQ(b.best_case, BestCase::III);
    EXPECT_EQ(b.swan, Value(3));
    EXPECT_TRUE(b.reduction_log.empty());

    const auto c = reduce_to_best(series("Fp:3", "t^-6 + t^-2"));
    EXPECT_EQ(c.f_best, series("Fp:3", "2*t^-2"));

    // A p-th power coefficient over F_p(u) is reducible: u^2 t^-4 -> u t^-2.
    const auto d = reduce_to_best(series("Fp(u):2", "u^2*t^-4"));
    EXPECT_EQ(d.f_best, series("Fp(u):2", "u*t^-2"));
    EXPECT_EQ(d.best_case, BestCase::III);

    EXPECT_EQ(kind_of([] { reduce_to_best(series("Fp:2", "t^-4", 0)); }), ErrorKind::InsufficientPrecision);
}

TEST(ReduceToBest, LogReconstructsInput)
{
    Rng rng(11);
    for (const char *field : {"Fp:2", "Fp:3", "Fq:9:w^2+1", "Fp(u):2"}) {
        const Field k = parse_field(field);
        for (int s = 0; s < 30; ++s) {
            std::vector<LaurentSeries::Term> terms;
            for (std::int64_t e = -12; e <= 2; ++e) {
                if (rng.coin()) {
                    terms.emplace_back(e, Residue::random(k, rng));
                }
            }
            const LaurentSeries f = LaurentSeries::from_terms(k, terms, 6);
            const BestForm b = reduce_to_best(f);
            LaurentSeries rebuilt = b.f_best;
            for (const auto &h : b.reduction_log) {
                rebuilt += h.frobenius() - h;
            }
            EXPECT_EQ(rebuilt, f) << field << " " << f.to_string();
            // No reducible negative term remains.
            for (const auto &[e, c] : b.f_best.terms()) {
                if (e < 0 && e % static_cast<std::int64_t>(k->p) == 0) {
                    EXPECT_FALSE(c.is_pth_power()) << b.f_best.to_string();
                }
            }
        }
    }
}

TEST(ReduceToBest, MatchesExhaustiveSearchOverF4)
{
    // Independent of the p = 2, 3 acceptance sweep: every polar part over F_4
    // supported on t^-4..t^-1 against all h on t^-2..t^-1.
    const Field k = finite_field_of_order(4);
    const auto elems = Residue::elements(k);
    for (int code = 0; code < 256; ++code) {
        std::vector<LaurentSeries::Term> terms;
        int c = code;
        for (std::int64_t e = -4; e <= -1; ++e, c /= 4) {
            terms.emplace_back(e, elems[static_cast<std::size_t>(c % 4)]);
        }
        const LaurentSeries f = LaurentSeries::from_terms(k, terms, 1);
        EXPECT_EQ(reduce_to_best(f).swan, brute_force_swan(f, 2)) << f.to_string();
    }
}

TEST(ReduceToBest, ArtinSchreierShiftInvariance)
{
    Rng rng(5);
    for (const auto &c : kRamified) {
        const ASExtension base = extension(c.field, c.f);
        for (int s = 0; s < 10; ++s) {
            std::vector<LaurentSeries::Term> terms;
            for (std::int64_t e = -4; e <= 1; ++e) {
                terms.emplace_back(e, Residue::random(base.field(), rng));
            }
            const LaurentSeries a = LaurentSeries::from_terms(base.field(), terms);
            const ASExtension shifted(base.f() + a.frobenius() - a);
            EXPECT_EQ(shifted.swan(), base.swan()) << c.f << " shifted by " << a.to_string();
            EXPECT_EQ(shifted.classification(), base.classification());
        }
    }
}

TEST(Classify, ConstantTermCases)
{
    EXPECT_EQ(extension("Fp:2", "1").classification(), Classification::Unramified);
    EXPECT_EQ(extension("Fp:2", "0").classification(), Classification::Trivial);
    EXPECT_EQ(extension("Fp:3", "1 + t").classification(), Classification::Unramified);
    // Tr_{F4/F2}(w) = 1 and Tr(1) = 0.
    EXPECT_EQ(extension("Fq:4:w^2+w+1", "w").classification(), Classification::Unramified);
    EXPECT_EQ(extension("Fq:4:w^2+w+1", "1").classification(), Classification::Trivial);
    // u^3 - u = wp(u) over F_3(u).
    EXPECT_EQ(extension("Fp(u):3", "u^3 - u").classification(), Classification::Trivial);
    EXPECT_EQ(extension("Fp(u):3", "u").classification(), Classification::Unramified);
    EXPECT_EQ(extension("Fp(u):3", "1/(u+1)").classification(), Classification::Unknown);
    EXPECT_EQ(extension("Fp:2", "t^-4").classification(), Classification::Wild);
    EXPECT_EQ(extension("Fp(u):2", "u*t^-2").classification(), Classification::Ferocious);
}

TEST(Classify, RamificationNumbers)
{
    const ASExtension wild = extension("Fp:3", "t^-2");
    EXPECT_EQ(wild.e(), 3);
    EXPECT_EQ(wild.f_inertia(), 1);
    const ASExtension fer = extension("Fp(u):3", "u*t^-3");
    EXPECT_EQ(fer.e(), 1);
    EXPECT_EQ(fer.f_inertia(), 3);
    const ASExtension unr = extension("Fp:3", "1");
    EXPECT_EQ(unr.e(), 1);
    EXPECT_EQ(unr.f_inertia(), 3);
    for (const auto &e : {wild, fer, unr}) {
        EXPECT_EQ(e.e() * e.f_inertia() * e.defect(), 3);
    }
    EXPECT_EQ(kind_of([] { extension("Fp:3", "0").e(); }), ErrorKind::NotApplicable);
}

TEST(LElementTest, NormMatchesDeterminant)
{
    Rng rng(3);
    for (const auto &c : kRamified) {
        const ASExtension ext = extension(c.field, c.f).with_best_f();
        if (ext.p() > 5) {
            continue;
        }
        for (int s = 0; s < 6; ++s) {
            const LElement x = random_integral(ext, rng, 2);
            const LaurentSeries det = determinant(x.multiplication_matrix(), ext.field());
            EXPECT_TRUE((x.norm() - det).is_zero_known()) << c.f << ": " << x.to_string();
        }
    }
}

TEST(LElementTest, TraceIsSumOfConjugates)
{
    Rng rng(4);
    for (const auto &c : kRamified) {
        const ASExtension ext = extension(c.field, c.f).with_best_f();
        for (int s = 0; s < 5; ++s) {
            const LElement x = random_integral(ext, rng, 2);
            LElement sum(ext);
            for (std::uint32_t k = 0; k < ext.p(); ++k) {
                sum += x.sigma(k);
            }
            EXPECT_TRUE(sum.in_base());
            EXPECT_TRUE((sum.coeff(0) - x.trace()).is_zero_known());
        }
    }
}

TEST(LElementTest, GaloisActionProperties)
{
    Rng rng(6);
    for (const auto &c : kRamified) {
        const ASExtension ext = extension(c.field, c.f).with_best_f();
        const std::uint32_t p = ext.p();
        for (int s = 0; s < 5; ++s) {
            const LElement x = random_integral(ext, rng, 2);
            const LElement y = random_integral(ext, rng, 2);
            EXPECT_TRUE(same(x.sigma(p), x));
            EXPECT_TRUE(same(x.sigma(1).sigma(1), x.sigma(2)));
            EXPECT_TRUE(same((x * y).sigma(1), x.sigma(1) * y.sigma(1)));
            EXPECT_TRUE((x.sigma(1).norm() - x.norm()).is_zero_known());
            EXPECT_TRUE((x.sigma(1).trace() - x.trace()).is_zero_known());
            // (sigma - 1)^(p-1) = 1 + sigma + ... + sigma^(p-1) in F_p[G].
            LElement d = x;
            for (std::uint32_t i = 0; i + 1 < p; ++i) {
                d = d.sigma_minus_one();
            }
            EXPECT_TRUE(same(d, LElement::from_base(ext, x.trace())));
        }
    }
}

TEST(LElementTest, AlphaIdentities)
{
    for (const auto &c : kRamified) {
        const ASExtension ext = extension(c.field, c.f);
        const LElement a = LElement::alpha(ext);
        EXPECT_TRUE(same(a.pow(ext.p()) - a, LElement::from_base(ext, ext.f())));
        // N(alpha) = (-1)^(p+1) f, which is f in every characteristic.
        EXPECT_TRUE((a.norm() - ext.f()).is_zero_known()) << c.f;
        EXPECT_TRUE(same(a * a.inverse(), one(ext)));
        EXPECT_TRUE(same(a.sigma(1), a + one(ext)));
    }
}

TEST(LElementTest, ValuationIsMultiplicative)
{
    Rng rng(8);
    for (const auto &c : kRamified) {
        // Quotients over F_p(u) are costly at the default precision.
        const ASExtension ext(extension(c.field, c.f).best().f_best, 16);
        EXPECT_EQ(LElement::alpha(ext).v_L(), -ext.v0());
        for (int s = 0; s < 5; ++s) {
            const LElement x = random_integral(ext, rng, 2);
            const LElement y = random_integral(ext, rng, 2);
            if (x.is_exact_zero() || y.is_exact_zero()) {
                continue;
            }
            EXPECT_EQ((x * y).v_L(), x.v_L() + y.v_L());
            EXPECT_LE(x.v_L_floor(), x.v_L());
            EXPECT_TRUE(x.is_integral());
            EXPECT_TRUE(same((x / y) * y, x));
        }
    }
}

TEST(LElementTest, ShiftValuationIndependentOfPower)
{
    // v_L(sigma^i(b) - b) does not depend on 1 <= i <= p-1.
    Rng rng(9);
    for (const auto &c : kRamified) {
        const ASExtension ext = extension(c.field, c.f).with_best_f();
        for (int s = 0; s < 5; ++s) {
            const LElement b = random_integral(ext, rng, 2);
            const LElement d1 = b.sigma_minus_one();
            if (d1.is_exact_zero()) {
                continue;
            }
            for (std::uint32_t i = 2; i < ext.p(); ++i) {
                EXPECT_EQ((b.sigma(i) - b).v_L(), d1.v_L()) << c.f;
            }
        }
    }
}

TEST(LElementTest, BasisAndBoundaryGenerator)
{
    for (const auto &c : kRamified) {
        const ASExtension ext = extension(c.field, c.f).with_best_f();
        const auto basis = integral_basis(ext);
        ASSERT_EQ(basis.generators.size(), ext.p());
        for (const auto &g : basis.generators) {
            EXPECT_EQ(g.v_L() >= Value(0), true);
            EXPECT_TRUE(g.is_integral());
        }
        const LElement b = boundary_generator(ext);
        const Value shift = b.sigma_minus_one().v_L();
        if (ext.classification() == Classification::Wild) {
            EXPECT_EQ(b.v_L(), Value(1, ext.p())) << c.f;
            EXPECT_EQ(shift, Value(ext.n() + 1, ext.p())) << c.f;
        } else {
            EXPECT_EQ(b.v_L(), Value(0));
            EXPECT_EQ(shift, ext.v0());
        }
    }
    EXPECT_EQ(kind_of([] { integral_basis(extension("Fp:3", "1")); }), ErrorKind::NotApplicable);
    EXPECT_EQ(kind_of([] { boundary_generator(extension("Fp:2", "t^-4")); }), ErrorKind::NotApplicable);
}

TEST(DOperatorTest, ExplicitSmallCase)
{
    // p = 2, f = t^-1: b = t alpha is a uniformizer, D_1(x) = (sigma x - x) / t.
    const ASExtension ext = extension("Fp:2", "t^-1");
    const LElement b = boundary_generator(ext);
    EXPECT_TRUE(same(b, LElement::alpha(ext).scaled(series("Fp:2", "t"))));
    const DOperator d(b);
    const LElement x = LElement::alpha(ext).pow(3);
    EXPECT_TRUE(same(d.apply(1, x), x.sigma_minus_one().scaled(series("Fp:2", "t^-1"))));
    EXPECT_TRUE(same(d.apply(0, x), x));
}

TEST(DOperatorTest, RejectsDegenerateGenerator)
{
    const ASExtension ext = extension("Fp:3", "t^-1");
    EXPECT_EQ(kind_of([&] { DOperator d(one(ext)); }), ErrorKind::DegenerateGenerator);
}

TEST(LElementTest, ExtensionMismatch)
{
    const LElement a = LElement::alpha(extension("Fp:3", "t^-1"));
    const LElement b = LElement::alpha(extension("Fp:3", "t^-2"));
    EXPECT_EQ(kind_of([&] { (void)(a + b); }), ErrorKind::ExtensionMismatch);
    // The same f in a separately built extension is accepted.
    const LElement c = LElement::alpha(extension("Fp:3", "t^-1"));
    EXPECT_TRUE((a - c).is_exact_zero());
}
