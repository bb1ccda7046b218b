#include "ramify/tower.hpp"
#include "test_util.hpp"

using namespace ramify;
using namespace ramify::testing;

namespace {

TowerSpec spec(std::int64_t p, std::int64_t n, std::uint64_t q, int depth = 5)
{
    TowerSpec s;
    s.p = p;
    s.n = n;
    s.q = q;
    s.depth = depth;
    return s;
}

const ValueGroup Zp3 = ValueGroup::z_one_over_p(3);

// Evaluates a step-identity side exactly with y = t and z' a field constant.
// Every denominator is a power of y, so the arithmetic never truncates.
struct LaurentInY {
    Field k;
    Residue zp;
    LaurentSeries from_int(std::int64_t c) const { return LaurentSeries::constant(Residue::from_int(k, c)); }
    LaurentSeries from_residue(const Residue &c) const { return LaurentSeries::constant(c); }
    LaurentSeries variable(const std::string &name) const
    {
        return name == "y" ? LaurentSeries::t(k) : LaurentSeries::constant(zp);
    }
    LaurentSeries order(std::int64_t) const { throw std::logic_error("no O() here"); }
    LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b) const { return a + b; }
    LaurentSeries sub(const LaurentSeries &a, const LaurentSeries &b) const { return a - b; }
    LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b) const { return a * b; }
    LaurentSeries div(const LaurentSeries &a, const LaurentSeries &b) const
    {
        return a * b.inverse(LaurentSeries::kExact);
    }
    LaurentSeries neg(const LaurentSeries &a) const { return -a; }
    LaurentSeries pow(const LaurentSeries &a, std::int64_t e) const { return a.pow(e, LaurentSeries::kExact); }
};

} // namespace

TEST(TowerSequence, Examples)
{
    const auto levels = tower_sequence(spec(3, 2, 9, 2));
    ASSERT_EQ(levels.size(), 3U);
    EXPECT_EQ(levels[0].n_i, 2);
    EXPECT_EQ(levels[1].n_i, 5);
    EXPECT_EQ(levels[2].n_i, 14);
    EXPECT_EQ(levels[1].neg_v_f, Value(5, 3));
    EXPECT_EQ(levels[1].neg_v_f, Value(2) - Value(1, 2) + Value(1, 6));

    const auto two = tower_sequence(spec(2, 3, 4, 1));
    EXPECT_EQ(two[1].n_i, 5);
    EXPECT_EQ(two[0].v_y, Value(1, 2));
    EXPECT_EQ(two[0].v_x, Value(1));
}

TEST(TowerSequence, ClosedFormsAgree)
{
    for (const auto &s : {spec(2, 3, 4, 10), spec(2, 5, 8, 10), spec(3, 4, 27, 10), spec(5, 2, 25, 8),
                          spec(7, 3, 49, 6)}) {
        for (const auto &l : tower_sequence(s)) {
            EXPECT_EQ(l.n_i, tower_n_closed_form(s.p, s.n, l.index));
            EXPECT_EQ(l.neg_v_f, tower_neg_v_f_closed_form(s.p, s.n, l.index));
            EXPECT_EQ(l.v_x, Value(s.p) * l.v_y);
            EXPECT_EQ(l.n_i % s.p, l.index == 0 ? s.n % s.p : s.p - 1);
        }
    }
}

TEST(TowerSequence, ShiftConstantCyclesThroughPrimeField)
{
    const auto levels = tower_sequence(spec(3, 2, 9, 3));
    const Residue one = Residue::one(levels[0].a_i.field());
    EXPECT_EQ(levels[1].a_i, levels[0].a_i + one);
    EXPECT_EQ(levels[3].a_i, levels[0].a_i);
    for (const auto &l : levels) {
        EXPECT_FALSE(l.a_i.is_prime_constant());
    }
}

TEST(TowerCuts, Examples)
{
    const TowerReport r = tower_cuts(spec(3, 2, 9));
    EXPECT_EQ(r.v0, Value(1, 2));
    EXPECT_EQ(r.h_cut, Cut::open(Value(3, 2), Zp3));
    EXPECT_EQ(r.n_of_j_cut, r.h_cut);
    EXPECT_EQ(r.different_cut, Cut::open(Value(1), Zp3));
    EXPECT_EQ(r.different_cut, r.j_cut.pow(2));
    EXPECT_EQ(r.different_inv_cut, Cut::open(Value(-1), Zp3));
    EXPECT_EQ(r.t_cut, Cut::open(Value(-1, 6), Zp3));

    const TowerReport two = tower_cuts(spec(2, 3, 4));
    EXPECT_EQ(two.v0, Value(1));
    EXPECT_EQ(two.h_cut, Cut::open(Value(2), ValueGroup::z_one_over_p(2)));
}

TEST(TowerCuts, StructuralProperties)
{
    for (const auto &s : {spec(2, 3, 4), spec(2, 5, 4), spec(3, 2, 9), spec(3, 4, 9), spec(5, 2, 25)}) {
        const TowerReport r = tower_cuts(s);
        const ValueGroup g = ValueGroup::z_one_over_p(s.p);
        EXPECT_EQ(r.h_cut, r.n_of_j_cut);
        EXPECT_EQ(r.h_cut, Cut::open(Value(s.n) - Value(1, s.p - 1), g));
        EXPECT_EQ(r.j_cut.bound(), Bound::Open);
        EXPECT_EQ(r.different_cut, r.j_cut.pow(s.p - 1));
        // T' = T J^(p-1): the quotient T / T' has the size of B / D.
        EXPECT_EQ(r.t_prime_cut, r.t_cut * r.j_cut.pow(s.p - 1));
        EXPECT_FALSE(r.j_principal);
        EXPECT_FALSE(r.best_f_exists);
        EXPECT_FALSE(r.flags.h_principal || r.flags.defectless);
        EXPECT_EQ(r.defect, s.p);
    }
}

TEST(TowerSpecValidation, RejectsBadInput)
{
    EXPECT_EQ(kind_of([] { tower_cuts(spec(2, 1, 4)); }), ErrorKind::InvalidSpec);
    EXPECT_EQ(kind_of([] { tower_cuts(spec(3, 3, 9)); }), ErrorKind::InvalidSpec);
    EXPECT_EQ(kind_of([] { tower_cuts(spec(3, 2, 4)); }), ErrorKind::InvalidSpec);
    EXPECT_EQ(kind_of([] { tower_cuts(spec(3, 2, 3)); }), ErrorKind::InvalidSpec);
    EXPECT_EQ(kind_of([] { tower_cuts(spec(3, 2, 9, 0)); }), ErrorKind::InvalidSpec);
    EXPECT_EQ(kind_of([] { tower_cuts(spec(3, 2, 10)); }), ErrorKind::InvalidSpec);
    TowerSpec in_prime = spec(3, 2, 9);
    in_prime.a = Residue::one(finite_field_of_order(9));
    EXPECT_EQ(kind_of([&] { tower_cuts(in_prime); }), ErrorKind::InvalidSpec);
    EXPECT_EQ(kind_of([] { best_f_nonexistence(spec(3, 2, 9), 1); }), ErrorKind::InvalidSpec);
}

TEST(BestF, NonExistence)
{
    const auto a = best_f_nonexistence(spec(3, 2, 9), 6);
    EXPECT_TRUE(a.monotone);
    EXPECT_EQ(a.infimum, Value(3, 2));
    EXPECT_FALSE(a.infimum_attained);
    EXPECT_FALSE(a.infimum_in_gamma);

    const auto b = best_f_nonexistence(spec(2, 3, 4), 6);
    EXPECT_TRUE(b.monotone);
    EXPECT_EQ(b.infimum, Value(2));
    EXPECT_FALSE(b.infimum_attained);
    // For p = 2 the infimum lies in Gamma = Z[1/2] but is still not attained.
    EXPECT_TRUE(b.infimum_in_gamma);
}

TEST(StepIdentity, PassesOnGrid)
{
    for (const auto &s : {spec(3, 2, 9, 3), spec(2, 3, 4, 3), spec(5, 2, 25, 3)}) {
        const auto r = verify_step_identity(s, 32, 7);
        EXPECT_TRUE(r.pass());
        ASSERT_EQ(r.levels.size(), 3U);
        EXPECT_LT(r.levels[0].false_pass_bound, 1.0);
        EXPECT_EQ(r.levels[0].trials, 32);
    }
}

TEST(StepIdentity, DegreeBoundsAtLevelZero)
{
    EXPECT_EQ(verify_step_identity(spec(3, 2, 9, 1), 1, 1).levels[0].degree_bound, 4);
    EXPECT_EQ(verify_step_identity(spec(2, 3, 4, 1), 1, 1).levels[0].degree_bound, 3);
    EXPECT_EQ(verify_step_identity(spec(5, 2, 25, 1), 1, 1).levels[0].degree_bound, 8);
}

TEST(StepIdentity, ExactAsLaurentPolynomials)
{
    // Both sides are affine in z', so agreement as Laurent polynomials in y at
    // z' = 0 and z' = 1 proves the identity.
    for (const auto &s : {spec(3, 2, 9, 4), spec(2, 3, 4, 4), spec(5, 2, 25, 3), spec(3, 4, 9, 3)}) {
        for (const auto &l : tower_sequence(s)) {
            const auto [lhs, rhs] = step_identity_sides(l.a_i, l.n_i, s.p);
            const Field k = l.a_i.field();
            for (int z : {0, 1}) {
                const LaurentInY d{k, Residue::from_int(k, z)};
                EXPECT_EQ(evaluate(lhs, d), evaluate(rhs, d)) << "p=" << s.p << " level " << l.index;
            }
        }
    }
}

TEST(StepIdentity, DetectsPlantedError)
{
    const Field k = finite_field_of_order(9);
    const auto [lhs, rhs] = step_identity_sides(Residue::generator(k), 2, 3);
    EXPECT_FALSE(check_identity(lhs, rhs + Expr::var("y"), k, 32, 3).pass);
    // Dropping the +1 shift of the constant breaks it too.
    EXPECT_FALSE(check_identity(lhs, rhs - Expr::var("y").pow(-5), k, 32, 3).pass);
}

TEST(TowerAnalysisTest, CombinesParts)
{
    const TowerAnalysis t = analyze_tower(spec(3, 2, 9, 2), 8, 1);
    EXPECT_TRUE(t.pass());
    EXPECT_EQ(t.levels.size(), 3U);
    EXPECT_EQ(t.step.levels.size(), 2U);
    EXPECT_TRUE(t.norm_ideal_equality);
}
