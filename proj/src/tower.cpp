#include "ramify/tower.hpp"

#include <numeric>

#include "ramify/error.hpp"

namespace ramify {

namespace {

Value inverse_power(std::int64_t p, int i)
{
    return Value(1, ipow(p, static_cast<unsigned>(i)));
}

} // namespace

bool StepIdentityResult::pass() const
{
    for (const auto &v : levels) {
        if (!v.pass) {
            return false;
        }
    }
    return !levels.empty();
}

ResolvedTower resolve(const TowerSpec &spec)
{
    const auto invalid = [](const std::string &msg) { return Error(ErrorKind::InvalidSpec, msg); };
    if (spec.p < 2 || spec.p > 0xffff) {
        throw invalid("p must be a small prime");
    }
    if (spec.n < 1) {
        throw invalid("n must be positive");
    }
    if (std::gcd(spec.n, spec.p) != 1) {
        throw invalid("n must be coprime to p");
    }
    if (spec.p == 2 && spec.n < 3) {
        throw invalid("p = 2 needs n >= 3");
    }
    if (spec.depth < 1) {
        throw invalid("depth must be at least 1");
    }
    Field k;
    try {
        k = finite_field_of_order(spec.q);
    } catch (const Error &e) {
        throw invalid(std::string("residue field: ") + e.what());
    }
    if (static_cast<std::int64_t>(k->p) != spec.p) {
        throw invalid("q = " + std::to_string(spec.q) + " is not a power of p = " + std::to_string(spec.p));
    }
    if (k->degree < 2) {
        throw invalid("F_" + std::to_string(spec.q) + " has no element outside F_p");
    }
    Residue a = spec.a.value_or(Residue::generator(k));
    if (!same_field(a.field(), k)) {
        throw invalid("a does not belong to F_" + std::to_string(spec.q));
    }
    if (a.is_prime_constant()) {
        throw invalid("a must lie outside F_p");
    }
    return ResolvedTower{spec, k, a};
}

std::int64_t tower_n_closed_form(std::int64_t p, std::int64_t n, int i)
{
    const std::int64_t pi = ipow(p, static_cast<unsigned>(i));
    return checked_add(checked_mul(pi, n), -((pi - 1) / (p - 1)));
}

Value tower_neg_v_f_closed_form(std::int64_t p, std::int64_t n, int i)
{
    return Value(n) - Value(1, p - 1) + inverse_power(p, i) * Value(1, p - 1);
}

std::vector<TowerLevel> tower_sequence(const TowerSpec &spec)
{
    const ResolvedTower t = resolve(spec);
    const std::int64_t p = spec.p;
    std::vector<TowerLevel> levels;
    std::int64_t n_i = spec.n;
    Residue a_i = t.a;
    const Residue one = Residue::one(t.k);
    for (int i = 0; i <= spec.depth; ++i) {
        TowerLevel level{i, n_i, a_i, inverse_power(p, i), inverse_power(p, i + 1), Value(n_i) * inverse_power(p, i)};
        levels.push_back(level);
        n_i = checked_add(checked_mul(p, n_i), -1);
        a_i += one;
    }
    return levels;
}

TowerReport tower_cuts(const TowerSpec &spec)
{
    resolve(spec);
    const std::int64_t p = spec.p;
    const ValueGroup gamma = ValueGroup::z_one_over_p(p);
    const Value v0 = (Value(spec.n) - Value(1, p - 1)) / Value(p);
    const Value mu(spec.n, p);
    const Cut j = Cut::open(v0, gamma);
    const Cut d_inv = Cut::open(-Value(p - 1) * v0, gamma);
    TowerReport r{
        .v0 = v0,
        .j_cut = j,
        .h_cut = Cut::open(Value(p) * v0, gamma),
        .n_of_j_cut = j.scaled_into(Value(p), gamma),
        .different_inv_cut = d_inv,
        .different_cut = d_inv.inverse(),
        .t_cut = Cut::open(v0 - mu, gamma),
        .t_prime_cut = Cut::open(Value(p) * v0 - mu, gamma),
        .j_principal = j.is_principal(),
        .best_f_exists = false,
        .flags = {},
        // k is perfect and Gamma is p-divisible, so e = f = 1.
        .defect = p,
    };
    const int depth = std::max(spec.depth, 2);
    r.best_f_exists = best_f_nonexistence(spec, depth).infimum_attained;
    r.flags.best_f_exists = r.best_f_exists;
    r.flags.h_principal = r.h_cut.is_principal();
    r.flags.j_principal = r.j_principal;
    r.flags.defectless = r.defect == 1;
    return r;
}

std::pair<Expr, Expr> step_identity_sides(const Residue &a_i, std::int64_t n_i, std::int64_t p)
{
    const Expr a = Expr::constant(a_i);
    const Expr root = Expr::constant(a_i.frobenius_root());
    const Expr one = Expr::integer(1);
    const Expr y = Expr::var("y");
    const Expr zp = Expr::var("zp");
    const std::int64_t np = checked_mul(n_i, p);
    const Expr lhs = (a + y) * (one + zp * y) / y.pow(np);
    const Expr y_next = a * (zp - one) + zp * y + root * y.pow(n_i * (p - 1) - 1);
    const Expr c = root * y.pow(-n_i);
    const Expr rhs = (a + one + y_next) / y.pow(np - 1) + c.pow(p) - c;
    return {lhs, rhs};
}

StepIdentityResult verify_step_identity(const TowerSpec &spec, int trials, std::uint64_t seed)
{
    const ResolvedTower t = resolve(spec);
    StepIdentityResult out;
    const auto levels = tower_sequence(spec);
    for (int i = 0; i < spec.depth; ++i) {
        const auto &level = levels[static_cast<std::size_t>(i)];
        const auto [lhs, rhs] = step_identity_sides(level.a_i, level.n_i, spec.p);
        out.levels.push_back(check_identity(lhs, rhs, t.k, trials, seed + static_cast<std::uint64_t>(i)));
    }
    return out;
}

BestFNonexistence best_f_nonexistence(const TowerSpec &spec, int depth)
{
    if (depth < 2) {
        throw Error(ErrorKind::InvalidSpec, "best f non-existence needs depth >= 2");
    }
    TowerSpec s = spec;
    s.depth = depth;
    const auto levels = tower_sequence(s);
    BestFNonexistence out;
    out.infimum = Value(spec.n) - Value(1, spec.p - 1);
    out.monotone = true;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0 && !(levels[i].neg_v_f < levels[i - 1].neg_v_f)) {
            out.monotone = false;
        }
        if (levels[i].neg_v_f == out.infimum) {
            out.infimum_attained = true;
        }
        if (levels[i].neg_v_f < out.infimum) {
            throw std::logic_error("-v(f_i) fell below its infimum");
        }
    }
    out.infimum_in_gamma = ValueGroup::z_one_over_p(spec.p).contains(out.infimum);
    return out;
}

TowerAnalysis analyze_tower(const TowerSpec &spec, int trials, std::uint64_t seed)
{
    const ResolvedTower t = resolve(spec);
    TowerAnalysis out{
        .spec = spec,
        .a = t.a,
        .levels = tower_sequence(spec),
        .report = tower_cuts(spec),
        .nonexistence = best_f_nonexistence(spec, std::max(spec.depth, 2)),
        .step = verify_step_identity(spec, trials, seed),
    };
    out.norm_ideal_equality = out.report.h_cut == out.report.n_of_j_cut;
    return out;
}

} // namespace ramify
