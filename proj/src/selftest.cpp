#include "ramify/selftest.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "ramify/error.hpp"
#include "ramify/extension.hpp"
#include "ramify/invariants.hpp"

namespace ramify {

namespace {

// Sample counts pinned by the acceptance criteria.
constexpr int kDOperatorSamples = 100;
constexpr int kRswShifts = 50;
constexpr int kNormSamples = 100;
constexpr int kStepTrials = 32;
constexpr int kOracleSamples = 3;
constexpr int kRecursionDepth = 8;
constexpr int kStepDepth = 3;

class Tally {
public:
    Tally(int id, std::string name) { r_.id = id, r_.name = std::move(name), r_.pass = true; }

    void record(bool ok, const std::string &what)
    {
        ++r_.cases;
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.detail = what;
        }
    }

    CriterionResult done(const std::string &summary)
    {
        if (r_.pass) {
            r_.detail = summary;
        }
        return r_;
    }

private:
    CriterionResult r_;
};

ASExtension grid_extension(const GridCase &c)
{
    return ASExtension(parse_series(c.f, parse_field(c.field), LaurentSeries::kExact));
}

std::string label(const GridCase &c)
{
    return c.field + " f=" + c.f;
}

std::string label(const TowerSpec &s)
{
    return "(p,n,q)=(" + std::to_string(s.p) + "," + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
}

void record_verdict(Tally &t, const GridCase &c, const Verdict &v)
{
    t.record(v.pass, label(c) + ": " + v.detail);
}

CriterionResult swan_table(const SelftestOptions &)
{
    Tally t(1, "swan_table");
    for (std::uint32_t p : {2U, 3U, 5U}) {
        const Field k = prime_field(p);
        for (std::int64_t n = 1; n <= 7; ++n) {
            if (std::gcd(n, static_cast<std::int64_t>(p)) != 1) {
                continue;
            }
            for (unsigned m = 0; m <= 2; ++m) {
                const std::int64_t e = -n * ipow(p, m);
                const ASExtension ext(LaurentSeries::monomial(Residue::one(k), e));
                t.record(ext.swan() == Value(n), "p=" + std::to_string(p) + " t^" + std::to_string(e) + ": swan "
                                                     + ext.swan().to_string() + ", expected "
                                                     + std::to_string(n));
            }
        }
    }
    return t.done("swan(t^(-n p^m)) = n on every case");
}

CriterionResult best_f_oracle(const SelftestOptions &)
{
    Tally t(2, "best_f_oracle");
    for (std::uint32_t p : {2U, 3U}) {
        const Field k = prime_field(p);
        const auto elems = Residue::elements(k);
        const std::int64_t total = ipow(p, 6);
        for (std::int64_t code = 0; code < total; ++code) {
            std::vector<LaurentSeries::Term> terms;
            std::int64_t c = code;
            for (std::int64_t e = -6; e <= -1; ++e, c /= p) {
                terms.emplace_back(e, elems[static_cast<std::size_t>(c % p)]);
            }
            const LaurentSeries f = LaurentSeries::from_terms(k, std::move(terms)).truncated(1);
            const Value got = reduce_to_best(f).swan;
            const Value want = brute_force_swan(f, 3);
            t.record(got == want, "p=" + std::to_string(p) + " f=" + f.to_string() + ": reduction gives "
                                      + got.to_string() + ", brute force " + want.to_string());
        }
    }
    return t.done("reduction matches exhaustive search over all 64 + 729 polar parts");
}

CriterionResult norm_ideal_equality(const SelftestOptions &)
{
    Tally t(3, "norm_ideal_equality");
    for (const auto &c : dvr_grid()) {
        record_verdict(t, c, verify_norm_ideal_equality(grid_extension(c)));
    }
    return t.done("H = N(J) and N(1/alpha) f_best = 1 on the grid");
}

CriterionResult defect_norm_ideal(const SelftestOptions &)
{
    Tally t(4, "defect_norm_ideal_equality");
    for (const auto &s : tower_grid()) {
        const TowerReport r = tower_cuts(s);
        const Cut expected = Cut::open(Value(s.n) - Value(1, s.p - 1), ValueGroup::z_one_over_p(s.p));
        t.record(r.h_cut == r.n_of_j_cut && r.h_cut == expected,
                 label(s) + ": H = " + r.h_cut.to_string() + ", N(J) = " + r.n_of_j_cut.to_string());
    }
    return t.done("H = N(J) = Open(n - 1/(p-1)) on the tower grid");
}

CriterionResult tower_recursions(const SelftestOptions &)
{
    Tally t(5, "tower_recursions");
    for (auto s : tower_grid()) {
        s.depth = kRecursionDepth;
        for (const auto &level : tower_sequence(s)) {
            const std::string at = label(s) + " level " + std::to_string(level.index);
            t.record(level.n_i == tower_n_closed_form(s.p, s.n, level.index), at + ": n_i mismatch");
            t.record(level.neg_v_f == tower_neg_v_f_closed_form(s.p, s.n, level.index),
                     at + ": -v(f_i) = " + level.neg_v_f.to_string());
        }
    }
    return t.done("closed forms agree with the recursion for i <= 8");
}

CriterionResult step_identity(const SelftestOptions &o)
{
    Tally t(6, "step_identity");
    std::ostringstream bounds;
    for (auto [p, n, q] : {std::tuple{3, 2, 9}, std::tuple{2, 3, 4}, std::tuple{5, 2, 25}}) {
        TowerSpec s;
        s.p = p;
        s.n = n;
        s.q = static_cast<std::uint64_t>(q);
        s.depth = kStepDepth;
        const auto r = verify_step_identity(s, kStepTrials, o.seed);
        for (std::size_t i = 0; i < r.levels.size(); ++i) {
            t.record(r.levels[i].pass, label(s) + " level " + std::to_string(i) + " fails");
        }
        bounds << (bounds.tellp() > 0 ? ", " : "") << label(s) << " per-trial bound "
               << r.levels.front().degree_bound << "/" << s.q;
    }
    return t.done(std::to_string(kStepTrials) + " trials per level, levels 0-" + std::to_string(kStepDepth - 1) + "; "
                  + bounds.str());
}

CriterionResult trace_identities(const SelftestOptions &)
{
    Tally t(7, "trace_identities");
    for (std::uint32_t p : {2U, 3U, 5U}) {
        for (std::int64_t n : {1, 2}) {
            if (p == 2 && n == 2) {
                continue;
            }
            const GridCase c{"Fp:" + std::to_string(p), "t^-" + std::to_string(n)};
            record_verdict(t, c, verify_trace_identities(grid_extension(c)));
        }
    }
    return t.done("Tr(alpha^m) = 0 for m < p-1 and Tr(alpha^(p-1)) = -1");
}

CriterionResult d_operator_laws(const SelftestOptions &o)
{
    Tally t(8, "d_operator_laws");
    for (const auto &c : dvr_grid()) {
        record_verdict(t, c, verify_d_operator_laws(grid_extension(c), kDOperatorSamples, o.seed + 8));
    }
    return t.done("laws (1)-(5) and integrality with " + std::to_string(kDOperatorSamples) + " samples each");
}

CriterionResult rsw_well_defined(const SelftestOptions &o)
{
    Tally t(9, "rsw_well_defined");
    for (const auto &c : dvr_grid()) {
        const ASExtension ext = grid_extension(c);
        if (ext.swan() == Value(0)) {
            continue;
        }
        record_verdict(t, c, verify_rsw_well_defined(ext, kRswShifts, o.seed + 9));
    }
    return t.done(std::to_string(kRswShifts) + " shifts per extension leave rsw unchanged mod the modulus");
}

CriterionResult norm_additivity_and_diagram(const SelftestOptions &o)
{
    Tally t(10, "norm_additivity_and_diagram");
    for (const auto &c : dvr_grid()) {
        const ASExtension ext = grid_extension(c);
        record_verdict(t, c, verify_norm_additivity(ext, kNormSamples, o.seed + 10));
        record_verdict(t, c, verify_diagram(ext, kNormSamples, o.seed + 11));
    }
    return t.done(std::to_string(kNormSamples) + " samples per extension for each check");
}

CriterionResult different_cross_check(const SelftestOptions &o)
{
    Tally t(11, "different_cross_check");
    for (const auto &c : dvr_grid()) {
        record_verdict(t, c, verify_different(grid_extension(c), kOracleSamples, o.seed + 12));
    }
    return t.done("different equals the inverse trace dual; J^(p-1) in ferocious cases");
}

CriterionResult principality_chain(const SelftestOptions &)
{
    Tally t(12, "principality_chain");
    for (const auto &c : dvr_grid()) {
        const auto f = principality_flags(grid_extension(c));
        t.record(f.best_f_exists && f.h_principal && f.j_principal && f.defectless, label(c) + ": a flag is false");
    }
    for (const auto &s : tower_grid()) {
        const auto f = tower_cuts(s).flags;
        t.record(!f.best_f_exists && !f.h_principal && !f.j_principal && !f.defectless,
                 label(s) + ": a flag is true");
    }
    return t.done("all four flags true on the DVR grid, all false on the tower grid");
}

} // namespace

const std::vector<GridCase> &dvr_grid()
{
    static const std::vector<GridCase> grid = {
        {"Fp:2", "t^-1"},          {"Fp:2", "t^-3"},          {"Fp:3", "t^-1"}, {"Fp:3", "t^-2"},
        {"Fp(u):2", "u*t^-2"}, {"Fp(u):3", "u*t^-3"}, {"Fp:5", "t^-2"},
    };
    return grid;
}

const std::vector<TowerSpec> &tower_grid()
{
    static const std::vector<TowerSpec> grid = [] {
        std::vector<TowerSpec> g;
        for (auto [p, n, q] : {std::tuple{2, 3, 4}, std::tuple{2, 5, 4}, std::tuple{3, 2, 9}, std::tuple{3, 4, 9},
                               std::tuple{5, 2, 25}}) {
            TowerSpec s;
            s.p = p;
            s.n = n;
            s.q = static_cast<std::uint64_t>(q);
            s.depth = 5;
            g.push_back(s);
        }
        return g;
    }();
    return grid;
}

Value brute_force_swan(const LaurentSeries &f, int depth)
{
    const Field &k = f.field();
    const auto elems = Residue::elements(k);
    const std::int64_t q = static_cast<std::int64_t>(elems.size());
    const std::int64_t total = ipow(q, static_cast<unsigned>(depth));
    std::optional<std::int64_t> best;
    for (std::int64_t code = 0; code < total; ++code) {
        std::vector<LaurentSeries::Term> terms;
        std::int64_t c = code;
        for (std::int64_t e = -depth; e <= -1; ++e, c /= q) {
            terms.emplace_back(e, elems[static_cast<std::size_t>(c % q)]);
        }
        const LaurentSeries h = LaurentSeries::from_terms(k, std::move(terms));
        const LaurentSeries polar = (f + h.frobenius() - h).polar_part();
        const std::int64_t s = polar.is_exact_zero() ? 0 : -polar.valuation();
        if (!best || s < *best) {
            best = s;
        }
    }
    return Value(*best);
}

CriterionResult run_criterion(int id, const SelftestOptions &options)
{
    static const std::vector<std::pair<std::string, std::function<CriterionResult(const SelftestOptions &)>>> table = {
        {"swan_table", swan_table},
        {"best_f_oracle", best_f_oracle},
        {"norm_ideal_equality", norm_ideal_equality},
        {"defect_norm_ideal_equality", defect_norm_ideal},
        {"tower_recursions", tower_recursions},
        {"step_identity", step_identity},
        {"trace_identities", trace_identities},
        {"d_operator_laws", d_operator_laws},
        {"rsw_well_defined", rsw_well_defined},
        {"norm_additivity_and_diagram", norm_additivity_and_diagram},
        {"different_cross_check", different_cross_check},
        {"principality_chain", principality_chain},
    };
    if (id < 1 || id > static_cast<int>(table.size())) {
        throw Error(ErrorKind::InvalidSpec, "no criterion " + std::to_string(id));
    }
    const auto &[name, fn] = table[static_cast<std::size_t>(id - 1)];
    try {
        return fn(options);
    } catch (const std::exception &e) {
        return CriterionResult{id, name, false, 0, std::string("error: ") + e.what()};
    }
}

std::vector<CriterionResult> run_selftest(const SelftestOptions &options)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 12; ++id) {
        out.push_back(run_criterion(id, options));
    }
    return out;
}

} // namespace ramify
