#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramify/cut.hpp"
#include "ramify/expr.hpp"
#include "ramify/field.hpp"
#include "ramify/invariants.hpp"
#include "ramify/value.hpp"

namespace ramify {

// The defect tower over a two-dimensional regular local ring with residue
// field F_q: alpha^p - alpha = (a + y) / x^n, blown up along successive
// regular parameters (x_i, y_i). The value group of the limit valuation is
// Z[1/p] with v(x_0) = 1, so Gamma is p-divisible and the extension has
// defect p.
struct TowerSpec {
    std::int64_t p = 3;
    std::int64_t n = 2;
    std::uint64_t q = 9;
    // Defaults to the generator of F_q; must lie outside F_p.
    std::optional<Residue> a;
    int depth = 5;
};

struct TowerLevel {
    int index = 0;
    std::int64_t n_i = 0;
    Residue a_i;       // a + i
    Value v_x;         // 1 / p^i
    Value v_y;         // 1 / p^(i+1)
    Value neg_v_f;     // n_i v(x_i)
};

struct TowerReport {
    Value v0;
    Cut j_cut;
    Cut h_cut;
    Cut n_of_j_cut;
    Cut different_inv_cut;
    Cut different_cut;
    Cut t_cut;
    Cut t_prime_cut;
    bool j_principal = false;
    bool best_f_exists = false;
    PrincipalityFlags flags;
    std::int64_t defect = 0;
};

struct BestFNonexistence {
    bool monotone = false;
    Value infimum;
    bool infimum_attained = false;
    // The infimum n - 1/(p-1) is an integer for p = 2 and so lies in Z[1/2];
    // non-existence of a best f comes from non-attainment, not from this.
    bool infimum_in_gamma = false;
};

struct StepIdentityResult {
    // One verdict per level 0 .. depth-1; the identity at level i is the
    // level-0 identity with (a, n) replaced by (a_i, n_i).
    std::vector<IdentityVerdict> levels;
    bool pass() const;
};

// Resolves the residue field and a, throwing InvalidSpec when gcd(n, p) != 1,
// p = 2 with n < 3, n < 1, depth < 1, q not a proper power of p, or a in F_p.
struct ResolvedTower {
    TowerSpec spec;
    Field k;
    Residue a;
};
ResolvedTower resolve(const TowerSpec &spec);

std::int64_t tower_n_closed_form(std::int64_t p, std::int64_t n, int i);
// n - 1/(p-1) + 1/(p^i (p-1)).
Value tower_neg_v_f_closed_form(std::int64_t p, std::int64_t n, int i);

std::vector<TowerLevel> tower_sequence(const TowerSpec &spec);
TowerReport tower_cuts(const TowerSpec &spec);

// Both sides of f_i = (a_i + 1 + y_{i+1}) / x_{i+1}^(n_i p - 1) + c^p - c in
// the free variables z' (named "zp") and y, with x_i = x' y^p,
// (x')^(-n_i) = 1 + z' y, x_{i+1} = y and c = a_i^(1/p) y^(-n_i).
std::pair<Expr, Expr> step_identity_sides(const Residue &a_i, std::int64_t n_i, std::int64_t p);

StepIdentityResult verify_step_identity(const TowerSpec &spec, int trials, std::uint64_t seed);

// Requires depth >= 2.
BestFNonexistence best_f_nonexistence(const TowerSpec &spec, int depth);

// Everything the tower command reports, computed from one spec.
struct TowerAnalysis {
    TowerSpec spec;
    Residue a;
    std::vector<TowerLevel> levels;
    TowerReport report;
    BestFNonexistence nonexistence;
    StepIdentityResult step;
    // H = N(J) as normalized cuts.
    bool norm_ideal_equality = false;
    bool pass() const { return norm_ideal_equality && step.pass(); }
};

TowerAnalysis analyze_tower(const TowerSpec &spec, int trials, std::uint64_t seed);

} // namespace ramify
