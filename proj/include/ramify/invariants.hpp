#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramify/cut.hpp"
#include "ramify/extension.hpp"

namespace ramify {

// Identities between elements whose coefficients carry finite precision are
// accepted only when the difference is known to vanish below t^kCheckPrecision.
inline constexpr std::int64_t kCheckPrecision = 8;

// Outcome of one sampled or exact check.
struct Verdict {
    std::string name;
    bool pass = true;
    int checks = 0;
    std::string detail; // first failure, or a short summary
};

// c dlog t + d du modulo I * omega, with d absent when k is perfect.
struct LogForm {
    LaurentSeries coeff_dlog_t;
    std::optional<LaurentSeries> coeff_du;
    Cut modulus;

    // Both coefficient differences lie in the modulus ideal.
    bool congruent(const LogForm &o) const;
    // Coefficients truncated at the first exponent that lies in the modulus,
    // i.e. the canonical representative of the class.
    LogForm reduced() const;
    std::string to_string() const;
};

// s lies in {v_K >= / > modulus}; InsufficientPrecision when s is known only
// to vanish below a precision that does not settle it.
bool series_in_ideal(const LaurentSeries &s, const Cut &ideal);

// Ideals of A (over Gamma_K = Z) and of B (over Gamma_L), values in v_K units.
// All take any presentation of L and work with its best f.
Cut ideal_H(const ASExtension &ext);
Cut ideal_J(const ASExtension &ext);
Cut ideal_I_sigma(const ASExtension &ext);
Cut ideal_I_sigma_cap_A(const ASExtension &ext);
Cut norm_of_J(const ASExtension &ext);
// {x in K : v_K(x) >= (p - 1) n / p}.
Cut rsw_modulus(const ASExtension &ext);
Cut different(const ASExtension &ext);
Cut inverse_different(const ASExtension &ext);

// h dg = (h t g_t) dlog t + (h g_u) du.
LogForm log_form_at(const LaurentSeries &g, const LaurentSeries &h, const Cut &modulus);
// dlog f_best modulo the rsw modulus. SwanZero when n = 0.
LogForm rsw(const ASExtension &ext);

// Smallest grid value v of Gamma_L such that sampled x with v_L(x) = v
// satisfy Tr(x g) in A for every A-basis element g of B; returned as a Closed
// cut, i.e. the inverse different found by brute force.
Cut trace_dual_oracle(const ASExtension &ext, int sample_size, std::uint64_t seed);
// min v_L(sigma(b) - b) over sampled integral b.
Value sampled_i_sigma(const ASExtension &ext, int samples, std::uint64_t seed);

// N(J) = H as cuts, and N(1/alpha) f_best = +-1 with the sign fixed by the
// parity of p.
Verdict verify_norm_ideal_equality(const ASExtension &ext);
// Under f -> f + a^p - a with v_K unchanged, h dg = h df modulo the rsw
// modulus at the common generator h = 1 / f_best.
Verdict verify_rsw_well_defined(const ASExtension &ext, int samples, std::uint64_t seed);
// N(x + y) - N(x) - N(y) in I_sigma cap A for integral x, y.
Verdict verify_norm_additivity(const ASExtension &ext, int samples, std::uint64_t seed);
// N(b (sigma(alpha)/alpha - 1)) = N(b) / f mod H^2 and
// N(b/alpha) d f_best = N(b) dlog N(alpha) mod the rsw modulus.
Verdict verify_diagram(const ASExtension &ext, int samples, std::uint64_t seed);
// sigma-1 is a derivation mod I_sigma^2 and sigma/id - 1 is a logarithmic
// derivation mod J^2.
Verdict verify_phi_sigma_relations(const ASExtension &ext, int samples, std::uint64_t seed);
// The five D_i laws for a boundary generator b, and D_i(B) in B.
Verdict verify_d_operator_laws(const ASExtension &ext, int samples, std::uint64_t seed);
// Tr(alpha^m) = 0 for 1 <= m <= p - 2 and Tr(alpha^(p-1)) = -1, exactly.
Verdict verify_trace_identities(const ASExtension &ext);
// different(ext) is the inverse of trace_dual_oracle(ext); equals J^(p-1) when
// ferocious.
Verdict verify_different(const ASExtension &ext, int sample_size, std::uint64_t seed);
// H in the rsw modulus in I_sigma cap A, and i(sigma) >= j(sigma).
Verdict verify_ideal_chain(const ASExtension &ext);

struct PrincipalityFlags {
    bool best_f_exists = false;
    bool h_principal = false;
    bool j_principal = false;
    bool defectless = false;

    bool all_equal() const
    {
        return best_f_exists == h_principal && h_principal == j_principal && j_principal == defectless;
    }
};

PrincipalityFlags principality_flags(const ASExtension &ext);

struct AnalysisOptions {
    int samples = 50;
    int oracle_samples = 3;
    std::uint64_t seed = 20240229;
};

// Everything computed for one extension. Invariant fields are empty for
// trivial or undecided extensions; unramified extensions carry the unit ideal.
struct InvariantReport {
    std::string field;
    LaurentSeries f;
    BestForm best;
    Classification classification = Classification::Unknown;
    std::optional<int> e, f_inertia, defect;
    std::optional<Cut> h, j_sigma, i_sigma, i_sigma_cap_A, n_of_j, rsw_modulus, different, inverse_different;
    std::optional<LogForm> rsw;
    std::optional<Value> lefschetz_i, lefschetz_j;
    std::optional<PrincipalityFlags> flags;
    std::vector<Verdict> verdicts;

    bool all_pass() const;
};

InvariantReport analyze(const ASExtension &ext, const AnalysisOptions &options = {});

} // namespace ramify
