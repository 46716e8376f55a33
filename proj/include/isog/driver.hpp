#pragma once

#include <optional>
#include <string>

#include "isog/classes.hpp"
#include "isog/interp.hpp"
#include "isog/volcano.hpp"

namespace isog {

struct DriverConfig {
    long max_ell = 13;       // Elkies prime search bound
    long forced_ell = 0;     // 0 = search
    long max_height = 6;     // volcano probe bound
    long k_override = 0;     // 0 = choose_k
    uint64_t seed = 1;
    std::string modpoly_path;  // empty = embedded table
    /// When set, only this diagonal pair is tried (the multiplication
    /// protocol of the bench harness).
    std::optional<std::pair<Int, Int>> only_candidate;
};

struct IsogenyProblem {
    Int p;
    Int q;  // must equal p in this implementation
    // curve models: coefficients, or j-invariants selecting y^2=x^3+3cx+2c
    std::optional<std::pair<Int, Int>> curve1, curve2;
    std::optional<Int> j1, j2;
    long r = 1;
    DriverConfig config;
};

struct IsogenySolution {
    Int p;
    Int a, b, a2, b2;    // the input models
    long ell = 0, k = 0, h = 0;
    Int cand_a, cand_b;  // matched diagonal pair
    long candidate_index = 0;
    FpPoly kernel;       // monic squarefree, on E
    FpPoly num, den;     // x-map of the isogeny E -> E2, monic denominator
    std::map<std::string, double> timings_ms;
};

/// Smallest k >= h+1 with l^(2k) - 1 > 4r.
long choose_k(long r, long h, long ell);

struct SelectedPrime {
    long ell = 0;
    VolcanoInfo volcE, volcE2;
    FrobeniusData crater_fd;  // eigenvalues mod l^(h+1) on the crater of E
};

/// Smallest tabulated Elkies prime for both curves with cyclic craters,
/// l coprime to r p, l^h < sqrt(r), and matching heights/depths.
SelectedPrime select_elkies_prime(const Zp& F, const ModularPolynomialTable& tab,
                                  const std::pair<Int, Int>& E1, const std::pair<Int, Int>& E2,
                                  long r, const DriverConfig& config, Rng& rng);

struct VerifyResult {
    bool accepted = false;
    FpPoly kernel;
    Int scale;  // c^2 carrying the normalized Velu map onto the target model
};

/// Checks that the fraction is the x-map of a degree-r isogeny E -> E2:
/// squarefree radical of the denominator, division-polynomial membership,
/// Velu reconstruction, and exact model matching up to the recorded scaling.
VerifyResult verify_candidate(const KummerTower& T, const RationalFraction& frac,
                              const EllipticCurve& E, const EllipticCurve& E2, long r);

/// The on-crater solver: horizontal bases, one vanishing polynomial, then the
/// candidate loop of interpolation + rational reconstruction + verification.
IsogenySolution isogeny_between_maximal(const KummerTower& T, const EllipticCurve& Emax,
                                        const EllipticCurve& E2max, long r, long ell, long h,
                                        const DriverConfig& config, Rng& rng);

/// Full pipeline: validation, prime selection, crater ascent, on-crater
/// solve, kernel transport, and the final Velu on the input model.
IsogenySolution explicit_isogeny(const IsogenyProblem& problem);

std::string solution_to_json(const IsogenySolution& sol, bool with_timings = true);
IsogenySolution solution_from_json(const std::string& text);

}  // namespace isog
