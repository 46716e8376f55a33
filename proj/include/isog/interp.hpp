#pragma once

#include "isog/curve.hpp"

namespace isog {

/// Minimal polynomial of v over F_q, built level by level from Frobenius
/// conjugate batches combined at each descent step.
FpPoly minpoly_tower(const KummerTower& T, const TowerElement& v);

/// L in F_q[x] with deg L < deg(minpoly of v) and L(v) = w; throws
/// not_in_generated_field when no such polynomial exists.
FpPoly interpolate_tower(const KummerTower& T, const TowerElement& v, const TowerElement& w);

/// Precomputed interpolation data for one evaluation point v: the minimal
/// polynomial chain, the conjugate quotient products of every level, and
/// 1/T'(v). Interpolating a new value w against the same v reuses all of it.
struct PairPlan {
    TowerElement v;  // at its minimal level
    long n = 0;
    FpPoly minpoly;                        // over F_q
    std::vector<std::vector<TPoly>> batches;    // per step: sigma-conjugates of T
    std::vector<std::vector<TPoly>> quotients;  // per step: products of the others
    std::vector<TPoly> chain;                   // minpoly of v over F_m, m = 1..n
    TowerElement tprime_inv;                    // 1 / T'(v)
};

PairPlan build_pair_plan(const KummerTower& T, const TowerElement& v);
FpPoly pair_interpolate(const KummerTower& T, const PairPlan& plan, const TowerElement& w);

/// Multipoint instance over pairwise distinct Galois orbits: T = prod T_i by
/// a balanced subproduct tree (leaves sorted by degree descending), L by
/// Chinese remaindering over the same tree. The plan is built once; each
/// candidate supplies fresh w values.
class MultipointPlan {
  public:
    MultipointPlan(const KummerTower& T, const std::vector<TowerElement>& vs);

    const FpPoly& modulus() const { return modulus_; }
    long pairs() const { return static_cast<long>(plans_.size()); }
    FpPoly interpolate(const std::vector<TowerElement>& ws) const;

  private:
    struct Node {
        FpPoly prod;
        int left = -1, right = -1;
        FpPoly cl, cr;  // CRT combinators
    };
    const KummerTower& T_;
    std::vector<PairPlan> plans_;
    std::vector<Node> nodes_;
    std::vector<int> leaf_of_pair_;
    int root_ = -1;
    FpPoly modulus_;
};

std::pair<FpPoly, FpPoly> multipoint_interpolate(const KummerTower& T,
                                                 const std::vector<TowerElement>& vs,
                                                 const std::vector<TowerElement>& ws);

struct RationalFraction {
    FpPoly num, den;
};

/// Rational reconstruction F = num/den = L mod Tmod with deg num <= r,
/// deg den <= r-1, gcd(den, Tmod) = 1 and monic denominator, by the truncated
/// extended Euclidean scheme. Throws no_rational_form when none exists.
RationalFraction cauchy_rational(const Zp& F, const FpPoly& L, const FpPoly& Tmod, long r);

}  // namespace isog
