#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "isog/fq.hpp"

namespace isog {

/// Element of a tower level, stored as its canonical representative in
/// F_q[x]/P_i. Length of the coefficient vector is bounded by d_1 * l^(i-1).
struct TowerElement {
    long level = 0;
    FpPoly rep;

    bool operator==(const TowerElement& o) const { return level == o.level && rep == o.rep; }
};

/// The tower F_q = F_0 c F_1 c ... with F_i = F_q[x]/P_1(x^(l^(i-1))).
/// For odd l, P_1 is a primitive polynomial of degree d_1 (a multiple of the
/// order of q mod l dividing l-1); for l = 2 the seed is x^2 - c with c a
/// quadratic non-residue, which requires p = 1 mod 4.
///
/// Levels and the Frobenius monomial cache are filled lazily; the cache is
/// compute-then-publish under a mutex, so a constructed tower is safe to
/// share read-mostly.
class KummerTower {
  public:
    KummerTower(const Int& p, const Int& q, long ell, long n, Rng& rng, long d1 = 0);

    const Zp& base() const { return zp_; }
    long ell() const { return ell_; }
    long d1() const { return d1_; }
    long height() const;
    const FpPoly& seed() const { return P1_; }

    void ensure_level(long i) const;
    long level_degree(long i) const;  // [F_i : F_0]
    const FpPoly& level_modulus(long i) const;
    Int level_order(long i) const;
    FqCtx level_ctx(long i) const;

    TowerElement zero(long level = 0) const { return TowerElement{level, FpPoly{}}; }
    TowerElement one(long level = 0) const { return TowerElement{level, fp_const(zp_, 1)}; }
    TowerElement from_base(const Int& a, long level = 0) const {
        return TowerElement{level, fp_const(zp_, a)};
    }
    TowerElement from_rep(long level, FpPoly rep) const;
    TowerElement gen(long i) const;  // x_i
    TowerElement random(long level, Rng& rng) const;

    bool is_zero(const TowerElement& a) const { return a.rep.is_zero(); }
    TowerElement add(const TowerElement& a, const TowerElement& b) const;
    TowerElement sub(const TowerElement& a, const TowerElement& b) const;
    TowerElement neg(const TowerElement& a) const;
    TowerElement mul(const TowerElement& a, const TowerElement& b) const;
    TowerElement sqr(const TowerElement& a) const { return mul(a, a); }
    TowerElement inv(const TowerElement& a) const;
    TowerElement div(const TowerElement& a, const TowerElement& b) const {
        return mul(a, inv(b));
    }
    TowerElement pow(const TowerElement& a, Int e) const;
    bool eq(const TowerElement& a, const TowerElement& b) const;

    /// Common level for mixed-level operands.
    std::pair<TowerElement, TowerElement> align(const TowerElement& a,
                                                const TowerElement& b) const;

    TowerElement lift(const TowerElement& a, long j) const;
    /// Rearranges coefficients back to level j; not_in_subfield when the
    /// sparsity pattern of membership fails.
    TowerElement push_down(const TowerElement& a, long j) const;
    bool in_level(const TowerElement& a, long j) const;
    long minimal_level(const TowerElement& a) const;

    /// a^(#F_j) by the monomial-rewriting scheme over F_1 (one pass over the
    /// coefficients, no square-and-multiply in F_i).
    TowerElement frobenius_power(const TowerElement& a, long j) const;

    FpPoly reduce_at(long i, FpPoly f) const;  // mod P_i, exploiting sparsity

  private:
    struct Level {
        FpPoly modulus;
        long degree;
        Int order;
    };

    // level-1 helpers (elements = FpPoly mod P_1)
    FpPoly f1_mul(const FpPoly& a, const FpPoly& b) const;
    FpPoly f1_pow(FpPoly a, Int e) const;
    FpPoly f1_frob_q(const FpPoly& a) const;  // a^q in F_1

    struct FrobMonomial {
        FpPoly m;  // element of F_1
        long e;    // exponent of x_i, e < l^(i-1)
    };
    const FrobMonomial& frob_monomial(long i, long j) const;

    Zp zp_;
    long ell_;
    long d1_;
    FpPoly P1_;
    FpPoly frob1_;  // x_1^q in F_1
    mutable std::vector<Level> levels_;
    mutable std::map<std::pair<long, long>, FrobMonomial> frob_cache_;
    mutable std::mutex mu_;
};

/// One root in F_i of a polynomial over F_i (degree l in the driver's use).
TowerElement tower_find_root(const KummerTower& T, long level,
                             const std::vector<TowerElement>& poly, Rng& rng);

/// All roots in F_i.
std::vector<TowerElement> tower_all_roots(const KummerTower& T, long level,
                                          const std::vector<TowerElement>& poly, Rng& rng);

// Polynomials with TowerElement coefficients (all at one level).
using TPoly = std::vector<TowerElement>;

FqPoly tpoly_to_fq(const KummerTower& T, long level, const TPoly& f);
TPoly tpoly_from_fq(const KummerTower& T, long level, const FqPoly& f);

}  // namespace isog
