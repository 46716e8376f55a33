#pragma once

#include "isog/tower.hpp"

namespace isog {

struct CurvePoint {
    bool inf = true;
    TowerElement x, y;

    static CurvePoint infinity() { return {}; }
    static CurvePoint at(TowerElement px, TowerElement py) {
        return CurvePoint{false, std::move(px), std::move(py)};
    }
};

/// Short Weierstrass y^2 = x^3 + a x + b over a tower level.
struct EllipticCurve {
    TowerElement a, b;

    long level() const { return std::max(a.level, b.level); }
};

/// x-action of an isogeny: num/den in lowest terms, den monic, together with
/// the monic squarefree kernel polynomial and the degree.
struct RationalMap {
    TPoly num, den;
    TPoly kernel;
    long degree = 1;
};

TowerElement curve_rhs(const KummerTower& T, const EllipticCurve& E, const TowerElement& x);
TowerElement discriminant(const KummerTower& T, const EllipticCurve& E);
TowerElement j_invariant(const KummerTower& T, const EllipticCurve& E);
bool on_curve(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P);
bool point_eq(const KummerTower& T, const CurvePoint& P, const CurvePoint& Q);

CurvePoint point_neg(const KummerTower& T, const CurvePoint& P);
CurvePoint point_add(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                     const CurvePoint& Q);
CurvePoint point_sub(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                     const CurvePoint& Q);
CurvePoint scalar_mul(const KummerTower& T, const EllipticCurve& E, const Int& m,
                      const CurvePoint& P);
CurvePoint frobenius_point(const KummerTower& T, const CurvePoint& P);  // coordinate q-power
long point_order_power(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                       long ell, long cap);  // exact k with ell^k * P = 0

// TPoly helpers used by the curve and interpolation layers.
TPoly tp_from_fp(const KummerTower& T, long level, const FpPoly& f);
TPoly tp_x(const KummerTower& T, long level);
TPoly tp_const(const KummerTower& T, const TowerElement& c);
long tp_deg(const TPoly& f);
void tp_normalize(TPoly& f);
TPoly tp_add(const KummerTower& T, const TPoly& a, const TPoly& b);
TPoly tp_sub(const KummerTower& T, const TPoly& a, const TPoly& b);
TPoly tp_mul(const KummerTower& T, const TPoly& a, const TPoly& b);
TPoly tp_scale(const KummerTower& T, const TPoly& a, const TowerElement& s);
TPoly tp_monic(const KummerTower& T, const TPoly& a);
TPoly tp_divrem(const KummerTower& T, const TPoly& a, const TPoly& b, TPoly* quo = nullptr);
inline TPoly tp_rem(const KummerTower& T, const TPoly& a, const TPoly& b) {
    return tp_divrem(T, a, b);
}
TPoly tp_gcd(const KummerTower& T, TPoly a, TPoly b);
TPoly tp_derivative(const KummerTower& T, const TPoly& f);
TowerElement tp_eval(const KummerTower& T, const TPoly& f, const TowerElement& x);
TPoly tp_radical(const KummerTower& T, const TPoly& f);
bool tp_eq(const KummerTower& T, const TPoly& a, const TPoly& b);
long tp_level(const TPoly& f);
TPoly tp_lift(const KummerTower& T, const TPoly& f, long level);
TPoly tp_push_down(const KummerTower& T, const TPoly& f, long level);

/// Division polynomials with the y-part substituted away: w_m = psi_m for odd
/// m and psi_m = y*w_m for even m (so psi_m^2 is w_m^2 resp. f*w_m^2).
class DivisionPolynomials {
  public:
    DivisionPolynomials(const KummerTower& T, EllipticCurve E);
    const TPoly& w(long m);
    /// Univariate polynomial whose roots are the nonzero m-torsion abscissas:
    /// w_m for odd m, f*w_m^2 for even m (m = 2 gives 4(x^3+ax+b)).
    TPoly torsion_polynomial(long m);
    /// x-map of multiplication by r (odd r): (phi_r, w_r^2), coprime.
    std::pair<TPoly, TPoly> mult_x_map(long r);

  private:
    const KummerTower& T_;
    EllipticCurve E_;
    TPoly f_;  // x^3 + a x + b
    std::map<long, TPoly> memo_;
};

/// Same recurrence carried out modulo a fixed polynomial.
class DivisionPolynomialsMod {
  public:
    DivisionPolynomialsMod(const KummerTower& T, EllipticCurve E, TPoly modulus);
    const TPoly& w(long m);

  private:
    const KummerTower& T_;
    EllipticCurve E_;
    TPoly mod_, f_;
    std::map<long, TPoly> memo_;
};

TPoly division_polynomial(const KummerTower& T, const EllipticCurve& E, long m);

/// Preimage of P under multiplication by ell, at the smallest tower level
/// within max_level admitting one; divide(ell, infinity) = infinity.
CurvePoint divide(const KummerTower& T, const EllipticCurve& E, long ell, const CurvePoint& P,
                  long max_level, Rng& rng);

/// Velu from a monic squarefree kernel polynomial D: odd r with
/// deg D = (r-1)/2, or r = 2 with deg D = 1. Returns the codomain and the
/// normalized x-map (denominator D^2 for odd r). Throws not_a_kernel when the
/// curve identity fails.
std::pair<EllipticCurve, RationalMap> velu(const KummerTower& T, const EllipticCurve& E,
                                           const TPoly& D, long r, bool check = true);

/// Image point under a normalized isogeny's x-map, with y recovered from the
/// derivative rule y' = y * u'(x).
CurvePoint evaluate_isogeny(const KummerTower& T, const RationalMap& map, const CurvePoint& P);

RationalMap isogeny_x_map_of_multiplication(const KummerTower& T, const EllipticCurve& E, long r);

/// Isomorphism (x,y) -> (u2*x, u3*y) carrying E_from onto E_to.
struct CurveIso {
    TowerElement u2, u3;
};
CurveIso isomorphism_between(const KummerTower& T, const EllipticCurve& from,
                             const EllipticCurve& to, Rng& rng);
CurvePoint apply_iso(const KummerTower& T, const CurveIso& iso, const CurvePoint& P);

bool is_ordinary(const KummerTower& T, const EllipticCurve& E);
/// #E(F_p) by direct character sum; p must be small.
Int naive_point_count(const Zp& F, const Int& a, const Int& b);

/// w_m over F_p directly (same convention as DivisionPolynomials).
FpPoly divpoly_w_fp(const Zp& F, const Int& a, const Int& b, long m);

/// Monic kernel polynomials of all F_q-rational cyclic subgroups of order r
/// (r an odd prime, or r = 2) of y^2 = x^3 + ax + b over F_p, found from
/// torsion points over ad-hoc extensions of degree up to r-1.
std::vector<FpPoly> rational_kernel_polynomials(const Zp& F, const Int& a, const Int& b, long r,
                                                Rng& rng);

}  // namespace isog
