#pragma once

#include "isog/curve.hpp"

namespace isog {

/// Eigenstructure of the Frobenius on E[l^k].
struct FrobeniusData {
    long ell = 0;
    long k = 0;
    Int lambda, mu;     // mod l^k, attached to the basis points P, Q in order
    long h = 0;         // v_l(lambda - mu), capped at k when the reductions agree
    long e = -1;        // conjugation invariant, filled when computed
    long alpha = 0;     // max of the two valuations (capped at k)
    long beta = 0;      // min of the two valuations; beta <= h on a crater
};

enum class BasisKind { diagonal, horizontal };

struct TorsionBasis {
    EllipticCurve E;
    long ell = 0;
    long k = 0;
    CurvePoint P, Q;
    BasisKind kind = BasisKind::diagonal;
    Int lambda, mu;  // pi(P) = lambda P, pi(Q) = mu Q for diagonal/horizontal bases
};

struct Mat2 {
    Int m00, m01, m10, m11;  // columns: pi(P) = m00 P + m10 Q, pi(Q) = m01 P + m11 Q
};

/// Smallest valid tower degree d_1 (multiple of ord_l(q) dividing l-1, or 2
/// for l = 2) over which the full l-torsion of y^2 = x^3 + ax + b is rational.
long torsion_d1(const Zp& F, const Int& a, const Int& b, long ell, Rng& rng);

/// Basis of E[l] over tower level 1, from the factored l-division polynomial.
std::pair<CurvePoint, CurvePoint> ell_torsion_basis(const KummerTower& T, const EllipticCurve& E,
                                                    long ell, Rng& rng);

/// Two-dimensional digit-by-digit discrete log: R = u P + v Q in E[l^k].
std::pair<Int, Int> dlog2d(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                           const CurvePoint& Q, const CurvePoint& R, long ell, long k);

Mat2 frobenius_matrix_in_basis(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                               const CurvePoint& Q, long ell, long k);

/// Algorithm computing a diagonal basis of E[l^k] with the eigenvalues
/// accumulated digit by digit; exact eigen-relations are re-verified on the
/// returned points.
std::pair<TorsionBasis, FrobeniusData> diagonal_basis(const KummerTower& T,
                                                      const EllipticCurve& E, long ell, long k,
                                                      Rng& rng);

/// v_l of the first Smith divisor of M - lambda I; equals the off-diagonal
/// valuation of a triangularized form. Exact for k > 2h.
long conjugation_invariant_e(const Mat2& M, long ell, long k, long h);

struct IsogenyStep {
    EllipticCurve domain, codomain;
    RationalMap map;
};

/// Horizontal point of order l^k with the direction of basis.P (pass
/// mu_direction to use the other eigenvalue); E on the crater, k >= h+1.
CurvePoint horizontal_point(const KummerTower& T, const TorsionBasis& diag, long h, long k,
                            bool mu_direction, long max_level, Rng& rng);

/// Horizontal basis of E[l^k]: two horizontal points ordered by the smaller
/// canonical eigenvalue representative, with eigenvalues refined mod l^k.
std::pair<TorsionBasis, FrobeniusData> horizontal_basis(const KummerTower& T,
                                                        const EllipticCurve& E, long ell, long k,
                                                        Rng& rng);

/// Kernel polynomial of the cyclic subgroup generated by an order-l point,
/// pushed down to the subgroup's field of rationality.
TPoly kernel_polynomial_of_point(const KummerTower& T, const EllipticCurve& E, const CurvePoint& K,
                                 long ell);

Int pow_long(long base, long exp);
FrobeniusData make_frobenius_data(const Int& lambda, const Int& mu, long ell, long k);

}  // namespace isog
