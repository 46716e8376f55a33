#include "isog/torsion.hpp"

#include <algorithm>

namespace isog {

Int pow_long(long base, long exp) {
    Int r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

FrobeniusData make_frobenius_data(const Int& lambda, const Int& mu, long ell, long k) {
    FrobeniusData fd;
    fd.ell = ell;
    fd.k = k;
    fd.lambda = lambda;
    fd.mu = mu;
    Int mod = pow_long(ell, k);
    Int diff = (lambda - mu) % mod;
    if (diff < 0) diff += mod;
    fd.h = diff == 0 ? k : valuation(diff, Int(ell));
    auto val_of = [&](const Int& x) {
        Int v;
        if (ell == 2) {
            v = (x * x - 1) % mod;
        } else {
            v = (powmod(x, Int(ell - 1), mod) - 1) % mod;
        }
        if (v < 0) v += mod;
        long out = v == 0 ? k : valuation(v, Int(ell));
        if (ell == 2) out -= 1;
        return std::min(out, k);
    };
    long va = val_of(lambda), vb = val_of(mu);
    fd.alpha = std::max(va, vb);
    fd.beta = std::min(va, vb);
    return fd;
}

long torsion_d1(const Zp& F, const Int& a, const Int& b, long ell, Rng& rng) {
    if (ell == 2) return 2;
    long ord = mult_order_mod_prime(F.p(), ell);
    FpPoly W = divpoly_w_fp(F, a, b, ell);
    long expected = (ell * ell - 1) / 2;
    for (long d1 = ord; d1 <= ell - 1; d1 += ord) {
        if ((ell - 1) % d1 != 0) continue;
        FpPoly mod = d1 == 1 ? fp_x() : find_irreducible_polynomial(F, d1, rng);
        FqCtx K(F, mod);
        std::vector<FpPoly> roots;
        try {
            roots = fq_roots(K, fqp_from_fp(W), true, rng);
        } catch (const Error& e) {
            if (e.code() != errc::no_root) throw;
            continue;
        }
        if (static_cast<long>(roots.size()) != expected) continue;
        bool all_rational = true;
        FpPoly af = fp_const(F, a), bf = fp_const(F, b);
        for (const auto& x0 : roots) {
            FpPoly rhs = K.add(K.mul(K.mul(x0, x0), x0), K.add(K.mul(af, x0), bf));
            if (fq_sqrt(K, rhs, false, rng).empty()) {
                all_rational = false;
                break;
            }
        }
        if (all_rational) return d1;
    }
    fail(errc::not_elkies, "l-torsion not rational over any admissible d_1");
}

std::pair<CurvePoint, CurvePoint> ell_torsion_basis(const KummerTower& T, const EllipticCurve& E,
                                                    long ell, Rng& rng) {
    DivisionPolynomials dp(T, E);
    TPoly tor = dp.torsion_polynomial(ell);
    if (ell == 2) {
        // roots of x^3 + ax + b over level 1, points (x, 0)
        long lvl = E.level();
        TPoly f{E.b, E.a, T.zero(lvl), T.one(lvl)};
        auto roots = tower_all_roots(T, 1, tp_lift(T, f, std::max(lvl, 1L)), rng);
        if (roots.size() < 3) fail(errc::not_elkies, "2-torsion does not split at level 1");
        for (size_t i = roots.size(); i > 1; --i)
            std::swap(roots[i - 1], roots[rng.index(static_cast<long>(i))]);
        return {CurvePoint::at(roots[0], T.zero(1)), CurvePoint::at(roots[1], T.zero(1))};
    }
    auto roots = tower_all_roots(T, 1, tp_lift(T, dp.w(ell), 1), rng);
    if (static_cast<long>(roots.size()) != (ell * ell - 1) / 2)
        fail(errc::not_elkies, "l-division polynomial does not split at level 1 (check d_1)");
    // seeded shuffle, then pick P and an independent Q
    for (size_t i = roots.size(); i > 1; --i)
        std::swap(roots[i - 1], roots[rng.index(static_cast<long>(i))]);
    auto lift_point = [&](const TowerElement& x) {
        TowerElement rhs = curve_rhs(T, E, x);
        auto ys = fq_sqrt(T.level_ctx(1), T.lift(rhs, 1).rep, true, rng);
        check(!ys.empty(), "l-torsion ordinate not rational at level 1");
        return CurvePoint::at(T.lift(x, 1), T.from_rep(1, ys[rng.index(static_cast<long>(ys.size()))]));
    };
    CurvePoint P = lift_point(roots[0]);
    // abscissas of the multiples of P
    std::vector<TowerElement> px;
    CurvePoint cur = P;
    for (long j = 1; j <= (ell - 1) / 2; ++j) {
        px.push_back(cur.x);
        cur = point_add(T, E, cur, P);
    }
    for (size_t i = 1; i < roots.size(); ++i) {
        bool in_span = false;
        for (const auto& x : px) in_span = in_span || T.eq(x, roots[i]);
        if (!in_span) return {P, lift_point(roots[i])};
    }
    fail(errc::not_elkies, "no independent l-torsion point found");
}

std::pair<Int, Int> dlog2d(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                           const CurvePoint& Q, const CurvePoint& R, long ell, long k) {
    Int lk1 = pow_long(ell, k - 1);
    CurvePoint A = scalar_mul(T, E, lk1, P);
    CurvePoint B = scalar_mul(T, E, lk1, Q);
    if (A.inf || B.inf) fail(errc::not_a_basis, "basis points have order below l^k");
    // table of aA + bB over E[l]
    std::vector<std::pair<std::pair<long, long>, CurvePoint>> table;
    CurvePoint rowA = CurvePoint::infinity();
    for (long a = 0; a < ell; ++a) {
        CurvePoint cell = rowA;
        for (long b = 0; b < ell; ++b) {
            table.push_back({{a, b}, cell});
            cell = point_add(T, E, cell, B);
        }
        rowA = point_add(T, E, rowA, A);
    }
    auto lookup = [&](const CurvePoint& S) -> std::pair<long, long> {
        for (const auto& [ab, pt] : table)
            if (point_eq(T, pt, S)) return ab;
        fail(errc::not_a_basis, "point decomposition digit not found");
    };
    Int u = 0, v = 0;
    CurvePoint residue = R;
    Int scale = 1;
    for (long m = 0; m < k; ++m) {
        CurvePoint S = scalar_mul(T, E, pow_long(ell, k - 1 - m), residue);
        auto [da, db] = lookup(S);
        u += scale * da;
        v += scale * db;
        CurvePoint adj = point_add(T, E, scalar_mul(T, E, scale * da, P),
                                   scalar_mul(T, E, scale * db, Q));
        residue = point_sub(T, E, residue, adj);
        scale *= ell;
    }
    if (!residue.inf) fail(errc::not_a_basis, "decomposition leaves a residue");
    return {u, v};
}

Mat2 frobenius_matrix_in_basis(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                               const CurvePoint& Q, long ell, long k) {
    auto [m00, m10] = dlog2d(T, E, P, Q, frobenius_point(T, P), ell, k);
    auto [m01, m11] = dlog2d(T, E, P, Q, frobenius_point(T, Q), ell, k);
    return Mat2{m00, m01, m10, m11};
}

namespace {

// point-verified eigen adjustment: returns (coef, eigenvalue) such that
// base + coef*other is an exact eigenvector, from the candidate solutions of
// the digit quadratic. quad: c2 z^2 + c1 z + c0 = 0 mod l^(i+1).
struct EigenPick {
    Int coef;
    Int value;
};

}  // namespace

std::pair<TorsionBasis, FrobeniusData> diagonal_basis(const KummerTower& T,
                                                      const EllipticCurve& E, long ell, long k,
                                                      Rng& rng) {
    check(k >= 1, "k must be >= 1");
    auto [P, Q] = ell_torsion_basis(T, E, ell, rng);
    Int lambda = 0, mu = 0;
    for (long i = 0; i < k; ++i) {
        Int mod = pow_long(ell, i + 1);
        if (i > 0) {
            try {
                P = divide(T, E, ell, P, k + 1, rng);
                Q = divide(T, E, ell, Q, k + 1, rng);
            } catch (const Error& e) {
                if (e.code() == errc::not_divisible)
                    fail(errc::not_maximal, "divide failed at the expected level");
                throw;
            }
        }
        Mat2 M = frobenius_matrix_in_basis(T, E, P, Q, ell, i + 1);

        // Q' <- x P + Q: m10 x^2 + (m11 - m00) x - m01 = 0, eigenvalue m11 + x m10
        auto xs = solve_quadratic_mod_prime_power(M.m10, M.m11 - M.m00, -M.m01, ell, i + 1);
        // P' <- P + y Q: m01 y^2 + (m00 - m11) y - m10 = 0, eigenvalue m00 + y m01
        auto ys = solve_quadratic_mod_prime_power(M.m01, M.m00 - M.m11, -M.m10, ell, i + 1);
        if (xs.empty() || ys.empty())
            fail(errc::not_elkies, "eigenvalue equation has no solutions (crater not cyclic)");

        bool done = false;
        for (const Int& y : ys) {
            for (const Int& x : xs) {
                if ((1 - x * y) % ell == 0) continue;  // not a basis change
                CurvePoint Pn = point_add(T, E, P, scalar_mul(T, E, y, Q));
                CurvePoint Qn = point_add(T, E, scalar_mul(T, E, x, P), Q);
                Int ln = (M.m00 + y * M.m01) % mod;
                Int mn = (M.m11 + x * M.m10) % mod;
                if (ln < 0) ln += mod;
                if (mn < 0) mn += mod;
                if (!point_eq(T, frobenius_point(T, Pn), scalar_mul(T, E, ln, Pn))) continue;
                if (!point_eq(T, frobenius_point(T, Qn), scalar_mul(T, E, mn, Qn))) continue;
                P = Pn;
                Q = Qn;
                lambda = ln;
                mu = mn;
                done = true;
                break;
            }
            if (done) break;
        }
        if (!done) fail(errc::not_elkies, "no exact eigenbasis (curve not l-maximal or crater not cyclic)");
    }
    FrobeniusData fd = make_frobenius_data(lambda, mu, ell, k);
    TorsionBasis basis{E, ell, k, P, Q, BasisKind::diagonal, lambda, mu};
    return {basis, fd};
}

long conjugation_invariant_e(const Mat2& M, long ell, long k, long h) {
    Int mod = pow_long(ell, k);
    Int tr = (M.m00 + M.m11) % mod;
    Int det = (M.m00 * M.m11 - M.m01 * M.m10) % mod;
    if (det < 0) det += mod;
    if (tr < 0) tr += mod;
    auto [lam, mu] = hensel_eigenvalues(tr, det, ell, k);  // throws not_split
    (void)mu;
    long best = k;
    std::vector<Int> entries{Int(M.m00 - lam), M.m01, M.m10, Int(M.m11 - lam)};
    for (const Int& entry : entries) {
        Int r = entry % mod;
        if (r < 0) r += mod;
        if (r == 0) continue;
        best = std::min(best, valuation(r, Int(ell)));
    }
    return std::min(best, h);
}

TPoly kernel_polynomial_of_point(const KummerTower& T, const EllipticCurve& E, const CurvePoint& K,
                                 long ell) {
    check(!K.inf, "kernel generator must be nonzero");
    long lvl = K.x.level;
    TPoly D{T.one(lvl)};
    CurvePoint cur = K;
    for (long j = 1; j <= std::max(1L, (ell - 1) / 2); ++j) {
        check(!cur.inf, "kernel generator has order below l");
        D = tp_mul(T, D, TPoly{T.neg(cur.x), T.one(lvl)});
        cur = point_add(T, E, cur, K);
    }
    long min_lvl = 0;
    for (const auto& c : D) min_lvl = std::max(min_lvl, T.minimal_level(c));
    return tp_push_down(T, D, min_lvl);
}

CurvePoint horizontal_point(const KummerTower& T, const TorsionBasis& diag, long h, long k,
                            bool mu_direction, long max_level, Rng& rng) {
    check(diag.kind == BasisKind::diagonal, "horizontal_point wants a diagonal basis");
    check(diag.k == h + 1, "diagonal basis must be at level h+1");
    check(k >= h + 1, "k must be at least h+1");
    long ell = diag.ell;
    Int mod = pow_long(ell, h + 1);

    CurvePoint P = diag.P, Q = diag.Q;
    Int lambda = diag.lambda, mu = diag.mu;
    if (mu_direction) {
        std::swap(P, Q);
        std::swap(lambda, mu);
    }
    EllipticCurve Ecur = diag.E;
    struct Step {
        EllipticCurve domain, codomain;
        CurvePoint dual_kernel_gen;  // order-l point on the codomain
    };
    std::vector<Step> steps;

    for (long i = 1; i <= k - 1; ++i) {
        CurvePoint Kpt = scalar_mul(T, Ecur, pow_long(ell, h), P);
        TPoly D = kernel_polynomial_of_point(T, Ecur, Kpt, ell);
        check(tp_level(D) == 0, "horizontal step kernel is not rational");
        auto [Enext, phi] = velu(T, Ecur, D, ell, false);
        CurvePoint Qn = evaluate_isogeny(T, phi, Q);
        CurvePoint Pimg = evaluate_isogeny(T, phi, P);
        CurvePoint Pp;
        try {
            if (Pimg.inf) {
                // h = 0: the kernel is <P> itself; divide before mapping
                Pp = evaluate_isogeny(T, phi, divide(T, Ecur, ell, P, max_level, rng));
                check(!Pp.inf, "divided preimage still maps into the kernel");
            } else {
                Pp = divide(T, Enext, ell, Pimg, max_level, rng);
            }
        } catch (const Error& e) {
            if (e.code() == errc::not_divisible)
                fail(errc::not_maximal, "divide failed during the horizontal walk");
            throw;
        }
        // re-diagonalize: pi(P') = alpha P' + beta Q_n with l^h | beta
        auto [alpha, beta] = dlog2d(T, Enext, Pp, Qn, frobenius_point(T, Pp), ell, h + 1);
        check(alpha == lambda % mod, "walk left the expected eigen-direction");
        if (beta != 0) {
            Int denom = (mu - alpha) % mod;
            if (denom < 0) denom += mod;
            long vd = valuation(denom, Int(ell));
            check(vd <= h && valuation(beta, Int(ell)) >= vd, "correction is not solvable");
            Int c = (beta / pow_long(ell, vd)) *
                    invmod(denom / pow_long(ell, vd), pow_long(ell, h + 1 - vd));
            c %= pow_long(ell, h + 1 - vd);
            Pp = point_sub(T, Enext, Pp, scalar_mul(T, Enext, c, Qn));
        }
        check(point_eq(T, frobenius_point(T, Pp), scalar_mul(T, Enext, lambda, Pp)),
              "corrected point is not an exact eigenvector");
        steps.push_back(Step{Ecur, Enext, scalar_mul(T, Enext, pow_long(ell, h), Qn)});
        Ecur = Enext;
        P = Pp;
        Q = Qn;
    }

    // raise the order to l^k, then come back through the dual chain
    CurvePoint R = P;
    for (long s = 0; s < k - (h + 1); ++s) {
        try {
            R = divide(T, Ecur, ell, R, max_level, rng);
        } catch (const Error& e) {
            if (e.code() == errc::not_divisible) fail(errc::not_maximal, "final division failed");
            throw;
        }
    }
    for (size_t s = steps.size(); s-- > 0;) {
        const Step& st = steps[s];
        TPoly Dd = kernel_polynomial_of_point(T, st.codomain, st.dual_kernel_gen, ell);
        check(tp_level(Dd) == 0, "dual kernel is not rational");
        auto [Eback, dual] = velu(T, st.codomain, Dd, ell, false);
        CurveIso iso = isomorphism_between(T, Eback, st.domain, rng);
        R = apply_iso(T, iso, evaluate_isogeny(T, dual, R));
        check(on_curve(T, st.domain, R), "dual step left the curve");
    }
    check(point_order_power(T, diag.E, R, ell, k) == k, "horizontal point has wrong order");
    return R;
}

std::pair<TorsionBasis, FrobeniusData> horizontal_basis(const KummerTower& T,
                                                        const EllipticCurve& E, long ell, long k,
                                                        Rng& rng) {
    // discover h with short diagonal runs; the first run where the eigenvalue
    // reductions separate is exactly the one at k' = h+1
    TorsionBasis diag;
    FrobeniusData fd0;
    long h = -1;
    for (long kp = 1; kp <= k; ++kp) {
        std::tie(diag, fd0) = diagonal_basis(T, E, ell, kp, rng);
        if (fd0.h < kp) {
            h = fd0.h;
            break;
        }
    }
    if (h < 0)
        fail(errc::invalid_input, "k is not above the volcano height (need k >= h+1)");
    long max_level = k + 1;
    CurvePoint R1 = horizontal_point(T, diag, h, k, false, max_level, rng);
    CurvePoint R2 = horizontal_point(T, diag, h, k, true, max_level, rng);

    // independence: l^(k-1) R1 not in <l^(k-1) R2>
    Int lk1 = pow_long(ell, k - 1);
    CurvePoint A = scalar_mul(T, E, lk1, R1);
    CurvePoint B = scalar_mul(T, E, lk1, R2);
    bool dependent = false;
    CurvePoint cur = CurvePoint::infinity();
    for (long j = 0; j < ell; ++j) {
        if (point_eq(T, A, cur)) dependent = true;
        cur = point_add(T, E, cur, B);
    }
    if (dependent) fail(errc::not_a_basis, "horizontal points are dependent");

    Mat2 M = frobenius_matrix_in_basis(T, E, R1, R2, ell, k);
    check(M.m01 == 0 && M.m10 == 0, "horizontal basis does not diagonalize the Frobenius");
    Int mod1 = pow_long(ell, h + 1);
    check(M.m00 % mod1 == diag.lambda % mod1, "refined eigenvalue mismatch");
    Int lk = M.m00, mk = M.m11;
    if (mk < lk) {
        std::swap(lk, mk);
        std::swap(R1, R2);
    }
    FrobeniusData fd = make_frobenius_data(lk, mk, ell, k);
    TorsionBasis basis{E, ell, k, R1, R2, BasisKind::horizontal, lk, mk};
    return {basis, fd};
}

}  // namespace isog
