#include "isog/curve.hpp"

#include <algorithm>
#include <functional>

namespace isog {

// ---- TPoly helpers ----

long tp_level(const TPoly& f) {
    long lvl = 0;
    for (const auto& c : f) lvl = std::max(lvl, c.level);
    return lvl;
}

TPoly tp_lift(const KummerTower& T, const TPoly& f, long level) {
    TPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = T.lift(f[i], level);
    return r;
}

TPoly tp_push_down(const KummerTower& T, const TPoly& f, long level) {
    TPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = T.push_down(f[i], level);
    return r;
}

TPoly tp_from_fp(const KummerTower& T, long level, const FpPoly& f) {
    TPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) r[i] = T.from_base(f.c[i], level);
    tp_normalize(r);
    return r;
}

TPoly tp_x(const KummerTower& T, long level) {
    return TPoly{T.zero(level), T.one(level)};
}

TPoly tp_const(const KummerTower& T, const TowerElement& c) {
    (void)T;
    if (c.rep.is_zero()) return {};
    return TPoly{c};
}

long tp_deg(const TPoly& f) { return static_cast<long>(f.size()) - 1; }

void tp_normalize(TPoly& f) {
    while (!f.empty() && f.back().rep.is_zero()) f.pop_back();
}

TPoly tp_add(const KummerTower& T, const TPoly& a, const TPoly& b) {
    TPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size())
            r[i] = T.add(a[i], b[i]);
        else
            r[i] = i < a.size() ? a[i] : b[i];
    }
    tp_normalize(r);
    return r;
}

TPoly tp_sub(const KummerTower& T, const TPoly& a, const TPoly& b) {
    TPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        TowerElement x = i < a.size() ? a[i] : T.zero();
        TowerElement y = i < b.size() ? b[i] : T.zero();
        r[i] = T.sub(x, y);
    }
    tp_normalize(r);
    return r;
}

TPoly tp_mul(const KummerTower& T, const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    long level = std::max(tp_level(a), tp_level(b));
    if (level == 0) {
        // coefficients in F_q: one base-field product
        FpPoly fa, fb;
        fa.c.resize(a.size());
        fb.c.resize(b.size());
        for (size_t i = 0; i < a.size(); ++i) fa.c[i] = a[i].rep.is_zero() ? Int(0) : a[i].rep.c[0];
        for (size_t i = 0; i < b.size(); ++i) fb.c[i] = b[i].rep.is_zero() ? Int(0) : b[i].rep.c[0];
        fp_normalize(fa);
        fp_normalize(fb);
        return tp_from_fp(T, 0, fp_mul(T.base(), fa, fb));
    }
    FqCtx K = T.level_ctx(level);
    FqPoly prod = fqp_mul(K, tpoly_to_fq(T, level, a), tpoly_to_fq(T, level, b));
    return tpoly_from_fq(T, level, prod);
}

TPoly tp_scale(const KummerTower& T, const TPoly& a, const TowerElement& s) {
    if (s.rep.is_zero()) return {};
    TPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = T.mul(a[i], s);
    tp_normalize(r);
    return r;
}

TPoly tp_monic(const KummerTower& T, const TPoly& a) {
    if (a.empty()) return a;
    if (T.eq(a.back(), T.one(a.back().level))) return a;
    return tp_scale(T, a, T.inv(a.back()));
}

TPoly tp_divrem(const KummerTower& T, const TPoly& a, const TPoly& b, TPoly* quo) {
    if (b.empty()) fail(errc::invalid_input, "division by zero polynomial");
    long db = tp_deg(b);
    if (tp_deg(a) < db) {
        if (quo) quo->clear();
        return a;
    }
    TPoly r = a;
    TowerElement binv = T.inv(b.back());
    TPoly q(r.size() - db);
    for (long i = tp_deg(r); i >= db; --i) {
        if (r[i].rep.is_zero()) continue;
        TowerElement qq = T.mul(r[i], binv);
        q[i - db] = qq;
        for (long k = 0; k <= db; ++k) r[i - db + k] = T.sub(r[i - db + k], T.mul(qq, b[k]));
    }
    r.resize(db);
    tp_normalize(r);
    if (quo) {
        for (auto& c : q)
            if (c.rep.c.empty() && c.level == 0) c = T.zero();
        tp_normalize(q);
        *quo = std::move(q);
    }
    return r;
}

TPoly tp_gcd(const KummerTower& T, TPoly a, TPoly b) {
    while (!b.empty()) {
        TPoly r = tp_rem(T, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return tp_monic(T, a);
}

TPoly tp_derivative(const KummerTower& T, const TPoly& f) {
    TPoly r;
    if (f.size() <= 1) return r;
    r.resize(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = T.mul(f[i], T.from_base(Int(i)));
    tp_normalize(r);
    return r;
}

TowerElement tp_eval(const KummerTower& T, const TPoly& f, const TowerElement& x) {
    TowerElement acc = T.zero(x.level);
    for (size_t i = f.size(); i-- > 0;) acc = T.add(T.mul(acc, x), f[i]);
    return acc;
}

TPoly tp_radical(const KummerTower& T, const TPoly& f) {
    if (f.empty()) return f;
    TPoly d = tp_derivative(T, f);
    if (d.empty()) fail(errc::internal, "radical of an inseparable polynomial");
    TPoly g = tp_gcd(T, f, d);
    if (tp_deg(g) == 0) return tp_monic(T, f);
    TPoly q;
    tp_divrem(T, f, g, &q);
    return tp_monic(T, q);
}

bool tp_eq(const KummerTower& T, const TPoly& a, const TPoly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!T.eq(a[i], b[i])) return false;
    return true;
}

// ---- curve basics ----

TowerElement curve_rhs(const KummerTower& T, const EllipticCurve& E, const TowerElement& x) {
    return T.add(T.add(T.mul(T.mul(x, x), x), T.mul(E.a, x)), E.b);
}

TowerElement discriminant(const KummerTower& T, const EllipticCurve& E) {
    TowerElement a3 = T.mul(T.mul(E.a, E.a), E.a);
    TowerElement b2 = T.mul(E.b, E.b);
    return T.add(T.mul(T.from_base(4), a3), T.mul(T.from_base(27), b2));
}

TowerElement j_invariant(const KummerTower& T, const EllipticCurve& E) {
    TowerElement a3 = T.mul(T.mul(E.a, E.a), E.a);
    TowerElement num = T.mul(T.from_base(6912), a3);  // 1728 * 4a^3
    TowerElement den = discriminant(T, E);
    if (den.rep.is_zero()) fail(errc::invalid_input, "singular curve");
    return T.div(num, den);
}

bool on_curve(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P) {
    if (P.inf) return true;
    return T.eq(T.mul(P.y, P.y), curve_rhs(T, E, P.x));
}

bool point_eq(const KummerTower& T, const CurvePoint& P, const CurvePoint& Q) {
    if (P.inf || Q.inf) return P.inf == Q.inf;
    return T.eq(P.x, Q.x) && T.eq(P.y, Q.y);
}

CurvePoint point_neg(const KummerTower& T, const CurvePoint& P) {
    if (P.inf) return P;
    return CurvePoint::at(P.x, T.neg(P.y));
}

CurvePoint point_add(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                     const CurvePoint& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    auto [x1, x2] = T.align(P.x, Q.x);
    auto [y1, y2] = T.align(T.lift(P.y, x1.level), T.lift(Q.y, x1.level));
    TowerElement lambda;
    if (T.eq(x1, x2)) {
        if (T.eq(y1, T.neg(y2))) return CurvePoint::infinity();
        TowerElement num =
            T.add(T.mul(T.from_base(3), T.mul(x1, x1)), T.lift(E.a, x1.level));
        lambda = T.div(num, T.mul(T.from_base(2), y1));
    } else {
        lambda = T.div(T.sub(y2, y1), T.sub(x2, x1));
    }
    TowerElement x3 = T.sub(T.sub(T.mul(lambda, lambda), x1), x2);
    TowerElement y3 = T.sub(T.mul(lambda, T.sub(x1, x3)), y1);
    return CurvePoint::at(x3, y3);
}

CurvePoint point_sub(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                     const CurvePoint& Q) {
    return point_add(T, E, P, point_neg(T, Q));
}

CurvePoint scalar_mul(const KummerTower& T, const EllipticCurve& E, const Int& m,
                      const CurvePoint& P) {
    if (P.inf || m == 0) return CurvePoint::infinity();
    Int e = m;
    CurvePoint base = P;
    if (e < 0) {
        e = -e;
        base = point_neg(T, P);
    }
    CurvePoint acc = CurvePoint::infinity();
    long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        acc = point_add(T, E, acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = point_add(T, E, acc, base);
    }
    return acc;
}

CurvePoint frobenius_point(const KummerTower& T, const CurvePoint& P) {
    if (P.inf) return P;
    return CurvePoint::at(T.frobenius_power(P.x, 0), T.frobenius_power(P.y, 0));
}

long point_order_power(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                       long ell, long cap) {
    CurvePoint cur = P;
    for (long k = 0; k <= cap; ++k) {
        if (cur.inf) return k;
        cur = scalar_mul(T, E, Int(ell), cur);
    }
    fail(errc::invalid_input, "point order exceeds cap");
}

// ---- division polynomials ----

namespace {

TPoly curve_f(const KummerTower& T, const EllipticCurve& E) {
    long lvl = E.level();
    TPoly f(4, T.zero(lvl));
    f[0] = E.b;
    f[1] = E.a;
    f[3] = T.one(lvl);
    tp_normalize(f);
    return f;
}

TPoly w_base(const KummerTower& T, const EllipticCurve& E, long m) {
    long lvl = E.level();
    const TowerElement& a = E.a;
    const TowerElement& b = E.b;
    auto C = [&](long v) { return T.from_base(Int(v), lvl); };
    switch (m) {
        case 0: return {};
        case 1: return TPoly{T.one(lvl)};
        case 2: return TPoly{C(2)};
        case 3: {
            TPoly w(5, T.zero(lvl));
            w[4] = C(3);
            w[2] = T.mul(C(6), a);
            w[1] = T.mul(C(12), b);
            w[0] = T.neg(T.mul(a, a));
            tp_normalize(w);
            return w;
        }
        case 4: {
            TPoly w(7, T.zero(lvl));
            TowerElement a2 = T.mul(a, a);
            w[6] = C(4);
            w[4] = T.mul(C(20), a);
            w[3] = T.mul(C(80), b);
            w[2] = T.mul(C(-20), a2);
            w[1] = T.mul(C(-16), T.mul(a, b));
            w[0] = T.sub(T.mul(C(-32), T.mul(b, b)), T.mul(C(4), T.mul(a2, a)));
            tp_normalize(w);
            return w;
        }
    }
    throw Error(errc::internal, "w_base only defined for m <= 4");
}

}  // namespace

DivisionPolynomials::DivisionPolynomials(const KummerTower& T, EllipticCurve E)
    : T_(T), E_(std::move(E)), f_(curve_f(T, E_)) {}

const TPoly& DivisionPolynomials::w(long m) {
    check(m >= 0, "division polynomial index");
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    TPoly result;
    if (m <= 4) {
        result = w_base(T_, E_, m);
    } else if (m % 2 == 1) {
        long j = m / 2;
        TPoly t1 = tp_mul(T_, w(j + 2), tp_mul(T_, w(j), tp_mul(T_, w(j), w(j))));
        TPoly t2 = tp_mul(T_, w(j - 1), tp_mul(T_, w(j + 1), tp_mul(T_, w(j + 1), w(j + 1))));
        TPoly f2 = tp_mul(T_, f_, f_);
        result = (j % 2 == 0) ? tp_sub(T_, tp_mul(T_, f2, t1), t2)
                              : tp_sub(T_, t1, tp_mul(T_, f2, t2));
    } else {
        long j = m / 2;
        TPoly t1 = tp_mul(T_, w(j + 2), tp_mul(T_, w(j - 1), w(j - 1)));
        TPoly t2 = tp_mul(T_, w(j - 2), tp_mul(T_, w(j + 1), w(j + 1)));
        TPoly inner = tp_sub(T_, t1, t2);
        TowerElement inv2 = T_.inv(T_.from_base(2, E_.level()));
        result = tp_scale(T_, tp_mul(T_, w(j), inner), inv2);
    }
    return memo_.emplace(m, std::move(result)).first->second;
}

TPoly DivisionPolynomials::torsion_polynomial(long m) {
    check(m >= 1, "torsion polynomial index");
    if (m % 2 == 1) return w(m);
    return tp_mul(T_, f_, tp_mul(T_, w(m), w(m)));
}

std::pair<TPoly, TPoly> DivisionPolynomials::mult_x_map(long r) {
    check(r >= 1 && r % 2 == 1, "multiplication x-map wants odd r");
    if (r == 1) return {tp_x(T_, E_.level()), TPoly{T_.one(E_.level())}};
    // phi_r = x*w_r^2 - f*w_{r+1}*w_{r-1}; denominator w_r^2
    TPoly wr2 = tp_mul(T_, w(r), w(r));
    TPoly phi = tp_sub(T_, tp_mul(T_, tp_x(T_, E_.level()), wr2),
                       tp_mul(T_, f_, tp_mul(T_, w(r + 1), w(r - 1))));
    return {phi, wr2};
}

DivisionPolynomialsMod::DivisionPolynomialsMod(const KummerTower& T, EllipticCurve E, TPoly mod)
    : T_(T), E_(std::move(E)), mod_(std::move(mod)) {
    f_ = tp_rem(T_, curve_f(T_, E_), mod_);
}

const TPoly& DivisionPolynomialsMod::w(long m) {
    check(m >= 0, "division polynomial index");
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    TPoly result;
    if (m <= 4) {
        result = tp_rem(T_, w_base(T_, E_, m), mod_);
    } else if (m % 2 == 1) {
        long j = m / 2;
        TPoly wj = w(j);
        TPoly wj1 = w(j + 1);
        TPoly t1 = tp_rem(T_, tp_mul(T_, w(j + 2), tp_rem(T_, tp_mul(T_, wj, tp_mul(T_, wj, wj)), mod_)), mod_);
        TPoly t2 = tp_rem(T_, tp_mul(T_, w(j - 1), tp_rem(T_, tp_mul(T_, wj1, tp_mul(T_, wj1, wj1)), mod_)), mod_);
        TPoly f2 = tp_rem(T_, tp_mul(T_, f_, f_), mod_);
        result = (j % 2 == 0) ? tp_sub(T_, tp_rem(T_, tp_mul(T_, f2, t1), mod_), t2)
                              : tp_sub(T_, t1, tp_rem(T_, tp_mul(T_, f2, t2), mod_));
    } else {
        long j = m / 2;
        TPoly t1 = tp_rem(T_, tp_mul(T_, w(j + 2), tp_rem(T_, tp_mul(T_, w(j - 1), w(j - 1)), mod_)), mod_);
        TPoly t2 = tp_rem(T_, tp_mul(T_, w(j - 2), tp_rem(T_, tp_mul(T_, w(j + 1), w(j + 1)), mod_)), mod_);
        TowerElement inv2 = T_.inv(T_.from_base(2, E_.level()));
        result = tp_scale(T_, tp_rem(T_, tp_mul(T_, w(j), tp_sub(T_, t1, t2)), mod_), inv2);
    }
    return memo_.emplace(m, std::move(result)).first->second;
}

TPoly division_polynomial(const KummerTower& T, const EllipticCurve& E, long m) {
    DivisionPolynomials dp(T, E);
    return dp.torsion_polynomial(m);
}

// ---- divide ----

CurvePoint divide(const KummerTower& T, const EllipticCurve& E, long ell, const CurvePoint& P,
                  long max_level, Rng& rng) {
    if (P.inf) return P;
    DivisionPolynomials dp(T, E);
    TPoly num, den;
    if (ell == 2) {
        // x-map of [2]: (phi_2, 4f) with phi_2 = x*4f - w_3
        TPoly f = dp.torsion_polynomial(2);
        num = tp_sub(T, tp_mul(T, tp_x(T, E.level()), f), dp.w(3));
        den = f;
    } else {
        std::tie(num, den) = dp.mult_x_map(ell);
    }
    for (long lvl = P.x.level; lvl <= max_level; ++lvl) {
        TPoly fiber = tp_sub(T, tp_lift(T, num, lvl), tp_scale(T, tp_lift(T, den, lvl),
                                                               T.lift(P.x, lvl)));
        auto roots = tower_all_roots(T, lvl, fiber, rng);
        if (roots.empty()) continue;
        // seeded choice among the fiber roots
        for (size_t i = roots.size(); i > 1; --i)
            std::swap(roots[i - 1], roots[rng.index(static_cast<long>(i))]);
        for (const auto& x : roots) {
            TowerElement rhs = curve_rhs(T, E, x);
            auto ys = fq_sqrt(T.level_ctx(lvl), T.lift(rhs, lvl).rep, true, rng);
            for (const auto& yrep : ys) {
                CurvePoint cand = CurvePoint::at(x, T.from_rep(lvl, yrep));
                if (point_eq(T, scalar_mul(T, E, Int(ell), cand), P)) return cand;
            }
        }
    }
    fail(errc::not_divisible, "no preimage within the tower height");
}

// ---- Velu ----

std::pair<EllipticCurve, RationalMap> velu(const KummerTower& T, const EllipticCurve& E,
                                           const TPoly& D_in, long r, bool check_kernel) {
    long lvl = std::max(E.level(), tp_level(D_in));
    TPoly D = tp_monic(T, tp_lift(T, D_in, lvl));
    EllipticCurve Elv{T.lift(E.a, lvl), T.lift(E.b, lvl)};
    if (r == 1) {
        if (tp_deg(D) != 0 && !D.empty() && tp_deg(D) != 0)
            fail(errc::invalid_input, "degree-1 isogeny has trivial kernel");
        RationalMap id{tp_x(T, lvl), TPoly{T.one(lvl)}, TPoly{T.one(lvl)}, 1};
        return {Elv, id};
    }
    long d = tp_deg(D);
    if (r == 2) {
        if (d != 1) fail(errc::invalid_input, "2-isogeny kernel polynomial must be linear");
    } else {
        if (r % 2 == 0) fail(errc::invalid_input, "velu handles odd kernel orders (and r = 2)");
        if (d != (r - 1) / 2) fail(errc::not_a_kernel, "kernel polynomial degree mismatch");
    }

    const TowerElement& a = Elv.a;
    const TowerElement& b = Elv.b;
    auto C = [&](long v) { return T.from_base(Int(v), lvl); };

    TowerElement s1 = d >= 1 ? T.neg(D[d - 1]) : T.zero(lvl);
    TowerElement s2 = d >= 2 ? D[d - 2] : T.zero(lvl);
    TowerElement s3 = d >= 3 ? T.neg(D[d - 3]) : T.zero(lvl);

    TowerElement t, wsum;
    if (r == 2) {
        const TowerElement& x0 = s1;
        t = T.add(T.mul(C(3), T.mul(x0, x0)), a);
        wsum = T.mul(x0, t);
    } else {
        TowerElement p2 = T.sub(T.mul(s1, s1), T.mul(C(2), s2));
        TowerElement p3 = T.add(T.sub(T.mul(T.mul(s1, s1), s1), T.mul(C(3), T.mul(s1, s2))),
                                T.mul(C(3), s3));
        t = T.mul(C(2), T.add(T.mul(C(3), p2), T.mul(C(d), a)));
        wsum = T.mul(C(2), T.add(T.add(T.mul(C(5), p3), T.mul(C(3), T.mul(a, s1))),
                                 T.mul(C(2 * d), b)));
    }
    EllipticCurve codomain{T.sub(a, T.mul(C(5), t)), T.sub(b, T.mul(C(7), wsum))};

    TPoly g, h;
    if (r == 2) {
        // x + t/(x - x0)
        h = D;
        g = tp_add(T, tp_mul(T, tp_x(T, lvl), D), tp_const(T, t));
    } else {
        TPoly f = curve_f(T, Elv);
        TPoly fprime = tp_derivative(T, f);
        TPoly H = D;
        TPoly Hp = tp_derivative(T, H);
        TPoly Hpp = tp_derivative(T, Hp);
        TPoly H2 = tp_mul(T, H, H);
        // (r x - 2 s1) H^2 - 2 f' H' H + 4 f (H'^2 - H'' H)
        TPoly lead = TPoly{T.neg(T.mul(C(2), s1)), C(static_cast<long>(r))};
        TPoly term1 = tp_mul(T, lead, H2);
        TPoly term2 = tp_scale(T, tp_mul(T, fprime, tp_mul(T, Hp, H)), C(2));
        TPoly term3 = tp_scale(
            T, tp_mul(T, f, tp_sub(T, tp_mul(T, Hp, Hp), tp_mul(T, Hpp, H))), C(4));
        g = tp_add(T, tp_sub(T, term1, term2), term3);
        h = H2;
    }

    if (check_kernel) {
        // f * (g' h - g h')^2 == (g^3 + a' g h^2 + b' h^3) * h
        TPoly f = curve_f(T, Elv);
        TPoly gp = tp_derivative(T, g);
        TPoly hp = tp_derivative(T, h);
        TPoly wr = tp_sub(T, tp_mul(T, gp, h), tp_mul(T, g, hp));
        TPoly lhs = tp_mul(T, f, tp_mul(T, wr, wr));
        TPoly h2 = tp_mul(T, h, h);
        TPoly rhs = tp_mul(T, g, tp_mul(T, g, g));
        rhs = tp_add(T, rhs, tp_mul(T, tp_const(T, codomain.a), tp_mul(T, g, h2)));
        rhs = tp_add(T, rhs, tp_mul(T, tp_const(T, codomain.b), tp_mul(T, h2, h)));
        rhs = tp_mul(T, rhs, h);
        if (!tp_eq(T, lhs, rhs)) fail(errc::not_a_kernel, "curve identity fails for this kernel");
    }

    RationalMap map{std::move(g), std::move(h), D, r};
    return {codomain, std::move(map)};
}

CurvePoint evaluate_isogeny(const KummerTower& T, const RationalMap& map, const CurvePoint& P) {
    if (P.inf) return P;
    TowerElement hx = tp_eval(T, map.den, P.x);
    if (hx.rep.is_zero()) return CurvePoint::infinity();
    TowerElement gx = tp_eval(T, map.num, P.x);
    TowerElement gpx = tp_eval(T, tp_derivative(T, map.num), P.x);
    TowerElement hpx = tp_eval(T, tp_derivative(T, map.den), P.x);
    TowerElement hinv = T.inv(hx);
    TowerElement xx = T.mul(gx, hinv);
    // u' = (g' h - g h') / h^2
    TowerElement up = T.mul(T.sub(T.mul(gpx, hx), T.mul(gx, hpx)), T.mul(hinv, hinv));
    return CurvePoint::at(xx, T.mul(P.y, up));
}

RationalMap isogeny_x_map_of_multiplication(const KummerTower& T, const EllipticCurve& E,
                                            long r) {
    DivisionPolynomials dp(T, E);
    auto [num, den] = dp.mult_x_map(r);
    TPoly kernel = tp_monic(T, dp.w(r));
    // normalize denominator monic; numerator scales along
    TowerElement lc = den.back();
    TowerElement s = T.inv(lc);
    RationalMap map{tp_scale(T, num, s), tp_scale(T, den, s), std::move(kernel),
                    static_cast<long>(r) * r};
    return map;
}

CurveIso isomorphism_between(const KummerTower& T, const EllipticCurve& from,
                             const EllipticCurve& to, Rng& rng) {
    if (from.a.rep.is_zero() || from.b.rep.is_zero())
        fail(errc::invalid_input, "isomorphism matching needs a*b != 0 (j not 0 or 1728)");
    TowerElement u4 = T.div(to.a, from.a);
    TowerElement u6 = T.div(to.b, from.b);
    TowerElement u2 = T.div(u6, u4);
    if (!T.eq(T.mul(u2, u2), u4) || !T.eq(T.mul(T.mul(u2, u2), u2), u6))
        fail(errc::not_a_kernel, "curves are not isomorphic via (u^2, u^3)");
    long lvl = u2.level;
    auto us = fq_sqrt(T.level_ctx(lvl), T.lift(u2, lvl).rep, false, rng);
    check(!us.empty(), "u^2 has no square root in its own level");
    TowerElement u = T.from_rep(lvl, us.front());
    return CurveIso{u2, T.mul(u, u2)};
}

CurvePoint apply_iso(const KummerTower& T, const CurveIso& iso, const CurvePoint& P) {
    if (P.inf) return P;
    return CurvePoint::at(T.mul(iso.u2, P.x), T.mul(iso.u3, P.y));
}

Int naive_point_count(const Zp& F, const Int& a, const Int& b) {
    check(F.p() < 100000, "naive count wants a small prime");
    long p = static_cast<long>(F.p().get_si());
    std::vector<int> chi(p, -1);
    for (long x = 1; x < p; ++x) chi[x * x % p] = 1;
    chi[0] = 0;
    long aa = static_cast<long>(F.reduce(a).get_si());
    long bb = static_cast<long>(F.reduce(b).get_si());
    long count = 0;
    for (long x = 0; x < p; ++x) {
        long rhs = ((x * x % p) * x + aa * x + bb) % p;
        count += 1 + chi[rhs];
    }
    return Int(count + 1);  // infinity
}

// ---- rational kernel enumeration over ad-hoc extensions ----

FpPoly divpoly_w_fp(const Zp& F, const Int& a, const Int& b, long m) {
    check(m >= 0, "division polynomial index");
    std::map<long, FpPoly> memo;
    FpPoly f = FpPoly{{F.reduce(b), F.reduce(a), Int(0), Int(1)}};
    fp_normalize(f);
    Int inv2 = F.inv(Int(2));
    std::function<const FpPoly&(long)> w = [&](long i) -> const FpPoly& {
        auto it = memo.find(i);
        if (it != memo.end()) return it->second;
        FpPoly result;
        if (i == 0) {
            result = FpPoly{};
        } else if (i == 1) {
            result = fp_const(F, 1);
        } else if (i == 2) {
            result = fp_const(F, 2);
        } else if (i == 3) {
            Int aa = F.reduce(a), bb = F.reduce(b);
            result.c = {-aa * aa, 12 * bb, 6 * aa, Int(0), Int(3)};
            for (auto& v : result.c) v = F.reduce(v);
            fp_normalize(result);
        } else if (i == 4) {
            Int aa = F.reduce(a), bb = F.reduce(b);
            Int a2 = aa * aa;
            result.c = {-32 * bb * bb - 4 * a2 * aa, -16 * aa * bb, -20 * a2,
                        80 * bb, 20 * aa, Int(0), Int(4)};
            for (auto& v : result.c) v = F.reduce(v);
            fp_normalize(result);
        } else if (i % 2 == 1) {
            long j = i / 2;
            FpPoly t1 = fp_mul(F, w(j + 2), fp_mul(F, w(j), fp_mul(F, w(j), w(j))));
            FpPoly t2 = fp_mul(F, w(j - 1), fp_mul(F, w(j + 1), fp_mul(F, w(j + 1), w(j + 1))));
            FpPoly f2 = fp_mul(F, f, f);
            result = (j % 2 == 0) ? fp_sub(F, fp_mul(F, f2, t1), t2)
                                  : fp_sub(F, t1, fp_mul(F, f2, t2));
        } else {
            long j = i / 2;
            FpPoly t1 = fp_mul(F, w(j + 2), fp_mul(F, w(j - 1), w(j - 1)));
            FpPoly t2 = fp_mul(F, w(j - 2), fp_mul(F, w(j + 1), w(j + 1)));
            result = fp_scale(F, fp_mul(F, w(j), fp_sub(F, t1, t2)), inv2);
        }
        return memo.emplace(i, std::move(result)).first->second;
    };
    return w(m);
}

namespace {

struct FqPoint {
    bool inf = true;
    FpPoly x, y;
};

FqPoint fq_point_add(const FqCtx& K, const FpPoly& a, const FqPoint& P, const FqPoint& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    FpPoly lambda;
    if (P.x == Q.x) {
        if (K.add(P.y, Q.y).is_zero()) return FqPoint{};
        FpPoly num = K.add(K.mul(K.from_int(3), K.mul(P.x, P.x)), a);
        lambda = K.mul(num, K.inv(K.mul(K.from_int(2), P.y)));
    } else {
        lambda = K.mul(K.sub(Q.y, P.y), K.inv(K.sub(Q.x, P.x)));
    }
    FpPoly x3 = K.sub(K.sub(K.mul(lambda, lambda), P.x), Q.x);
    FpPoly y3 = K.sub(K.mul(lambda, K.sub(P.x, x3)), P.y);
    return FqPoint{false, std::move(x3), std::move(y3)};
}

}  // namespace

std::vector<FpPoly> rational_kernel_polynomials(const Zp& F, const Int& a, const Int& b, long r,
                                                Rng& rng) {
    std::vector<FpPoly> found;
    auto push_unique = [&](const FpPoly& D) {
        for (const auto& e : found)
            if (e == D) return;
        found.push_back(D);
    };
    if (r == 2) {
        FpPoly f;
        f.c = {F.reduce(b), F.reduce(a), Int(0), Int(1)};
        FqCtx K = FqCtx::prime_field(F);
        try {
            for (const auto& root : fq_roots(K, fqp_from_fp(f), true, rng)) {
                FpPoly D{{F.neg(root.is_zero() ? Int(0) : root.c[0]), Int(1)}};
                push_unique(D);
            }
        } catch (const Error& e) {
            if (e.code() != errc::no_root) throw;
        }
        return found;
    }
    check(r % 2 == 1 && r > 1, "kernel enumeration wants an odd prime order");
    FpPoly W = divpoly_w_fp(F, a, b, r);

    long half = (r - 1) / 2;
    for (long d = 1; d <= 2 * half && static_cast<long>(found.size()) < r + 1; ++d) {
        FpPoly mod = d == 1 ? fp_x() : find_irreducible_polynomial(F, d, rng);
        FqCtx K(F, mod);
        std::vector<FpPoly> roots;
        try {
            roots = fq_roots(K, fqp_from_fp(W), true, rng);
        } catch (const Error& e) {
            if (e.code() != errc::no_root) throw;
            continue;
        }
        FpPoly af = fp_const(F, a);
        for (const auto& x0 : roots) {
            // y^2 = x0^3 + a x0 + b over K
            FpPoly rhs = K.add(K.mul(K.mul(x0, x0), x0),
                               K.add(K.mul(af, x0), fp_const(F, b)));
            auto ys = fq_sqrt(K, rhs, false, rng);
            if (ys.empty()) continue;
            FqPoint P{false, x0, ys.front()};
            // abscissas of jP, j = 1..(r-1)/2
            std::vector<FpPoly> xs{x0};
            FqPoint cur = P;
            bool good = true;
            for (long j = 2; j <= half; ++j) {
                cur = fq_point_add(K, af, cur, P);
                if (cur.inf) {
                    good = false;  // order below r
                    break;
                }
                xs.push_back(cur.x);
            }
            if (!good) continue;
            // order exactly r: (r-1)/2+1 more additions reach -P
            FqPoint probe = fq_point_add(K, af, cur, P);
            // x((half+1) P) must equal x(half P) only when r = 2*half+1: half+1 = r-half
            if (probe.inf || !(probe.x == cur.x)) continue;
            FqPoly D{K.one()};
            for (const auto& xv : xs) D = fqp_mul(K, D, FqPoly{K.neg(xv), K.one()});
            FpPoly Dq;
            Dq.c.resize(D.size());
            bool rational = true;
            for (size_t i = 0; i < D.size(); ++i) {
                if (D[i].deg() > 0) {
                    rational = false;
                    break;
                }
                Dq.c[i] = D[i].is_zero() ? Int(0) : D[i].c[0];
            }
            if (!rational) continue;
            fp_normalize(Dq);
            push_unique(Dq);
        }
    }
    return found;
}

bool is_ordinary(const KummerTower& T, const EllipticCurve& E) {
    if (discriminant(T, E).rep.is_zero()) fail(errc::invalid_input, "singular curve");
    if (T.base().p() < 10000) {
        if (E.level() != 0 || E.a.rep.deg() > 0 || E.b.rep.deg() > 0)
            fail(errc::invalid_input, "ordinariness test wants a base-field curve");
        Int a = E.a.rep.is_zero() ? Int(0) : E.a.rep.c[0];
        Int b = E.b.rep.is_zero() ? Int(0) : E.b.rep.c[0];
        Int t = T.base().p() + 1 - naive_point_count(T.base(), a, b);
        return t % T.base().p() != 0;
    }
    // Large characteristic: assumed ordinary unless the l-adic machinery
    // later contradicts it (documented CLI behavior).
    return true;
}

}  // namespace isog
