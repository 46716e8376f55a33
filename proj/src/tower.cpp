#include "isog/tower.hpp"

#include <algorithm>

namespace isog {

KummerTower::KummerTower(const Int& p, const Int& q, long ell, long n, Rng& rng, long d1)
    : zp_(p), ell_(ell) {
    if (q != p)
        fail(errc::unsupported_base, "towers over proper prime powers q = p^m are not built");
    if (p == ell) fail(errc::invalid_input, "tower prime must differ from the characteristic");
    if (ell < 2) fail(errc::invalid_input, "tower prime must be >= 2");
    if (n < 1) fail(errc::invalid_input, "tower height must be >= 1");

    if (ell_ == 2) {
        if (p % 4 != 1)
            fail(errc::unsupported_base, "l = 2 towers require p = 1 mod 4");
        d1_ = 2;
        // seed x^2 - c with c a quadratic non-residue
        for (int it = 0;; ++it) {
            check(it < 4096, "non-residue search stuck");
            Int c = zp_.random(rng);
            if (c != 0 && zp_.legendre(c) == -1) {
                P1_.c = {zp_.neg(c), Int(0), Int(1)};
                break;
            }
        }
    } else {
        long ord = mult_order_mod_prime(q, ell_);
        if (d1 == 0) d1 = ord;
        if (d1 % ord != 0 || (ell_ - 1) % d1 != 0)
            fail(errc::invalid_input, "d1 must be a multiple of ord_l(q) dividing l-1");
        d1_ = d1;
        P1_ = find_primitive_polynomial(zp_, d1_, rng);
    }

    levels_.push_back(Level{fp_x(), 1, zp_.p()});  // level 0 = F_q
    ensure_level(1);
    // x_1^q, used for the coefficient action of the q-power Frobenius
    frob1_ = f1_pow(d1_ == 1 ? fp_const(zp_, zp_.neg(P1_.c[0])) : fp_x(), zp_.p());
    ensure_level(n);
}

long KummerTower::height() const {
    std::lock_guard<std::mutex> lk(mu_);
    return static_cast<long>(levels_.size()) - 1;
}

void KummerTower::ensure_level(long i) const {
    check(i >= 0, "negative level");
    std::lock_guard<std::mutex> lk(mu_);
    while (static_cast<long>(levels_.size()) <= i) {
        long lvl = static_cast<long>(levels_.size());
        long stride = 1;
        for (long t = 1; t < lvl; ++t) stride *= ell_;
        FpPoly mod = fp_compose_xk(P1_, stride);
        long degree = d1_ * stride;
        Int order = 1;
        for (long t = 0; t < degree; ++t) order *= zp_.p();
        levels_.push_back(Level{std::move(mod), degree, std::move(order)});
    }
}

long KummerTower::level_degree(long i) const {
    ensure_level(i);
    std::lock_guard<std::mutex> lk(mu_);
    return levels_[i].degree;
}

const FpPoly& KummerTower::level_modulus(long i) const {
    ensure_level(i);
    std::lock_guard<std::mutex> lk(mu_);
    return levels_[i].modulus;
}

Int KummerTower::level_order(long i) const {
    ensure_level(i);
    std::lock_guard<std::mutex> lk(mu_);
    return levels_[i].order;
}

FqCtx KummerTower::level_ctx(long i) const { return FqCtx(zp_, level_modulus(i)); }

TowerElement KummerTower::from_rep(long level, FpPoly rep) const {
    ensure_level(level);
    fp_normalize(rep);
    if (rep.deg() >= level_degree(level)) rep = reduce_at(level, std::move(rep));
    return TowerElement{level, std::move(rep)};
}

TowerElement KummerTower::gen(long i) const {
    check(i >= 1, "generator defined for levels >= 1");
    ensure_level(i);
    if (i == 1 && d1_ == 1) return TowerElement{1, fp_const(zp_, zp_.neg(P1_.c[0]))};
    return TowerElement{i, fp_x()};
}

TowerElement KummerTower::random(long level, Rng& rng) const {
    ensure_level(level);
    FpPoly f;
    long d = level_degree(level);
    f.c.resize(d);
    for (long i = 0; i < d; ++i) f.c[i] = zp_.random(rng);
    fp_normalize(f);
    return TowerElement{level, std::move(f)};
}

FpPoly KummerTower::reduce_at(long i, FpPoly f) const {
    long D = level_degree(i);
    if (f.deg() < D) return f;
    long stride = 1;
    for (long t = 1; t < i; ++t) stride *= ell_;
    // P_i = x^D + sum_t P1[t] x^(t*stride); fold top coefficients down
    for (long idx = f.deg(); idx >= D; --idx) {
        Int c = zp_.reduce(f.c[idx]);
        if (c == 0) {
            f.c[idx] = 0;
            continue;
        }
        f.c[idx] = 0;
        for (long t = 0; t < d1_; ++t) {
            if (P1_.c[t] == 0) continue;
            long pos = idx - D + t * stride;
            f.c[pos] = zp_.sub(zp_.reduce(f.c[pos]), zp_.mul(c, P1_.c[t]));
        }
    }
    for (auto& v : f.c) v = zp_.reduce(v);
    fp_normalize(f);
    return f;
}

std::pair<TowerElement, TowerElement> KummerTower::align(const TowerElement& a,
                                                         const TowerElement& b) const {
    if (a.level == b.level) return {a, b};
    if (a.level < b.level) return {lift(a, b.level), b};
    return {a, lift(b, a.level)};
}

TowerElement KummerTower::add(const TowerElement& a, const TowerElement& b) const {
    auto [x, y] = align(a, b);
    return TowerElement{x.level, fp_add(zp_, x.rep, y.rep)};
}

TowerElement KummerTower::sub(const TowerElement& a, const TowerElement& b) const {
    auto [x, y] = align(a, b);
    return TowerElement{x.level, fp_sub(zp_, x.rep, y.rep)};
}

TowerElement KummerTower::neg(const TowerElement& a) const {
    return TowerElement{a.level, fp_neg(zp_, a.rep)};
}

TowerElement KummerTower::mul(const TowerElement& a, const TowerElement& b) const {
    auto [x, y] = align(a, b);
    return TowerElement{x.level, reduce_at(x.level, fp_mul(zp_, x.rep, y.rep))};
}

TowerElement KummerTower::inv(const TowerElement& a) const {
    if (a.rep.is_zero()) fail(errc::invalid_input, "inversion of zero");
    if (a.level == 0 || a.rep.deg() == 0)
        return TowerElement{a.level, fp_const(zp_, zp_.inv(a.rep.is_zero() ? Int(0) : a.rep.c[0]))};
    EeaRow row = fp_eea_truncated(zp_, level_modulus(a.level), a.rep, 0);
    check(row.r.deg() == 0, "non-invertible tower element");
    FpPoly t = reduce_at(a.level, std::move(row.t));
    return TowerElement{a.level, fp_scale(zp_, t, zp_.inv(row.r.c[0]))};
}

TowerElement KummerTower::pow(const TowerElement& a, Int e) const {
    if (e < 0) return pow(inv(a), -e);
    TowerElement result = one(a.level);
    TowerElement base = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

bool KummerTower::eq(const TowerElement& a, const TowerElement& b) const {
    auto [x, y] = align(a, b);
    return x.rep == y.rep;
}

TowerElement KummerTower::lift(const TowerElement& a, long j) const {
    check(j >= a.level, "lift goes upward");
    if (j == a.level) return a;
    ensure_level(j);
    if (a.level == 0) return TowerElement{j, a.rep};
    long stride = 1;
    for (long t = a.level; t < j; ++t) stride *= ell_;
    FpPoly r;
    if (!a.rep.is_zero()) {
        r.c.assign(a.rep.deg() * stride + 1, Int(0));
        for (size_t e = 0; e < a.rep.c.size(); ++e) r.c[e * stride] = a.rep.c[e];
    }
    return TowerElement{j, std::move(r)};
}

bool KummerTower::in_level(const TowerElement& a, long j) const {
    if (j >= a.level) return true;
    if (a.rep.is_zero()) return true;
    if (j == 0) return a.rep.deg() <= 0;
    long stride = 1;
    for (long t = j; t < a.level; ++t) stride *= ell_;
    if (a.rep.deg() > (level_degree(j) - 1) * stride) return false;
    for (size_t e = 0; e < a.rep.c.size(); ++e)
        if (a.rep.c[e] != 0 && e % stride != 0) return false;
    return true;
}

TowerElement KummerTower::push_down(const TowerElement& a, long j) const {
    check(j >= 0, "negative level");
    if (j >= a.level) return a;
    if (!in_level(a, j))
        fail(errc::not_in_subfield, "element does not lie in the requested level");
    if (a.rep.is_zero()) return TowerElement{j, FpPoly{}};
    if (j == 0) return TowerElement{0, a.rep};
    long stride = 1;
    for (long t = j; t < a.level; ++t) stride *= ell_;
    FpPoly r;
    r.c.resize(a.rep.deg() / stride + 1);
    for (size_t e = 0; e < r.c.size(); ++e) r.c[e] = a.rep.c[e * stride];
    fp_normalize(r);
    return TowerElement{j, std::move(r)};
}

long KummerTower::minimal_level(const TowerElement& a) const {
    long j = a.level;
    while (j > 0 && in_level(a, j - 1)) --j;
    return j;
}

FpPoly KummerTower::f1_mul(const FpPoly& a, const FpPoly& b) const {
    return fp_rem(zp_, fp_mul(zp_, a, b), P1_);
}

FpPoly KummerTower::f1_pow(FpPoly a, Int e) const {
    return fp_pow_mod(zp_, std::move(a), std::move(e), P1_);
}

FpPoly KummerTower::f1_frob_q(const FpPoly& a) const {
    // a(x_1)^q = a(x_1^q); evaluate at the cached image of the generator
    FpPoly acc;
    for (size_t i = a.c.size(); i-- > 0;) {
        acc = f1_mul(acc, frob1_);
        if (a.c[i] != 0) acc = fp_add(zp_, acc, fp_const(zp_, a.c[i]));
    }
    return acc;
}

const KummerTower::FrobMonomial& KummerTower::frob_monomial(long i, long j) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = frob_cache_.find({i, j});
        if (it != frob_cache_.end()) return it->second;
    }
    long d = 1;
    for (long t = 1; t < i; ++t) d *= ell_;
    Int s = level_order(j);
    Int f1_units = level_order(1) - 1;
    Int modulus = Int(d) * f1_units;
    Int Q = s % modulus;
    Int e = Q % d;
    Int u = (Q - e) / d;  // == u mod (#F_1 - 1) up to a multiple of #F_1 - 1
    u %= f1_units;
    FpPoly x1 = d1_ == 1 ? fp_const(zp_, zp_.neg(P1_.c[0])) : fp_x();
    FrobMonomial fm{f1_pow(x1, u), static_cast<long>(e.get_si())};
    std::lock_guard<std::mutex> lk(mu_);
    return frob_cache_.emplace(std::make_pair(i, j), std::move(fm)).first->second;
}

TowerElement KummerTower::frobenius_power(const TowerElement& a, long j) const {
    check(j >= 0, "negative Frobenius index");
    if (j >= a.level || a.rep.is_zero()) return a;
    long i = a.level;
    if (i == 1) {
        return j >= 1 ? a : TowerElement{1, f1_frob_q(a.rep)};
    }
    long d = 1;
    for (long t = 1; t < i; ++t) d *= ell_;
    // split into F_1 coefficients a_k, k < d
    std::vector<FpPoly> ak(d);
    for (size_t e = 0; e < a.rep.c.size(); ++e) {
        if (a.rep.c[e] == 0) continue;
        long k = static_cast<long>(e) % d;
        long t = static_cast<long>(e) / d;
        if (ak[k].c.size() <= static_cast<size_t>(t)) ak[k].c.resize(t + 1);
        ak[k].c[t] = a.rep.c[e];
    }
    for (auto& f : ak) fp_normalize(f);
    if (j == 0)
        for (auto& f : ak) f = f1_frob_q(f);

    const FrobMonomial& y = frob_monomial(i, j);
    // accumulate a_k * y^k, every power of y staying a monomial m_k x_i^(e_k)
    std::vector<FpPoly> out(d);
    FpPoly cur_m = fp_const(zp_, 1);
    long cur_e = 0;
    FpPoly x1 = d1_ == 1 ? fp_const(zp_, zp_.neg(P1_.c[0])) : fp_x();
    for (long k = 0; k < d; ++k) {
        if (!ak[k].is_zero()) {
            FpPoly term = f1_mul(ak[k], cur_m);
            out[cur_e] = fp_add(zp_, out[cur_e], term);
        }
        if (k + 1 < d) {
            cur_m = f1_mul(cur_m, y.m);
            cur_e += y.e;
            if (cur_e >= d) {
                cur_e -= d;
                cur_m = f1_mul(cur_m, x1);
            }
        }
    }
    FpPoly rep;
    rep.c.assign(level_degree(i), Int(0));
    for (long k = 0; k < d; ++k)
        for (size_t t = 0; t < out[k].c.size(); ++t) rep.c[k + d * t] = out[k].c[t];
    fp_normalize(rep);
    return TowerElement{i, std::move(rep)};
}

FqPoly tpoly_to_fq(const KummerTower& T, long level, const TPoly& f) {
    FqPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        TowerElement e = T.lift(f[i], level);
        r[i] = e.rep;
    }
    fqp_normalize(r);
    return r;
}

TPoly tpoly_from_fq(const KummerTower& T, long level, const FqPoly& f) {
    TPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = T.from_rep(level, f[i]);
    return r;
}

TowerElement tower_find_root(const KummerTower& T, long level, const TPoly& poly, Rng& rng) {
    FqCtx K = T.level_ctx(level);
    auto roots = fq_roots(K, tpoly_to_fq(T, level, poly), false, rng);
    return T.from_rep(level, roots.front());
}

std::vector<TowerElement> tower_all_roots(const KummerTower& T, long level, const TPoly& poly,
                                          Rng& rng) {
    FqCtx K = T.level_ctx(level);
    std::vector<TowerElement> out;
    try {
        for (auto& r : fq_roots(K, tpoly_to_fq(T, level, poly), true, rng))
            out.push_back(T.from_rep(level, r));
    } catch (const Error& e) {
        if (e.code() != errc::no_root) throw;
    }
    return out;
}

}  // namespace isog
