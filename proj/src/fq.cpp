#include "isog/fq.hpp"

#include <algorithm>

namespace isog {

namespace {
constexpr int kLasVegasCap = 256;
}

FpPoly FqCtx::inv(const FpPoly& a) const {
    if (a.is_zero()) fail(errc::invalid_input, "inversion of zero");
    EeaRow row = fp_eea_truncated(zp, modulus, a, 0);
    // row.r = s*modulus + t*a with deg r == 0 (modulus irreducible over F_p)
    if (row.r.deg() != 0) throw Error(errc::internal, "modulus not irreducible in inversion");
    return fp_scale(zp, fp_rem(zp, row.t, modulus), zp.inv(row.r.c[0]));
}

FpPoly FqCtx::pow(const FpPoly& a, const Int& e) const {
    if (e < 0) return pow(inv(a), -e);
    return fp_pow_mod(zp, a, e, modulus);
}

FpPoly FqCtx::random(Rng& rng) const {
    FpPoly f;
    f.c.resize(d);
    for (long i = 0; i < d; ++i) f.c[i] = zp.random(rng);
    fp_normalize(f);
    return f;
}

void fqp_normalize(FqPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

long fqp_deg(const FqPoly& f) { return static_cast<long>(f.size()) - 1; }

FqPoly fqp_from_fp(const FpPoly& f) {
    FqPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0) r[i].c.push_back(f.c[i]);
    return r;
}

FqPoly fqp_add(const FqCtx& K, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size())
            r[i] = K.add(a[i], b[i]);
        else
            r[i] = i < a.size() ? a[i] : b[i];
    }
    fqp_normalize(r);
    return r;
}

FqPoly fqp_sub(const FqCtx& K, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        FpPoly x = i < a.size() ? a[i] : FpPoly{};
        FpPoly y = i < b.size() ? b[i] : FpPoly{};
        r[i] = K.sub(x, y);
    }
    fqp_normalize(r);
    return r;
}

FqPoly fqp_mul(const FqCtx& K, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    long stride = 2 * K.d - 1;
    auto pack = [&](const FqPoly& f) {
        FpPoly big;
        big.c.assign(f.size() * stride, Int(0));
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t e = 0; e < f[i].c.size(); ++e) big.c[i * stride + e] = f[i].c[e];
        fp_normalize(big);
        return big;
    };
    FpPoly prod = fp_mul(K.zp, pack(a), pack(b));
    size_t nslots = a.size() + b.size() - 1;
    FqPoly r(nslots);
    for (size_t i = 0; i < nslots; ++i) {
        FpPoly slot;
        for (long e = 0; e < stride; ++e) {
            size_t idx = i * stride + e;
            if (idx < prod.c.size()) slot.c.push_back(prod.c[idx]);
        }
        fp_normalize(slot);
        r[i] = K.reduce(slot);
    }
    fqp_normalize(r);
    return r;
}

FqPoly fqp_scale(const FqCtx& K, const FqPoly& a, const FpPoly& s) {
    if (s.is_zero()) return {};
    FqPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], s);
    fqp_normalize(r);
    return r;
}

FqPoly fqp_monic(const FqCtx& K, const FqPoly& a) {
    if (a.empty() || (a.back().deg() == 0 && a.back().c[0] == 1)) return a;
    return fqp_scale(K, a, K.inv(a.back()));
}

FqPoly fqp_divrem(const FqCtx& K, const FqPoly& a, const FqPoly& b, FqPoly* quo) {
    if (b.empty()) fail(errc::invalid_input, "division by zero polynomial");
    long db = fqp_deg(b);
    if (fqp_deg(a) < db) {
        if (quo) quo->clear();
        return a;
    }
    FqPoly r = a;
    FpPoly binv = K.inv(b.back());
    FqPoly q(r.size() - db);
    for (long i = fqp_deg(r); i >= db; --i) {
        if (r[i].is_zero()) continue;
        FpPoly qq = K.mul(r[i], binv);
        q[i - db] = qq;
        for (long k = 0; k <= db; ++k) r[i - db + k] = K.sub(r[i - db + k], K.mul(qq, b[k]));
    }
    r.resize(db);
    fqp_normalize(r);
    if (quo) {
        fqp_normalize(q);
        *quo = std::move(q);
    }
    return r;
}

FqPoly fqp_gcd(const FqCtx& K, FqPoly a, FqPoly b) {
    while (!b.empty()) {
        FqPoly r = fqp_rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fqp_monic(K, a);
}

FqPoly fqp_pow_mod(const FqCtx& K, FqPoly base, Int e, const FqPoly& mod) {
    FqPoly result = fqp_rem(K, FqPoly{K.one()}, mod);
    base = fqp_rem(K, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fqp_rem(K, fqp_mul(K, result, base), mod);
        e >>= 1;
        if (e > 0) base = fqp_rem(K, fqp_mul(K, base, base), mod);
    }
    return result;
}

FpPoly fqp_eval(const FqCtx& K, const FqPoly& f, const FpPoly& x) {
    FpPoly acc;
    for (size_t i = f.size(); i-- > 0;) acc = K.add(K.mul(acc, x), f[i]);
    return acc;
}

FqPoly fqp_derivative(const FqCtx& K, const FqPoly& f) {
    FqPoly r;
    if (f.size() <= 1) return r;
    r.resize(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = K.mul(f[i], K.from_int(Int(i)));
    fqp_normalize(r);
    return r;
}

namespace {

// Equal-degree splitting of a monic squarefree product of linear factors.
void split_linear(const FqCtx& K, const FqPoly& g, bool want_all, Rng& rng,
                  std::vector<FpPoly>& out) {
    long d = fqp_deg(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(K.neg(g[0]));
        return;
    }
    Int e = (K.order - 1) / 2;
    for (int it = 0; it < kLasVegasCap; ++it) {
        FqPoly shift{K.random(rng), K.one()};  // x + a
        FqPoly h = fqp_pow_mod(K, shift, e, g);
        if (h.empty()) continue;
        h = fqp_sub(K, h, FqPoly{K.one()});
        FqPoly f1 = fqp_gcd(K, h, g);
        long d1 = fqp_deg(f1);
        if (d1 <= 0 || d1 >= d) continue;
        if (want_all) {
            split_linear(K, f1, true, rng, out);
            FqPoly f2;
            fqp_divrem(K, g, f1, &f2);
            split_linear(K, f2, true, rng, out);
        } else {
            if (2 * d1 <= d) {
                split_linear(K, f1, false, rng, out);
            } else {
                FqPoly f2;
                fqp_divrem(K, g, f1, &f2);
                split_linear(K, f2, false, rng, out);
            }
        }
        return;
    }
    throw Error(errc::internal, "equal-degree splitting exceeded iteration cap");
}

}  // namespace

std::vector<FpPoly> fq_roots(const FqCtx& K, const FqPoly& f, bool want_all, Rng& rng) {
    if (f.empty()) fail(errc::invalid_input, "roots of the zero polynomial");
    FqPoly g = fqp_monic(K, f);
    if (fqp_deg(g) == 0) fail(errc::no_root, "constant polynomial");
    // roots-in-K part: gcd(f, x^#K - x), automatically squarefree
    FqPoly xq = fqp_pow_mod(K, FqPoly{FpPoly{}, K.one()}, K.order, g);
    FqPoly lin = fqp_gcd(K, fqp_sub(K, xq, FqPoly{FpPoly{}, K.one()}), g);
    if (fqp_deg(lin) <= 0) fail(errc::no_root, "no root in the field");
    std::vector<FpPoly> out;
    split_linear(K, lin, want_all, rng, out);
    check(!out.empty(), "splitting produced no roots");
    if (want_all) {
        std::sort(out.begin(), out.end(),
                  [](const FpPoly& a, const FpPoly& b) { return a.c < b.c; });
    }
    return out;
}

std::vector<FpPoly> fq_sqrt(const FqCtx& K, const FpPoly& a, bool want_all, Rng& rng) {
    if (a.is_zero()) return {FpPoly{}};
    FqPoly f{K.neg(a), FpPoly{}, K.one()};  // x^2 - a
    try {
        return fq_roots(K, f, want_all, rng);
    } catch (const Error& e) {
        if (e.code() == errc::no_root) return {};
        throw;
    }
}

bool fq_is_irreducible(const FqCtx& K, const FqPoly& f) {
    long n = fqp_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    FqPoly g = fqp_monic(K, f);
    FqPoly x{FpPoly{}, K.one()};
    // x^(q^n) == x mod f and gcd(x^(q^(n/e)) - x, f) == 1 for prime e | n
    Int qn = 1;
    for (long i = 0; i < n; ++i) qn *= K.order;
    FqPoly xqn = fqp_pow_mod(K, x, qn, g);
    if (fqp_sub(K, xqn, x) != FqPoly{}) return false;
    auto fac = factorize(Int(n));
    for (const auto& [e, mult] : fac) {
        long ne = n / static_cast<long>(e.get_si());
        Int qe = 1;
        for (long i = 0; i < ne; ++i) qe *= K.order;
        FqPoly xe = fqp_pow_mod(K, x, qe, g);
        FqPoly d = fqp_gcd(K, fqp_sub(K, xe, x), g);
        if (fqp_deg(d) != 0) return false;
    }
    return true;
}

FpPoly find_irreducible_polynomial(const Zp& F, long d, Rng& rng) {
    check(d >= 1, "degree must be positive");
    if (d == 1) return fp_x();
    FqCtx base = FqCtx::prime_field(F);
    for (int it = 0; it < kLasVegasCap * 16; ++it) {
        FpPoly cand;
        cand.c.resize(d + 1);
        cand.c[d] = 1;
        for (long i = 0; i < d; ++i) cand.c[i] = F.random(rng);
        if (fq_is_irreducible(base, fqp_from_fp(cand))) return cand;
    }
    throw Error(errc::internal, "irreducible polynomial search exceeded cap");
}

FpPoly find_primitive_polynomial(const Zp& F, long d, Rng& rng) {
    check(d >= 1, "degree must be positive");
    FqCtx base = FqCtx::prime_field(F);
    Int group = 1;
    for (long i = 0; i < d; ++i) group *= F.p();
    group -= 1;
    auto fac = factorize(group);
    for (int it = 0; it < kLasVegasCap * 16; ++it) {
        FpPoly cand;
        cand.c.resize(d + 1);
        cand.c[d] = 1;
        for (long i = 0; i < d; ++i) cand.c[i] = F.random(rng);
        if (cand.c[0] == 0) continue;
        if (d > 1) {
            FqPoly asfq = fqp_from_fp(cand);
            if (!fq_is_irreducible(base, asfq)) continue;
        }
        FqCtx K(F, cand);
        FpPoly x = d == 1 ? fp_const(F, F.neg(cand.c[0])) : fp_x();
        bool primitive = true;
        for (const auto& [q, mult] : fac) {
            if (K.pow(x, group / q) == K.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return cand;
    }
    throw Error(errc::internal, "primitive polynomial search exceeded cap");
}

}  // namespace isog
