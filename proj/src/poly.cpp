#include "isog/poly.hpp"

#include <algorithm>
#include <cstring>

namespace isog {

namespace {

constexpr long kSchoolbookCrossover = 48;

std::vector<uint64_t> to_u64(const FpPoly& a) {
    std::vector<uint64_t> v(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) v[i] = a.c[i].get_ui();
    return v;
}

FpPoly from_u64(const std::vector<uint64_t>& v) {
    FpPoly f;
    f.c.reserve(v.size());
    for (uint64_t x : v) f.c.emplace_back(static_cast<unsigned long>(x));
    fp_normalize(f);
    return f;
}

}  // namespace

FpPoly fp_const(const Zp& F, const Int& a) {
    FpPoly f;
    Int r = F.reduce(a);
    if (r != 0) f.c.push_back(r);
    return f;
}

FpPoly fp_x() {
    FpPoly f;
    f.c = {Int(0), Int(1)};
    return f;
}

FpPoly fp_from(const Zp& F, std::initializer_list<long> coeffs) {
    FpPoly f;
    for (long v : coeffs) f.c.push_back(F.reduce(Int(v)));
    fp_normalize(f);
    return f;
}

void fp_normalize(FpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

FpPoly fp_add(const Zp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        Int v = 0;
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v += b.c[i];
        if (v >= F.p()) v -= F.p();
        r.c[i] = v;
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_sub(const Zp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        Int v = 0;
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v -= b.c[i];
        if (v < 0) v += F.p();
        r.c[i] = v;
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_neg(const Zp& F, const FpPoly& a) {
    FpPoly r = a;
    for (auto& v : r.c) v = F.neg(v);
    return r;
}

FpPoly fp_scale(const Zp& F, const FpPoly& a, const Int& s) {
    Int ss = F.reduce(s);
    if (ss == 0) return {};
    FpPoly r = a;
    for (auto& v : r.c) v = F.mul(v, ss);
    return r;
}

FpPoly fp_shift(const FpPoly& a, long k) {
    if (a.is_zero()) return {};
    FpPoly r;
    r.c.resize(a.c.size() + k);
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

FpPoly fp_monic(const Zp& F, const FpPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return fp_scale(F, a, F.inv(a.lc()));
}

FpPoly fp_mul_schoolbook(const Zp& F, const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (F.small()) {
        auto av = to_u64(a), bv = to_u64(b);
        std::vector<unsigned __int128> acc(av.size() + bv.size() - 1, 0);
        uint64_t p = F.sp();
        // p < 2^31 so p^2 < 2^62; bound the number of unreduced additions
        const unsigned __int128 cap = (unsigned __int128)1 << 120;
        for (size_t i = 0; i < av.size(); ++i) {
            if (av[i] == 0) continue;
            for (size_t k = 0; k < bv.size(); ++k) {
                acc[i + k] += (unsigned __int128)av[i] * bv[k];
                if (acc[i + k] >= cap) acc[i + k] %= p;
            }
        }
        std::vector<uint64_t> out(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint64_t>(acc[i] % p);
        return from_u64(out);
    }
    FpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t k = 0; k < b.c.size(); ++k) r.c[i + k] += a.c[i] * b.c[k];
    }
    for (auto& v : r.c) v = F.reduce(v);
    fp_normalize(r);
    return r;
}

namespace {

// Kronecker substitution: pack at byte-aligned stride, one GMP multiply, unpack.
FpPoly fp_mul_kronecker(const Zp& F, const FpPoly& a, const FpPoly& b) {
    size_t na = a.c.size(), nb = b.c.size();
    size_t pb = mpz_sizeinbase(F.p().get_mpz_t(), 2);
    size_t cb = 2 * pb + 64 - __builtin_clzll(std::min(na, nb));
    size_t stride = (cb + 7) / 8;  // bytes per slot

    auto pack = [&](const FpPoly& f) {
        std::vector<unsigned char> buf(f.c.size() * stride, 0);
        for (size_t i = 0; i < f.c.size(); ++i) {
            size_t cnt = 0;
            mpz_export(buf.data() + i * stride, &cnt, -1, 1, 0, 0, f.c[i].get_mpz_t());
        }
        Int z;
        mpz_import(z.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
        return z;
    };

    Int prod = pack(a) * pack(b);
    size_t nslots = na + nb - 1;
    std::vector<unsigned char> buf(nslots * stride + 16, 0);
    size_t cnt = 0;
    mpz_export(buf.data(), &cnt, -1, 1, 0, 0, prod.get_mpz_t());

    FpPoly r;
    r.c.resize(nslots);
    Int tmp;
    for (size_t i = 0; i < nslots; ++i) {
        mpz_import(tmp.get_mpz_t(), stride, -1, 1, 0, 0, buf.data() + i * stride);
        r.c[i] = tmp % F.p();
    }
    fp_normalize(r);
    return r;
}

}  // namespace

FpPoly fp_mul(const Zp& F, const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (std::min(a.c.size(), b.c.size()) <= static_cast<size_t>(kSchoolbookCrossover))
        return fp_mul_schoolbook(F, a, b);
    return fp_mul_kronecker(F, a, b);
}

FpPoly fp_divrem(const Zp& F, const FpPoly& a, const FpPoly& b, FpPoly* quo) {
    if (b.is_zero()) fail(errc::invalid_input, "division by zero polynomial");
    if (a.deg() < b.deg()) {
        if (quo) *quo = FpPoly{};
        return a;
    }
    if (F.small()) {
        uint64_t p = F.sp();
        auto r = to_u64(a);
        auto bv = to_u64(b);
        size_t db = bv.size() - 1;
        uint64_t binv = F.inv(Int(static_cast<unsigned long>(bv.back()))).get_ui();
        std::vector<uint64_t> q(r.size() - db, 0);
        for (size_t top = r.size() - 1; top >= db; --top) {
            uint64_t c = r[top];
            if (c != 0) {
                uint64_t qq = (unsigned __int128)c * binv % p;
                q[top - db] = qq;
                for (size_t k = 0; k <= db; ++k) {
                    uint64_t sub = (unsigned __int128)qq * bv[k] % p;
                    uint64_t& ref = r[top - db + k];
                    ref = ref >= sub ? ref - sub : ref + p - sub;
                }
            }
            if (top == db) break;
        }
        if (quo) *quo = from_u64(q);
        r.resize(db);
        return from_u64(r);
    }
    FpPoly r = a;
    long db = b.deg();
    Int binv = F.inv(b.lc());
    FpPoly q;
    q.c.assign(r.c.size() - db, Int(0));
    for (long i = r.deg(); i >= db; --i) {
        Int c = F.reduce(r.c[i]);
        r.c[i] = c;
        if (c == 0) continue;
        Int qq = F.mul(c, binv);
        q.c[i - db] = qq;
        for (long k = 0; k <= db; ++k) r.c[i - db + k] = F.sub(F.reduce(r.c[i - db + k]), F.mul(qq, b.c[k]));
    }
    r.c.resize(db > 0 ? db : 0);
    for (auto& v : r.c) v = F.reduce(v);
    fp_normalize(r);
    if (quo) {
        fp_normalize(q);
        *quo = std::move(q);
    }
    return r;
}

FpPoly fp_gcd(const Zp& F, FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

EeaRow fp_eea_truncated(const Zp& F, const FpPoly& f, const FpPoly& g, long stop_degree) {
    if (stop_degree < 0) stop_degree = 0;
    FpPoly r0 = f, r1 = g;
    FpPoly s0 = fp_const(F, 1), s1{};
    FpPoly t0{}, t1 = fp_const(F, 1);
    if (r0.deg() <= stop_degree) return {r0, s0, t0};
    while (!r1.is_zero() && r1.deg() > stop_degree) {
        FpPoly q;
        FpPoly r2 = fp_divrem(F, r0, r1, &q);
        FpPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
        FpPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {r1, s1, t1};
}

Int fp_eval(const Zp& F, const FpPoly& f, const Int& x) {
    Int acc = 0;
    for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

FpPoly fp_derivative(const Zp& F, const FpPoly& f) {
    FpPoly r;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = F.mul(f.c[i], F.reduce(Int(i)));
    fp_normalize(r);
    return r;
}

FpPoly fp_pow_mod(const Zp& F, FpPoly base, Int e, const FpPoly& mod) {
    FpPoly result = fp_rem(F, fp_const(F, 1), mod);
    base = fp_rem(F, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(F, fp_mul(F, result, base), mod);
        e >>= 1;
        if (e > 0) base = fp_rem(F, fp_mul(F, base, base), mod);
    }
    return result;
}

FpPoly fp_compose_xk(const FpPoly& f, long k) {
    if (f.is_zero()) return {};
    FpPoly r;
    r.c.assign(f.deg() * k + 1, Int(0));
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i * k] = f.c[i];
    fp_normalize(r);
    return r;
}

}  // namespace isog
