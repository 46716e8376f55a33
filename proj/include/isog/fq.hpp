#pragma once

#include "isog/poly.hpp"

namespace isog {

/// F_p[z]/(modulus): runtime extension field context. Elements are FpPoly of
/// degree < deg(modulus). Degree 1 with modulus = z gives F_p itself.
struct FqCtx {
    Zp zp;
    FpPoly modulus;  // monic
    long d;
    Int order;  // p^d

    FqCtx(Zp base, FpPoly mod) : zp(std::move(base)), modulus(std::move(mod)) {
        d = modulus.deg();
        check(d >= 1, "extension degree must be >= 1");
        order = 1;
        for (long i = 0; i < d; ++i) order *= zp.p();
    }

    static FqCtx prime_field(const Zp& F) { return FqCtx(F, fp_x()); }

    FpPoly reduce(const FpPoly& a) const { return fp_rem(zp, a, modulus); }
    FpPoly add(const FpPoly& a, const FpPoly& b) const { return fp_add(zp, a, b); }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const { return fp_sub(zp, a, b); }
    FpPoly neg(const FpPoly& a) const { return fp_neg(zp, a); }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return reduce(fp_mul(zp, a, b)); }
    FpPoly inv(const FpPoly& a) const;
    FpPoly pow(const FpPoly& a, const Int& e) const;
    FpPoly one() const { return fp_const(zp, 1); }
    FpPoly from_int(const Int& a) const { return fp_const(zp, a); }
    FpPoly random(Rng& rng) const;
    bool is_zero(const FpPoly& a) const { return a.is_zero(); }
};

/// Polynomial over an extension field, coefficients low to high, normalized.
using FqPoly = std::vector<FpPoly>;

void fqp_normalize(FqPoly& f);
long fqp_deg(const FqPoly& f);
FqPoly fqp_from_fp(const FpPoly& f);  // coefficients lifted from F_p
FqPoly fqp_add(const FqCtx& K, const FqPoly& a, const FqPoly& b);
FqPoly fqp_sub(const FqCtx& K, const FqPoly& a, const FqPoly& b);
/// Kronecker-packed product: both operands packed into F_p[X] with one slot of
/// width 2d-1 per coefficient, multiplied there, then unpacked and reduced.
FqPoly fqp_mul(const FqCtx& K, const FqPoly& a, const FqPoly& b);
FqPoly fqp_scale(const FqCtx& K, const FqPoly& a, const FpPoly& s);
FqPoly fqp_monic(const FqCtx& K, const FqPoly& a);
FqPoly fqp_divrem(const FqCtx& K, const FqPoly& a, const FqPoly& b, FqPoly* quo = nullptr);
inline FqPoly fqp_rem(const FqCtx& K, const FqPoly& a, const FqPoly& b) {
    return fqp_divrem(K, a, b);
}
FqPoly fqp_gcd(const FqCtx& K, FqPoly a, FqPoly b);
FqPoly fqp_pow_mod(const FqCtx& K, FqPoly base, Int e, const FqPoly& mod);
FpPoly fqp_eval(const FqCtx& K, const FqPoly& f, const FpPoly& x);
FqPoly fqp_derivative(const FqCtx& K, const FqPoly& f);

/// Roots of f lying in K, by gcd with x^#K - x and equal-degree splitting.
/// Las Vegas; all roots when want_all, else a single root chosen by rng.
/// Throws no_root if f has no root in K.
std::vector<FpPoly> fq_roots(const FqCtx& K, const FqPoly& f, bool want_all, Rng& rng);

/// Square roots of a in K (empty if a is not a square).
std::vector<FpPoly> fq_sqrt(const FqCtx& K, const FpPoly& a, bool want_all, Rng& rng);

bool fq_is_irreducible(const FqCtx& K, const FqPoly& f);

/// Monic irreducible P of degree d over F_p whose root generates F_{p^d}^*.
FpPoly find_primitive_polynomial(const Zp& F, long d, Rng& rng);

/// Monic irreducible of degree d over F_p (no primitivity requirement).
FpPoly find_irreducible_polynomial(const Zp& F, long d, Rng& rng);

}  // namespace isog
