#pragma once

#include <vector>

#include "isog/fp.hpp"

namespace isog {

/// Dense polynomial over F_p, coefficients low to high, no trailing zeros.
/// The zero polynomial is the empty vector; deg(0) = -1.
struct FpPoly {
    std::vector<Int> c;

    FpPoly() = default;
    explicit FpPoly(std::vector<Int> v) : c(std::move(v)) {}

    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& lc() const { return c.back(); }
    bool operator==(const FpPoly& o) const { return c == o.c; }
};

FpPoly fp_const(const Zp& F, const Int& a);
FpPoly fp_x();
FpPoly fp_from(const Zp& F, std::initializer_list<long> coeffs);

void fp_normalize(FpPoly& f);
FpPoly fp_add(const Zp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const Zp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_neg(const Zp& F, const FpPoly& a);
FpPoly fp_scale(const Zp& F, const FpPoly& a, const Int& s);

/// Product; schoolbook below a crossover, Kronecker substitution into one
/// big-integer multiplication above it.
FpPoly fp_mul(const Zp& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul_schoolbook(const Zp& F, const FpPoly& a, const FpPoly& b);

FpPoly fp_shift(const FpPoly& a, long k);  // multiply by x^k
FpPoly fp_monic(const Zp& F, const FpPoly& a);

/// Remainder (and optionally quotient) of a by b; b nonzero.
FpPoly fp_divrem(const Zp& F, const FpPoly& a, const FpPoly& b, FpPoly* quo = nullptr);
inline FpPoly fp_rem(const Zp& F, const FpPoly& a, const FpPoly& b) { return fp_divrem(F, a, b); }
FpPoly fp_gcd(const Zp& F, FpPoly a, FpPoly b);  // monic

struct EeaRow {
    FpPoly r, s, t;  // r = s*f + t*g
};

/// First remainder of the Euclidean sequence of (f, g) with deg r <= stop_degree,
/// together with its Bezout cofactors. The sequence starts at f itself.
EeaRow fp_eea_truncated(const Zp& F, const FpPoly& f, const FpPoly& g, long stop_degree);

Int fp_eval(const Zp& F, const FpPoly& f, const Int& x);
FpPoly fp_derivative(const Zp& F, const FpPoly& f);
FpPoly fp_pow_mod(const Zp& F, FpPoly base, Int e, const FpPoly& mod);
/// f(x^k)
FpPoly fp_compose_xk(const FpPoly& f, long k);

}  // namespace isog
