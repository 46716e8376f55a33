#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "isog/error.hpp"

namespace isog {

using Int = mpz_class;

/// Single seeded generator backing every Las Vegas subroutine.
class Rng {
  public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t u64() { return g_(); }

    /// Uniform integer in [0, n).
    Int below(const Int& n) {
        check(n > 0, "Rng::below needs n > 0");
        size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (int it = 0; it < 4096; ++it) {
            Int r = 0;
            for (size_t b = 0; b < bits; b += 32) {
                r <<= 32;
                r += static_cast<uint32_t>(g_());
            }
            r >>= (bits + 31) / 32 * 32 - bits;
            if (r < n) return r;
        }
        throw Error(errc::internal, "rejection sampling stuck");
    }

    long index(long n) { return static_cast<long>(below(Int(n)).get_si()); }

  private:
    std::mt19937_64 g_;
};

// ---- integer utilities ----

Int powmod(const Int& base, const Int& exp, const Int& mod);
Int invmod(const Int& a, const Int& mod);
long valuation(Int n, const Int& ell);
bool is_probable_prime(const Int& n);
std::map<Int, int> factorize(Int n);

/// Multiplicative order of a modulo m (gcd(a,m)=1), given the factored group order.
Int mult_order(const Int& a, const Int& m, const std::map<Int, int>& group_order_factors);

/// Order of a in (Z/ell Z)^* for prime ell.
long mult_order_mod_prime(const Int& a, long ell);

/// All x in [0, ell^k) with c2 x^2 + c1 x + c0 = 0 mod ell^k, by digit search.
std::vector<Int> solve_quadratic_mod_prime_power(const Int& c2, const Int& c1, const Int& c0,
                                                 long ell, long k);

/// Roots mod ell^k of x^2 - t x + q, paired as (lambda, mu = t - lambda) with
/// minimal l-adic agreement; throws not_split if the congruence has no solution.
std::pair<Int, Int> hensel_eigenvalues(const Int& t, const Int& q, long ell, long k);

/// Arithmetic of the prime field F_p. Residues are canonical Int in [0, p).
class Zp {
  public:
    explicit Zp(Int p);

    const Int& p() const { return p_; }
    bool small() const { return small_; }
    uint64_t sp() const { return sp_; }

    Int reduce(const Int& a) const {
        Int r = a % p_;
        if (r < 0) r += p_;
        return r;
    }
    Int add(const Int& a, const Int& b) const {
        Int r = a + b;
        if (r >= p_) r -= p_;
        return r;
    }
    Int sub(const Int& a, const Int& b) const {
        Int r = a - b;
        if (r < 0) r += p_;
        return r;
    }
    Int mul(const Int& a, const Int& b) const { return Int(a * b % p_); }
    Int neg(const Int& a) const { return a == 0 ? Int(0) : Int(p_ - a); }
    Int inv(const Int& a) const;
    Int pow(const Int& a, const Int& e) const { return powmod(a, e, p_); }
    /// Legendre symbol in {-1, 0, 1}.
    int legendre(const Int& a) const;
    Int random(Rng& rng) const { return rng.below(p_); }

  private:
    Int p_;
    bool small_;
    uint64_t sp_;
};

}  // namespace isog
