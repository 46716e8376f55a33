#include "isog/fp.hpp"

#include <algorithm>

namespace isog {

const char* errc_name(errc c) {
    switch (c) {
        case errc::no_root: return "NoRoot";
        case errc::not_split: return "NotSplit";
        case errc::not_in_subfield: return "NotInSubfield";
        case errc::unsupported_base: return "UnsupportedBase";
        case errc::not_divisible: return "NotDivisible";
        case errc::not_a_kernel: return "NotAKernel";
        case errc::not_elkies: return "NotElkies";
        case errc::not_maximal: return "NotMaximal";
        case errc::not_a_basis: return "NotABasis";
        case errc::missing_modular_polynomial: return "MissingModularPolynomial";
        case errc::height_exceeded: return "HeightExceeded";
        case errc::transport_failed: return "TransportFailed";
        case errc::orbit_collision: return "OrbitCollision";
        case errc::not_in_generated_field: return "NotInGeneratedField";
        case errc::no_rational_form: return "NoRationalForm";
        case errc::precondition_not_met: return "PreconditionNotMet";
        case errc::no_suitable_prime: return "NoSuitablePrime";
        case errc::not_isogenous: return "NotIsogenous";
        case errc::no_isogeny_found: return "NoIsogenyFound";
        case errc::invalid_input: return "InvalidInput";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int invmod(const Int& a, const Int& mod) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw Error(errc::internal, "non-invertible element");
    return r;
}

long valuation(Int n, const Int& ell) {
    check(n != 0, "valuation of zero");
    long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), ell.get_mpz_t())) {
        n /= ell;
        ++v;
    }
    return v;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n, unsigned long& c0) {
    // Brent's variant; n odd composite, not a prime power of small primes.
    while (true) {
        Int c = ++c0;
        Int x = 2, y = 2, d = 1;
        Int diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;
            d = gcd(diff, n);
        }
        if (d != 0 && d != 1 && d != n) return d;
    }
}

}  // namespace

std::map<Int, int> factorize(Int n) {
    check(n > 0, "factorize needs n > 0");
    std::map<Int, int> out;
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % d == 0) {
            ++out[Int(d)];
            n /= d;
        }
    }
    Int d = 41;
    while (n > 1 && d * d <= n && d < 100000) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
        d += 2;
    }
    // recurse on what is left with rho
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    unsigned long c0 = 0;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            ++out[m];
            continue;
        }
        // perfect power?
        if (mpz_perfect_power_p(m.get_mpz_t())) {
            for (long e = 2; e < 200; ++e) {
                Int r;
                if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), e) != 0) {
                    for (long i = 0; i < e; ++i) stack.push_back(r);
                    m = 1;
                    break;
                }
            }
            if (m == 1) continue;
        }
        Int f = pollard_rho(m, c0);
        stack.push_back(f);
        stack.push_back(m / f);
    }
    return out;
}

Int mult_order(const Int& a, const Int& m, const std::map<Int, int>& group_order_factors) {
    Int order = 1;
    for (const auto& [q, e] : group_order_factors)
        for (int i = 0; i < e; ++i) order *= q;
    for (const auto& [q, e] : group_order_factors) {
        for (int i = 0; i < e; ++i) {
            Int cand = order / q;
            if (powmod(a, cand, m) == 1)
                order = cand;
            else
                break;
        }
    }
    return order;
}

long mult_order_mod_prime(const Int& a, long ell) {
    Int r = a % ell;
    if (r < 0) r += ell;
    check(r != 0, "order of zero");
    Int x = r;
    for (long o = 1; o <= ell; ++o) {
        if (x == 1) return o;
        x = x * r % ell;
    }
    throw Error(errc::internal, "order not found");
}

std::vector<Int> solve_quadratic_mod_prime_power(const Int& c2, const Int& c1, const Int& c0,
                                                 long ell, long k) {
    Int mod = 1;
    for (long i = 0; i < k; ++i) mod *= ell;
    auto f = [&](const Int& x) { return Int((c2 * x * x + c1 * x + c0) % mod); };
    // digit DFS: maintain solutions mod ell^i
    std::vector<Int> cur{Int(0)};
    Int pw = 1;
    for (long i = 0; i < k; ++i) {
        std::vector<Int> next;
        Int pw1 = pw * ell;
        for (const Int& x : cur) {
            for (long d = 0; d < ell; ++d) {
                Int cand = x + Int(d) * pw;
                if (f(cand) % pw1 == 0) next.push_back(cand);
            }
        }
        cur = std::move(next);
        pw = pw1;
        if (cur.empty()) break;
        if (cur.size() > 4096) throw Error(errc::internal, "quadratic solution blow-up");
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::pair<Int, Int> hensel_eigenvalues(const Int& t, const Int& q, long ell, long k) {
    Int mod = 1;
    for (long i = 0; i < k; ++i) mod *= ell;
    // Solve to extra depth so spurious solution cosets collapse onto the
    // reductions of the genuine l-adic roots.
    Int disc = t * t - 4 * q;
    long extra = disc == 0 ? k : std::min(valuation(disc, Int(ell)), 2 * k);
    auto sols = solve_quadratic_mod_prime_power(Int(1), -t, q, ell, k + extra);
    if (sols.empty()) fail(errc::not_split, "characteristic polynomial has no roots mod ell^k");
    std::vector<Int> reduced;
    for (const Int& x : sols) {
        Int r = x % mod;
        if (std::find(reduced.begin(), reduced.end(), r) == reduced.end()) reduced.push_back(r);
    }
    check(reduced.size() <= 2, "more than two root reductions");
    Int lam = reduced.front();
    Int mu = (t - lam) % mod;
    if (mu < 0) mu += mod;
    if (reduced.size() == 2) {
        // consistency: the second reduction is t - first
        Int other = reduced.back();
        check(other == mu, "root reductions do not pair by Vieta");
        if (mu < lam) std::swap(lam, mu);
    }
    return {lam, mu};
}

Zp::Zp(Int p) : p_(std::move(p)) {
    if (p_ <= 2 || !is_probable_prime(p_))
        fail(errc::invalid_input, "modulus must be an odd prime");
    small_ = p_.fits_ulong_p() && p_ < Int(1) << 31;
    sp_ = small_ ? p_.get_ui() : 0;
}

Int Zp::inv(const Int& a) const {
    if (a == 0) fail(errc::invalid_input, "division by zero in F_p");
    return invmod(a, p_);
}

int Zp::legendre(const Int& a) const {
    Int r = reduce(a);
    if (r == 0) return 0;
    Int e = (p_ - 1) / 2;
    Int s = powmod(r, e, p_);
    return s == 1 ? 1 : -1;
}

}  // namespace isog
