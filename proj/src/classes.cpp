#include "isog/classes.hpp"

#include <algorithm>
#include <map>

#include "isog/torsion.hpp"

namespace isog {

namespace {

void add_entry(std::map<Int, Int>& acc, const Int& size, const Int& count) {
    if (count > 0) acc[size] += count;
}

ClassDecomposition finish(std::map<Int, Int>& acc, long ell, long k, long alpha, long beta) {
    ClassDecomposition out;
    out.ell = ell;
    out.k = k;
    out.alpha = alpha;
    out.beta = beta;
    for (auto& [size, count] : acc) out.entries.push_back({size, count});
    Int expect = pow_long(ell, 2 * k);
    check(out.total() == expect, "class decomposition does not partition the group");
    return out;
}

}  // namespace

ClassDecomposition class_decomposition(long ell, long k, long alpha, long beta) {
    if (alpha < beta) std::swap(alpha, beta);
    long base = ell == 2 ? 2 : 1;
    if (beta < base)
        fail(errc::precondition_not_met,
             ell == 2 ? "lambda = mu = 1 mod 4 required (extend the base field)"
                      : "lambda = mu = 1 mod l required (extend the base field)");
    check(k >= 1, "k must be positive");
    std::map<Int, Int> acc;
    if (ell == 2) {
        // singleton classes of E[4] (E[2] when k = 1)
        add_entry(acc, Int(1), pow_long(2, 2 * std::min(k, 2L)));
        for (long i = 0; i <= k - 2; ++i) {
            for (long j = 0; j <= k - 2; ++j) {
                if (i == 0 && j == 0) continue;  // the E[4] singletons above
                long nu = std::min({i + j, i + beta - 2, j + alpha - 2});
                long rho = i + j - nu;
                add_entry(acc, pow_long(2, rho), 4 * pow_long(2, nu));
            }
            if (i == 0) continue;
            add_entry(acc, pow_long(2, std::max(0L, i - alpha + 2)),
                      4 * pow_long(2, std::min(i, alpha - 2)));
            add_entry(acc, pow_long(2, std::max(0L, i - beta + 2)),
                      4 * pow_long(2, std::min(i, beta - 2)));
        }
    } else {
        add_entry(acc, Int(1), Int(ell) * ell);
        Int lm1 = ell - 1;
        for (long i = 0; i <= k - 1; ++i) {
            for (long j = 0; j <= k - 1; ++j) {
                if (i == 0 && j == 0) continue;  // the E[l] singletons above
                long nu = std::min({i + j, i + beta - 1, j + alpha - 1});
                long rho = i + j - nu;
                add_entry(acc, pow_long(ell, rho), lm1 * lm1 * pow_long(ell, nu));
            }
            if (i == 0) continue;
            add_entry(acc, pow_long(ell, std::max(0L, i - alpha + 1)),
                      lm1 * pow_long(ell, std::min(i, alpha - 1)));
            add_entry(acc, pow_long(ell, std::max(0L, i - beta + 1)),
                      lm1 * pow_long(ell, std::min(i, beta - 1)));
        }
    }
    return finish(acc, ell, k, alpha, beta);
}

ClassDecomposition enumerate_orbits_bruteforce(const Int& lambda, const Int& mu, long ell,
                                               long k) {
    Int mod = pow_long(ell, k);
    long m = static_cast<long>(mod.get_si());
    check(Int(m) * m <= (1 << 16), "brute-force orbit enumeration capped at 2^16 pairs");
    long lam = static_cast<long>(Int(lambda % mod).get_si());
    long muv = static_cast<long>(Int(mu % mod).get_si());
    if (lam < 0) lam += m;
    if (muv < 0) muv += m;
    std::vector<bool> seen(m * m, false);
    std::map<Int, Int> acc;
    for (long x = 0; x < m; ++x) {
        for (long y = 0; y < m; ++y) {
            long idx = x * m + y;
            if (seen[idx]) continue;
            long size = 0;
            long cx = x, cy = y;
            do {
                seen[cx * m + cy] = true;
                ++size;
                cx = cx * lam % m;
                cy = cy * muv % m;
            } while (!(cx == x && cy == y));
            add_entry(acc, Int(size), Int(1));
        }
    }
    FrobeniusData fd = make_frobenius_data(lambda, mu, ell, k);
    return finish(acc, ell, k, fd.alpha, fd.beta);
}

long torsion_field_degree(long ell, long k, long d1, long beta) {
    long out = d1;
    for (long i = 0; i < std::max(0L, k - beta); ++i) out *= ell;
    return out;
}

std::pair<long, long> torsion_group_structure(long n, long alpha, long beta) {
    if (alpha < beta) std::swap(alpha, beta);
    return {n + alpha, n + beta};
}

std::vector<std::pair<Int, Int>> class_representatives(const Int& lambda, const Int& mu,
                                                       long ell, long k) {
    Int mod = pow_long(ell, k);
    long m = static_cast<long>(mod.get_si());
    long lam = static_cast<long>(Int((lambda % mod) + mod).get_si()) % m;
    long muv = static_cast<long>(Int((mu % mod) + mod).get_si()) % m;
    std::vector<bool> seen(static_cast<size_t>(m) * m, false);
    std::vector<std::pair<Int, Int>> reps;
    for (long x = 0; x < m; ++x) {
        for (long y = 0; y < m; ++y) {
            if (x == 0 && y == 0) continue;
            size_t idx = static_cast<size_t>(x) * m + y;
            if (seen[idx]) continue;
            reps.push_back({Int(x), Int(y)});
            long cx = x, cy = y;
            do {
                seen[static_cast<size_t>(cx) * m + cy] = true;
                cx = cx * lam % m;
                cy = cy * muv % m;
            } while (!(cx == x && cy == y));
        }
    }
    return reps;
}

}  // namespace isog
