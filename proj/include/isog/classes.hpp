#pragma once

#include "isog/fp.hpp"

namespace isog {

/// Multiset of Galois orbit sizes of E[l^k], as (size, count) entries.
struct ClassDecomposition {
    long ell = 0, k = 0, alpha = 0, beta = 0;
    std::vector<std::pair<Int, Int>> entries;  // sorted by size

    Int total() const {
        Int s = 0;
        for (const auto& [size, count] : entries) s += size * count;
        return s;
    }
    Int class_count() const {
        Int s = 0;
        for (const auto& [size, count] : entries) s += count;
        return s;
    }
};

/// Exact decomposition from the closed-form clauses; requires
/// lambda = mu = 1 mod l (alpha, beta >= 1) for odd l, and
/// lambda = mu = 1 mod 4 (alpha, beta >= 2) for l = 2, with alpha >= beta.
ClassDecomposition class_decomposition(long ell, long k, long alpha, long beta);

/// Oracle: iterate (x, y) -> (lambda x, mu y) over all of (Z/l^k)^2.
ClassDecomposition enumerate_orbits_bruteforce(const Int& lambda, const Int& mu, long ell,
                                               long k);

/// Smallest extension degree with E[l^k] rational: d_1 * l^max(0, k - beta).
long torsion_field_degree(long ell, long k, long d1, long beta);

/// Exponents (n + alpha, n + beta) of E[l^inf](F) for [F:F_q] = d_1 l^n.
std::pair<long, long> torsion_group_structure(long n, long alpha, long beta);

/// Lexicographically least coordinate representative of every nonzero Galois
/// orbit of (Z/l^k)^2 under (x, y) -> (lambda x, mu y).
std::vector<std::pair<Int, Int>> class_representatives(const Int& lambda, const Int& mu,
                                                       long ell, long k);

}  // namespace isog
