#include "doctest.h"
#include "isog/volcano.hpp"

using namespace isog;

namespace {

struct Setup {
    Rng rng{77};
    Zp F{Int(101)};
    KummerTower T{Int(101), Int(101), 2, 4, rng};
    ModularPolynomialTable tab{F};
};

Int jval(const KummerTower& T, const EllipticCurve& E) {
    TowerElement j = j_invariant(T, E);
    return j.rep.is_zero() ? Int(0) : j.rep.c[0];
}

}  // namespace

TEST_CASE("table: primes, symmetry of the neighbor relation") {
    Setup s;
    CHECK(s.tab.primes() == std::vector<long>{2, 3, 5, 7, 11, 13});
    CHECK_THROWS_AS(s.tab.specialize(17, Int(5)), Error);

    for (long ell : {2L, 3L, 5L}) {
        for (long j = 2; j < 40; ++j) {
            auto nb = ell_neighbors(s.tab, s.F, Int(j), ell, s.rng);
            for (const Int& n : nb) {
                if (n == 0 || n == 1728 % 101) continue;
                auto back = ell_neighbors(s.tab, s.F, n, ell, s.rng);
                CHECK(std::count(back.begin(), back.end(), Int(j)) >= 1);
            }
        }
    }
}

TEST_CASE("Velu-constructed isogenies land on table neighbors (all tabulated l)") {
    Setup s;
    for (long ell : {2L, 3L, 5L, 7L, 11L, 13L}) {
        bool checked = false;
        for (long a = 1; a < 101 && !checked; ++a) {
            for (long b = 1; b < 25 && !checked; ++b) {
                Int disc = Int(4) * a * a * a + Int(27) * b * b;
                if (disc % 101 == 0) continue;
                Int N = naive_point_count(s.F, Int(a), Int(b));
                if ((Int(102) - N) % 101 == 0) continue;
                auto kernels = rational_kernel_polynomials(s.F, Int(a), Int(b), ell, s.rng);
                if (kernels.empty()) continue;
                EllipticCurve E{s.T.from_base(a), s.T.from_base(b)};
                auto [E2, map] = velu(s.T, E, tp_from_fp(s.T, 0, kernels.front()), ell);
                CHECK(s.tab.evaluate(ell, jval(s.T, E), jval(s.T, E2)) == 0);
                auto nb = ell_neighbors(s.tab, s.F, jval(s.T, E), ell, s.rng);
                CHECK(std::count(nb.begin(), nb.end(), jval(s.T, E2)) >= 1);
                checked = true;
            }
        }
        CHECK_MESSAGE(checked, "no instance found for l = ", ell);
    }
}

TEST_CASE("depth probing and ascent on the trace +-6 family (l = 2, h = 2)") {
    Setup s;
    // collect curves of trace +-6: all lie on the d_K = -23 volcano with h = 2
    std::vector<std::pair<long, long>> curves;
    for (long a = 1; a < 101; ++a)
        for (long b = 1; b < 101; ++b) {
            Int disc = Int(4) * a * a * a + Int(27) * b * b;
            if (disc % 101 == 0) continue;
            Int t = Int(102) - naive_point_count(s.F, Int(a), Int(b));
            if (t == 6 || t == -6) curves.push_back({a, b});
        }
    REQUIRE(curves.size() > 10);

    long budget = 4 * 4 + 8;
    std::map<long, int> depth_histogram;
    bool checked_crater = false, checked_floor = false;
    for (auto [a, b] : curves) {
        EllipticCurve E{s.T.from_base(a), s.T.from_base(b)};
        Int j = jval(s.T, E);
        long dist = probe_depth(s.tab, s.F, j, 2, budget, s.rng);
        ++depth_histogram[dist];
        CHECK(probe_height(s.tab, s.F, j, 2, budget, s.rng) == 2);
        auto nb = ell_neighbors(s.tab, s.F, j, 2, s.rng);
        if (dist == 0) {
            // floor: single neighbor
            CHECK(nb.size() == 1);
            checked_floor = true;
        }
        if (dist == 2 && !checked_crater) {
            // crater of an Etna volcano: (d_K/l)+1 = 2 non-descending neighbors
            long nondesc = 0;
            std::vector<Int> uniq = nb;
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (const Int& n : uniq)
                if (probe_depth(s.tab, s.F, n, 2, budget, s.rng) >= dist) ++nondesc;
            CHECK(nondesc == 2);
            checked_crater = true;

            // already on the crater: empty ascent
            auto [top, chain] = ascend_to_crater(s.T, s.tab, E, 2, 4, s.rng);
            CHECK(chain.empty());
            CHECK(jval(s.T, top) == j);
            CHECK(crater_is_cyclic(s.T, top, 2, 2, s.rng));
        }
    }
    CHECK(checked_floor);
    CHECK(checked_crater);
    // all three layers are populated
    CHECK(depth_histogram[0] > 0);
    CHECK(depth_histogram[1] > 0);
    CHECK(depth_histogram[2] > 0);

    // ascend from a floor curve: chain length = 2, strictly ascending
    for (auto [a, b] : curves) {
        EllipticCurve E{s.T.from_base(a), s.T.from_base(b)};
        Int j = jval(s.T, E);
        if (probe_depth(s.tab, s.F, j, 2, budget, s.rng) != 0) continue;
        auto [top, chain] = ascend_to_crater(s.T, s.tab, E, 2, 4, s.rng);
        CHECK(chain.size() == 2);
        CHECK(probe_depth(s.tab, s.F, jval(s.T, top), 2, budget, s.rng) == 2);
        for (const auto& st : chain)
            CHECK(s.tab.evaluate(2, jval(s.T, st.domain), jval(s.T, st.codomain)) == 0);
        VolcanoInfo info = volcano_info(s.T, s.tab, E, 2, 4, s.rng);
        CHECK(info.height == 2);
        CHECK(info.depth == 2);
        CHECK(info.crater_cyclic);
        break;
    }
}

TEST_CASE("depth is preserved by an isogeny of degree prime to l") {
    Setup s;
    long budget = 24;
    bool done = false;
    for (long a = 1; a < 101 && !done; ++a)
        for (long b = 1; b < 101 && !done; ++b) {
            Int disc = Int(4) * a * a * a + Int(27) * b * b;
            if (disc % 101 == 0) continue;
            Int t = Int(102) - naive_point_count(s.F, Int(a), Int(b));
            if (t != 6 && t != -6) continue;
            auto k3 = rational_kernel_polynomials(s.F, Int(a), Int(b), 3, s.rng);
            if (k3.empty()) continue;
            EllipticCurve E{s.T.from_base(a), s.T.from_base(b)};
            auto [E2, map] = velu(s.T, E, tp_from_fp(s.T, 0, k3.front()), 3);
            long d1 = probe_depth(s.tab, s.F, jval(s.T, E), 2, budget, s.rng);
            long d2 = probe_depth(s.tab, s.F, jval(s.T, E2), 2, budget, s.rng);
            CHECK(d1 == d2);
            done = true;
        }
    CHECK(done);
}

TEST_CASE("kernel transport through a 2-isogeny step (r = 5)") {
    Setup s;
    // curve with a rational 5-kernel, rational 2-kernel, and 5-torsion split
    // within tower reach
    FpPoly D5, D2;
    EllipticCurve E{s.T.zero(), s.T.zero()};
    bool found = false;
    for (long a = 1; a < 80 && !found; ++a)
        for (long b = 1; b < 80 && !found; ++b) {
            Int disc = Int(4) * a * a * a + Int(27) * b * b;
            if (disc % 101 == 0) continue;
            Int t = Int(102) - naive_point_count(s.F, Int(a), Int(b));
            if (t % 101 == 0) continue;
            auto k5 = rational_kernel_polynomials(s.F, Int(a), Int(b), 5, s.rng);
            if (k5.empty()) continue;
            auto k2 = rational_kernel_polynomials(s.F, Int(a), Int(b), 2, s.rng);
            if (k2.empty()) continue;
            FpPoly w5 = divpoly_w_fp(s.F, Int(a), Int(b), 5);
            auto roots = tower_all_roots(s.T, 3, tp_from_fp(s.T, 3, w5), s.rng);
            if (roots.size() != 12) continue;
            D5 = k5.front();
            D2 = k2.front();
            E = EllipticCurve{s.T.from_base(a), s.T.from_base(b)};
            found = true;
        }
    REQUIRE(found);

    // chain step: E --(2-isogeny)--> Etop
    auto [Etop, phi] = velu(s.T, E, tp_from_fp(s.T, 0, D2), 2);
    std::vector<IsogenyChainStep> chain{IsogenyChainStep{E, Etop, phi}};

    // push the planted bottom kernel forward to the top curve
    long lvl = 3;
    auto xs = tower_all_roots(s.T, lvl, tp_from_fp(s.T, lvl, D5), s.rng);
    REQUIRE(xs.size() == 2);
    TPoly Dtop{s.T.one(lvl)};
    for (const auto& x0 : xs) {
        TowerElement u = tp_eval(s.T, tp_lift(s.T, phi.num, lvl), x0);
        TowerElement v = tp_eval(s.T, tp_lift(s.T, phi.den, lvl), x0);
        REQUIRE(!v.rep.is_zero());
        Dtop = tp_mul(s.T, Dtop, TPoly{s.T.neg(s.T.div(u, v)), s.T.one(lvl)});
    }
    Dtop = tp_push_down(s.T, Dtop, 0);
    // sanity: the pushed kernel is a genuine 5-kernel on the top curve
    auto [EtopImage, psi_top] = velu(s.T, Etop, Dtop, 5);
    (void)EtopImage;

    // empty chain: identity transport
    TPoly same = transport_kernel(s.T, Dtop, {}, 5);
    CHECK(tp_eq(s.T, same, Dtop));

    // transported kernel equals the planted one exactly
    TPoly back = transport_kernel(s.T, Dtop, chain, 5);
    CHECK(tp_eq(s.T, back, tp_from_fp(s.T, 0, D5)));

    // and it divides the 5-division polynomial of E
    DivisionPolynomials dp(s.T, E);
    TPoly rem = tp_rem(s.T, dp.w(5), back);
    CHECK(rem.empty());
}
