#include "doctest.h"
#include "isog/curve.hpp"
#include "isog/tower.hpp"

using namespace isog;

TEST_CASE("l=2 tower over F_101: degrees 1, 2, 4, 8") {
    Rng rng(1);
    KummerTower T(Int(101), Int(101), 2, 3, rng);
    CHECK(T.level_degree(0) == 1);
    CHECK(T.level_degree(1) == 2);
    CHECK(T.level_degree(2) == 4);
    CHECK(T.level_degree(3) == 8);
    // defining polynomial of level i is P_1 composed with x^(l^(i-1))
    for (long i = 2; i <= 3; ++i) {
        long stride = 1;
        for (long t = 1; t < i; ++t) stride *= 2;
        CHECK(T.level_modulus(i) == fp_compose_xk(T.seed(), stride));
    }
    // seed constant is a non-residue
    CHECK(T.base().legendre(T.base().neg(T.seed().c[0])) == -1);
}

TEST_CASE("l=3 tower over F_101 has d_1 = 2 and degrees 2, 6") {
    Rng rng(2);
    KummerTower T(Int(101), Int(101), 3, 2, rng);
    CHECK(T.d1() == 2);  // order of 101 mod 3
    CHECK(T.level_degree(1) == 2);
    CHECK(T.level_degree(2) == 6);
}

TEST_CASE("l=2 with p = 3 mod 4 is rejected") {
    Rng rng(3);
    CHECK_THROWS_WITH_AS(KummerTower(Int(103), Int(103), 2, 2, rng),
                         doctest::Contains("p = 1 mod 4"), Error);
}

TEST_CASE("lift and push_down round trip; membership pattern") {
    Rng rng(4);
    for (long ell : {2L, 3L}) {
        KummerTower T(Int(101), Int(101), ell, 3, rng);
        for (int it = 0; it < 100; ++it) {
            long lvl = rng.index(4);
            TowerElement a = T.random(lvl, rng);
            long up = lvl + rng.index(4 - lvl);
            TowerElement lifted = T.lift(a, up);
            CHECK(T.push_down(lifted, lvl) == a);
        }
        // nonzero coefficient off the stride pattern is not in the subfield
        TowerElement bad = T.from_rep(2, fp_from(T.base(), {1, 1}));  // 1 + x_2
        CHECK_THROWS_AS(T.push_down(bad, 1), Error);
        // level-1 generator lifted to level 3 equals x_3^(l^2)
        TowerElement x1 = T.gen(1);
        TowerElement x3 = T.gen(3);
        CHECK(T.eq(T.lift(x1, 3), T.pow(x3, Int(ell * ell))));
    }
}

TEST_CASE("tower arithmetic matches the generic modular view") {
    Rng rng(5);
    KummerTower T(Int(101), Int(101), 2, 3, rng);
    FqCtx K = T.level_ctx(3);
    for (int it = 0; it < 50; ++it) {
        TowerElement a = T.random(3, rng);
        TowerElement b = T.random(3, rng);
        CHECK(T.mul(a, b).rep == K.mul(a.rep, b.rep));
        if (!b.rep.is_zero()) CHECK(T.inv(b).rep == K.inv(b.rep));
    }
}

TEST_CASE("frobenius_power: identity for j >= i, oracle for j < i") {
    Rng rng(6);
    for (long ell : {2L, 3L}) {
        KummerTower T(Int(101), Int(101), ell, 4, rng);
        for (long i = 0; i <= 4; ++i) {
            for (int it = 0; it < 10; ++it) {
                TowerElement a = T.random(i, rng);
                for (long j = i; j <= 4; ++j) CHECK(T.eq(T.frobenius_power(a, j), a));
                for (long j = 0; j < i; ++j) {
                    TowerElement fast = T.frobenius_power(a, j);
                    TowerElement slow = T.pow(a, T.level_order(j));
                    CHECK(T.eq(fast, slow));
                }
            }
        }
    }
}

TEST_CASE("frobenius_power is an automorphism fixing F_j pointwise") {
    Rng rng(7);
    KummerTower T(Int(101), Int(101), 2, 3, rng);
    for (long j : {0L, 1L, 2L}) {
        for (int it = 0; it < 20; ++it) {
            TowerElement a = T.random(3, rng);
            TowerElement b = T.random(3, rng);
            CHECK(T.eq(T.frobenius_power(T.mul(a, b), j),
                       T.mul(T.frobenius_power(a, j), T.frobenius_power(b, j))));
            CHECK(T.eq(T.frobenius_power(T.add(a, b), j),
                       T.add(T.frobenius_power(a, j), T.frobenius_power(b, j))));
            TowerElement c = T.lift(T.random(j, rng), 3);
            CHECK(T.eq(T.frobenius_power(c, j), c));
        }
    }
}

TEST_CASE("composing the q-power Frobenius [F_i:F_0] times is the identity") {
    Rng rng(8);
    for (long ell : {2L, 3L}) {
        KummerTower T(Int(101), Int(101), ell, 3, rng);
        for (long i = 1; i <= 3; ++i) {
            TowerElement a = T.random(i, rng);
            TowerElement cur = a;
            long n = T.level_degree(i);
            for (long s = 0; s < n; ++s) cur = T.frobenius_power(cur, 0);
            CHECK(T.eq(cur, a));
            // l applications of the relative Frobenius equal a^((#F_{i-1})^l)
            if (i >= 1) {
                TowerElement rel = a;
                for (long s = 0; s < ell; ++s) rel = T.frobenius_power(rel, i - 1);
                Int e = 1;
                for (long s = 0; s < ell; ++s) e *= T.level_order(i - 1);
                TowerElement oracle = T.pow(a, e);
                CHECK(T.eq(rel, oracle));
            }
        }
    }
}

TEST_CASE("tower root finding at a level") {
    Rng rng(9);
    KummerTower T(Int(101), Int(101), 2, 3, rng);
    // x^2 - x_1^2 at level 1 has roots +-x_1
    TowerElement x1 = T.gen(1);
    TPoly f{T.neg(T.mul(x1, x1)), T.zero(1), T.one(1)};
    TowerElement r = tower_find_root(T, 1, f, rng);
    CHECK((T.eq(r, x1) || T.eq(r, T.neg(x1))));

    // planted roots at level 3
    TowerElement pr = T.random(3, rng);
    TowerElement pr2 = T.random(3, rng);
    TPoly g = tp_mul(T, TPoly{T.neg(pr), T.one(3)}, TPoly{T.neg(pr2), T.one(3)});
    TowerElement rr = tower_find_root(T, 3, g, rng);
    CHECK((T.eq(rr, pr) || T.eq(rr, pr2)));

    // an irreducible quadratic at level 2 has no root there
    FqCtx K2 = T.level_ctx(2);
    for (int it = 0;; ++it) {
        REQUIRE(it < 100);
        TowerElement c0 = T.random(2, rng);
        TowerElement c1 = T.random(2, rng);
        TPoly h{c0, c1, T.one(2)};
        FqPoly hf = tpoly_to_fq(T, 2, h);
        if (!fq_is_irreducible(K2, hf)) continue;
        CHECK_THROWS_AS(tower_find_root(T, 2, h, rng), Error);
        break;
    }
}
