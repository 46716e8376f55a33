#include "isog/volcano.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace isog {

ModularPolynomialTable::ModularPolynomialTable(const Zp& F) : zp_(F) {
    parse(F, embedded_modpoly_table());
}

ModularPolynomialTable::ModularPolynomialTable(const Zp& F, const std::string& path) : zp_(F) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_input, "cannot open modular polynomial file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    parse(F, ss.str());
}

void ModularPolynomialTable::parse(const Zp& F, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long ell, i, j;
        std::string coeff;
        if (!(ls >> ell >> i >> j >> coeff)) continue;
        auto& grid = table_[ell];
        if (grid.empty())
            grid.assign(ell + 2, std::vector<Int>(ell + 2, Int(0)));
        Int c(coeff);
        grid[i][j] = F.reduce(c);
        grid[j][i] = grid[i][j];
    }
}

std::vector<long> ModularPolynomialTable::primes() const {
    std::vector<long> out;
    for (const auto& [ell, grid] : table_) out.push_back(ell);
    return out;
}

FpPoly ModularPolynomialTable::specialize(long ell, const Int& j) const {
    auto it = table_.find(ell);
    if (it == table_.end())
        fail(errc::missing_modular_polynomial, "no table entry for l = " + std::to_string(ell));
    const auto& grid = it->second;
    Int jr = zp_.reduce(j);
    FpPoly out;
    out.c.assign(ell + 2, Int(0));
    // Horner in the first variable per y-degree
    for (long ydeg = 0; ydeg <= ell + 1; ++ydeg) {
        Int acc = 0;
        for (long i = ell + 1; i >= 0; --i) acc = zp_.add(zp_.mul(acc, jr), grid[i][ydeg]);
        out.c[ydeg] = acc;
    }
    fp_normalize(out);
    return out;
}

Int ModularPolynomialTable::evaluate(long ell, const Int& x, const Int& y) const {
    return fp_eval(zp_, specialize(ell, x), zp_.reduce(y));
}

std::vector<Int> ell_neighbors(const ModularPolynomialTable& tab, const Zp& F, const Int& j,
                               long ell, Rng& rng) {
    FpPoly phi_j = tab.specialize(ell, j);
    FqCtx K = FqCtx::prime_field(F);
    std::vector<Int> out;
    std::vector<FpPoly> roots;
    try {
        roots = fq_roots(K, fqp_from_fp(phi_j), true, rng);
    } catch (const Error& e) {
        if (e.code() == errc::no_root) return out;
        throw;
    }
    // multiplicities by repeated exact division
    for (const auto& r : roots) {
        Int rv = r.is_zero() ? Int(0) : r.c[0];
        FpPoly lin = fp_from(F, {0, 1});
        lin.c[0] = F.neg(rv);
        FpPoly cur = phi_j;
        while (true) {
            FpPoly q;
            FpPoly rem = fp_divrem(F, cur, lin, &q);
            if (!rem.is_zero()) break;
            out.push_back(rv);
            cur = q;
            if (cur.deg() < 1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// one non-backtracking walk; returns steps to a dead end, or -1 on budget
long walk_to_floor(const ModularPolynomialTable& tab, const Zp& F, const Int& start,
                   const Int& first, long ell, long budget, Rng& rng) {
    Int prev = start, cur = first;
    for (long step = 1; step <= budget; ++step) {
        auto nb = ell_neighbors(tab, F, cur, ell, rng);
        // remove one copy of prev (the edge we came along)
        auto it = std::find(nb.begin(), nb.end(), prev);
        check(it != nb.end(), "neighbor relation is not symmetric");
        nb.erase(it);
        if (nb.empty()) return step;  // dead end: cur is on the floor
        Int next = nb[rng.index(static_cast<long>(nb.size()))];
        prev = cur;
        cur = next;
    }
    return -1;
}

}  // namespace

long probe_depth(const ModularPolynomialTable& tab, const Zp& F, const Int& j, long ell,
                 long max_steps, Rng& rng) {
    auto nb = ell_neighbors(tab, F, j, ell, rng);
    if (nb.size() <= 1) return 0;  // floor (or an isolated crater)
    std::vector<Int> firsts = nb;
    firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
    long best = -1;
    for (const Int& f : firsts) {
        for (int rep = 0; rep < 2; ++rep) {
            long len = walk_to_floor(tab, F, j, f, ell, max_steps, rng);
            if (len >= 0) best = best < 0 ? len : std::min(best, len);
        }
    }
    if (best >= 0) return best;
    if (nb.size() == 2) return 0;  // two horizontal neighbors, cycling: h = 0 crater
    fail(errc::height_exceeded, "no floor within the step budget");
}

long probe_height(const ModularPolynomialTable& tab, const Zp& F, const Int& j, long ell,
                  long max_steps, Rng& rng) {
    Int cur = j;
    long dist = probe_depth(tab, F, cur, ell, max_steps, rng);
    for (long guard = 0; guard <= max_steps; ++guard) {
        auto nb = ell_neighbors(tab, F, cur, ell, rng);
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        bool moved = false;
        for (const Int& n : nb) {
            if (probe_depth(tab, F, n, ell, max_steps, rng) == dist + 1) {
                cur = n;
                ++dist;
                moved = true;
                break;
            }
        }
        if (!moved) return dist;
    }
    fail(errc::height_exceeded, "crater not reached within the step budget");
}

std::pair<EllipticCurve, std::vector<IsogenyChainStep>> ascend_to_crater(
    const KummerTower& T, const ModularPolynomialTable& tab, const EllipticCurve& E, long ell,
    long max_steps, Rng& rng) {
    const Zp& F = T.base();
    EllipticCurve cur = E;
    std::vector<IsogenyChainStep> chain;
    long budget = 4 * max_steps + 8;
    for (long guard = 0; guard <= max_steps + 1; ++guard) {
        TowerElement jcur = j_invariant(T, cur);
        check(jcur.level == 0 || jcur.rep.deg() <= 0, "ascent curve left the base field");
        Int jv = jcur.rep.is_zero() ? Int(0) : jcur.rep.c[0];
        long dist = probe_depth(tab, F, jv, ell, budget, rng);
        // on the crater iff no neighbor sits strictly higher
        auto nb = ell_neighbors(tab, F, jv, ell, rng);
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        Int up = -1;
        for (const Int& n : nb) {
            if (probe_depth(tab, F, n, ell, budget, rng) == dist + 1) {
                up = n;
                break;
            }
        }
        if (up < 0) return {cur, chain};
        // find the kernel whose codomain is the ascending neighbor
        Int a = cur.a.rep.is_zero() ? Int(0) : cur.a.rep.c[0];
        Int b = cur.b.rep.is_zero() ? Int(0) : cur.b.rep.c[0];
        bool stepped = false;
        for (const FpPoly& D : rational_kernel_polynomials(F, a, b, ell, rng)) {
            auto [Enext, phi] = velu(T, cur, tp_from_fp(T, 0, D), ell, false);
            TowerElement jn = j_invariant(T, Enext);
            Int jnv = jn.rep.is_zero() ? Int(0) : jn.rep.c[0];
            if (jnv != up) continue;
            chain.push_back(IsogenyChainStep{cur, Enext, phi});
            cur = Enext;
            stepped = true;
            break;
        }
        check(stepped, "no kernel realizes the ascending neighbor");
    }
    fail(errc::height_exceeded, "ascent did not terminate");
}

bool crater_is_cyclic(const KummerTower& T, const EllipticCurve& Emax, long ell, long h,
                      Rng& rng) {
    try {
        auto [basis, fd] = diagonal_basis(T, Emax, ell, h + 1, rng);
        (void)basis;
        return fd.h <= h;
    } catch (const Error& e) {
        if (e.code() == errc::not_elkies || e.code() == errc::not_maximal) return false;
        throw;
    }
}

TPoly transport_kernel(const KummerTower& T, const TPoly& kernel_on_top,
                       const std::vector<IsogenyChainStep>& chain, long r) {
    TPoly K = kernel_on_top;
    long half = std::max(1L, (r - 1) / 2);
    for (size_t s = chain.size(); s-- > 0;) {
        const IsogenyChainStep& st = chain[s];
        // resultant in y of (K(y), u(x) - y v(x)): sum K_j u^j v^(m-j)
        long m = tp_deg(K);
        std::vector<TPoly> up(m + 1), vp(m + 1);
        up[0] = TPoly{T.one()};
        vp[0] = TPoly{T.one()};
        for (long i = 1; i <= m; ++i) {
            up[i] = tp_mul(T, up[i - 1], st.map.num);
            vp[i] = tp_mul(T, vp[i - 1], st.map.den);
        }
        TPoly res;
        for (long jx = 0; jx <= m; ++jx) {
            if (K[jx].rep.is_zero()) continue;
            res = tp_add(T, res, tp_scale(T, tp_mul(T, up[jx], vp[m - jx]), K[jx]));
        }
        if (res.empty()) fail(errc::transport_failed, "vanishing resultant");
        TPoly rad = tp_radical(T, res);
        // keep the factor vanishing on r-torsion abscissas of the domain
        DivisionPolynomialsMod dpm(T, st.domain, rad);
        TPoly G = tp_gcd(T, rad, dpm.w(r));
        if (tp_deg(G) != half)
            fail(errc::transport_failed, "expected-degree torsion factor is absent");
        K = tp_monic(T, G);
    }
    return K;
}

VolcanoInfo volcano_info(const KummerTower& T, const ModularPolynomialTable& tab,
                         const EllipticCurve& E, long ell, long max_height, Rng& rng) {
    const Zp& F = T.base();
    VolcanoInfo info;
    info.ell = ell;
    TowerElement j0 = j_invariant(T, E);
    Int jv = j0.rep.is_zero() ? Int(0) : j0.rep.c[0];
    long budget = 4 * max_height + 8;
    long dist = probe_depth(tab, F, jv, ell, budget, rng);
    auto [top, chain] = ascend_to_crater(T, tab, E, ell, max_height, rng);
    info.depth = static_cast<long>(chain.size());
    (void)dist;
    // height = the crater's distance to the floor
    TowerElement jt = j_invariant(T, top);
    Int jtv = jt.rep.is_zero() ? Int(0) : jt.rep.c[0];
    info.height = probe_depth(tab, F, jtv, ell, budget, rng);
    info.top = top;
    info.ascent = std::move(chain);
    info.crater_cyclic = crater_is_cyclic(T, top, ell, info.height, rng);
    return info;
}

}  // namespace isog
