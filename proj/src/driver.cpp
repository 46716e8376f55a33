#include "isog/driver.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

namespace isog {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Int base_coeff(const TowerElement& e) {
    return e.rep.is_zero() ? Int(0) : e.rep.c[0];
}

FpPoly tpoly_to_base_fp(const KummerTower& T, const TPoly& f) {
    FpPoly out;
    out.c.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) out.c[i] = base_coeff(T.push_down(f[i], 0));
    fp_normalize(out);
    return out;
}

}  // namespace

long choose_k(long r, long h, long ell) {
    long k = std::max(1L, h + 1);
    while (pow_long(ell, 2 * k) - 1 <= Int(4) * r) ++k;
    return k;
}

SelectedPrime select_elkies_prime(const Zp& F, const ModularPolynomialTable& tab,
                                  const std::pair<Int, Int>& E1c, const std::pair<Int, Int>& E2c,
                                  long r, const DriverConfig& config, Rng& rng) {
    std::vector<std::string> reasons;
    std::vector<long> primes = tab.primes();
    for (long ell : primes) {
        if (config.forced_ell && ell != config.forced_ell) continue;
        if (ell > config.max_ell && !config.forced_ell) break;
        auto reject = [&](const std::string& why) {
            reasons.push_back("l=" + std::to_string(ell) + ": " + why);
        };
        if (r % ell == 0) {
            reject("divides r");
            continue;
        }
        if (F.p() == ell) {
            reject("equals the characteristic");
            continue;
        }
        try {
            long d1 = torsion_d1(F, E1c.first, E1c.second, ell, rng);
            long d1b = torsion_d1(F, E2c.first, E2c.second, ell, rng);
            if (d1 != d1b) fail(errc::not_isogenous, "torsion field degrees differ");
            KummerTower T(F.p(), F.p(), ell, 2, rng, ell == 2 ? 0 : d1);
            EllipticCurve E{T.from_base(E1c.first), T.from_base(E1c.second)};
            EllipticCurve E2{T.from_base(E2c.first), T.from_base(E2c.second)};
            VolcanoInfo v1 = volcano_info(T, tab, E, ell, config.max_height, rng);
            VolcanoInfo v2 = volcano_info(T, tab, E2, ell, config.max_height, rng);
            if (v1.height != v2.height)
                fail(errc::not_isogenous, "volcano heights differ");
            if (v1.depth != v2.depth) fail(errc::not_isogenous, "volcano depths differ");
            if (!v1.crater_cyclic || !v2.crater_cyclic) {
                reject("crater not cyclic");
                continue;
            }
            if (pow_long(ell, 2 * v1.height) >= r) {
                reject("l^h >= sqrt(r)");
                continue;
            }
            auto [b1, fd1] = diagonal_basis(T, v1.top, ell, v1.height + 1, rng);
            auto [b2, fd2] = diagonal_basis(T, v2.top, ell, v2.height + 1, rng);
            Int s1l = std::min(fd1.lambda, fd1.mu), s1h = std::max(fd1.lambda, fd1.mu);
            Int s2l = std::min(fd2.lambda, fd2.mu), s2h = std::max(fd2.lambda, fd2.mu);
            if (s1l != s2l || s1h != s2h)
                fail(errc::not_isogenous, "Frobenius eigenvalue sets differ");
            return SelectedPrime{ell, std::move(v1), std::move(v2), fd1};
        } catch (const Error& e) {
            if (e.code() == errc::not_isogenous) throw;
            reject(e.what());
            continue;
        }
    }
    std::string all = "no suitable Elkies prime;";
    for (const auto& r_ : reasons) all += " [" + r_ + "]";
    fail(errc::no_suitable_prime, all);
}

VerifyResult verify_candidate(const KummerTower& T, const RationalFraction& frac,
                              const EllipticCurve& E, const EllipticCurve& E2, long r) {
    const Zp& F = T.base();
    VerifyResult out;
    if (frac.num.deg() > r || frac.den.deg() > r - 1) return out;
    if (r == 1) {
        // the identity (or a scaled isomorphism x-map)
        if (frac.den.deg() != 0 || frac.num.deg() != 1 || frac.num.c[0] != 0) return out;
        Int c2 = frac.num.c[1];
        Int a0 = base_coeff(E.a), b0 = base_coeff(E.b);
        Int a2 = base_coeff(E2.a), b2 = base_coeff(E2.b);
        if (F.reduce(c2 * c2 * a0) != a2 || F.reduce(c2 * c2 * c2 * b0) != b2) return out;
        out.accepted = true;
        out.kernel = fp_const(F, 1);
        out.scale = c2;
        return out;
    }
    // squarefree radical of the denominator, which must be its exact square
    FpPoly d = fp_derivative(F, frac.den);
    if (d.is_zero()) return out;
    FpPoly g = fp_gcd(F, frac.den, d);
    FpPoly D;
    fp_divrem(F, frac.den, g, &D);
    D = fp_monic(F, D);
    if (D.deg() != (r - 1) / 2) return out;
    if (!(fp_mul(F, D, D) == frac.den)) return out;
    // D divides the r-division polynomial
    TPoly Dt = tp_from_fp(T, 0, D);
    DivisionPolynomialsMod dpm(T, E, Dt);
    if (!dpm.w(r).empty()) return out;
    // Velu reconstruction and exact model matching
    EllipticCurve cod;
    RationalMap map;
    try {
        std::tie(cod, map) = velu(T, E, Dt, r, true);
    } catch (const Error& e) {
        if (e.code() == errc::not_a_kernel) return out;
        throw;
    }
    Int c2 = frac.num.lc();
    FpPoly g0 = tpoly_to_base_fp(T, map.num);
    FpPoly h0 = tpoly_to_base_fp(T, map.den);
    if (!(h0 == frac.den)) return out;
    if (!(fp_scale(F, g0, c2) == frac.num)) return out;
    Int a0 = base_coeff(cod.a), b0 = base_coeff(cod.b);
    Int a2 = base_coeff(E2.a), b2 = base_coeff(E2.b);
    if (F.reduce(c2 * c2 * a0) != a2) return out;
    if (F.reduce(c2 * c2 * c2 * b0) != b2) return out;
    out.accepted = true;
    out.kernel = D;
    out.scale = c2;
    return out;
}

namespace {

struct PointTable {
    std::vector<CurvePoint> pmul, qmul;  // multiples of the two basis points
};

PointTable build_point_table(const KummerTower& T, const EllipticCurve& E, const CurvePoint& P,
                             const CurvePoint& Q, long m) {
    PointTable t;
    t.pmul.reserve(m);
    t.qmul.reserve(m);
    CurvePoint cp = CurvePoint::infinity(), cq = CurvePoint::infinity();
    for (long i = 0; i < m; ++i) {
        t.pmul.push_back(cp);
        t.qmul.push_back(cq);
        cp = point_add(T, E, cp, P);
        cq = point_add(T, E, cq, Q);
    }
    return t;
}

// lexicographically least element of the orbit of (u, v)
std::pair<Int, Int> orbit_min(const Int& u, const Int& v, const Int& lam, const Int& mu,
                              const Int& mod) {
    Int cu = u, cv = v;
    std::pair<Int, Int> best{u, v};
    do {
        cu = cu * lam % mod;
        cv = cv * mu % mod;
        best = std::min(best, std::make_pair(cu, cv));
    } while (!(cu == u && cv == v));
    return best;
}

}  // namespace

IsogenySolution isogeny_between_maximal(const KummerTower& T, const EllipticCurve& Emax,
                                        const EllipticCurve& E2max, long r, long ell, long h,
                                        const DriverConfig& config, Rng& rng) {
    check(r >= 1 && r % 2 == 1, "target degree must be odd");
    check(r % ell != 0, "target degree must be coprime to l");
    const Zp& F = T.base();
    IsogenySolution sol;
    sol.p = F.p();
    sol.a = base_coeff(Emax.a);
    sol.b = base_coeff(Emax.b);
    sol.a2 = base_coeff(E2max.a);
    sol.b2 = base_coeff(E2max.b);
    sol.ell = ell;
    sol.h = h;
    long k = config.k_override > 0 ? config.k_override : choose_k(r, h, ell);
    sol.k = k;
    Int mod = pow_long(ell, k);

    // horizontal bases with matched directions
    auto t0 = Clock::now();
    auto [hb1, fd1] = horizontal_basis(T, Emax, ell, k, rng);
    bool same_curve = T.eq(Emax.a, E2max.a) && T.eq(Emax.b, E2max.b);
    TorsionBasis hb2 = hb1;
    if (!same_curve) {
        FrobeniusData fd2;
        std::tie(hb2, fd2) = horizontal_basis(T, E2max, ell, k, rng);
        if (fd1.lambda != fd2.lambda || fd1.mu != fd2.mu)
            fail(errc::not_isogenous, "eigenvalue sets differ at level k");
    }
    sol.timings_ms["basis"] = ms_since(t0);

    // class representatives, deduplicated by abscissa (+- pairing)
    t0 = Clock::now();
    auto reps = class_representatives(hb1.lambda, hb1.mu, ell, k);
    std::vector<std::pair<Int, Int>> xreps;
    for (const auto& [u, v] : reps) {
        Int nu = (mod - u) % mod, nv = (mod - v) % mod;
        auto neg_min = orbit_min(nu, nv, hb1.lambda, hb1.mu, mod);
        if (std::make_pair(u, v) <= neg_min) xreps.push_back({u, v});
    }
    check(Int(reps.size()) <= Int(k) * pow_long(ell, k + fd1.beta) + ell * ell,
          "class count exceeds the stated bound");

    long mlong = static_cast<long>(mod.get_si());
    PointTable tab1 = build_point_table(T, Emax, hb1.P, hb1.Q, mlong);
    PointTable tab2 = same_curve ? tab1 : build_point_table(T, E2max, hb2.P, hb2.Q, mlong);

    std::vector<TowerElement> vs;
    vs.reserve(xreps.size());
    for (const auto& [u, v] : xreps) {
        CurvePoint R = point_add(T, Emax, tab1.pmul[u.get_si()], tab1.qmul[v.get_si()]);
        check(!R.inf, "nonzero class representative mapped to infinity");
        vs.push_back(R.x);
    }
    MultipointPlan plan(T, vs);
    Int expected_deg = ell == 2 ? Int(pow_long(2, 2 * k - 1) + 1)
                                : Int((pow_long(ell, 2 * k) - 1) / 2);
    check(Int(plan.modulus().deg()) == expected_deg,
          "vanishing polynomial misses abscissas");
    sol.timings_ms["plan"] = ms_since(t0);

    // candidate loop over invertible diagonal pairs, modulo the sign symmetry
    t0 = Clock::now();
    std::vector<Int> units;
    for (long a = 1; a < mlong; ++a)
        if (a % ell != 0) units.push_back(Int(a));
    std::vector<std::pair<Int, Int>> candidates;
    if (config.only_candidate) {
        Int ca = config.only_candidate->first % mod;
        Int cb = config.only_candidate->second % mod;
        if (ca < 0) ca += mod;
        if (cb < 0) cb += mod;
        candidates.push_back({ca, cb});
    } else {
        for (const Int& a : units) {
            if (2 * a > mod) continue;  // a and mod-a give the same x-maps
            for (const Int& b : units) candidates.push_back({a, b});
        }
    }

    long index = 0;
    double interp_total = 0, interp_count = 0;
    for (const auto& [a, b] : candidates) {
        ++index;
        std::vector<TowerElement> ws;
        ws.reserve(xreps.size());
        for (const auto& [u, v] : xreps) {
            long iu = static_cast<long>(Int(a * u % mod).get_si());
            long iv = static_cast<long>(Int(b * v % mod).get_si());
            CurvePoint W = point_add(T, E2max, tab2.pmul[iu], tab2.qmul[iv]);
            check(!W.inf, "candidate image of a representative is infinity");
            ws.push_back(W.x);
        }
        auto ti = Clock::now();
        RationalFraction frac;
        try {
            FpPoly L = plan.interpolate(ws);
            frac = cauchy_rational(F, L, plan.modulus(), r);
        } catch (const Error& e) {
            if (e.code() == errc::no_rational_form ||
                e.code() == errc::not_in_generated_field) {
                interp_total += std::chrono::duration<double, std::milli>(Clock::now() - ti)
                                    .count();
                interp_count += 1;
                continue;
            }
            throw;
        }
        interp_total += std::chrono::duration<double, std::milli>(Clock::now() - ti).count();
        interp_count += 1;
        VerifyResult vr = verify_candidate(T, frac, Emax, E2max, r);
        if (!vr.accepted) continue;
        sol.cand_a = a;
        sol.cand_b = b;
        sol.candidate_index = index;
        sol.kernel = vr.kernel;
        sol.num = frac.num;
        sol.den = frac.den;
        sol.timings_ms["candidates"] = ms_since(t0);
        sol.timings_ms["interp_mean"] = interp_count > 0 ? interp_total / interp_count : 0;
        return sol;
    }
    fail(errc::no_isogeny_found, "no candidate matrix yields a degree-" + std::to_string(r) +
                                     " isogeny");
}

namespace {

std::pair<Int, Int> model_from_j(const Zp& F, const Int& j) {
    Int jr = F.reduce(j);
    if (jr == 0 || jr == F.reduce(Int(1728)))
        fail(errc::invalid_input, "j = 0 and j = 1728 are not handled");
    Int c = F.mul(jr, F.inv(F.sub(F.reduce(Int(1728)), jr)));
    return {F.reduce(3 * c), F.reduce(2 * c)};
}

}  // namespace

IsogenySolution explicit_isogeny(const IsogenyProblem& problem) {
    if (problem.q != problem.p)
        fail(errc::unsupported_base, "q = p^m with m > 1 is not built");
    Zp F(problem.p);
    if (F.p() <= 3) fail(errc::invalid_input, "characteristic must exceed 3");
    Rng rng(problem.config.seed);

    auto resolve = [&](const std::optional<std::pair<Int, Int>>& coeffs,
                       const std::optional<Int>& j) {
        if (coeffs) return std::make_pair(F.reduce(coeffs->first), F.reduce(coeffs->second));
        if (j) return model_from_j(F, *j);
        fail(errc::invalid_input, "each curve needs coefficients or a j-invariant");
    };
    auto E1c = resolve(problem.curve1, problem.j1);
    auto E2c = resolve(problem.curve2, problem.j2);

    long r = problem.r;
    if (r < 1) fail(errc::invalid_input, "degree must be positive");
    if (r % 2 == 0) fail(errc::invalid_input, "even degrees are not handled");
    if (Int(r) % F.p() == 0) fail(errc::invalid_input, "degree divisible by p");

    // one tower for generic service (l is fixed later; this one only carries
    // base-field arithmetic)
    Rng trng(rng.u64());
    KummerTower T0(F.p(), F.p(), F.p() % 4 == 1 ? 2 : 3, 1, trng);
    EllipticCurve E{T0.from_base(E1c.first), T0.from_base(E1c.second)};
    EllipticCurve E2{T0.from_base(E2c.first), T0.from_base(E2c.second)};
    if (discriminant(T0, E).rep.is_zero() || discriminant(T0, E2).rep.is_zero())
        fail(errc::invalid_input, "singular curve");
    Int j1v = base_coeff(j_invariant(T0, E));
    Int j2v = base_coeff(j_invariant(T0, E2));
    if (j1v == 0 || j1v == F.reduce(Int(1728)) || j2v == 0 || j2v == F.reduce(Int(1728)))
        fail(errc::invalid_input, "j = 0 and j = 1728 are not handled");
    if (!is_ordinary(T0, E) || !is_ordinary(T0, E2))
        fail(errc::invalid_input, "supersingular curve");
    if (F.p() < 10000) {
        Int n1 = naive_point_count(F, E1c.first, E1c.second);
        Int n2 = naive_point_count(F, E2c.first, E2c.second);
        if (n1 != n2) fail(errc::not_isogenous, "cardinalities differ");
    }

    IsogenySolution sol;
    if (r == 1) {
        // isomorphism: exact model match via c^2
        if (j1v != j2v) fail(errc::not_isogenous, "j-invariants differ for r = 1");
        Int c2 = F.mul(F.mul(E2c.second, E1c.first),
                       F.inv(F.mul(E1c.second, E2c.first)));
        if (F.reduce(c2 * c2 * E1c.first) != E2c.first ||
            F.reduce(c2 * c2 * c2 * E1c.second) != E2c.second)
            fail(errc::not_isogenous, "models are quadratic twists (r = 1)");
        sol.p = F.p();
        sol.a = E1c.first;
        sol.b = E1c.second;
        sol.a2 = E2c.first;
        sol.b2 = E2c.second;
        sol.ell = 0;
        sol.k = 0;
        sol.h = 0;
        sol.cand_a = 1;
        sol.cand_b = 1;
        sol.kernel = fp_const(F, 1);
        sol.num.c = {Int(0), c2};
        sol.den = fp_const(F, 1);
        return sol;
    }

    ModularPolynomialTable tab =
        problem.config.modpoly_path.empty()
            ? ModularPolynomialTable(F)
            : ModularPolynomialTable(F, problem.config.modpoly_path);

    auto tsel = Clock::now();
    SelectedPrime sel = select_elkies_prime(F, tab, E1c, E2c, r, problem.config, rng);
    long ell = sel.ell;
    long h = sel.volcE.height;

    // tower sized for the solve
    long k = problem.config.k_override > 0 ? problem.config.k_override : choose_k(r, h, ell);
    long d1 = ell == 2 ? 0 : torsion_d1(F, E1c.first, E1c.second, ell, rng);
    KummerTower T(F.p(), F.p(), ell, std::max(2L, k - sel.crater_fd.beta + 1), rng, d1);
    // rebuild volcano data against this tower's element types
    VolcanoInfo v1 = volcano_info(T, tab, EllipticCurve{T.from_base(E1c.first),
                                                        T.from_base(E1c.second)},
                                  ell, problem.config.max_height, rng);
    VolcanoInfo v2 = volcano_info(T, tab, EllipticCurve{T.from_base(E2c.first),
                                                        T.from_base(E2c.second)},
                                  ell, problem.config.max_height, rng);
    double tsel_ms = ms_since(tsel);

    IsogenySolution inner = isogeny_between_maximal(T, v1.top, v2.top, r, ell, h,
                                                    problem.config, rng);

    // transport the kernel down the ascent chain of E and rebuild the map
    auto tdown = Clock::now();
    FpPoly kernel_on_E;
    FpPoly num, den;
    Int ca, cb;
    if (v1.ascent.empty() && v2.ascent.empty()) {
        kernel_on_E = inner.kernel;
        num = inner.num;
        den = inner.den;
    } else {
        TPoly Kt = transport_kernel(T, tp_from_fp(T, 0, inner.kernel), v1.ascent, r);
        kernel_on_E = tpoly_to_base_fp(T, Kt);
        EllipticCurve Ebase{T.from_base(E1c.first), T.from_base(E1c.second)};
        auto [cod, map] = velu(T, Ebase, Kt, r, true);
        // match the codomain model onto the input E2 model
        Int a0 = base_coeff(cod.a), b0 = base_coeff(cod.b);
        Int c2 = F.mul(F.mul(E2c.second, a0), F.inv(F.mul(b0, E2c.first)));
        if (F.reduce(c2 * c2 * a0) != E2c.first || F.reduce(c2 * c2 * c2 * b0) != E2c.second)
            fail(errc::internal, "transported codomain is not the target model");
        num = fp_scale(F, tpoly_to_base_fp(T, map.num), c2);
        den = tpoly_to_base_fp(T, map.den);
    }
    sol = inner;
    sol.a = E1c.first;
    sol.b = E1c.second;
    sol.a2 = E2c.first;
    sol.b2 = E2c.second;
    sol.kernel = kernel_on_E;
    sol.num = num;
    sol.den = den;
    sol.timings_ms["select"] = tsel_ms;
    sol.timings_ms["descend"] = ms_since(tdown);
    return sol;
}

std::string solution_to_json(const IsogenySolution& sol, bool with_timings) {
    nlohmann::json j;
    auto poly = [](const FpPoly& f) {
        std::vector<std::string> out;
        for (const auto& c : f.c) out.push_back(c.get_str());
        return out;
    };
    j["solution"]["p"] = sol.p.get_str();
    j["solution"]["q"] = sol.p.get_str();
    j["solution"]["curve"] = {sol.a.get_str(), sol.b.get_str()};
    j["solution"]["curve2"] = {sol.a2.get_str(), sol.b2.get_str()};
    j["solution"]["ell"] = sol.ell;
    j["solution"]["k"] = sol.k;
    j["solution"]["h"] = sol.h;
    j["solution"]["a"] = sol.cand_a.get_str();
    j["solution"]["b"] = sol.cand_b.get_str();
    j["solution"]["candidate_index"] = sol.candidate_index;
    j["solution"]["kernel_polynomial"] = poly(sol.kernel);
    j["solution"]["numerator"] = poly(sol.num);
    j["solution"]["denominator"] = poly(sol.den);
    if (with_timings) {
        for (const auto& [k_, v] : sol.timings_ms) j["timings_ms"][k_] = v;
    }
    return j.dump(2);
}

IsogenySolution solution_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const auto& s = j.at("solution");
    IsogenySolution sol;
    auto poly = [](const nlohmann::json& arr) {
        FpPoly f;
        for (const auto& c : arr) f.c.emplace_back(c.get<std::string>());
        fp_normalize(f);
        return f;
    };
    sol.p = Int(s.at("p").get<std::string>());
    sol.a = Int(s.at("curve")[0].get<std::string>());
    sol.b = Int(s.at("curve")[1].get<std::string>());
    sol.a2 = Int(s.at("curve2")[0].get<std::string>());
    sol.b2 = Int(s.at("curve2")[1].get<std::string>());
    sol.ell = s.at("ell").get<long>();
    sol.k = s.at("k").get<long>();
    sol.h = s.at("h").get<long>();
    sol.cand_a = Int(s.at("a").get<std::string>());
    sol.cand_b = Int(s.at("b").get<std::string>());
    sol.candidate_index = s.at("candidate_index").get<long>();
    sol.kernel = poly(s.at("kernel_polynomial"));
    sol.num = poly(s.at("numerator"));
    sol.den = poly(s.at("denominator"));
    return sol;
}

}  // namespace isog
