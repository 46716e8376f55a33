#include "isog/interp.hpp"

#include <algorithm>
#include <numeric>

namespace isog {

namespace {

TPoly sigma_poly(const KummerTower& T, const TPoly& f, long j) {
    TPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = T.frobenius_power(f[i], j);
    return r;
}

FpPoly tpoly_to_base(const KummerTower& T, const TPoly& f) {
    FpPoly out;
    out.c.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        TowerElement c = T.push_down(f[i], 0);
        out.c[i] = c.rep.is_zero() ? Int(0) : c.rep.c[0];
    }
    fp_normalize(out);
    return out;
}

}  // namespace

PairPlan build_pair_plan(const KummerTower& T, const TowerElement& v_in) {
    PairPlan plan;
    long n = T.minimal_level(v_in);
    plan.v = T.push_down(v_in, n);
    plan.n = n;
    if (n == 0) {
        plan.minpoly.c = {T.base().neg(plan.v.rep.is_zero() ? Int(0) : plan.v.rep.c[0]), Int(1)};
        return plan;
    }
    TPoly cur{T.neg(plan.v), T.one(n)};  // x - v over F_n
    for (long m = n; m >= 1; --m) {
        // conjugate batch of cur under the (#F_{m-1})-power map
        std::vector<TPoly> batch{cur};
        for (;;) {
            TPoly next = sigma_poly(T, batch.back(), m - 1);
            if (tp_eq(T, next, cur)) break;
            batch.push_back(std::move(next));
            check(static_cast<long>(batch.size()) <= T.level_degree(m), "batch overflow");
        }
        // quotient products via prefix/suffix
        size_t bsz = batch.size();
        std::vector<TPoly> quot(bsz);
        if (bsz == 1) {
            quot[0] = TPoly{T.one(m)};
        } else {
            std::vector<TPoly> pre(bsz), suf(bsz);
            pre[0] = batch[0];
            for (size_t i = 1; i < bsz; ++i) pre[i] = tp_mul(T, pre[i - 1], batch[i]);
            suf[bsz - 1] = batch[bsz - 1];
            for (size_t i = bsz - 1; i-- > 0;) suf[i] = tp_mul(T, suf[i + 1], batch[i]);
            for (size_t i = 0; i < bsz; ++i) {
                if (i == 0)
                    quot[i] = suf[1];
                else if (i == bsz - 1)
                    quot[i] = pre[bsz - 2];
                else
                    quot[i] = tp_mul(T, pre[i - 1], suf[i + 1]);
            }
        }
        TPoly prod = bsz == 1 ? batch[0] : tp_mul(T, quot[0], batch[0]);
        plan.batches.push_back(std::move(batch));
        plan.quotients.push_back(std::move(quot));
        plan.chain.push_back(cur);  // minpoly of v over F_m
        cur = tp_push_down(T, prod, m - 1);
    }
    plan.minpoly = tpoly_to_base(T, cur);

    // T'(v) by successive Euclidean remainders down the minpoly chain
    TPoly R = tp_from_fp(T, 0, fp_derivative(T.base(), plan.minpoly));
    for (size_t i = plan.chain.size(); i-- > 0;) {
        // chain is stored from level n down to 1; reduce in increasing level
        const TPoly& Mm = plan.chain[i];
        R = tp_rem(T, tp_lift(T, R, tp_level(Mm)), Mm);
    }
    TowerElement tp = tp_eval(T, R, plan.v);
    check(!tp.rep.is_zero(), "derivative of a separable minimal polynomial vanished");
    plan.tprime_inv = T.inv(tp);
    return plan;
}

FpPoly pair_interpolate(const KummerTower& T, const PairPlan& plan, const TowerElement& w_in) {
    long wl = T.minimal_level(w_in);
    if (wl > plan.n)
        fail(errc::not_in_generated_field, "value lives above the field generated by v");
    if (plan.n == 0) {
        TowerElement w = T.push_down(w_in, 0);
        FpPoly out;
        out.c = {w.rep.is_zero() ? Int(0) : w.rep.c[0]};
        fp_normalize(out);
        return out;
    }
    TowerElement w = T.lift(T.push_down(w_in, wl), plan.n);
    TPoly L{T.mul(w, plan.tprime_inv)};
    tp_normalize(L);
    for (size_t step = 0; step < plan.batches.size(); ++step) {
        long m = plan.n - static_cast<long>(step);
        const auto& batch = plan.batches[step];
        const auto& quot = plan.quotients[step];
        TPoly acc;
        TPoly conj = L;
        for (size_t j = 0; j < batch.size(); ++j) {
            if (j > 0) conj = sigma_poly(T, conj, m - 1);
            acc = tp_add(T, acc, tp_mul(T, conj, quot[j]));
        }
        L = tp_push_down(T, acc, m - 1);
    }
    FpPoly out = tpoly_to_base(T, L);
    // consistency: L(v) = w
    TowerElement got = tp_eval(T, tp_from_fp(T, plan.v.level, out), plan.v);
    if (!T.eq(got, w))
        fail(errc::not_in_generated_field, "value does not lie in the field generated by v");
    return out;
}

MultipointPlan::MultipointPlan(const KummerTower& T, const std::vector<TowerElement>& vs)
    : T_(T) {
    check(!vs.empty(), "empty interpolation instance");
    const Zp& F = T.base();
    plans_.reserve(vs.size());
    for (const auto& v : vs) plans_.push_back(build_pair_plan(T, v));
    for (size_t i = 0; i < plans_.size(); ++i)
        for (size_t j = i + 1; j < plans_.size(); ++j)
            if (plans_[i].minpoly == plans_[j].minpoly)
                fail(errc::orbit_collision, "two points share a Galois orbit");

    // leaves sorted by degree descending
    std::vector<int> order(plans_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return plans_[a].minpoly.deg() > plans_[b].minpoly.deg();
    });
    leaf_of_pair_.resize(plans_.size());
    std::vector<int> level_nodes;
    for (int idx : order) {
        Node leaf;
        leaf.prod = plans_[idx].minpoly;
        nodes_.push_back(std::move(leaf));
        leaf_of_pair_[idx] = static_cast<int>(nodes_.size()) - 1;
        level_nodes.push_back(static_cast<int>(nodes_.size()) - 1);
    }
    while (level_nodes.size() > 1) {
        std::vector<int> next;
        for (size_t i = 0; i + 1 < level_nodes.size(); i += 2) {
            int l = level_nodes[i], r = level_nodes[i + 1];
            Node parent;
            parent.left = l;
            parent.right = r;
            parent.prod = fp_mul(F, nodes_[l].prod, nodes_[r].prod);
            // CRT combinators: cl = R * (R^-1 mod L), cr = L * (L^-1 mod R)
            const FpPoly& Lp = nodes_[l].prod;
            const FpPoly& Rp = nodes_[r].prod;
            EeaRow rowl = fp_eea_truncated(F, Lp, fp_rem(F, Rp, Lp), 0);
            check(rowl.r.deg() == 0, "subproduct factors are not coprime");
            FpPoly rinv = fp_scale(F, fp_rem(F, rowl.t, Lp), F.inv(rowl.r.c[0]));
            parent.cl = fp_mul(F, Rp, rinv);
            EeaRow rowr = fp_eea_truncated(F, Rp, fp_rem(F, Lp, Rp), 0);
            check(rowr.r.deg() == 0, "subproduct factors are not coprime");
            FpPoly linv = fp_scale(F, fp_rem(F, rowr.t, Rp), F.inv(rowr.r.c[0]));
            parent.cr = fp_mul(F, Lp, linv);
            nodes_.push_back(std::move(parent));
            next.push_back(static_cast<int>(nodes_.size()) - 1);
        }
        if (level_nodes.size() % 2 == 1) next.push_back(level_nodes.back());
        level_nodes = std::move(next);
    }
    root_ = level_nodes.front();
    modulus_ = nodes_[root_].prod;
}

FpPoly MultipointPlan::interpolate(const std::vector<TowerElement>& ws) const {
    check(ws.size() == plans_.size(), "value count mismatch");
    const Zp& F = T_.base();
    std::vector<FpPoly> value(nodes_.size());
    std::vector<bool> have(nodes_.size(), false);
    for (size_t i = 0; i < plans_.size(); ++i) {
        value[leaf_of_pair_[i]] = pair_interpolate(T_, plans_[i], ws[i]);
        have[leaf_of_pair_[i]] = true;
    }
    // combine upward; nodes were appended level by level, so a simple pass works
    for (size_t idx = 0; idx < nodes_.size(); ++idx) {
        const Node& nd = nodes_[idx];
        if (nd.left < 0) continue;
        check(have[nd.left] && have[nd.right], "tree combine order broken");
        FpPoly combined = fp_add(F, fp_mul(F, value[nd.left], nd.cl),
                                 fp_mul(F, value[nd.right], nd.cr));
        value[idx] = fp_rem(F, combined, nd.prod);
        have[idx] = true;
    }
    return value[root_];
}

std::pair<FpPoly, FpPoly> multipoint_interpolate(const KummerTower& T,
                                                 const std::vector<TowerElement>& vs,
                                                 const std::vector<TowerElement>& ws) {
    MultipointPlan plan(T, vs);
    return {plan.modulus(), plan.interpolate(ws)};
}

FpPoly minpoly_tower(const KummerTower& T, const TowerElement& v) {
    return build_pair_plan(T, v).minpoly;
}

FpPoly interpolate_tower(const KummerTower& T, const TowerElement& v, const TowerElement& w) {
    PairPlan plan = build_pair_plan(T, v);
    return pair_interpolate(T, plan, w);
}

RationalFraction cauchy_rational(const Zp& F, const FpPoly& L, const FpPoly& Tmod, long r) {
    check(L.deg() < Tmod.deg(), "interpolant must be reduced mod T");
    check(Tmod.deg() >= 2 * r, "modulus degree too small for the target degrees");
    EeaRow row = fp_eea_truncated(F, Tmod, L, r);
    FpPoly g = row.r, h = row.t;
    if (h.is_zero() || g.is_zero()) fail(errc::no_rational_form, "degenerate Euclidean row");
    FpPoly d = fp_gcd(F, g, h);
    if (d.deg() > 0) {
        FpPoly q;
        fp_divrem(F, g, d, &q);
        g = q;
        fp_divrem(F, h, d, &q);
        h = q;
    }
    if (g.deg() > r || h.deg() > r - 1) fail(errc::no_rational_form, "degree bounds unmet");
    if (fp_gcd(F, h, Tmod).deg() != 0)
        fail(errc::no_rational_form, "denominator shares a factor with the modulus");
    // g = L*h mod T, exactly
    FpPoly resid = fp_rem(F, fp_sub(F, g, fp_mul(F, L, h)), Tmod);
    if (!resid.is_zero()) fail(errc::no_rational_form, "congruence fails after reduction");
    Int s = F.inv(h.lc());
    return RationalFraction{fp_scale(F, g, s), fp_scale(F, h, s)};
}

}  // namespace isog
