#include "twistforge/twist.hpp"

#include "twistforge/errors.hpp"

#include <chrono>

namespace twistforge::twists {

using hopf::identity2;
using hopf::t2_mul;
using hopf::t3_mul;
using hopf::tensor_of;
using hopf::tnc_inv;
using hopf::tt2_identity;
using hopf::tt2_inv;
using hopf::tt2_of;

TT2 CoproductCtx::delta_word(const Word &w, int trunc) const {
    if (!twisted_) return h_->coproduct_word(w, trunc);
    if (cache_trunc_ == trunc) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    } else {
        cache_.clear();
        cache_trunc_ = trunc;
    }
    if (!conj_inv_ || conj_inv_->trunc < trunc) conj_inv_ = tt2_inv(alg(), conj_);
    TT2 plain = h_->coproduct_word(w, trunc);
    TT2 r = t2_mul(alg(), t2_mul(alg(), conj_, plain, trunc), *conj_inv_, trunc);
    cache_.emplace(w, r);
    return r;
}

TT2 CoproductCtx::delta(const TNC &x, int trunc) const {
    if (!twisted_) return h_->coproduct(x, trunc);
    TT2 out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[w, c] : x.c[d].terms()) {
            TT2 dw = delta_word(w, trunc - d);
            for (int e = 0; e < (int)dw.c.size(); ++e) {
                if (dw.get(e).is_zero()) continue;
                out.at(d + e) = out.get(d + e) + dw.get(e).scaled(c);
            }
        }
    return out;
}

TT3 CoproductCtx::slot1(const TT2 &x, int trunc) const {
    TT3 out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            TT2 dw = delta_word(k[0], trunc - d);
            for (int e = 0; e < (int)dw.c.size(); ++e)
                for (const auto &[kk, cc] : dw.get(e).terms())
                    out.at(d + e).add_term({kk[0], kk[1], k[1]}, c * cc);
        }
    return out;
}

TT3 CoproductCtx::slot2(const TT2 &x, int trunc) const {
    TT3 out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            TT2 dw = delta_word(k[1], trunc - d);
            for (int e = 0; e < (int)dw.c.size(); ++e)
                for (const auto &[kk, cc] : dw.get(e).terms())
                    out.at(d + e).add_term({k[0], kk[0], kk[1]}, c * cc);
        }
    return out;
}

TwistReport cocycle_check(const CoproductCtx &ctx, const TT2 &F, int order,
                          const std::string &twist_name, const std::string &algebra_name) {
    auto t0 = std::chrono::steady_clock::now();
    const Presentation &p = ctx.alg();
    TwistReport rep;
    rep.twist = twist_name;
    rep.algebra = algebra_name;
    rep.t_order = order;

    TT2 Fcut(order);
    for (int d = 0; d <= order && d < (int)F.c.size(); ++d) Fcut.at(d) = F.get(d);

    TT3 lhs = t3_mul(p, hopf::embed12(p, Fcut), ctx.slot1(Fcut, order), order);
    TT3 rhs = t3_mul(p, hopf::embed23(p, Fcut), ctx.slot2(Fcut, order), order);
    rep.residual_terms.assign(order + 1, 0);
    bool all_zero = true;
    for (int d = 0; d <= order; ++d) {
        auto diff = lhs.get(d) - rhs.get(d);
        rep.residual_terms[d] = (int)diff.size();
        if (!diff.is_zero()) all_zero = false;
    }

    // counit condition: (eps (x) id)F = (id (x) eps)F = 1
    rep.counit_ok = true;
    for (int slot = 0; slot < 2; ++slot) {
        TNC folded = ctx.hopf().counit_slot(Fcut, slot, order);
        folded = p.reduce(folded);
        TNC one(order);
        one.at(0) = NCPoly::one();
        if (!(folded == one)) rep.counit_ok = false;
    }

    rep.pass = all_zero && rep.counit_ok;
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

TT2 coboundary_twist(const CoproductCtx &ctx, const TNC &W, int trunc) {
    const Presentation &p = ctx.alg();
    if (!(W.get(0) == NCPoly::one())) throw NotInvertible("coboundary base W");
    TNC Winv = tnc_inv(p, W);
    TT2 WW = tt2_of(p, W, W, trunc);
    return t2_mul(p, WW, ctx.delta(Winv, trunc), trunc);
}

JordanianArtifacts build_jordanian(const UqContext &ctx, const ClassicalTarget &tgt, int order) {
    const Presentation &p = ctx.alg();
    JordanianArtifacts art;
    const int ll = ctx.rs.pairing_roots(ctx.rs.highest, ctx.rs.highest);
    NCPoly e_lam = qgroups::composite_generator(ctx, ctx.rs.highest);
    QRatFunc pref = (QRatFunc(1) - QRatFunc::q_power(ll)).inv();
    art.W = hopf::q_exp_series(p, e_lam, coeff::QConvention::onesided(ll), pref, order);

    // Delta is an algebra map, so Delta(W^-1) = qexp(Delta-argument)^-1; this
    // avoids taking coproducts of the large high-order words of W^-1.
    TT2 de = ctx.H.coproduct(e_lam, 0);
    TT2 dW = hopf::q_exp_series(p, de.get(0), coeff::QConvention::onesided(ll), pref, order);
    TT2 WW = tt2_of(p, art.W, art.W, order);
    art.twist.series = t2_mul(p, WW, tt2_inv(p, dW), order);
    art.twist.provenance = "jordanian(" + p.name + ")";

    // Prop. 4 proof: two-exponential product form
    {
        Tensor2 one_e = tensor_of(p, NCPoly::one(), e_lam);
        TT2 f1 = hopf::q_exp_series(p, one_e, coeff::QConvention::onesided(ll), pref, order);
        TT2 de = ctx.H.coproduct(e_lam, 0);
        Tensor2 rest = de.get(0) - tensor_of(p, e_lam, NCPoly::one());
        TT2 f2 = hopf::q_exp_series(p, rest, coeff::QConvention::onesided(-ll), -pref, order);
        art.two_factor_ok = (art.twist.series == t2_mul(p, f1, f2, order));
    }

    art.regular = qgroups::integral_membership(ctx, art.twist.series, false).member;
    try {
        qgroups::specialize_tnc(ctx, tgt, art.W);
        art.w_singular = false;
    } catch (const NotRegular &) {
        art.w_singular = true;
    }
    art.specialized = qgroups::specialize_tt2(ctx, tgt, art.twist.series);
    return art;
}

TwistReport classical_recheck(const ClassicalTarget &tgt, const TT2 &Fbar, int order,
                              const std::string &twist_name) {
    CoproductCtx cctx(tgt.H);
    return cocycle_check(cctx, Fbar, order, twist_name + "-classical", tgt.alg().name);
}

RMatrixReport semiclassical_r_check(const UqContext &ctx, const ClassicalTarget &tgt, const TT2 &Fbar) {
    RMatrixReport rep;
    const Presentation &cp = tgt.alg();
    if (!(Fbar.get(0) == identity2(cp))) return rep;
    Tensor2 A = Fbar.get(1);
    Tensor2 r = hopf::flip(A) - A;
    TT2 rt(0);
    rt.at(0) = r;
    r = hopf::t2_reduce(cp, rt).get(0);
    // skew symmetry
    {
        Tensor2 sum = r + hopf::flip(r);
        TT2 st(0);
        st.at(0) = sum;
        rep.skew = hopf::t2_reduce(cp, st).get(0).is_zero();
    }
    // pattern H_lambda ^ E_lambda + 2 sum E_v ^ E_u over decompositions of lambda
    const auto &rs = ctx.rs;
    int lam = rs.highest;
    NCPoly E_lam = qgroups::specialize_nc(ctx, tgt, qgroups::composite_generator(ctx, lam));
    NCPoly H_lam;
    for (int i = 0; i < rs.rank; ++i) {
        int m = rs.positive_alpha[lam][i];
        if (m != 0) H_lam += cp.generator(tgt.cartan_H[i]).scaled(QRatFunc(m));
    }
    auto wedge = [&](const NCPoly &a, const NCPoly &b) {
        return tensor_of(cp, a, b) - tensor_of(cp, b, a);
    };
    Tensor2 pattern = wedge(H_lam, E_lam);
    for (int u = 0; u < rs.n_positive(); ++u)
        for (int v = 0; v < rs.n_positive(); ++v) {
            if (u == v) continue;
            std::vector<int> sum(rs.eps_dim);
            for (int k = 0; k < rs.eps_dim; ++k)
                sum[k] = rs.positive_eps[u][k] + rs.positive_eps[v][k];
            if (sum != rs.positive_eps[lam]) continue;
            if (!(ctx.ordering.precedes(u, lam) && ctx.ordering.precedes(lam, v))) continue;
            NCPoly Eu = qgroups::specialize_nc(ctx, tgt, qgroups::composite_generator(ctx, u));
            NCPoly Ev = qgroups::specialize_nc(ctx, tgt, qgroups::composite_generator(ctx, v));
            pattern = pattern + wedge(Ev, Eu).scaled(QRatFunc(2));
        }
    {
        TT2 pt(0);
        pt.at(0) = pattern;
        pattern = hopf::t2_reduce(cp, pt).get(0);
    }
    if (pattern.is_zero()) {
        rep.proportional = r.is_zero();
        return rep;
    }
    if (r.is_zero()) {
        rep.proportional = true;
        return rep;
    }
    const auto &[k0, c0] = *pattern.terms().begin();
    auto it = r.terms().find(k0);
    if (it == r.terms().end()) {
        rep.proportional = false;
        return rep;
    }
    rep.constant = it->second / c0;
    rep.proportional = (r == pattern.scaled(rep.constant));
    return rep;
}

TT2 example1_sl2_closed(const ClassicalTarget &tgt, int order) {
    const Presentation &cp = tgt.alg();
    NCPoly H = cp.generator("H1");
    NCPoly E = cp.generator("E12");
    TT2 out(order);
    out.at(0) = identity2(cp);
    NCPoly hfac = NCPoly::one();
    QRatFunc c(1);
    NCPoly Epow = NCPoly::one();
    for (int n = 1; n <= order; ++n) {
        // (k^-1 q^{2(n-1)} - 1)/(q^2 - 1) specializes to (n-1) - H/2, so the
        // falling factorial steps by 2 in this H normalization.
        NCPoly shift = H - NCPoly::scalar(QRatFunc(2 * (n - 1)));
        hfac = cp.nc_multiply(hfac, shift);
        Epow = cp.nc_multiply(Epow, E);
        c = c * QRatFunc(coeff::Rational(-1, 2 * n));
        out.at(n) = tensor_of(cp, hfac, Epow).scaled(c);
    }
    return out;
}

TT2 example1_sl3_closed(const ClassicalTarget &tgt, int order) {
    const Presentation &cp = tgt.alg();
    NCPoly E12 = cp.generator("E12");
    NCPoly E23 = cp.generator("E23");
    NCPoly E13 = cp.nc_multiply(E12, E23) - cp.nc_multiply(E23, E12);
    NCPoly H = cp.generator("H1") + cp.generator("H2"); // H_{1,3}

    // exp(-sigma/2) with sigma = ln(1 - t E13)
    TNC arg(order);
    for (int n = 1; n <= order; ++n) {
        NCPoly pw = NCPoly::one();
        for (int j = 0; j < n; ++j) pw = cp.nc_multiply(pw, E13);
        arg.at(n) = pw.scaled(QRatFunc(coeff::Rational(1, 2 * n)));
    }
    TNC damp = hopf::exp_series(cp, arg, order);

    // extension factor exp(-t E12 (x) E23 exp(-sigma/2))
    TNC e23damp(order);
    {
        TNC e23(order);
        e23.at(0) = E23;
        e23damp = cp.mul(e23, damp, order);
    }
    TT2 extarg(order);
    {
        TNC e12t(order);
        e12t.at(1) = -E12;
        extarg = tt2_of(cp, e12t, e23damp, order);
    }
    TT2 ext = hopf::exp_series(cp, extarg, order);

    TT2 jfac(order);
    jfac.at(0) = identity2(cp);
    NCPoly hfac = NCPoly::one();
    NCPoly Epow = NCPoly::one();
    QRatFunc c(1);
    for (int n = 1; n <= order; ++n) {
        hfac = cp.nc_multiply(hfac, H - NCPoly::scalar(QRatFunc(2 * (n - 1))));
        Epow = cp.nc_multiply(Epow, E13);
        c = c * QRatFunc(coeff::Rational(-1, 2 * n));
        jfac.at(n) = tensor_of(cp, hfac, Epow).scaled(c);
    }
    return t2_mul(cp, ext, jfac, order);
}

} // namespace twistforge::twists
