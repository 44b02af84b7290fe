#include "twistforge/cm.hpp"

#include "twistforge/errors.hpp"

namespace twistforge::twists {

using coeff::QConvention;
using coeff::Rational;
using hopf::identity2;
using hopf::q_exp_series;
using hopf::qexp;
using hopf::t2_mul;
using hopf::tensor_of;
using hopf::tnc_inv;
using hopf::tt2_of;
using ncalg::Sort;
using ncalg::tnc_of;

namespace {

TNC tshift(const TNC &x, int by = 1) {
    TNC r(x.trunc);
    for (int d = 0; d + by <= x.trunc && d < (int)x.c.size(); ++d) r.at(d + by) = x.get(d);
    return r;
}

TT2 tt2shift(const TT2 &x, int by = 1) {
    TT2 r(x.trunc);
    for (int d = 0; d + by <= x.trunc && d < (int)x.c.size(); ++d) r.at(d + by) = x.get(d);
    return r;
}

// multiply with no t-shift expected (cartan crossings only)
NCPoly mul0(const Presentation &p, const NCPoly &a, const NCPoly &b) {
    TNC r = p.mul(tnc_of(a, p.t_cap()), tnc_of(b, p.t_cap()), p.t_cap());
    for (int d = 1; d < (int)r.c.size(); ++d)
        if (!r.get(d).is_zero()) throw EngineError("unexpected t-shift in mul0");
    return r.get(0);
}

void set_primitive(HopfPresentation &h, int id) {
    const auto &p = h.alg;
    NCPoly g = p.generator(id);
    TT2 d(0);
    d.at(0) = tensor_of(p, g, NCPoly::one()) + tensor_of(p, NCPoly::one(), g);
    h.set_generator_hopf(id, d, QRatFunc(0), tnc_of(-g, 0));
}

} // namespace

CMPresentations build_cm_presentations() {
    CMPresentations cm;
    QRatFunc half{Rational(1, 2)};

    // --- H1 with delta_1..delta_3 ---
    {
        Presentation &p = cm.H1.alg;
        p.name = "H1";
        int d1 = p.add_symbol({"d1", Sort::Generic, {}});
        int d2 = p.add_symbol({"d2", Sort::Generic, {}});
        int d3 = p.add_symbol({"d3", Sort::Generic, {}});
        int X = p.add_symbol({"X", Sort::Generic, {}});
        int Y = p.add_symbol({"Y", Sort::Generic, {}});
        int dn[3] = {d1, d2, d3};
        // [Y, d_n] = n d_n ; [X, d_n] = d_{n+1} (d4 truncated away); [d_k, d_l] = 0
        for (int n = 0; n < 3; ++n) {
            NCPoly rhs = NCPoly::monomial(p.make_word({dn[n], Y}));
            rhs.add_term(p.make_word({dn[n]}), QRatFunc(n + 1));
            p.add_rule_raw({Y, dn[n]}, {{0, rhs}});
        }
        for (int n = 0; n < 2; ++n) {
            NCPoly rhs = NCPoly::monomial(p.make_word({dn[n], X}));
            rhs.add_term(p.make_word({dn[n + 1]}), QRatFunc(1));
            p.add_rule_raw({X, dn[n]}, {{0, rhs}});
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                p.add_rule_raw({dn[b], dn[a]}, {{0, NCPoly::monomial(p.make_word({dn[a], dn[b]}))}});
        // [Y, X] = X
        {
            NCPoly rhs = NCPoly::monomial(p.make_word({X, Y}));
            rhs.add_term(p.make_word({X}), QRatFunc(1));
            p.add_rule_raw({Y, X}, {{0, rhs}});
        }
        p.finalize();

        NCPoly D1 = p.generator(d1), D2 = p.generator(d2), D3 = p.generator(d3);
        NCPoly Xg = p.generator(X), Yg = p.generator(Y);
        set_primitive(cm.H1, d1);
        set_primitive(cm.H1, Y);
        {
            TT2 d(0);
            d.at(0) = tensor_of(p, D2, NCPoly::one()) + tensor_of(p, NCPoly::one(), D2) +
                      tensor_of(p, D1, D1);
            cm.H1.set_generator_hopf(d2, d, QRatFunc(0),
                                     tnc_of(p.normal_form(-D2 + p.nc_multiply(D1, D1)), 0));
        }
        {
            TT2 d(0);
            d.at(0) = tensor_of(p, D3, NCPoly::one()) + tensor_of(p, NCPoly::one(), D3) +
                      tensor_of(p, D2, D1) + tensor_of(p, D1, D2).scaled(QRatFunc(3)) +
                      tensor_of(p, p.nc_multiply(D1, D1), D1);
            NCPoly s = -D3 + p.nc_multiply(D1, D2).scaled(QRatFunc(4)) -
                       p.nc_multiply(D1, p.nc_multiply(D1, D1)).scaled(QRatFunc(2));
            cm.H1.set_generator_hopf(d3, d, QRatFunc(0), tnc_of(p.normal_form(s), 0));
        }
        {
            TT2 d(0);
            d.at(0) = tensor_of(p, Xg, NCPoly::one()) + tensor_of(p, NCPoly::one(), Xg) +
                      tensor_of(p, D1, Yg);
            NCPoly s = -Xg + p.nc_multiply(D1, Yg);
            cm.H1.set_generator_hopf(X, d, QRatFunc(0), tnc_of(p.normal_form(s), 0));
        }
    }

    // --- H1' = H1 / <delta_2 - delta_1^2/2>, Z for delta_1 ---
    {
        Presentation &p = cm.H1p.alg;
        p.name = "H1'";
        int Z = p.add_symbol({"Z", Sort::Generic, {}});
        int X = p.add_symbol({"X", Sort::Generic, {}});
        int Y = p.add_symbol({"Y", Sort::Generic, {}});
        {
            NCPoly rhs = NCPoly::monomial(p.make_word({X, Y}));
            rhs.add_term(p.make_word({X}), QRatFunc(1));
            p.add_rule_raw({Y, X}, {{0, rhs}});
        }
        {
            NCPoly rhs = NCPoly::monomial(p.make_word({Z, Y}));
            rhs.add_term(p.make_word({Z}), QRatFunc(1));
            p.add_rule_raw({Y, Z}, {{0, rhs}});
        }
        {
            // [X, Z] = Z^2/2
            NCPoly rhs = NCPoly::monomial(p.make_word({Z, X}));
            rhs.add_term(p.make_word({Z, Z}), half);
            p.add_rule_raw({X, Z}, {{0, rhs}});
        }
        p.finalize();
        knuth_bendix_complete(p, 6);
        NCPoly Zg = p.generator(Z), Xg = p.generator(X), Yg = p.generator(Y);
        set_primitive(cm.H1p, Z);
        set_primitive(cm.H1p, Y);
        TT2 d(0);
        d.at(0) = tensor_of(p, Xg, NCPoly::one()) + tensor_of(p, NCPoly::one(), Xg) +
                  tensor_of(p, Zg, Yg);
        cm.H1p.set_generator_hopf(X, d, QRatFunc(0),
                                  tnc_of(p.normal_form(-Xg + p.nc_multiply(Zg, Yg)), 0));
    }

    // --- quantum D_q: k x k^-1 = q^2 x, k z k^-1 = q^2 z, q^2 x z - z x = -t z^2 ---
    {
        Presentation &p = cm.Dq.alg;
        p.name = "Dq";
        int z = p.add_symbol({"z", Sort::Generic, {}});
        int x = p.add_symbol({"x", Sort::Generic, {}});
        int kc = p.add_cartan("k");
        p.set_pairing(kc, x, 2);
        p.set_pairing(kc, z, 2);
        {
            // x z = q^-2 z x - q^-2 t z^2
            NCPoly r0 = NCPoly::monomial(p.make_word({z, x}), QRatFunc::q_power(-2));
            NCPoly r1 = NCPoly::monomial(p.make_word({z, z}), -QRatFunc::q_power(-2));
            p.add_rule_raw({x, z}, {{0, r0}, {1, r1}});
        }
        p.finalize();
        NCPoly xg = p.generator(x), zg = p.generator(z);
        NCPoly kg = p.cartan_monomial({1}), kinv = p.cartan_monomial({-1});
        QRatFunc inv2 = (QRatFunc(1) - QRatFunc::q_power(2)).inv();
        {
            TT2 d(0);
            d.at(0) = tensor_of(p, zg, kg) + tensor_of(p, NCPoly::one(), zg);
            cm.Dq.set_generator_hopf(z, d, QRatFunc(0), tnc_of(-mul0(p, zg, kinv), 0));
        }
        {
            TT2 d(1);
            d.at(0) = tensor_of(p, xg, kinv) + tensor_of(p, NCPoly::one(), xg);
            d.at(1) = tensor_of(p, zg, (kg - kinv).scaled(inv2));
            TNC s(1);
            s.at(0) = -mul0(p, xg, kg);
            s.at(1) = mul0(p, zg, (kg - kinv).scaled(inv2));
            cm.Dq.set_generator_hopf(x, d, QRatFunc(0), s);
        }
    }

    // --- classical D1: [yb,xb]=xb, [yb,zb]=zb, xb zb - zb xb = -t zb^2 ---
    {
        Presentation &p = cm.D1.alg;
        p.name = "D1";
        int zb = p.add_symbol({"zb", Sort::Generic, {}});
        int xb = p.add_symbol({"xb", Sort::Generic, {}});
        int yb = p.add_symbol({"yb", Sort::Generic, {}});
        {
            NCPoly rhs = NCPoly::monomial(p.make_word({xb, yb}));
            rhs.add_term(p.make_word({xb}), QRatFunc(1));
            p.add_rule_raw({yb, xb}, {{0, rhs}});
        }
        {
            NCPoly rhs = NCPoly::monomial(p.make_word({zb, yb}));
            rhs.add_term(p.make_word({zb}), QRatFunc(1));
            p.add_rule_raw({yb, zb}, {{0, rhs}});
        }
        {
            NCPoly r0 = NCPoly::monomial(p.make_word({zb, xb}));
            NCPoly r1 = NCPoly::monomial(p.make_word({zb, zb}), QRatFunc(-1));
            p.add_rule_raw({xb, zb}, {{0, r0}, {1, r1}});
        }
        p.finalize();
        NCPoly x = p.generator(xb), y = p.generator(yb), z = p.generator(zb);
        set_primitive(cm.D1, yb);
        set_primitive(cm.D1, zb);
        {
            TT2 d(1);
            d.at(0) = tensor_of(p, x, NCPoly::one()) + tensor_of(p, NCPoly::one(), x);
            d.at(1) = tensor_of(p, z, y).scaled(QRatFunc(-2));
            TNC s(1);
            s.at(0) = -x;
            s.at(1) = -mul0(p, z, y).scaled(QRatFunc(2));
            cm.D1.set_generator_hopf(xb, d, QRatFunc(0), s);
        }
    }
    return cm;
}

CMAlgebraReport cm_algebra_suite(const UqContext &prime, const ClassicalTarget &ptgt,
                                 const Section5Artifacts &s5, int order) {
    CMAlgebraReport rep;
    const Presentation &p = prime.alg();
    const Presentation &cp = ptgt.alg();
    QRatFunc inv2 = (QRatFunc(1) - QRatFunc::q_power(2)).inv();
    QRatFunc q2 = QRatFunc::q_power(2);

    NCPoly k = p.cartan_monomial({2, -2});
    NCPoly kinv = p.cartan_monomial({-2, 2});
    TNC x = tnc_of(p.generator("f2"), order);
    TNC z = s5.z.truncated(order);

    // (a) quantum D_q relations
    rep.dq_kx = (p.mul(tnc_of(k, order), x, order) == p.mul(x, tnc_of(k, order), order).scaled(q2));
    rep.dq_kz = (p.mul(tnc_of(k, order), z, order) == p.mul(z, tnc_of(k, order), order).scaled(q2));
    {
        TNC lhs = p.mul(x, z, order).scaled(q2) - p.mul(z, x, order);
        TNC zz = tshift(p.mul(z, z, order));
        rep.dq_xz = (lhs == -zz);
    }
    // twisted coproducts
    CoproductCtx dctx(prime.H, s5.J);
    {
        TT2 dk = dctx.delta(tnc_of(k, order), order);
        TT2 kk(order);
        kk.at(0) = tensor_of(p, k, k);
        rep.dq_delta_k = (dk == kk);
    }
    {
        TT2 dz = dctx.delta(z, order);
        TT2 expect = tt2_of(p, z, tnc_of(k, order), order) +
                     tt2_of(p, tnc_of(NCPoly::one(), order), z, order);
        rep.dq_delta_z = (dz == expect);
    }
    {
        TT2 dx = dctx.delta(x, order);
        TT2 expect = tt2_of(p, x, tnc_of(kinv, order), order) +
                     tt2_of(p, tnc_of(NCPoly::one(), order), x, order) +
                     tt2shift(tt2_of(p, z, tnc_of((k - kinv).scaled(inv2), order), order));
        rep.dq_delta_x = (dx == expect);
    }

    // (b) classical D1 after specialization; yb = ((k-1)/(q^2-1))-bar
    NCPoly yb = qgroups::specialize_nc(prime, ptgt,
                                       (k - NCPoly::one()).scaled((QRatFunc::q_power(2) - QRatFunc(1)).inv()));
    TNC xb = qgroups::specialize_tnc(prime, ptgt, x);
    TNC zb = qgroups::specialize_tnc(prime, ptgt, z);
    TNC ybs = tnc_of(yb, order);
    auto comm = [&](const TNC &a, const TNC &b) { return cp.mul(a, b, order) - cp.mul(b, a, order); };
    rep.d1_yx = (comm(ybs, xb) == xb);
    rep.d1_yz = (comm(ybs, zb) == zb);
    rep.d1_xz = (comm(xb, zb) == -tshift(cp.mul(zb, zb, order)));

    TT2 dxbar = qgroups::specialize_tt2(prime, ptgt, dctx.delta(x, order));
    TT2 dybar = qgroups::specialize_tt2(
        prime, ptgt,
        dctx.delta(tnc_of((k - NCPoly::one()).scaled((QRatFunc::q_power(2) - QRatFunc(1)).inv()), order),
                   order));
    TT2 dzbar = qgroups::specialize_tt2(prime, ptgt, dctx.delta(z, order));
    auto primitive_of = [&](const TNC &a) {
        return tt2_of(cp, a, tnc_of(NCPoly::one(), order), order) +
               tt2_of(cp, tnc_of(NCPoly::one(), order), a, order);
    };
    rep.d1_delta_y = (dybar == primitive_of(ybs));
    rep.d1_delta_z = (dzbar == primitive_of(zb));
    {
        TT2 expect = primitive_of(xb) - tt2shift(tt2_of(cp, zb, ybs, order)).scaled(QRatFunc(2));
        rep.d1_delta_x = (dxbar == expect);
        if (!rep.d1_delta_x)
            rep.notes.push_back("Delta(xb) differs from xb(x)1 + 1(x)xb - 2t zb(x)yb");
        rep.notes.push_back("yb normalized as ((k-1)/(q^2-1))-bar; the paper's (q-1) reading "
                            "fails [yb,xb]=xb by a factor 2");
    }

    // (c) iota: X -> -xb/2, Y -> yb, Z -> t zb
    TNC iX = xb.scaled(QRatFunc(Rational(-1, 2)));
    TNC iY = ybs;
    TNC iZ = tshift(zb);
    rep.iota_rel_yx = (comm(iY, iX) == iX);
    rep.iota_rel_yz = (comm(iY, iZ) == iZ);
    rep.iota_rel_xz = (comm(iX, iZ) == cp.mul(iZ, iZ, order).scaled(QRatFunc(Rational(1, 2))));
    {
        // Delta-bar(iota(g)) = (iota x iota)(Delta_{H1'}(g))
        TT2 lhsX = dxbar.scaled(QRatFunc(Rational(-1, 2)));
        TT2 rhsX = primitive_of(iX) + tt2_of(cp, iZ, iY, order);
        rep.iota_delta_x = (lhsX == rhsX);
        rep.iota_delta_y = (dybar == primitive_of(iY));
        TT2 lhsZ = tt2shift(dzbar);
        rep.iota_delta_z = (lhsZ == primitive_of(iZ));
    }

    // (d) PBW: monomials xb^a yb^b zb^c, a+b+c <= 3, linearly independent
    {
        std::vector<TNC> monos;
        for (int a = 0; a + 0 <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                for (int c = 0; a + b + c <= 3; ++c) {
                    TNC m = tnc_of(NCPoly::one(), order);
                    for (int i = 0; i < a; ++i) m = cp.mul(m, xb, order);
                    for (int i = 0; i < b; ++i) m = cp.mul(m, ybs, order);
                    for (int i = 0; i < c; ++i) m = cp.mul(m, zb, order);
                    monos.push_back(m);
                }
        // exact rank via Gaussian elimination over the coefficient field
        std::map<std::pair<int, ncalg::Word>, int> col;
        for (const auto &m : monos)
            for (int d = 0; d < (int)m.c.size(); ++d)
                for (const auto &[w, c] : m.get(d).terms()) col.emplace(std::make_pair(d, w), 0);
        int nc = 0;
        for (auto &[k2, v] : col) v = nc++;
        std::vector<std::vector<QRatFunc>> rows;
        for (const auto &m : monos) {
            std::vector<QRatFunc> row(nc, QRatFunc(0));
            for (int d = 0; d < (int)m.c.size(); ++d)
                for (const auto &[w, c] : m.get(d).terms()) row[col[{d, w}]] = c;
            rows.push_back(std::move(row));
        }
        int rank = 0;
        for (int c0 = 0; c0 < nc && rank < (int)rows.size(); ++c0) {
            int piv = -1;
            for (int r = rank; r < (int)rows.size(); ++r)
                if (!rows[r][c0].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[rank], rows[piv]);
            for (int r = 0; r < (int)rows.size(); ++r) {
                if (r == rank || rows[r][c0].is_zero()) continue;
                QRatFunc f = rows[r][c0] / rows[rank][c0];
                for (int cc = c0; cc < nc; ++cc) rows[r][cc] -= f * rows[rank][cc];
            }
            ++rank;
        }
        rep.pbw_independent = (rank == (int)monos.size());
    }
    return rep;
}

CMTwistReport cm_twist_chain(const UqContext &prime, const ClassicalTarget &ptgt,
                             const Section5Artifacts &s5, int order) {
    CMTwistReport rep;
    const Presentation &p = prime.alg();
    const Presentation &cp = ptgt.alg();
    QRatFunc inv2 = (QRatFunc(1) - QRatFunc::q_power(2)).inv();
    NCPoly e1 = p.generator("e1"), f2 = p.generator("f2");
    NCPoly k = p.cartan_monomial({2, -2});
    NCPoly e1k = p.nc_multiply(e1, k);

    // V with the exact constants; the first exponent carries t^2 per power,
    // i.e. the zeta = q^-1 t^2/(1-q^2) instance of the F_CG family
    TNC V;
    {
        TNC arg(order);
        arg.at(2) = e1k.scaled(-QRatFunc::q_power(-1) * inv2 * inv2);
        V = p.mul(qexp(p, arg, QConvention::onesided(-2), order),
                  q_exp_series(p, f2, QConvention::onesided(2), inv2, order), order);
    }
    // Ftilde = (V x V) exp_{q^-2}(q^-3 t^3/(1-q^2)^2 f2 (x) e1) Delta(V^-1)
    TT2 mid(order);
    {
        TT2 arg(order);
        arg.at(3) = tensor_of(p, f2, e1).scaled(QRatFunc::q_power(-3) * inv2 * inv2);
        mid = qexp(p, arg, QConvention::onesided(-2), order);
    }
    TT2 ftilde = t2_mul(p, t2_mul(p, tt2_of(p, V, V, order), mid, order),
                        prime.H.coproduct(tnc_inv(p, V), order), order);

    // its displayed closed form
    {
        TT2 closed(order);
        closed.at(0) = identity2(p);
        TT2 B(order);
        B.at(1) = tensor_of(p, f2, NCPoly::one());
        B.at(2) = tensor_of(p, e1k, k).scaled(QRatFunc::q_power(-1) * inv2);
        TT2 Bpow = hopf::tt2_identity(p, order);
        QRatFunc invq2 = (QRatFunc::q_power(2) - QRatFunc(1)).inv();
        for (int n = 1; n <= order; ++n) {
            Bpow = t2_mul(p, Bpow, B, order);
            NCPoly atoms = NCPoly::one();
            for (int j = 0; j < n; ++j) {
                NCPoly atom =
                    NCPoly::monomial(p.make_word({}, {-2, 2}), QRatFunc::q_power(2 * j) * invq2) -
                    NCPoly::scalar(invq2);
                atoms = p.nc_multiply(atoms, atom);
            }
            TT2 left(order);
            left.at(0) = tensor_of(p, NCPoly::one(), atoms);
            TT2 term = t2_mul(p, left, Bpow, order);
            QRatFunc c = coeff::q_factorial(n, QConvention::onesided(2)).inv();
            for (int d = 0; d <= order; ++d) closed.at(d) = closed.get(d) + term.get(d).scaled(c);
        }
        rep.ftilde_closed_ok = (ftilde == closed);
    }

    // F_q = (W x W) Ftilde (W^-1 x W^-1)
    TT2 Fq = t2_mul(p, t2_mul(p, tt2_of(p, s5.W, s5.W, order), ftilde, order),
                    tt2_of(p, s5.Winv, s5.Winv, order), order);

    // closed form obtained by conjugating the verified Ftilde closed form:
    // bracket = t (f2 - t/(1-q^2) z) (x) 1 + q^-2 t^2/(1-q^2) z (x) k; the
    // displayed bracket differs and is recorded as a deviation
    {
        TT2 closed(order);
        closed.at(0) = identity2(p);
        QRatFunc invq2 = (QRatFunc::q_power(2) - QRatFunc(1)).inv();
        TNC z = s5.z.truncated(order);
        TT2 B(order);
        B.at(1) = tensor_of(p, f2, NCPoly::one());
        B = B - tt2_of(p, tshift(z, 2).scaled(inv2), tnc_of(NCPoly::one(), order), order);
        B = B + tt2_of(p, tshift(z, 2).scaled(QRatFunc::q_power(-2) * inv2), tnc_of(k, order), order);
        TT2 Bpow = hopf::tt2_identity(p, order);
        for (int n = 1; n <= order; ++n) {
            Bpow = t2_mul(p, Bpow, B, order);
            NCPoly atoms = NCPoly::one();
            for (int j = 0; j < n; ++j) {
                NCPoly atom =
                    NCPoly::monomial(p.make_word({}, {-2, 2}), QRatFunc::q_power(2 * j) * invq2) -
                    NCPoly::scalar(invq2);
                atoms = p.nc_multiply(atoms, atom);
            }
            TT2 left(order);
            left.at(0) = tensor_of(p, NCPoly::one(), atoms);
            TT2 term = t2_mul(p, left, Bpow, order);
            QRatFunc c = coeff::q_factorial(n, QConvention::onesided(2)).inv();
            for (int d = 0; d <= order; ++d) closed.at(d) = closed.get(d) + term.get(d).scaled(c);
        }
        rep.fq_closed_ok = (Fq == closed);
        if (rep.fq_closed_ok)
            rep.notes.push_back("F_q closed form verified with the conjugated bracket "
                                "t(f2 - t/(1-q^2) z)(x)1 + q^-2 t^2/(1-q^2) z(x)k; the displayed "
                                "bracket differs at t^2");
    }

    // cocycle in the twisted Hopf structure
    CoproductCtx dctx(prime.H, s5.J);
    rep.fq_cocycle = cocycle_check(dctx, Fq, order, "F_q", "Uq'(sl3)^J");
    rep.fq_regular = qgroups::integral_membership(prime, Fq, false).member;

    // specialize(F_q) = (iota x iota)(F1 closed form)
    {
        TT2 Fq_bar = qgroups::specialize_tt2(prime, ptgt, Fq);
        NCPoly yb = qgroups::specialize_nc(
            prime, ptgt, (k - NCPoly::one()).scaled((QRatFunc::q_power(2) - QRatFunc(1)).inv()));
        TNC xb = qgroups::specialize_tnc(prime, ptgt, tnc_of(f2, order));
        TNC zb = qgroups::specialize_tnc(prime, ptgt, s5.z);
        // (iota x iota)(F1) with the delta = -1/2 member of the iota family:
        // iota(X) = -(xb + t zb)/2, iota(Y) = yb, iota(Z) = t zb. The delta = 0
        // member verifies the relation/coproduct checks; this one matches F1.
        zb = zb.truncated(order);
        TT2 B = tt2_of(cp, -xb - tshift(zb), tnc_of(NCPoly::one(), order), order) +
                tt2_of(cp, tshift(zb), tnc_of(yb, order), order);
        TT2 f1(order);
        f1.at(0) = identity2(cp);
        TT2 Bpow = hopf::tt2_identity(cp, order);
        NCPoly yfac = NCPoly::one();
        Rational fact(1);
        for (int n = 1; n <= order; ++n) {
            Bpow = t2_mul(cp, Bpow, B, order);
            yfac = cp.nc_multiply(yfac, yb - NCPoly::scalar(QRatFunc(n - 1)));
            fact *= n;
            TT2 left(order);
            left.at(0) = tensor_of(cp, NCPoly::one(), yfac);
            TT2 term = tt2shift(t2_mul(cp, left, Bpow, order), n);
            for (int d = 0; d <= order; ++d)
                f1.at(d) = f1.get(d) + term.get(d).scaled(QRatFunc(Rational(1) / fact));
        }
        rep.f1_match = (Fq_bar == f1);
        rep.notes.push_back("F1 identification: iota(X) = -(xb + t zb)/2 (the delta=-1/2 member "
                            "of the one-parameter iota family), iota(Y) = yb, iota(Z) = t zb");
    }

    // F1' inside abstract H1'
    {
        CMPresentations cm = build_cm_presentations();
        const Presentation &hp = cm.H1p.alg;
        NCPoly X = hp.generator("X"), Y = hp.generator("Y"), Z = hp.generator("Z");
        const int ord = std::max(order, 2);
        // F1 = 1(x)1 + sum t^n/n! (1 (x) Y(Y-1)...)(2X(x)1 + Z(x)Y)^n
        TT2 B(ord);
        B.at(0) = tensor_of(hp, X, NCPoly::one()).scaled(QRatFunc(2)) + tensor_of(hp, Z, Y);
        TT2 f1(ord);
        f1.at(0) = identity2(hp);
        TT2 Bpow = hopf::tt2_identity(hp, ord);
        NCPoly yfac = NCPoly::one();
        Rational fact(1);
        for (int n = 1; n <= ord; ++n) {
            Bpow = t2_mul(hp, Bpow, B, ord);
            yfac = hp.nc_multiply(yfac, Y - NCPoly::scalar(QRatFunc(n - 1)));
            fact *= n;
            TT2 left(ord);
            left.at(0) = tensor_of(hp, NCPoly::one(), yfac);
            TT2 term = tt2shift(t2_mul(hp, left, Bpow, ord), n);
            for (int d = 0; d <= ord; ++d)
                f1.at(d) = f1.get(d) + term.get(d).scaled(QRatFunc(Rational(1) / fact));
        }
        // coboundary by exp(t X Y)
        TNC exy(ord);
        exy.at(1) = hp.normal_form(hp.nc_multiply(X, Y));
        TNC u = hopf::exp_series(hp, exy, ord);
        TNC uinv = tnc_inv(hp, u);
        TT2 f1p = t2_mul(hp, t2_mul(hp, tt2_of(hp, u, u, ord), f1, ord),
                         cm.H1p.coproduct(uinv, ord), ord);

        hopf::Tensor2 derived = tensor_of(hp, X, Y) - tensor_of(hp, Y, X) -
                                tensor_of(hp, hp.nc_multiply(Z, Y), Y);
        hopf::Tensor2 displayed = tensor_of(hp, X, Y) - tensor_of(hp, Y, X) +
                                  tensor_of(hp, hp.nc_multiply(Z, Y), Y);
        rep.f1p_t1_derived_ok = (f1p.get(1) == derived);
        rep.f1p_t1_displayed_ok = (f1p.get(1) == displayed);
        rep.f1p_t1_derived = hopf::tensor2_str(hp, f1p.get(1));
        if (!rep.f1p_t1_displayed_ok)
            rep.notes.push_back("displayed F1' first order has +ZY(x)Y; the construction gives "
                                "-ZY(x)Y, which is the sign the Eq.(3) equivalence requires");

        // Eq.(3): sum t^n sum_k S(X)^k/k! (2Y+k)_{n-k} (x) X^{n-k}/(n-k)! (2Y+n-k)_k
        TT2 eq3(ord);
        NCPoly SX = hp.normal_form(-X + hp.nc_multiply(Z, Y));
        auto rising = [&](const NCPoly &base, int shift, int m) {
            NCPoly r = NCPoly::one();
            for (int j = 0; j < m; ++j)
                r = hp.nc_multiply(r, base.scaled(QRatFunc(2)) + NCPoly::scalar(QRatFunc(shift + j)));
            return r;
        };
        for (int n = 0; n <= ord; ++n) {
            hopf::Tensor2 coeff_n;
            for (int kk = 0; kk <= n; ++kk) {
                NCPoly sxk = NCPoly::one();
                for (int j = 0; j < kk; ++j) sxk = hp.nc_multiply(sxk, SX);
                NCPoly left = hp.nc_multiply(sxk, rising(Y, kk, n - kk));
                NCPoly xk = NCPoly::one();
                for (int j = 0; j < n - kk; ++j) xk = hp.nc_multiply(xk, X);
                NCPoly right = hp.nc_multiply(xk, rising(Y, n - kk, kk));
                Rational c = Rational(1);
                for (int j = 2; j <= kk; ++j) c /= j;
                for (int j = 2; j <= n - kk; ++j) c /= j;
                coeff_n = coeff_n + tensor_of(hp, left, right).scaled(QRatFunc(c));
            }
            eq3.at(n) = coeff_n;
        }
        hopf::Tensor2 eq3_expect = (tensor_of(hp, Y, X) - tensor_of(hp, X, Y) +
                                    tensor_of(hp, hp.nc_multiply(Z, Y), Y))
                                       .scaled(QRatFunc(2));
        rep.eq3_t1_ok = (eq3.get(1) == eq3_expect);

        // equivalence convention: F1'(t -> -2t) matches Eq.(3)
        TT2 f1p_scaled = f1p.rescale_t(QRatFunc(-2));
        rep.equivalence_t1_ok = (f1p_scaled.get(1) == eq3.get(1));
        rep.equivalence_t2_ok = (f1p_scaled.get(2) == eq3.get(2));
        rep.notes.push_back("comparison convention: t -> -2t applied to F1' reproduces Eq.(3)");
    }
    return rep;
}

} // namespace twistforge::twists
