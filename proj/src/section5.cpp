#include "twistforge/section5.hpp"

#include "twistforge/errors.hpp"

namespace twistforge::twists {

using coeff::QConvention;
using coeff::Rational;
using hopf::geometric_series;
using hopf::identity2;
using hopf::q_exp_series;
using hopf::qexp;
using hopf::t2_mul;
using hopf::tensor_of;
using hopf::tnc_inv;
using hopf::tt2_flip;
using hopf::tt2_of;

namespace {

// shift a series up by one power of t
TNC tshift(const TNC &x, int by = 1) {
    TNC r(x.trunc);
    for (int d = 0; d + by <= x.trunc && d < (int)x.c.size(); ++d) r.at(d + by) = x.get(d);
    return r;
}

} // namespace

Section5Artifacts build_section5(const UqContext &prime, const ClassicalTarget &ptgt, int order) {
    const Presentation &p = prime.alg();
    Section5Artifacts art;
    QRatFunc inv2 = (QRatFunc(1) - QRatFunc::q_power(2)).inv();

    NCPoly e1 = p.generator("e1"), e2 = p.generator("e2"), f2 = p.generator("f2");
    NCPoly L1 = p.cartan_monomial({1, 0});
    NCPoly k = p.cartan_monomial({2, -2});
    NCPoly e12 = p.nc_multiply(e1, e2) - p.nc_multiply(e2, e1).scaled(QRatFunc::q_power(1));
    art.E = p.nc_multiply(e12, L1);
    NCPoly G = p.nc_multiply(e1, k); // e1 L1^2 L2^-2
    NCPoly e2L1 = p.nc_multiply(e2, L1);
    NCPoly L1sq = p.cartan_monomial({2, 0});

    // displayed coproduct of e_{1+2} L1
    hopf::TT2 dE = prime.H.coproduct(art.E, 0);
    hopf::Tensor2 dE_expected = tensor_of(p, art.E, L1sq) + tensor_of(p, NCPoly::one(), art.E) +
                                tensor_of(p, G, e2L1).scaled(QRatFunc(1) - QRatFunc::q_power(2));
    art.delta_E_ok = (dE.get(0) == dE_expected);

    // the two q-commutation displays of the proof
    {
        hopf::Tensor2 mixed = tensor_of(p, art.E, L1sq) +
                              tensor_of(p, G, e2L1).scaled(QRatFunc(1) - QRatFunc::q_power(2));
        hopf::TT2 a(0), b(0);
        a.at(0) = tensor_of(p, NCPoly::one(), art.E);
        b.at(0) = mixed;
        art.qcomm1_ok =
            (t2_mul(p, a, b, 0) == t2_mul(p, b, a, 0).scaled(QRatFunc::q_power(-2)));
        hopf::TT2 c(0), d(0);
        c.at(0) = tensor_of(p, G, e2L1);
        d.at(0) = tensor_of(p, art.E, L1sq);
        art.qcomm2_ok =
            (t2_mul(p, c, d, 0) == t2_mul(p, d, c, 0).scaled(QRatFunc::q_power(-2)));
    }

    // W and the coboundary twist; Delta(W^-1) via the coproduct of the argument
    art.W = q_exp_series(p, art.E, QConvention::onesided(-2), -inv2, order);
    art.Winv = tnc_inv(p, art.W);
    {
        TT2 dW = q_exp_series(p, dE.get(0), QConvention::onesided(-2), -inv2, order);
        TT2 WW = tt2_of(p, art.W, art.W, order);
        art.J = t2_mul(p, WW, hopf::tt2_inv(p, dW), order);
    }

    // conjugated generators
    TNC geom = geometric_series(p, art.E, order);
    {
        TNC lhs = p.mul(p.mul(art.W, ncalg::tnc_of(k, order), order), art.Winv, order);
        art.conj_k_ok = (lhs == ncalg::tnc_of(k, order));
    }
    {
        TNC lhs = p.mul(p.mul(art.W, ncalg::tnc_of(e1, order), order), art.Winv, order);
        TNC rhs(order);
        {
            TNC e1s = ncalg::tnc_of(e1, order);
            rhs = p.mul(e1s, geom, order);
        }
        art.conj_e1_ok = (lhs == rhs);
    }
    art.z = p.mul(ncalg::tnc_of(p.nc_multiply(k, e1).scaled(QRatFunc::q_power(-1)), order), geom, order);
    {
        TNC lhs = p.mul(p.mul(art.W, ncalg::tnc_of(f2, order), order), art.Winv, order);
        TNC rhs = ncalg::tnc_of(f2, order) - tshift(art.z.scaled(inv2));
        art.conj_f2_ok = (lhs == rhs);
    }

    // J = J1 J2 in the displayed closed product form
    {
        // J1 = exp_{q^2}(t G (1-tE)^-1 (x) e2 L1)
        TT2 arg1 = tt2_of(p, tshift(p.mul(ncalg::tnc_of(G, order), geom, order)), ncalg::tnc_of(e2L1, order), order);
        TT2 J1 = qexp(p, arg1, QConvention::onesided(2), order);
        // J2 = 1(x)1 + sum_n t^n (-1)^n/(n)_{q^-2}! E^n (x) prod_{j=0}^{n-1}(L1^2 q^{-2j}-1)/(q^2-1)
        TT2 J2(order);
        J2.at(0) = identity2(p);
        QRatFunc invq2 = (QRatFunc::q_power(2) - QRatFunc(1)).inv();
        NCPoly Epow = NCPoly::one();
        NCPoly atoms = NCPoly::one();
        for (int n = 1; n <= order; ++n) {
            Epow = p.nc_multiply(Epow, art.E);
            NCPoly atom = NCPoly::monomial(p.make_word({}, {2, 0}), QRatFunc::q_power(-2 * (n - 1)) * invq2) -
                          NCPoly::scalar(invq2);
            atoms = p.nc_multiply(atoms, atom);
            QRatFunc c = coeff::q_factorial(n, QConvention::onesided(-2)).inv();
            if (n % 2 == 1) c = -c;
            J2.at(n) = tensor_of(p, Epow, atoms).scaled(c);
        }
        art.j1j2_ok = (art.J == t2_mul(p, J1, J2, order));
    }

    art.regular = qgroups::integral_membership(prime, art.J, false).member;
    art.Jbar = qgroups::specialize_tt2(prime, ptgt, art.J);

    // t^1 of Jbar and the noncoboundary witness
    {
        const Presentation &cp = ptgt.alg();
        NCPoly E12 = cp.generator("E12"), E23 = cp.generator("E23");
        NCPoly E13 = cp.nc_multiply(E12, E23) - cp.nc_multiply(E23, E12);
        NCPoly hw1 = cp.generator("hw1");
        hopf::Tensor2 t1 = tensor_of(cp, E12, E23) - tensor_of(cp, E13, hw1);
        art.jbar_t1_ok = (art.Jbar.get(1) == t1);
        art.noncoboundary = !(tt2_flip(art.Jbar).get(1) == art.Jbar.get(1));

        // displayed specialized closed form:
        // exp(t E12 (1-t E13)^-1 (x) E23) (1(x)1 + sum (-1)^n t^n E13^n (x) hw1(hw1-1).../n!)
        TNC cgeom = geometric_series(cp, E13, order);
        TT2 extarg = tt2_of(cp, tshift(cp.mul(ncalg::tnc_of(E12, order), cgeom, order)),
                            ncalg::tnc_of(E23, order), order);
        TT2 ext = hopf::exp_series(cp, extarg, order);
        TT2 second(order);
        second.at(0) = identity2(cp);
        NCPoly Epow = NCPoly::one();
        NCPoly hfac = NCPoly::one();
        Rational fact(1);
        for (int n = 1; n <= order; ++n) {
            Epow = cp.nc_multiply(Epow, E13);
            hfac = cp.nc_multiply(hfac, hw1 - NCPoly::scalar(QRatFunc(n - 1)));
            fact *= n;
            QRatFunc c{Rational((n % 2 == 1) ? -1 : 1) / fact};
            second.at(n) = tensor_of(cp, Epow, hfac).scaled(c);
        }
        art.jbar_closed_ok = (art.Jbar == t2_mul(cp, ext, second, order));
    }
    return art;
}

} // namespace twistforge::twists
