#include "doctest.h"

#include "twistforge/errors.hpp"
#include "twistforge/twist.hpp"

#include <random>

using namespace twistforge;
using namespace twistforge::twists;
using namespace twistforge::qgroups;
using coeff::QRatFunc;
using coeff::Rational;
using hopf::identity2;
using hopf::tensor_of;
using ncalg::NCPoly;
using ncalg::TNC;

TEST_CASE("cocycle check basics") {
    UqContext ctx = build_uq(LieType::A, 1);
    const auto &p = ctx.alg();
    CoproductCtx cc(ctx.H);

    // identity twist passes at all orders
    auto rep = cocycle_check(cc, hopf::tt2_identity(p, 4), 4, "identity", "A1");
    CHECK(rep.pass);
    CHECK(rep.counit_ok);

    // 1(x)1 + t e(x)e fails at order 1: the two sides differ by the
    // k^-1 (x) e (x) e versus 1 (x) e (x) e mismatch
    hopf::TT2 bad = hopf::tt2_identity(p, 1);
    bad.at(1) = tensor_of(p, p.generator("e1"), p.generator("e1"));
    auto brep = cocycle_check(cc, bad, 1, "bad", "A1");
    CHECK_FALSE(brep.pass);
    CHECK(brep.residual_terms[1] > 0);
}

TEST_CASE("coboundary twists satisfy the cocycle identity") {
    UqContext ctx = build_uq(LieType::A, 1);
    const auto &p = ctx.alg();
    CoproductCtx cc(ctx.H);

    // W = 1
    TNC one(3);
    one.at(0) = NCPoly::one();
    CHECK(coboundary_twist(cc, one, 3) == hopf::tt2_identity(p, 3));

    // W = 1 + t e
    TNC w = one;
    w.at(1) = p.generator("e1");
    auto rep = cocycle_check(cc, coboundary_twist(cc, w, 3), 3, "coboundary", "A1");
    CHECK(rep.pass);

    // randomized invertible W of degree <= 2
    std::mt19937_64 rng(808);
    for (int t = 0; t < 4; ++t) {
        TNC W(3);
        W.at(0) = NCPoly::one();
        for (int d = 1; d <= 2; ++d) {
            NCPoly x;
            int len = (int)(rng() % 3u);
            std::vector<int> seq;
            for (int i = 0; i < len; ++i) seq.push_back((int)(rng() % (unsigned)p.n_symbols()));
            x.add_term(p.make_word(seq, {(int)(rng() % 3) - 1}), QRatFunc((int)(rng() % 5) - 2));
            x = p.normal_form(x);
            // counit condition on the twist needs eps(W) = 1
            x -= NCPoly::scalar(ctx.H.counit(x));
            W.at(d) = x;
        }
        auto r = cocycle_check(cc, coboundary_twist(cc, W, 3), 3, "coboundary-random", "A1");
        CHECK(r.pass);
    }
}

TEST_CASE("Jordanian twist for sl2") {
    UqContext ctx = build_uq(LieType::A, 1);
    ClassicalTarget tgt = build_classical(ctx);
    const auto &cp = tgt.alg();
    auto art = build_jordanian(ctx, tgt, 3);

    CHECK(art.regular);
    CHECK(art.w_singular);
    CHECK(art.two_factor_ok);

    CoproductCtx cc(ctx.H);
    CHECK(cocycle_check(cc, art.twist.series, 3, "jordanian", "A1").pass);

    // specialization: 1(x)1 - (t/2) H (x) E + t^2 H(H-1)... with step-2 factorials
    NCPoly H = cp.generator("H1"), E = cp.generator("E12");
    CHECK(art.specialized.get(1) == tensor_of(cp, H, E).scaled(QRatFunc(Rational(-1, 2))));
    NCPoly HH2 = cp.nc_multiply(H, H - NCPoly::scalar(QRatFunc(2)));
    CHECK(art.specialized.get(2) ==
          tensor_of(cp, HH2, cp.nc_multiply(E, E)).scaled(QRatFunc(Rational(1, 8))));
    CHECK(art.specialized == example1_sl2_closed(tgt, 3));

    CHECK(classical_recheck(tgt, art.specialized, 3, "jordanian-A1").pass);

    auto rrep = semiclassical_r_check(ctx, tgt, art.specialized);
    CHECK(rrep.skew);
    CHECK(rrep.proportional);
    CHECK(rrep.constant == QRatFunc(Rational(1, 2)));
}

TEST_CASE("Jordanian twist for sl3 matches the Example 1 closed form") {
    UqContext ctx = build_uq(LieType::A, 2);
    ClassicalTarget tgt = build_classical(ctx);
    auto art = build_jordanian(ctx, tgt, 3);
    CHECK(art.regular);
    CHECK(art.w_singular);
    CHECK(art.two_factor_ok);
    CHECK(art.specialized == example1_sl3_closed(tgt, 3));

    auto rrep = semiclassical_r_check(ctx, tgt, art.specialized);
    CHECK(rrep.skew);
    CHECK(rrep.proportional);
    CHECK(rrep.constant == QRatFunc(Rational(1, 2)));

    // identity twist has r = 0
    auto zero = semiclassical_r_check(ctx, tgt, hopf::tt2_identity(tgt.alg(), 1));
    CHECK(zero.skew);
    CHECK(zero.proportional);
    CHECK(zero.constant.is_zero());
}

TEST_CASE("integral membership") {
    UqContext ctx = build_uq(LieType::A, 2);
    const auto &p = ctx.alg();
    QRatFunc inv_qm1 = (QRatFunc::q_power(1) - QRatFunc(1)).inv();

    // (k^-1 - 1)/(q-1) is integral
    NCPoly x = (p.cartan_monomial({-1, 0}) - NCPoly::one()).scaled(inv_qm1);
    CHECK(integral_membership(ctx, x, false).member);

    // e/(q-1) is not
    NCPoly y = p.generator("e1").scaled(inv_qm1);
    CHECK_FALSE(integral_membership(ctx, y, false).member);

    // restriction property: (Delta(e_12) - k^-1 (x) e_12 - e_12 (x) 1)/(q - q^-1)
    NCPoly e12 = composite_generator(ctx, ctx.rs.highest);
    hopf::TT2 d = ctx.H.coproduct(e12, 0);
    hopf::Tensor2 rest = d.get(0) - tensor_of(p, p.cartan_monomial({-1, -1}), e12) -
                         tensor_of(p, e12, NCPoly::one());
    QRatFunc inv_qq = (QRatFunc::q_power(1) - QRatFunc::q_power(-1)).inv();
    auto mem = integral_membership(ctx, rest.scaled(inv_qq), true);
    CHECK(mem.member);

    // Delta(e_beta) is integral for every composite root vector
    for (auto spec : {std::pair{LieType::A, 2}, {LieType::B, 2}}) {
        UqContext c = build_uq(spec.first, spec.second);
        for (int r = 0; r < c.rs.n_positive(); ++r) {
            hopf::TT2 dr = c.H.coproduct(composite_generator(c, r), 0);
            CHECK(integral_membership(c, dr.get(0), false).member);
        }
    }
}

TEST_CASE("specialization basics") {
    UqContext ctx = build_uq(LieType::A, 1);
    ClassicalTarget tgt = build_classical(ctx);
    // k^-1 -> 1
    CHECK(specialize_nc(ctx, tgt, ctx.alg().cartan_monomial({-1})) == NCPoly::one());
    // (k-1)/(q-1) -> H
    QRatFunc inv_qm1 = (QRatFunc::q_power(1) - QRatFunc(1)).inv();
    NCPoly dk = (ctx.alg().cartan_monomial({1}) - NCPoly::one()).scaled(inv_qm1);
    CHECK(specialize_nc(ctx, tgt, dk) == tgt.alg().generator("H1"));
    // 1/(q-1) alone is singular
    CHECK_THROWS_AS(specialize_nc(ctx, tgt, NCPoly::scalar(inv_qm1)), NotRegular);

    // prime form: (L1-1)/(q-1) -> h_w1
    UqContext prime = build_uq_prime_sl3();
    ClassicalTarget ptgt = build_classical(prime);
    NCPoly dl = (prime.alg().cartan_monomial({1, 0}) - NCPoly::one()).scaled(inv_qm1);
    CHECK(specialize_nc(prime, ptgt, dl) == ptgt.alg().generator("hw1"));
}

TEST_CASE("specialization is multiplicative on regular elements") {
    std::mt19937_64 rng(4u);
    UqContext ctx = build_uq(LieType::A, 2);
    ClassicalTarget tgt = build_classical(ctx);
    const auto &p = ctx.alg();
    QRatFunc inv_qm1 = (QRatFunc::q_power(1) - QRatFunc(1)).inv();
    auto random_atom_product = [&]() {
        NCPoly x = NCPoly::one();
        int len = 1 + (int)(rng() % 3u);
        for (int i = 0; i < len; ++i) {
            switch (rng() % 4u) {
            case 0: x = p.nc_multiply(x, p.generator("e" + std::to_string(1 + rng() % 2))); break;
            case 1: x = p.nc_multiply(x, p.generator("f" + std::to_string(1 + rng() % 2))); break;
            case 2: {
                std::vector<int> k(2, 0);
                k[rng() % 2] = -1;
                x = p.nc_multiply(x, p.cartan_monomial(k));
                break;
            }
            default: {
                std::vector<int> k(2, 0);
                k[rng() % 2] = 1;
                NCPoly d = (p.cartan_monomial(k) - NCPoly::one()).scaled(inv_qm1);
                x = p.nc_multiply(x, d);
            }
            }
        }
        return x;
    };
    for (int t = 0; t < 8; ++t) {
        NCPoly a = random_atom_product(), b = random_atom_product();
        NCPoly lhs = specialize_nc(ctx, tgt, p.nc_multiply(a, b));
        NCPoly rhs = tgt.alg().nc_multiply(specialize_nc(ctx, tgt, a), specialize_nc(ctx, tgt, b));
        CHECK(lhs == rhs);
    }
}
