#include "doctest.h"

#include "twistforge/errors.hpp"
#include "twistforge/hopf.hpp"
#include "twistforge/qexp.hpp"
#include "twistforge/uq.hpp"

#include <random>

using namespace twistforge;
using namespace twistforge::hopf;
using namespace twistforge::qgroups;
using coeff::QConvention;
using coeff::QRatFunc;
using ncalg::NCPoly;
using ncalg::TNC;

TEST_CASE("coproduct and antipode on U_q(sl2) generators") {
    UqContext ctx = build_uq(LieType::A, 1);
    const auto &p = ctx.alg();
    NCPoly e = p.generator("e1"), f = p.generator("f1");
    NCPoly kinv = p.cartan_monomial({-1}), k = p.cartan_monomial({1});

    TT2 de = ctx.H.coproduct(e, 0);
    TT2 expect(0);
    expect.at(0) = tensor_of(p, kinv, e) + tensor_of(p, e, NCPoly::one());
    CHECK(de == expect);

    TT2 d1 = ctx.H.coproduct(NCPoly::one(), 0);
    CHECK(d1 == tt2_identity(p, 0));

    // eps(e f k) = 0
    NCPoly efk = p.nc_multiply(p.nc_multiply(e, f), k);
    CHECK(ctx.H.counit(efk).is_zero());

    // S(e) = -k e
    TNC se = ctx.H.antipode(e, 0);
    TNC expect_s(0);
    expect_s.at(0) = p.normal_form(-p.nc_multiply(k, e));
    CHECK(se == expect_s);
}

TEST_CASE("Delta(e_{1+2}) matches the multiplicative expansion") {
    UqContext ctx = build_uq(LieType::A, 2);
    const auto &p = ctx.alg();
    NCPoly e1 = p.generator("e1"), e2 = p.generator("e2");
    NCPoly e12 = composite_generator(ctx, ctx.rs.highest);

    // independent route: Delta(e1)Delta(e2) - q Delta(e2)Delta(e1)
    TT2 d1 = ctx.H.coproduct(e1, 0), d2 = ctx.H.coproduct(e2, 0);
    TT2 lhs = t2_mul(p, d1, d2, 0) - t2_mul(p, d2, d1, 0).scaled(QRatFunc::q_power(1));
    CHECK(ctx.H.coproduct(e12, 0) == lhs);

    // and the displayed closed form k^-1 (x) e12 + e12 (x) 1 + (1-q^2) e1 k2^-1 (x) e2
    NCPoly k12inv = p.cartan_monomial({-1, -1});
    NCPoly e1k2inv = p.nc_multiply(e1, p.cartan_monomial({0, -1}));
    TT2 closed(0);
    closed.at(0) = tensor_of(p, k12inv, e12) + tensor_of(p, e12, NCPoly::one()) +
                   tensor_of(p, e1k2inv, e2).scaled(QRatFunc(1) - QRatFunc::q_power(2));
    CHECK(ctx.H.coproduct(e12, 0) == closed);
}

TEST_CASE("Hopf axioms for every in-scope quantum presentation") {
    for (auto spec : {std::pair{LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3},
                      {LieType::B, 2}, {LieType::C, 2}, {LieType::D, 4}}) {
        UqContext ctx = build_uq(spec.first, spec.second);
        auto rep = hopf_axiom_check(ctx.H, 3, 10, 2024);
        INFO(ctx.alg().name);
        for (const auto &f : rep.failed) INFO(f);
        CHECK(rep.pass());
    }
    UqContext prime = build_uq_prime_sl3();
    auto rep = hopf_axiom_check(prime.H, 3, 10, 2025);
    for (const auto &f : rep.failed) INFO(f);
    CHECK(rep.pass());
}

TEST_CASE("Delta is an algebra homomorphism (randomized)") {
    std::mt19937_64 rng(31337);
    UqContext ctx = build_uq(LieType::A, 2);
    const auto &p = ctx.alg();
    for (int t = 0; t < 10; ++t) {
        std::vector<int> seq1, seq2;
        for (int i = 0; i < 3; ++i) seq1.push_back((int)(rng() % (unsigned)p.n_symbols()));
        for (int i = 0; i < 2; ++i) seq2.push_back((int)(rng() % (unsigned)p.n_symbols()));
        NCPoly x = NCPoly::monomial(p.make_word(seq1));
        NCPoly y = NCPoly::monomial(p.make_word(seq2, {1, -1}));
        TT2 dxy = ctx.H.coproduct(p.nc_multiply(x, y), 0);
        TT2 dx_dy = t2_mul(p, ctx.H.coproduct(x, 0), ctx.H.coproduct(y, 0), 0);
        CHECK(dxy == dx_dy);
    }
}

TEST_CASE("t-series multiplication and inverse") {
    UqContext ctx = build_uq(LieType::A, 1);
    const auto &p = ctx.alg();
    NCPoly e = p.generator("e1");

    // (1 + t x)(1 - t x + t^2 x^2) = 1 + O(t^3)
    TNC a(2), b(2);
    a.at(0) = NCPoly::one();
    a.at(1) = e;
    b.at(0) = NCPoly::one();
    b.at(1) = -e;
    b.at(2) = p.nc_multiply(e, e);
    TNC prod = p.mul(a, b, 2);
    CHECK(prod.get(0) == NCPoly::one());
    CHECK(prod.get(1).is_zero());
    CHECK(prod.get(2).is_zero());

    // inv(1 (x) 1 + t A): degree-2 coefficient is A*A
    TT2 s(2);
    s.at(0) = identity2(p);
    Tensor2 A = tensor_of(p, e, e);
    s.at(1) = A;
    TT2 sinv = tt2_inv(p, s);
    TT2 AA(2);
    AA.at(0) = A;
    CHECK(sinv.get(2) == t2_mul(p, AA, AA, 0).get(0));

    // inv(W) * W = 1 through order 6 for W = exp_{q^2}(t e/(1-q^2))
    QRatFunc pref = (QRatFunc(1) - QRatFunc::q_power(2)).inv();
    TNC W = q_exp_series(p, e, QConvention::onesided(2), pref, 6);
    TNC Winv = tnc_inv(p, W);
    TNC one = p.mul(Winv, W, 6);
    CHECK(one.get(0) == NCPoly::one());
    for (int d = 1; d <= 6; ++d) CHECK(one.get(d).is_zero());

    CHECK_THROWS_AS(tnc_inv(p, a.scaled(QRatFunc::q_power(1))), NotInvertible);
}

TEST_CASE("q-exponential coefficients") {
    UqContext ctx = build_uq(LieType::A, 1);
    const auto &p = ctx.alg();
    NCPoly e = p.generator("e1");
    QRatFunc pref = (QRatFunc(1) - QRatFunc::q_power(2)).inv();

    TNC z = q_exp_series(p, NCPoly(), QConvention::onesided(2), pref, 3);
    CHECK(z.get(0) == NCPoly::one());
    for (int d = 1; d <= 3; ++d) CHECK(z.get(d).is_zero());

    TNC W = q_exp_series(p, e, QConvention::onesided(2), pref, 2);
    CHECK(W.get(1) == e.scaled(pref));
    // degree 2: x^2/((1-q^2)^2 (1+q^2)); (2)_{q^2} = 1 + q^2
    QRatFunc c2 = pref * pref * (QRatFunc(1) + QRatFunc::q_power(2)).inv();
    CHECK(W.get(2) == p.nc_multiply(e, e).scaled(c2));

    // inverse pair: exp_{q^2}(t x) exp_{q^-2}(-t x) = 1 through order 6
    TNC u = q_exp_series(p, e, QConvention::onesided(2), QRatFunc(1), 6);
    TNC v = q_exp_series(p, e, QConvention::onesided(-2), QRatFunc(-1), 6);
    TNC one = p.mul(u, v, 6);
    CHECK(one.get(0) == NCPoly::one());
    for (int d = 1; d <= 6; ++d) CHECK(one.get(d).is_zero());
}

TEST_CASE("counit laws on random elements") {
    std::mt19937_64 rng(555);
    UqContext ctx = build_uq(LieType::A, 2);
    const auto &p = ctx.alg();
    for (int t = 0; t < 8; ++t) {
        std::vector<int> seq;
        int len = 1 + (int)(rng() % 3u);
        for (int i = 0; i < len; ++i) seq.push_back((int)(rng() % (unsigned)p.n_symbols()));
        NCPoly x = NCPoly::monomial(p.make_word(seq, {(int)(rng() % 3) - 1, 0}));
        TT2 dx = ctx.H.coproduct(x, 0);
        TNC left = ctx.H.counit_slot(dx, 0, 0);
        TNC right = ctx.H.counit_slot(dx, 1, 0);
        TNC xr(0);
        xr.at(0) = p.normal_form(x);
        CHECK(p.reduce(left) == xr);
        CHECK(p.reduce(right) == xr);
    }
}
