#include "doctest.h"

#include "twistforge/cg.hpp"

using namespace twistforge;
using namespace twistforge::twists;
using namespace twistforge::qgroups;
using coeff::QRatFunc;
using ncalg::NCPoly;

TEST_CASE("U'_q(sl3) presentation") {
    UqContext prime = build_uq_prime_sl3();
    const auto &p = prime.alg();
    // K_j = prod L_i^{a_ij}
    CHECK(prime.k_lattice({1, 0}) == std::vector<int>{2, -1});
    CHECK(prime.k_lattice({0, 1}) == std::vector<int>{-1, 2});
    // L_i e_j L_i^-1 = q^{delta_ij} e_j
    NCPoly e2 = p.generator("e2");
    NCPoly L1 = p.cartan_monomial({1, 0});
    CHECK(p.nc_multiply(L1, e2) == p.nc_multiply(e2, L1));
    NCPoly L2 = p.cartan_monomial({0, 1});
    CHECK(p.nc_multiply(L2, e2) == p.nc_multiply(e2, L2).scaled(QRatFunc::q_power(1)));
    auto smoke = ncalg::confluence_smoke_check(p, 5, 150, 31);
    CHECK(smoke.divergences == 0);
}

TEST_CASE("cg-hat twist") {
    UqContext prime = build_uq_prime_sl3();
    const auto &p = prime.alg();
    auto art = build_cg(prime, QRatFunc(1), 3);

    // order-1 coefficient is c f2 (x) e1
    CHECK(art.phi_hat.series.get(1) ==
          hopf::tensor_of(p, p.generator("f2"), p.generator("e1")));
    // (eps (x) id) Phi = 1
    CoproductCtx cc(prime.H);
    auto rep = cocycle_check(cc, art.phi_hat.series, 3, "cg-hat", p.name);
    CHECK(rep.pass);
    CHECK(rep.counit_ok);
}

TEST_CASE("cg regular twist F_CG") {
    UqContext prime = build_uq_prime_sl3();
    auto art = build_cg(prime, QRatFunc(1), 3);
    CHECK(art.closed_form_ok);
    CHECK(art.regular);
    CHECK(art.atoms_ok);
    CoproductCtx cc(prime.H);
    CHECK(cocycle_check(cc, art.f_cg.series, 3, "cg-regular", prime.alg().name).pass);

    // a different regular zeta constant
    auto art2 = build_cg(prime, QRatFunc::q_power(1) + QRatFunc(1), 2);
    CHECK(art2.closed_form_ok);
    CHECK(art2.regular);
    CHECK(cocycle_check(cc, art2.f_cg.series, 2, "cg-regular-zeta", prime.alg().name).pass);
}

TEST_CASE("q-series identities") {
    for (int a : {0, 1, 2}) CHECK(heine_check(a, 6).pass);
    CHECK(dilog_check(6).pass);
    CHECK(qexp_addition_check(6).pass);
    UqContext sl3 = build_uq(LieType::A, 2);
    CHECK(heine2_check(sl3, 4).pass);
    UqContext prime = build_uq_prime_sl3();
    auto ft = five_term_check(prime, QRatFunc(1), 4);
    CHECK(ft.pass);
}

TEST_CASE("heine at alpha=1 order 1 coefficient is x") {
    // (1)_q/(1)_q = 1, so the t-coefficient of both sides is x
    auto rep = heine_check(1, 1);
    CHECK(rep.pass);
}
