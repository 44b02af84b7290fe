#include "doctest.h"

#include "twistforge/cm.hpp"
#include "twistforge/hopf.hpp"

using namespace twistforge;
using namespace twistforge::twists;
using namespace twistforge::qgroups;
using coeff::QRatFunc;
using ncalg::NCPoly;

namespace {

struct Fixture {
    UqContext prime = build_uq_prime_sl3();
    ClassicalTarget ptgt;
    Section5Artifacts s5;
    Fixture() : ptgt(build_classical(prime)), s5(build_section5(prime, ptgt, 3)) {}
};

} // namespace

TEST_CASE("section 5 artifacts") {
    Fixture f;
    CHECK(f.s5.delta_E_ok);
    CHECK(f.s5.qcomm1_ok);
    CHECK(f.s5.qcomm2_ok);
    CHECK(f.s5.conj_k_ok);
    CHECK(f.s5.conj_e1_ok);
    CHECK(f.s5.conj_f2_ok);
    CHECK(f.s5.j1j2_ok);
    CHECK(f.s5.regular);
    CHECK(f.s5.jbar_t1_ok);
    CHECK(f.s5.jbar_closed_ok);
    CHECK(f.s5.noncoboundary);
    CoproductCtx cc(f.prime.H);
    CHECK(cocycle_check(cc, f.s5.J, 3, "section5-J", "Uq'(sl3)").pass);
}

TEST_CASE("Hopf axioms for the CM presentations") {
    auto cm = build_cm_presentations();
    CHECK(hopf::hopf_axiom_check(cm.H1p, 3, 10, 7).pass());
    CHECK(hopf::hopf_axiom_check(cm.Dq, 3, 10, 7).pass());
    CHECK(hopf::hopf_axiom_check(cm.D1, 3, 10, 7).pass());
    // H1 carries delta_1..3 only; generator-level checks stay inside the cap
    CHECK(hopf::hopf_axiom_check(cm.H1, 2, 0, 7).pass());
}

TEST_CASE("H1' antipode value") {
    auto cm = build_cm_presentations();
    const auto &p = cm.H1p.alg;
    // S(X) = -X + ZY
    ncalg::TNC sx = cm.H1p.antipode(p.generator("X"), 0);
    NCPoly expect = p.normal_form(-p.generator("X") + p.nc_multiply(p.generator("Z"), p.generator("Y")));
    CHECK(sx.get(0) == expect);
}

TEST_CASE("cm algebra suite") {
    Fixture f;
    auto rep = cm_algebra_suite(f.prime, f.ptgt, f.s5, 2);
    for (auto &n : rep.notes) INFO(n);
    CHECK(rep.dq_kx);
    CHECK(rep.dq_kz);
    CHECK(rep.dq_xz);
    CHECK(rep.dq_delta_k);
    CHECK(rep.dq_delta_z);
    CHECK(rep.dq_delta_x);
    CHECK(rep.d1_yx);
    CHECK(rep.d1_yz);
    CHECK(rep.d1_xz);
    CHECK(rep.d1_delta_y);
    CHECK(rep.d1_delta_z);
    CHECK(rep.d1_delta_x);
    CHECK(rep.iota_rel_yx);
    CHECK(rep.iota_rel_yz);
    CHECK(rep.iota_rel_xz);
    CHECK(rep.iota_delta_x);
    CHECK(rep.iota_delta_y);
    CHECK(rep.iota_delta_z);
    CHECK(rep.pbw_independent);
}

TEST_CASE("cm twist chain") {
    Fixture f;
    auto rep = cm_twist_chain(f.prime, f.ptgt, f.s5, 2);
    CHECK(rep.ftilde_closed_ok);
    CHECK(rep.fq_closed_ok);
    CHECK(rep.fq_cocycle.pass);
    CHECK(rep.fq_regular);
    CHECK(rep.f1_match);
    CHECK(rep.f1p_t1_derived_ok);
    CHECK_FALSE(rep.f1p_t1_displayed_ok); // the documented display sign
    CHECK(rep.eq3_t1_ok);
    CHECK(rep.equivalence_t1_ok);
}
