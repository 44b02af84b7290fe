#include "doctest.h"

#include "twistforge/errors.hpp"
#include "twistforge/uq.hpp"

using namespace twistforge;
using namespace twistforge::qgroups;
using coeff::QRatFunc;
using ncalg::NCPoly;

TEST_CASE("root system construction") {
    RootSystem a2 = build_root_system(LieType::A, 2);
    CHECK(a2.n_positive() == 3);
    CHECK(a2.positive_alpha[a2.highest] == std::vector<int>{1, 1});

    RootSystem b2 = build_root_system(LieType::B, 2);
    CHECK(b2.n_positive() == 4);
    CHECK(b2.cartan_matrix == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(b2.positive_alpha[b2.highest] == std::vector<int>{1, 2});

    RootSystem c2 = build_root_system(LieType::C, 2);
    CHECK(c2.n_positive() == 4);
    CHECK(c2.positive_alpha[c2.highest] == std::vector<int>{2, 1});

    RootSystem d4 = build_root_system(LieType::D, 4);
    CHECK(d4.n_positive() == 12);
    CHECK(d4.positive_alpha[d4.highest] == std::vector<int>{1, 2, 1, 1});

    CHECK_THROWS_AS(build_root_system(LieType::D, 3), UnsupportedType);
    CHECK_THROWS_AS(build_root_system(LieType::B, 1), UnsupportedType);
}

TEST_CASE("paper normal orderings") {
    // A2: ascending alpha2 < alpha1+alpha2 < alpha1
    RootSystem a2 = build_root_system(LieType::A, 2);
    NormalOrdering o = paper_normal_ordering(a2);
    REQUIRE(o.ascending.size() == 3);
    CHECK(a2.positive_alpha[o.ascending[0]] == std::vector<int>{0, 1});
    CHECK(a2.positive_alpha[o.ascending[1]] == std::vector<int>{1, 1});
    CHECK(a2.positive_alpha[o.ascending[2]] == std::vector<int>{1, 0});

    // C2: alpha1 < 2 alpha1 + beta < alpha1 + beta < beta
    RootSystem c2 = build_root_system(LieType::C, 2);
    NormalOrdering oc = paper_normal_ordering(c2);
    CHECK(c2.positive_alpha[oc.ascending[0]] == std::vector<int>{1, 0});
    CHECK(c2.positive_alpha[oc.ascending[1]] == std::vector<int>{2, 1});
    CHECK(c2.positive_alpha[oc.ascending[2]] == std::vector<int>{1, 1});
    CHECK(c2.positive_alpha[oc.ascending[3]] == std::vector<int>{0, 1});

    for (auto spec : {std::pair{LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3},
                      {LieType::B, 2}, {LieType::C, 2}, {LieType::D, 4}}) {
        RootSystem rs = build_root_system(spec.first, spec.second);
        NormalOrdering ord = paper_normal_ordering(rs);
        CHECK(is_normal_ordering(rs, ord));
        CHECK(is_normal_ordering(rs, reversed_ordering(ord)));
    }
}

TEST_CASE("composite generators") {
    UqContext ctx = build_uq(LieType::A, 2);
    const auto &p = ctx.alg();
    NCPoly e1 = p.generator("e1"), e2 = p.generator("e2");

    // highest root of A2: e1 e2 - q e2 e1
    NCPoly e12 = composite_generator(ctx, ctx.rs.highest);
    NCPoly expect = p.nc_multiply(e1, e2) - p.nc_multiply(e2, e1).scaled(QRatFunc::q_power(1));
    CHECK(e12 == expect);

    // simple roots map to the Chevalley letters
    for (int r = 0; r < ctx.rs.n_positive(); ++r) {
        int h = 0;
        for (int x : ctx.rs.positive_alpha[r]) h += x;
        if (h == 1) {
            NCPoly g = composite_generator(ctx, r);
            CHECK(g.size() == 1);
        }
    }

    // weight bookkeeping: every composite is homogeneous of weight gamma
    for (auto spec : {std::pair{LieType::A, 3}, {LieType::B, 2}, {LieType::C, 2}, {LieType::D, 4}}) {
        UqContext c = build_uq(spec.first, spec.second);
        for (int r = 0; r < c.rs.n_positive(); ++r) {
            NCPoly g = composite_generator(c, r);
            CHECK_FALSE(g.is_zero());
            for (const auto &[w, cf] : g.terms()) CHECK(c.alg().weight(w) == c.rs.positive_alpha[r]);
        }
    }
}

TEST_CASE("Prop 2 q-commutations with the paper ordering") {
    for (auto spec : {std::pair{LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3},
                      {LieType::B, 2}, {LieType::C, 2}, {LieType::D, 4}}) {
        UqContext ctx = build_uq(spec.first, spec.second);
        auto rep = q_commutation_check(ctx, ctx.ordering, true);
        INFO(lie_type_name(spec.first), spec.second);
        CHECK(rep.failures == 0);
        CHECK(rep.prop3_ok);
        CHECK(rep.ext_ok);
    }
}

TEST_CASE("negative control: reversed ordering fails in A2") {
    UqContext ctx = build_uq(LieType::A, 2);
    NormalOrdering rev = reversed_ordering(ctx.ordering);
    // paper composites, wrong-side pairs
    auto rep = q_commutation_check(ctx, rev, false);
    CHECK(rep.pairs > 0);
    CHECK(rep.failures > 0);
}

TEST_CASE("confluence smoke for the bigger presentations") {
    for (auto spec : {std::pair{LieType::A, 3}, {LieType::B, 2}, {LieType::C, 2}}) {
        UqContext ctx = build_uq(spec.first, spec.second);
        auto rep = ncalg::confluence_smoke_check(ctx.alg(), 5, 120, 4242);
        INFO(ctx.alg().name);
        CHECK(rep.divergences == 0);
    }
    UqContext d4 = build_uq(LieType::D, 4);
    auto rep = ncalg::confluence_smoke_check(d4.alg(), 4, 80, 17);
    CHECK(rep.divergences == 0);
}
