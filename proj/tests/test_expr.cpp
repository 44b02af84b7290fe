#include "doctest.h"

#include "twistforge/errors.hpp"
#include "twistforge/expr.hpp"
#include "twistforge/report.hpp"

#include <random>

using namespace twistforge;
using namespace twistforge::cli;
using namespace twistforge::qgroups;
using coeff::QRatFunc;

namespace {

struct Fixture {
    UqContext uq = build_uq(LieType::A, 2);
    ClassicalTarget tgt;
    EvalContext ctx;
    Fixture() : tgt(build_classical(uq)) {
        ctx.uq = &uq;
        ctx.classical = &tgt;
        ctx.trunc = 3;
    }
};

Expr random_ast(std::mt19937_64 &rng, int depth) {
    Expr e;
    if (depth == 0 || rng() % 4 == 0) {
        if (rng() % 2) {
            e.type = Expr::Type::Num;
            e.num = (long)(rng() % 9);
        } else {
            e.type = Expr::Type::Sym;
            const char *names[] = {"q", "t", "e1", "e2", "f1", "k1"};
            e.name = names[rng() % 6];
        }
        return e;
    }
    switch (rng() % 6) {
    case 0: e.type = Expr::Type::Add; break;
    case 1: e.type = Expr::Type::Sub; break;
    case 2: e.type = Expr::Type::Mul; break;
    case 3: e.type = Expr::Type::Ox; break;
    case 4:
        e.type = Expr::Type::Pow;
        e.exponent = 1 + (int)(rng() % 3);
        e.kids = {random_ast(rng, depth - 1)};
        return e;
    default:
        e.type = Expr::Type::Neg;
        e.kids = {random_ast(rng, depth - 1)};
        return e;
    }
    e.kids = {random_ast(rng, depth - 1), random_ast(rng, depth - 1)};
    return e;
}

} // namespace

TEST_CASE("parsing the spec examples") {
    // q-commutator AST
    Expr e = parse_expr("e1*e2 - q*e2*e1");
    CHECK(e.type == Expr::Type::Sub);
    CHECK(e.kids[0].type == Expr::Type::Mul);

    Expr f = parse_expr("qexp(q^2; t/(1-q^2); e1)");
    CHECK(f.type == Expr::Type::Call);
    CHECK(f.name == "qexp");
    CHECK(f.kids.size() == 3);

    try {
        parse_expr("e1 ox");
        FAIL("expected syntax error");
    } catch (const SyntaxError &err) {
        CHECK(err.position == 6);
    }
}

TEST_CASE("evaluation") {
    Fixture fx;
    const auto &p = fx.uq.alg();
    // the q-commutator expression equals the engine q-commutator
    Value v = eval_expr(parse_expr("e1*e2 - q*e2*e1"), fx.ctx);
    REQUIRE(v.kind == Value::Kind::NC);
    CHECK(v.nc.get(0) ==
          p.q_commutator(p.generator("e1"), p.generator("e2"), QRatFunc::q_power(1)));

    // qexp matches q_exp_series
    Value w = eval_expr(parse_expr("qexp(q^2; t/(1-q^2); e1)"), fx.ctx);
    QRatFunc pref = (QRatFunc(1) - QRatFunc::q_power(2)).inv();
    auto series = hopf::q_exp_series(p, p.generator("e1"), coeff::QConvention::onesided(2), pref, 3);
    CHECK(w.nc == series);

    // coproduct and counit
    Value d = eval_expr(parse_expr("coproduct(e1)"), fx.ctx);
    REQUIRE(d.kind == Value::Kind::Tensor);
    CHECK(d.t2 == fx.uq.H.coproduct(p.generator("e1"), 3));
    Value c = eval_expr(parse_expr("counit(k1*e1)"), fx.ctx);
    CHECK(c.scalar[0].is_zero());

    // specialize
    Value s = eval_expr(parse_expr("specialize((k1-1)/(q-1))"), fx.ctx);
    REQUIRE(s.kind == Value::Kind::NC);
    CHECK(s.nc.get(0) == fx.tgt.alg().generator("H1"));

    CHECK_THROWS_AS(eval_expr(parse_expr("nope1"), fx.ctx), UnknownGenerator);
}

TEST_CASE("print/parse round trip (randomized)") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        Expr e = random_ast(rng, 3);
        Expr round = parse_expr(print_expr(e));
        CHECK(round.same_shape(e));
    }
}

TEST_CASE("presentation file round trip") {
    UqContext ctx = build_uq(LieType::A, 2);
    std::string text = presentation_to_json(ctx.alg());
    ncalg::Presentation p2 = presentation_from_json(text);
    CHECK(presentation_to_json(p2) == text);
    // the round-tripped presentation reduces identically
    auto e1 = p2.generator("e1"), f1 = p2.generator("f1");
    CHECK(p2.nc_multiply(e1, f1) == ctx.alg().nc_multiply(e1, f1));
}
