#include "doctest.h"

#include "twistforge/errors.hpp"
#include "twistforge/presentation.hpp"
#include "twistforge/qnumbers.hpp"
#include "twistforge/uq.hpp"

#include <random>

using namespace twistforge;
using namespace twistforge::ncalg;
using namespace twistforge::qgroups;
using coeff::QRatFunc;

namespace {

NCPoly random_poly(const Presentation &p, std::mt19937_64 &rng, int max_deg, int max_terms) {
    NCPoly out;
    int terms = 1 + (int)(rng() % (unsigned)max_terms);
    for (int t = 0; t < terms; ++t) {
        int len = (int)(rng() % (unsigned)(max_deg + 1));
        std::vector<int> seq;
        for (int i = 0; i < len; ++i) seq.push_back((int)(rng() % (unsigned)p.n_symbols()));
        std::vector<int> cart(p.cartan_rank(), 0);
        for (auto &c : cart) c = (int)(rng() % 3) - 1;
        int num = (int)(rng() % 7) - 3;
        if (num == 0) num = 1;
        out.add_term(p.make_word(seq, cart), QRatFunc(num));
    }
    return out;
}

} // namespace

TEST_CASE("U_q(sl2) defining relations") {
    UqContext ctx = build_uq(LieType::A, 1);
    const Presentation &p = ctx.alg();
    NCPoly e = p.generator("e1"), f = p.generator("f1");
    NCPoly k = p.generator("k1");
    NCPoly kinv = p.cartan_monomial({-1});

    // e f -> f e + (k - k^-1)/(q - q^-1)
    QRatFunc qm1 = (QRatFunc::q_power(1) - QRatFunc::q_power(-1)).inv();
    NCPoly expect = p.nc_multiply(f, e) + k.scaled(qm1) - kinv.scaled(qm1);
    CHECK(p.nc_multiply(e, f) == expect);

    // e k = q^-2 k e
    CHECK(p.nc_multiply(e, k) == p.nc_multiply(k, e).scaled(QRatFunc::q_power(-2)));

    // empty word is the identity
    CHECK(p.nc_multiply(NCPoly::one(), e) == e);
    CHECK(p.normal_form(NCPoly::one()) == NCPoly::one());
}

TEST_CASE("q_commutator examples") {
    UqContext sl3 = build_uq(LieType::A, 2);
    const Presentation &p = sl3.alg();
    NCPoly e1 = p.generator("e1"), e2 = p.generator("e2");

    NCPoly e12 = p.q_commutator(e1, e2, QRatFunc::q_power(1));
    NCPoly direct = p.nc_multiply(e1, e2) - p.nc_multiply(e2, e1).scaled(QRatFunc::q_power(1));
    CHECK(e12 == direct);
    CHECK_FALSE(e12.is_zero());

    CHECK(p.q_commutator(e1, e1, QRatFunc(1)).is_zero());

    UqContext sl2 = build_uq(LieType::A, 1);
    const Presentation &p2 = sl2.alg();
    QRatFunc qm1 = (QRatFunc::q_power(1) - QRatFunc::q_power(-1)).inv();
    NCPoly comm = p2.q_commutator(p2.generator("e1"), p2.generator("f1"), QRatFunc(1));
    NCPoly expect = p2.cartan_monomial({1}).scaled(qm1) - p2.cartan_monomial({-1}).scaled(qm1);
    CHECK(comm == expect);
}

TEST_CASE("Serre relation reduces to zero in U_q(sl3)") {
    UqContext ctx = build_uq(LieType::A, 2);
    const Presentation &p = ctx.alg();
    NCPoly e1 = p.generator("e1"), e2 = p.generator("e2");
    QRatFunc two = coeff::q_number(2, coeff::QConvention::symmetric(1));
    NCPoly serre = p.nc_multiply(p.nc_multiply(e1, e1), e2) -
                   p.nc_multiply(p.nc_multiply(e1, e2), e1).scaled(two) +
                   p.nc_multiply(p.nc_multiply(e2, e1), e1);
    CHECK(serre.is_zero());
}

TEST_CASE("two bracketings of a 4-letter product agree") {
    UqContext ctx = build_uq(LieType::A, 2);
    const Presentation &p = ctx.alg();
    NCPoly e1 = p.generator("e1"), e2 = p.generator("e2");
    NCPoly a = p.nc_multiply(e1, e2) - p.nc_multiply(e2, e1).scaled(QRatFunc::q_power(1));
    // ((a*a)) vs fully expanded letter-by-letter products
    NCPoly sq1 = p.nc_multiply(a, a);
    NCPoly sq2;
    for (const auto &[w1, c1] : a.terms())
        for (const auto &[w2, c2] : a.terms()) {
            NCPoly raw = p.multiply_words_raw(w1, w2, c1 * c2);
            sq2 += p.normal_form(raw);
        }
    CHECK(sq1 == sq2);
}

TEST_CASE("normal_form is idempotent and weight-preserving") {
    std::mt19937_64 rng(12345);
    for (auto spec : {std::pair{LieType::A, 1}, {LieType::A, 2}}) {
        UqContext ctx = build_uq(spec.first, spec.second);
        const Presentation &p = ctx.alg();
        for (int t = 0; t < 25; ++t) {
            NCPoly x = random_poly(p, rng, 4, 3);
            NCPoly nf = p.normal_form(x);
            CHECK(p.normal_form(nf) == nf);
            // weight preservation per input word
            for (const auto &[w, c] : x.terms()) {
                auto wt = p.weight(w);
                NCPoly nw = p.normal_form(NCPoly::monomial(w));
                for (const auto &[v, cc] : nw.terms()) CHECK(p.weight(v) == wt);
            }
        }
    }
}

TEST_CASE("nc_multiply associativity (randomized)") {
    std::mt19937_64 rng(777);
    for (auto spec : {std::pair{LieType::A, 1}, {LieType::A, 2}}) {
        UqContext ctx = build_uq(spec.first, spec.second);
        const Presentation &p = ctx.alg();
        for (int t = 0; t < 12; ++t) {
            NCPoly a = random_poly(p, rng, 3, 2);
            NCPoly b = random_poly(p, rng, 3, 2);
            NCPoly c = random_poly(p, rng, 3, 2);
            CHECK(p.nc_multiply(p.nc_multiply(a, b), c) == p.nc_multiply(a, p.nc_multiply(b, c)));
        }
    }
}

TEST_CASE("confluence smoke checks") {
    {
        UqContext ctx = build_uq(LieType::A, 1);
        auto rep = confluence_smoke_check(ctx.alg(), 4, 200, 99);
        CHECK(rep.divergences == 0);
        CHECK(rep.trials == 200);
    }
    {
        UqContext ctx = build_uq(LieType::A, 2);
        auto rep = confluence_smoke_check(ctx.alg(), 5, 200, 100);
        CHECK(rep.divergences == 0);
    }
    {
        // free algebra: no rules, trivially confluent
        Presentation p;
        p.name = "free2";
        p.add_symbol({"x", Sort::Generic, {}});
        p.add_symbol({"y", Sort::Generic, {}});
        p.finalize();
        auto rep = confluence_smoke_check(p, 6, 50, 7);
        CHECK(rep.divergences == 0);
    }
}

TEST_CASE("budget guard") {
    UqContext ctx = build_uq(LieType::A, 2);
    const Presentation &p = ctx.alg();
    setenv("TWISTFORGE_BUDGET", "3", 1);
    bool threw = false;
    try {
        int e = *p.find_symbol("e1"), f = *p.find_symbol("f1");
        Word w = p.make_word({e, f, e, f, e, f, e, f});
        p.normal_form(NCPoly::monomial(w));
    } catch (const BudgetExceeded &) {
        threw = true;
    }
    unsetenv("TWISTFORGE_BUDGET");
    CHECK(threw);
}

TEST_CASE("zero polynomial absorbs") {
    UqContext ctx = build_uq(LieType::A, 1);
    const Presentation &p = ctx.alg();
    NCPoly zero;
    CHECK(p.nc_multiply(zero, p.generator("e1")).is_zero());
    CHECK(p.normal_form(zero).is_zero());
}
