#include "doctest.h"

#include "twistforge/errors.hpp"
#include "twistforge/qnumbers.hpp"
#include "twistforge/qratfunc.hpp"
#include "twistforge/useries.hpp"

#include <random>

using namespace twistforge;
using namespace twistforge::coeff;

namespace {

QRatFunc q() { return QRatFunc::q_power(1); }

QRatFunc random_ratfunc(std::mt19937_64 &rng, bool regular_at_one) {
    auto small = [&](int lo, int hi) { return lo + (int)(rng() % (unsigned)(hi - lo + 1)); };
    auto poly = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(small(-4, 4));
        return QPoly::from_coeffs(std::move(c));
    };
    for (;;) {
        QPoly n = poly(small(0, 3)), d = poly(small(0, 3));
        if (d.is_zero()) continue;
        QRatFunc f(n, d);
        if (regular_at_one && !f.regular_at_one()) continue;
        return f;
    }
}

// Independent oracle: exact long division of Laurent numerator by denominator,
// both given directly as u-polynomials.
std::vector<Rational> divide_series(std::vector<Rational> num, std::vector<Rational> den, int terms) {
    std::vector<Rational> out(terms, Rational(0));
    num.resize(terms + den.size(), Rational(0));
    REQUIRE(den[0] != 0);
    for (int i = 0; i < terms; ++i) {
        Rational c = num[i] / den[0];
        out[i] = c;
        for (size_t j = 0; j < den.size() && i + j < num.size(); ++j) num[i + j] -= c * den[j];
    }
    return out;
}

} // namespace

TEST_CASE("q_number examples") {
    // [2]_q = q + q^-1 = (q^2+1)/q
    QRatFunc two_sym = q_number(2, QConvention::symmetric(1));
    CHECK(two_sym == QRatFunc::q_power(1) + QRatFunc::q_power(-1));
    CHECK(two_sym.str() == "(q^2 + 1)/(q)");

    // (3)_{q^2} = 1 + q^2 + q^4
    QRatFunc three_os = q_number(3, QConvention::onesided(2));
    CHECK(three_os == QRatFunc(1) + QRatFunc::q_power(2) + QRatFunc::q_power(4));

    // [2 over 1]_q = [2]_q
    CHECK(q_binomial(2, 1, QConvention::symmetric(1)) == two_sym);

    CHECK_THROWS_AS(q_number(2, QConvention::onesided(0)), ZeroQFactorial);
}

TEST_CASE("q_number defining identity") {
    for (int n = 1; n <= 8; ++n) {
        QRatFunc lhs = q_number(n, QConvention::symmetric(1)) * (q() - QRatFunc::q_power(-1));
        CHECK(lhs == QRatFunc::q_power(n) - QRatFunc::q_power(-n));
    }
}

TEST_CASE("q_binomial is a Laurent polynomial") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= m; ++n) {
            QRatFunc b = q_binomial(m, n, QConvention::symmetric(1));
            // denominator must reduce to a pure power of q
            const QPoly &d = b.den();
            int nonzero = 0;
            for (int k = 0; k <= d.degree(); ++k)
                if (d.coeff(k) != 0) ++nonzero;
            CHECK(nonzero == 1);
        }
}

TEST_CASE("laurent_expand examples") {
    // 1/(1-q) = -u^-1 exactly
    QRatFunc f(QPoly(Rational(1)), QPoly::from_coeffs({Rational(1), Rational(-1)}));
    USeries s = laurent_expand(f, 4);
    CHECK(s.min_degree == -1);
    CHECK(s.coeff(-1) == -1);
    for (int k = 0; k <= 4; ++k) CHECK(s.coeff(k) == 0);

    // 1/(1-q^2): oracle = long division of 1 by (1-q^2)(q=1+u) = -2u - u^2.
    QRatFunc g(QPoly(Rational(1)), QPoly::from_coeffs({Rational(1), Rational(0), Rational(-1)}));
    USeries t = laurent_expand(g, 5);
    CHECK(t.min_degree == -1);
    auto oracle = divide_series({Rational(1)}, {Rational(-2), Rational(-1)}, 7);
    for (int k = -1; k <= 5; ++k) CHECK(t.coeff(k) == oracle[k + 1]);
    CHECK(t.coeff(-1) == Rational(-1, 2));
    CHECK(t.coeff(0) == Rational(1, 4));
    CHECK(t.coeff(1) == Rational(-1, 8));
    // cross-check by multiplying back: t * (-2u - u^2) = 1
    USeries den;
    den.min_degree = 1;
    den.truncation_order = 6;
    den.coeffs = {Rational(-2), Rational(-1)};
    USeries back = useries_mul(t, den);
    CHECK(back.coeff(0) == 1);
    for (int k = 1; k <= 4; ++k) CHECK(back.coeff(k) == 0);

    // q^-1 = 1 - u + u^2 - ...
    USeries h = laurent_expand(QRatFunc::q_power(-1), 4);
    for (int k = 0; k <= 4; ++k) CHECK(h.coeff(k) == ((k % 2 == 0) ? 1 : -1));
}

TEST_CASE("specialize_scalar examples") {
    QRatFunc f = (QRatFunc::q_power(2) - QRatFunc(1)) / (q() - QRatFunc(1));
    CHECK(specialize_scalar(f) == 2);
    CHECK(specialize_scalar(QRatFunc::q_power(3)) == 1);
    QRatFunc pole(QPoly(Rational(1)), QPoly::from_coeffs({Rational(1), Rational(-1)}));
    CHECK_THROWS_AS(specialize_scalar(pole), PoleAtOne);
}

TEST_CASE("ratfunc arithmetic examples") {
    CHECK((q() + QRatFunc::q_power(-1)).str() == "(q^2 + 1)/(q)");
    QRatFunc one_minus_q = QRatFunc(1) - q();
    CHECK(one_minus_q * one_minus_q.inv() == QRatFunc(1));
    QRatFunc inv = (q() - QRatFunc::q_power(-1)).inv();
    CHECK(inv == QRatFunc(QPoly::q_power(1), QPoly::from_coeffs({Rational(-1), Rational(0), Rational(1)})));
    CHECK_THROWS_AS(QRatFunc().inv(), DivisionByZero);
}

TEST_CASE("laurent expansion properties (randomized)") {
    std::mt19937_64 rng(20250809);
    for (int trial = 0; trial < 40; ++trial) {
        QRatFunc f = random_ratfunc(rng, true);
        USeries s = laurent_expand(f, 6);
        CHECK(s.min_degree >= 0);
        CHECK(s.coeff(0) == specialize_scalar(f));

        QRatFunc g = random_ratfunc(rng, false);
        USeries sf = laurent_expand(f, 8), sg = laurent_expand(g, 8);
        USeries prod = laurent_expand(f * g, 8);
        USeries prod2 = useries_mul(sf, sg);
        for (int k = prod2.min_degree; k <= prod2.truncation_order; ++k)
            CHECK(prod.coeff(k) == prod2.coeff(k));
    }
}

TEST_CASE("canonical equality") {
    QRatFunc a = (QRatFunc::q_power(4) - QRatFunc(1)) / (QRatFunc::q_power(2) - QRatFunc(1));
    QRatFunc b = QRatFunc::q_power(2) + QRatFunc(1);
    CHECK(a == b);
    CHECK(a.str() == b.str());
}
