#pragma once

#include "twistforge/qratfunc.hpp"

namespace twistforge::coeff {

// Selects between the two q-number conventions of the source material:
//   symmetric  [l]_b = (b^l - b^-l)/(b - b^-1)
//   onesided   (k)_b = (1 - b^k)/(1 - b)
// with b = q^base_exp.
struct QConvention {
    enum class Kind { Symmetric, OneSided };
    Kind kind = Kind::Symmetric;
    int base_exp = 1;

    static QConvention symmetric(int base_exp = 1) { return {Kind::Symmetric, base_exp}; }
    static QConvention onesided(int base_exp = 1) { return {Kind::OneSided, base_exp}; }
};

QRatFunc q_number(int n, const QConvention &conv);
QRatFunc q_factorial(int n, const QConvention &conv); // n >= 0; throws ZeroQFactorial for base_exp 0
QRatFunc q_binomial(int m, int n, const QConvention &conv); // Gauss binomial, 0 <= n <= m

} // namespace twistforge::coeff
