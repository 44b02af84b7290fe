#include "twistforge/qnumbers.hpp"

#include "twistforge/errors.hpp"

namespace twistforge::coeff {

QRatFunc q_number(int n, const QConvention &conv) {
    const int m = conv.base_exp;
    if (conv.kind == QConvention::Kind::Symmetric) {
        // (q^{mn} - q^{-mn}) / (q^m - q^{-m}), held symbolically.
        if (m == 0) throw ZeroQFactorial();
        QRatFunc num = QRatFunc::q_power(m * n) - QRatFunc::q_power(-m * n);
        QRatFunc den = QRatFunc::q_power(m) - QRatFunc::q_power(-m);
        return num / den;
    }
    if (m == 0) throw ZeroQFactorial();
    QRatFunc num = QRatFunc(1) - QRatFunc::q_power(m * n);
    QRatFunc den = QRatFunc(1) - QRatFunc::q_power(m);
    return num / den;
}

QRatFunc q_factorial(int n, const QConvention &conv) {
    if (conv.base_exp == 0) throw ZeroQFactorial();
    QRatFunc r(1);
    for (int k = 1; k <= n; ++k) r = r * q_number(k, conv);
    return r;
}

QRatFunc q_binomial(int m, int n, const QConvention &conv) {
    return q_factorial(m, conv) / (q_factorial(n, conv) * q_factorial(m - n, conv));
}

} // namespace twistforge::coeff
