#include "twistforge/qexp.hpp"

#include "twistforge/errors.hpp"

namespace twistforge::hopf {

using coeff::q_factorial;
using coeff::Rational;

TNC qexp(const Presentation &p, const TNC &arg, const QConvention &base, int trunc) {
    if (!arg.get(0).is_zero()) throw EngineError("qexp argument must vanish at t^0");
    TNC out(trunc), pw(trunc);
    out.at(0) = NCPoly::one();
    pw.at(0) = NCPoly::one();
    for (int n = 1; n <= trunc; ++n) {
        pw = p.mul(pw, arg, trunc);
        if (pw.is_zero()) break;
        QRatFunc inv_fact = q_factorial(n, base).inv();
        for (int d = 0; d <= trunc; ++d) out.at(d) += pw.get(d).scaled(inv_fact);
    }
    return out;
}

TT2 qexp(const Presentation &p, const TT2 &arg, const QConvention &base, int trunc) {
    if (!arg.get(0).is_zero()) throw EngineError("qexp argument must vanish at t^0");
    TT2 out(trunc), pw(trunc);
    out.at(0) = identity2(p);
    pw.at(0) = identity2(p);
    for (int n = 1; n <= trunc; ++n) {
        pw = t2_mul(p, pw, arg, trunc);
        if (pw.is_zero()) break;
        QRatFunc inv_fact = q_factorial(n, base).inv();
        for (int d = 0; d <= trunc; ++d) out.at(d) = out.get(d) + pw.get(d).scaled(inv_fact);
    }
    return out;
}

TNC exp_series(const Presentation &p, const TNC &arg, int trunc) {
    if (!arg.get(0).is_zero()) throw EngineError("exp argument must vanish at t^0");
    TNC out(trunc), pw(trunc);
    out.at(0) = NCPoly::one();
    pw.at(0) = NCPoly::one();
    Rational fact(1);
    for (int n = 1; n <= trunc; ++n) {
        pw = p.mul(pw, arg, trunc);
        if (pw.is_zero()) break;
        fact *= n;
        QRatFunc inv_fact(Rational(1) / fact);
        for (int d = 0; d <= trunc; ++d) out.at(d) += pw.get(d).scaled(inv_fact);
    }
    return out;
}

TT2 exp_series(const Presentation &p, const TT2 &arg, int trunc) {
    if (!arg.get(0).is_zero()) throw EngineError("exp argument must vanish at t^0");
    TT2 out(trunc), pw(trunc);
    out.at(0) = identity2(p);
    pw.at(0) = identity2(p);
    Rational fact(1);
    for (int n = 1; n <= trunc; ++n) {
        pw = t2_mul(p, pw, arg, trunc);
        if (pw.is_zero()) break;
        fact *= n;
        QRatFunc inv_fact(Rational(1) / fact);
        for (int d = 0; d <= trunc; ++d) out.at(d) = out.get(d) + pw.get(d).scaled(inv_fact);
    }
    return out;
}

TNC q_exp_series(const Presentation &p, const NCPoly &x, const QConvention &base,
                 const QRatFunc &prefactor, int trunc) {
    TNC arg(trunc);
    arg.at(1) = x.scaled(prefactor);
    return qexp(p, p.reduce(arg), base, trunc);
}

TT2 q_exp_series(const Presentation &p, const Tensor2 &x, const QConvention &base,
                 const QRatFunc &prefactor, int trunc) {
    TT2 arg(trunc);
    arg.at(1) = x.scaled(prefactor);
    return qexp(p, t2_reduce(p, arg), base, trunc);
}

TNC geometric_series(const Presentation &p, const NCPoly &x, int trunc) {
    TNC out(trunc), pw(trunc);
    out.at(0) = NCPoly::one();
    pw.at(0) = NCPoly::one();
    TNC step(trunc);
    step.at(1) = x;
    for (int n = 1; n <= trunc; ++n) {
        pw = p.mul(pw, step, trunc);
        if (pw.is_zero()) break;
        for (int d = 0; d <= trunc; ++d) out.at(d) += pw.get(d);
    }
    return out;
}

} // namespace twistforge::hopf
