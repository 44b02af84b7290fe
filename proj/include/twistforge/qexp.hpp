#pragma once

#include "twistforge/qnumbers.hpp"
#include "twistforge/tensor.hpp"

namespace twistforge::hopf {

using coeff::QConvention;

// sum_n arg^n / (n)_base! with the argument's t-degree-0 slice required to be
// zero (every power of the argument carries at least one power of t).
TNC qexp(const Presentation &p, const TNC &arg, const QConvention &base, int trunc);
TT2 qexp(const Presentation &p, const TT2 &arg, const QConvention &base, int trunc);

// Plain exponential sum_n arg^n / n!.
TNC exp_series(const Presentation &p, const TNC &arg, int trunc);
TT2 exp_series(const Presentation &p, const TT2 &arg, int trunc);

// Spec form: sum_n prefactor^n x^n / (n)_base! placed at t-degree n.
TNC q_exp_series(const Presentation &p, const NCPoly &x, const QConvention &base,
                 const QRatFunc &prefactor, int trunc);
TT2 q_exp_series(const Presentation &p, const Tensor2 &x, const QConvention &base,
                 const QRatFunc &prefactor, int trunc);

// Geometric series 1/(1 - t*x) = sum_n t^n x^n.
TNC geometric_series(const Presentation &p, const NCPoly &x, int trunc);

} // namespace twistforge::hopf
