#pragma once

#include "twistforge/qratfunc.hpp"

#include <vector>

namespace twistforge::coeff {

// Truncated Laurent series in u = q-1 with exact rational coefficients.
// Represents sum coeffs[i] * u^(min_degree+i), correct through u^truncation_order.
struct USeries {
    int min_degree = 0;
    int truncation_order = -1;
    std::vector<Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rational coeff(int k) const; // 0 outside stored range
    void normalize();            // strip leading/trailing zeros, keep invariants
};

USeries useries_add(const USeries &a, const USeries &b);
USeries useries_mul(const USeries &a, const USeries &b);

// Laurent expansion of f around q=1, exact through u^order.
USeries laurent_expand(const QRatFunc &f, int order);

// f(1) for f regular at q=1; throws PoleAtOne otherwise.
Rational specialize_scalar(const QRatFunc &f);

} // namespace twistforge::coeff
