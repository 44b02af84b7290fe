#include "twistforge/useries.hpp"

#include "twistforge/errors.hpp"

namespace twistforge::coeff {

Rational USeries::coeff(int k) const {
    int i = k - min_degree;
    if (i < 0 || i >= (int)coeffs.size()) return Rational(0);
    return coeffs[i];
}

void USeries::normalize() {
    size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) {
        coeffs.clear();
        min_degree = 0;
        return;
    }
    if (lead > 0) {
        coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
        min_degree += (int)lead;
    }
    int last = truncation_order - min_degree;
    if (last >= 0 && (int)coeffs.size() > last + 1) coeffs.resize(last + 1);
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

USeries useries_add(const USeries &a, const USeries &b) {
    USeries r;
    r.truncation_order = std::min(a.truncation_order, b.truncation_order);
    if (a.is_zero() && b.is_zero()) return r;
    r.min_degree = a.is_zero() ? b.min_degree : (b.is_zero() ? a.min_degree : std::min(a.min_degree, b.min_degree));
    r.coeffs.assign(r.truncation_order - r.min_degree + 1, Rational(0));
    for (int k = r.min_degree; k <= r.truncation_order; ++k)
        r.coeffs[k - r.min_degree] = a.coeff(k) + b.coeff(k);
    r.normalize();
    return r;
}

USeries useries_mul(const USeries &a, const USeries &b) {
    USeries r;
    if (a.is_zero() || b.is_zero()) {
        r.truncation_order = std::min(a.truncation_order, b.truncation_order);
        return r;
    }
    // A factor known from degree a.min up to its truncation limits the product's
    // reliable range the usual way.
    r.truncation_order = std::min(a.truncation_order + b.min_degree, b.truncation_order + a.min_degree);
    r.min_degree = a.min_degree + b.min_degree;
    if (r.truncation_order < r.min_degree) return r;
    r.coeffs.assign(r.truncation_order - r.min_degree + 1, Rational(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            int k = a.min_degree + (int)i + b.min_degree + (int)j;
            if (k > r.truncation_order) break;
            r.coeffs[k - r.min_degree] += a.coeffs[i] * b.coeffs[j];
        }
    }
    r.normalize();
    return r;
}

USeries laurent_expand(const QRatFunc &f, int order) {
    USeries r;
    r.truncation_order = order;
    if (f.is_zero()) return r;

    QPoly nu = f.num().compose_one_plus_u();
    QPoly de = f.den().compose_one_plus_u();
    // Strip powers of u.
    auto strip = [](const QPoly &p, int &val) {
        val = 0;
        while (p.coeff(val) == 0) ++val;
        std::vector<Rational> c(p.coeffs().begin() + val, p.coeffs().end());
        return QPoly::from_coeffs(std::move(c));
    };
    int a = 0, b = 0;
    QPoly n0 = strip(nu, a);
    QPoly d0 = strip(de, b);
    r.min_degree = a - b;
    int len = order - r.min_degree + 1;
    if (len <= 0) return r;
    // Power-series long division n0/d0 to `len` terms; d0(0) != 0.
    r.coeffs.assign(len, Rational(0));
    std::vector<Rational> rem(len, Rational(0));
    for (int i = 0; i < len && i <= n0.degree(); ++i) rem[i] = n0.coeff(i);
    Rational d0inv = Rational(1) / d0.coeff(0);
    for (int i = 0; i < len; ++i) {
        Rational c = rem[i] * d0inv;
        r.coeffs[i] = c;
        if (c == 0) continue;
        for (int j = 0; i + j < len && j <= d0.degree(); ++j)
            rem[i + j] -= c * d0.coeff(j);
    }
    r.normalize();
    return r;
}

Rational specialize_scalar(const QRatFunc &f) {
    return f.specialize_at_one();
}

} // namespace twistforge::coeff
