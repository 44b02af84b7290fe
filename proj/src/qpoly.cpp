#include "twistforge/qpoly.hpp"

#include "twistforge/errors.hpp"

#include <sstream>

namespace twistforge::coeff {

std::string rational_str(const Rational &r) {
    return r.get_str();
}

QPoly::QPoly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

QPoly QPoly::q_power(int k) {
    QPoly p;
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = 1;
    return p;
}

QPoly QPoly::from_coeffs(std::vector<Rational> c) {
    QPoly p;
    p.coeffs_ = std::move(c);
    p.normalize();
    return p;
}

const Rational &QPoly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= (int)coeffs_.size()) return zero;
    return coeffs_[k];
}

const Rational &QPoly::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly operator+(const QPoly &a, const QPoly &b) {
    QPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.normalize();
    return r;
}

QPoly operator-(const QPoly &a, const QPoly &b) {
    QPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    r.normalize();
    return r;
}

QPoly operator*(const QPoly &a, const QPoly &b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::scaled(const Rational &c) const {
    if (c == 0) return QPoly();
    QPoly r = *this;
    for (auto &x : r.coeffs_) x *= c;
    return r;
}

void QPoly::divmod(const QPoly &d, QPoly &quot, QPoly &rem) const {
    if (d.is_zero()) throw DivisionByZero();
    rem = *this;
    quot = QPoly();
    if (rem.degree() >= d.degree())
        quot.coeffs_.assign(rem.degree() - d.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational c = rem.leading() / d.leading();
        quot.coeffs_[k] += c;
        for (int i = 0; i <= d.degree(); ++i)
            rem.coeffs_[i + k] -= c * d.coeffs_[i];
        rem.normalize();
    }
    quot.normalize();
}

Rational QPoly::eval_one() const {
    Rational v(0);
    for (const auto &c : coeffs_) v += c;
    return v;
}

QPoly QPoly::compose_one_plus_u() const {
    // Horner in (1+u).
    QPoly one_plus_u = QPoly::from_coeffs({Rational(1), Rational(1)});
    QPoly r;
    for (int k = degree(); k >= 0; --k) r = r * one_plus_u + QPoly(coeffs_[k]);
    return r;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational &c = coeffs_[k];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << (k == 1 ? "q" : "q^" + std::to_string(k));
        }
    }
    return os.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        QPoly q, r;
        a.divmod(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading()); // monic
}

} // namespace twistforge::coeff
