#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace twistforge::coeff {

using Rational = mpq_class;

std::string rational_str(const Rational &r);

// Dense polynomial in q over the rationals. Trailing zeros are never stored,
// so deg(0) == -1 by convention.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(Rational c);
    static QPoly q_power(int k); // q^k, k >= 0
    static QPoly from_coeffs(std::vector<Rational> c);

    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational &coeff(int k) const;
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    const Rational &leading() const;

    friend QPoly operator+(const QPoly &a, const QPoly &b);
    friend QPoly operator-(const QPoly &a, const QPoly &b);
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    QPoly operator-() const;
    QPoly scaled(const Rational &c) const;
    bool operator==(const QPoly &o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    void divmod(const QPoly &d, QPoly &quot, QPoly &rem) const;

    Rational eval_one() const; // p(1)
    QPoly compose_one_plus_u() const; // p(1+u) as a polynomial in u

    std::string str() const; // sparse "c*q^k" form, descending powers

  private:
    void normalize();
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies q^k
};

// Monic gcd over Q[q].
QPoly poly_gcd(QPoly a, QPoly b);

} // namespace twistforge::coeff
