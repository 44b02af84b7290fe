#pragma once

#include "twistforge/qpoly.hpp"

#include <string>
#include <vector>

namespace twistforge::coeff {

// Reduced rational function in q over the rationals. Internally a rational
// content times a primitive integer-coefficient fraction: value = content *
// num/den with num, den primitive coprime integer polynomials and positive
// leading denominator coefficient. The representation is canonical, so
// operator== decides mathematical equality.
class QRatFunc {
  public:
    QRatFunc();
    QRatFunc(int n);
    explicit QRatFunc(Rational c);
    QRatFunc(const QPoly &num, const QPoly &den);

    static QRatFunc q_power(int k); // q^k, any integer k
    static QRatFunc one() { return QRatFunc(1); }

    QPoly num() const; // content folded in: rational-coefficient polynomials
    QPoly den() const;
    bool is_zero() const { return content_ == 0; }
    bool is_one() const;
    bool is_constant() const { return num_.size() == 1 && den_.size() == 1; }

    friend QRatFunc operator+(const QRatFunc &a, const QRatFunc &b);
    friend QRatFunc operator-(const QRatFunc &a, const QRatFunc &b);
    friend QRatFunc operator*(const QRatFunc &a, const QRatFunc &b);
    friend QRatFunc operator/(const QRatFunc &a, const QRatFunc &b);
    QRatFunc operator-() const;
    QRatFunc inv() const;
    QRatFunc pow(int k) const;
    QRatFunc &operator+=(const QRatFunc &o) { return *this = *this + o; }
    QRatFunc &operator-=(const QRatFunc &o) { return *this = *this - o; }
    QRatFunc &operator*=(const QRatFunc &o) { return *this = *this * o; }

    bool operator==(const QRatFunc &o) const {
        return content_ == o.content_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const QRatFunc &o) const { return !(*this == o); }

    bool regular_at_one() const; // reduced denominator nonzero at q=1
    Rational specialize_at_one() const; // throws PoleAtOne

    // "p" or "(p)/(s)" with integer-coefficient sparse c*q^k terms.
    std::string str() const;

  private:
    void canonicalize();
    Rational content_;
    std::vector<mpz_class> num_, den_; // primitive, coprime, den leading > 0
};

} // namespace twistforge::coeff
