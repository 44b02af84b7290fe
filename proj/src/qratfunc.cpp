#include "twistforge/qratfunc.hpp"

#include "twistforge/errors.hpp"

#include <sstream>

namespace twistforge::coeff {

namespace {

using ZPoly = std::vector<mpz_class>; // dense, no trailing zeros; empty = 0

void znorm(ZPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

mpz_class zcontent(const ZPoly &p) {
    mpz_class g(0);
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdiv_scalar(ZPoly &p, const mpz_class &d) {
    for (auto &c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// make primitive with positive leading coefficient; returns removed factor
mpz_class zprimitive(ZPoly &p) {
    znorm(p);
    if (p.empty()) return 0;
    mpz_class g = zcontent(p);
    if (p.back() < 0) g = -g;
    if (g != 1) zdiv_scalar(p, g);
    return g;
}

// exact division, remainder known to vanish
ZPoly zdivexact(ZPoly a, const ZPoly &b) {
    znorm(a);
    if (a.empty()) return {};
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    for (int k = (int)a.size() - (int)b.size(); k >= 0; --k) {
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), a[k + b.size() - 1].get_mpz_t(), b.back().get_mpz_t());
        q[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    return q;
}

// pseudo remainder: repeatedly r <- lead(b)*r - lead(r) q^k b
ZPoly zprem(ZPoly r, const ZPoly &b) {
    const mpz_class &lb = b.back();
    znorm(r);
    while (r.size() >= b.size() && !r.empty()) {
        mpz_class c = r.back();
        size_t k = r.size() - b.size();
        for (auto &x : r) x *= lb;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
        znorm(r);
    }
    return r;
}

int zvaluation(const ZPoly &p) {
    int v = 0;
    while (v < (int)p.size() && p[v] == 0) ++v;
    return v;
}

bool zis_monomial(const ZPoly &p) {
    return !p.empty() && zvaluation(p) == (int)p.size() - 1;
}

// primitive polynomial gcd: pseudo-remainder sequence with content stripping
ZPoly zgcd(ZPoly a, ZPoly b) {
    zprimitive(a);
    zprimitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zis_monomial(a) || zis_monomial(b)) {
        // gcd(q^k, p) = q^min(k, val(p)) for primitive inputs
        int v = std::min(zvaluation(a), zvaluation(b));
        ZPoly g(v + 1, mpz_class(0));
        g[v] = 1;
        return g;
    }
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return {mpz_class(1)};
        ZPoly r = zprem(a, b);
        zprimitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZPoly zadd(const ZPoly &a, const ZPoly &b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    znorm(r);
    return r;
}

Rational zeval_one(const ZPoly &p) {
    mpz_class s(0);
    for (const auto &c : p) s += c;
    return Rational(s);
}

} // namespace

QRatFunc::QRatFunc() : content_(0), num_{mpz_class(1)}, den_{mpz_class(1)} {}

QRatFunc::QRatFunc(int n) : QRatFunc(Rational(n)) {}

QRatFunc::QRatFunc(Rational c) : content_(std::move(c)), num_{mpz_class(1)}, den_{mpz_class(1)} {
    content_.canonicalize();
    if (content_ == 0) *this = QRatFunc();
}

QRatFunc::QRatFunc(const QPoly &num, const QPoly &den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        *this = QRatFunc();
        return;
    }
    // clear rational denominators
    mpz_class ln(1), ld(1);
    for (const auto &c : num.coeffs()) mpz_lcm(ln.get_mpz_t(), ln.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto &c : den.coeffs()) mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), c.get_den().get_mpz_t());
    num_.clear();
    den_.clear();
    for (const auto &c : num.coeffs()) {
        Rational v = c * ln;
        v.canonicalize();
        num_.push_back(v.get_num());
    }
    for (const auto &c : den.coeffs()) {
        Rational v = c * ld;
        v.canonicalize();
        den_.push_back(v.get_num());
    }
    content_ = Rational(ld, ln);
    content_.canonicalize();
    canonicalize();
}

void QRatFunc::canonicalize() {
    mpz_class cn = zprimitive(num_);
    mpz_class cd = zprimitive(den_);
    if (num_.empty() || content_ == 0) {
        *this = QRatFunc();
        return;
    }
    if (den_.empty()) throw DivisionByZero();
    Rational f(cn, cd);
    f.canonicalize(); // mpq arithmetic requires canonical operands
    content_ *= f;
    content_.canonicalize();
    ZPoly g = zgcd(num_, den_);
    if (g.size() > 1) {
        num_ = zdivexact(std::move(num_), g);
        den_ = zdivexact(std::move(den_), g);
        zprimitive(num_);
        zprimitive(den_);
    }
}

QRatFunc QRatFunc::q_power(int k) {
    QRatFunc r(1);
    if (k >= 0) {
        r.num_.assign(k + 1, mpz_class(0));
        r.num_[k] = 1;
    } else {
        r.den_.assign(-k + 1, mpz_class(0));
        r.den_[-k] = 1;
    }
    return r;
}

QPoly QRatFunc::num() const {
    std::vector<Rational> c;
    for (const auto &x : num_) c.push_back(Rational(x) * content_);
    return QPoly::from_coeffs(std::move(c));
}

QPoly QRatFunc::den() const {
    std::vector<Rational> c;
    for (const auto &x : den_) c.emplace_back(x);
    return QPoly::from_coeffs(std::move(c));
}

bool QRatFunc::is_one() const {
    return content_ == 1 && num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

QRatFunc operator*(const QRatFunc &a, const QRatFunc &b) {
    if (a.is_zero() || b.is_zero()) return QRatFunc();
    if (a.is_constant()) {
        QRatFunc r = b;
        r.content_ *= a.content_;
        r.content_.canonicalize();
        return r;
    }
    if (b.is_constant()) {
        QRatFunc r = a;
        r.content_ *= b.content_;
        r.content_.canonicalize();
        return r;
    }
    QRatFunc r;
    r.content_ = a.content_ * b.content_;
    r.content_.canonicalize();
    // cross-cancel so no gcd is needed on the product
    ZPoly n1 = a.num_, d2 = b.den_;
    ZPoly g1 = zgcd(n1, d2);
    if (g1.size() > 1) {
        n1 = zdivexact(std::move(n1), g1);
        d2 = zdivexact(std::move(d2), g1);
    }
    ZPoly n2 = b.num_, d1 = a.den_;
    ZPoly g2 = zgcd(n2, d1);
    if (g2.size() > 1) {
        n2 = zdivexact(std::move(n2), g2);
        d1 = zdivexact(std::move(d1), g2);
    }
    r.num_ = zmul(n1, n2);
    r.den_ = zmul(d1, d2);
    mpz_class cn = zprimitive(r.num_);
    mpz_class cd = zprimitive(r.den_);
    Rational f(cn, cd);
    f.canonicalize();
    r.content_ *= f;
    r.content_.canonicalize();
    return r;
}

QRatFunc operator+(const QRatFunc &a, const QRatFunc &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QRatFunc r;
    if (a.den_ == b.den_) {
        // common case: same denominator
        Rational ca = a.content_, cb = b.content_;
        mpz_class la(ca.get_den()), lb(cb.get_den());
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        mpz_class ma(ca.get_num() * (l / la)), mb(cb.get_num() * (l / lb));
        ZPoly n;
        {
            ZPoly ta = a.num_;
            for (auto &x : ta) x *= ma;
            ZPoly tb = b.num_;
            for (auto &x : tb) x *= mb;
            n = zadd(ta, tb);
        }
        if (n.empty()) return QRatFunc();
        r.content_ = Rational(1, l);
        r.num_ = std::move(n);
        r.den_ = a.den_;
        mpz_class cn = zprimitive(r.num_);
        r.content_ *= Rational(cn);
        r.content_.canonicalize();
        // numerator may now share a factor with the denominator
        ZPoly g = zgcd(r.num_, r.den_);
        if (g.size() > 1) {
            r.num_ = zdivexact(std::move(r.num_), g);
            r.den_ = zdivexact(std::move(r.den_), g);
            zprimitive(r.num_);
            zprimitive(r.den_);
        }
        return r;
    }
    ZPoly g = zgcd(a.den_, b.den_);
    ZPoly e1 = g.size() > 1 ? zdivexact(a.den_, g) : a.den_;
    ZPoly e2 = g.size() > 1 ? zdivexact(b.den_, g) : b.den_;
    // value = ca n1 e2 / D + cb n2 e1 / D with D = g e1 e2
    Rational ca = a.content_, cb = b.content_;
    mpz_class la(ca.get_den()), lb(cb.get_den());
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    mpz_class ma(ca.get_num() * (l / la)), mb(cb.get_num() * (l / lb));
    ZPoly t1 = zmul(a.num_, e2);
    for (auto &x : t1) x *= ma;
    ZPoly t2 = zmul(b.num_, e1);
    for (auto &x : t2) x *= mb;
    ZPoly n = zadd(t1, t2);
    if (n.empty()) return QRatFunc();
    r.content_ = Rational(1, l);
    r.num_ = std::move(n);
    r.den_ = zmul(g, zmul(e1, e2));
    mpz_class cn = zprimitive(r.num_);
    mpz_class cd = zprimitive(r.den_);
    Rational f(cn, cd);
    f.canonicalize();
    r.content_ *= f;
    r.content_.canonicalize();
    ZPoly gg = zgcd(r.num_, r.den_);
    if (gg.size() > 1) {
        r.num_ = zdivexact(std::move(r.num_), gg);
        r.den_ = zdivexact(std::move(r.den_), gg);
        zprimitive(r.num_);
        zprimitive(r.den_);
    }
    return r;
}

QRatFunc operator-(const QRatFunc &a, const QRatFunc &b) {
    return a + (-b);
}

QRatFunc QRatFunc::operator-() const {
    if (is_zero()) return *this;
    QRatFunc r = *this;
    r.content_ = -r.content_;
    return r;
}

QRatFunc QRatFunc::inv() const {
    if (is_zero()) throw DivisionByZero();
    QRatFunc r = *this;
    std::swap(r.num_, r.den_);
    r.content_ = Rational(1) / r.content_;
    if (r.den_.back() < 0) {
        for (auto &x : r.den_) x = -x;
        r.content_ = -r.content_;
    }
    r.content_.canonicalize();
    return r;
}

QRatFunc operator/(const QRatFunc &a, const QRatFunc &b) {
    return a * b.inv();
}

QRatFunc QRatFunc::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    QRatFunc r(1), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool QRatFunc::regular_at_one() const {
    return zeval_one(den_) != 0;
}

Rational QRatFunc::specialize_at_one() const {
    if (is_zero()) return Rational(0);
    Rational d = zeval_one(den_);
    if (d == 0) throw PoleAtOne(str());
    Rational v = content_ * zeval_one(num_) / d;
    v.canonicalize();
    return v;
}

std::string QRatFunc::str() const {
    if (is_zero()) return "0";
    // fold the content into integer polynomials
    std::vector<Rational> nc, dc;
    for (const auto &x : num_) nc.push_back(Rational(x * content_.get_num()));
    for (const auto &x : den_) dc.push_back(Rational(x * content_.get_den()));
    QPoly n = QPoly::from_coeffs(std::move(nc));
    QPoly d = QPoly::from_coeffs(std::move(dc));
    if (d == QPoly(Rational(1))) return n.str();
    return "(" + n.str() + ")/(" + d.str() + ")";
}

} // namespace twistforge::coeff
