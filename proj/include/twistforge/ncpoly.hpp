#pragma once

#include "twistforge/qratfunc.hpp"
#include "twistforge/word.hpp"

#include <map>

namespace twistforge::ncalg {

using coeff::QRatFunc;

// Linear combination of words with rational-function coefficients. Zero
// coefficients are never stored; map iteration order makes serialization
// deterministic.
class NCPoly {
  public:
    NCPoly() = default;
    static NCPoly one();
    static NCPoly scalar(QRatFunc c);
    static NCPoly monomial(Word w, QRatFunc c = QRatFunc(1));

    void add_term(const Word &w, const QRatFunc &c);
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Word, QRatFunc> &terms() const { return terms_; }

    NCPoly operator+(const NCPoly &o) const;
    NCPoly operator-(const NCPoly &o) const;
    NCPoly operator-() const;
    NCPoly scaled(const QRatFunc &c) const;
    NCPoly &operator+=(const NCPoly &o);
    NCPoly &operator-=(const NCPoly &o);
    bool operator==(const NCPoly &o) const { return terms_ == o.terms_; }

  private:
    std::map<Word, QRatFunc> terms_;
};

// Truncated power series in the deformation parameter t. Twists, conjugated
// generators, and t-shifted rewrite outputs all live here; the payload is an
// NCPoly or a tensor.
template <class P> struct TSeries {
    int trunc = 0;
    std::vector<P> c;

    TSeries() = default;
    explicit TSeries(int truncation) : trunc(truncation), c(truncation + 1) {}

    P &at(int d) {
        if ((int)c.size() <= d) c.resize(d + 1);
        return c[d];
    }
    const P &get(int d) const {
        static const P zero{};
        if (d < 0 || d >= (int)c.size()) return zero;
        return c[d];
    }
    bool is_zero() const {
        for (const auto &p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    TSeries operator+(const TSeries &o) const {
        TSeries r(std::min(trunc, o.trunc));
        for (int d = 0; d <= r.trunc; ++d) r.c[d] = get(d) + o.get(d);
        return r;
    }
    TSeries operator-(const TSeries &o) const {
        TSeries r(std::min(trunc, o.trunc));
        for (int d = 0; d <= r.trunc; ++d) r.c[d] = get(d) - o.get(d);
        return r;
    }
    TSeries operator-() const { return scaled(QRatFunc(-1)); }
    TSeries truncated(int T) const {
        TSeries r(T);
        for (int d = 0; d <= T && d < (int)c.size(); ++d) r.c[d] = c[d];
        return r;
    }
    TSeries scaled(const QRatFunc &s) const {
        TSeries r(trunc);
        for (int d = 0; d < (int)c.size(); ++d) r.c[d] = c[d].scaled(s);
        return r;
    }
    // Substitute t -> s*t (each degree-d coefficient picks up s^d).
    TSeries rescale_t(const QRatFunc &s) const {
        TSeries r(trunc);
        QRatFunc p(1);
        for (int d = 0; d < (int)c.size(); ++d) {
            r.c[d] = c[d].scaled(p);
            p = p * s;
        }
        return r;
    }
    bool operator==(const TSeries &o) const {
        int m = std::max(c.size(), o.c.size());
        for (int d = 0; d < m; ++d)
            if (!(get(d) == o.get(d))) return false;
        return true;
    }
};

using TNC = TSeries<NCPoly>;

inline TNC tnc_of(const NCPoly &x, int trunc) {
    TNC r(trunc);
    r.at(0) = x;
    return r;
}

} // namespace twistforge::ncalg
