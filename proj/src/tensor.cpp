#include "twistforge/tensor.hpp"

#include "twistforge/errors.hpp"

#include <sstream>

namespace twistforge::hopf {

Tensor2 tensor_of(const Presentation &p, const NCPoly &a, const NCPoly &b) {
    Tensor2 r;
    for (const auto &[wa, ca] : a.terms())
        for (const auto &[wb, cb] : b.terms()) r.add_term({wa, wb}, ca * cb);
    return r;
}

Tensor3 tensor_of(const Presentation &p, const NCPoly &a, const NCPoly &b, const NCPoly &c) {
    Tensor3 r;
    for (const auto &[wa, ca] : a.terms())
        for (const auto &[wb, cb] : b.terms())
            for (const auto &[wc, cc] : c.terms()) r.add_term({wa, wb, wc}, ca * cb * cc);
    return r;
}

Tensor2 identity2(const Presentation &p) {
    return tensor_of(p, NCPoly::one(), NCPoly::one());
}

Tensor3 identity3(const Presentation &p) {
    return tensor_of(p, NCPoly::one(), NCPoly::one(), NCPoly::one());
}

TT2 tt2_identity(const Presentation &p, int trunc) {
    TT2 r(trunc);
    r.at(0) = identity2(p);
    return r;
}

TT2 tt2_of(const Presentation &p, const TNC &a, const TNC &b, int trunc) {
    TT2 r(trunc);
    for (int da = 0; da < (int)a.c.size(); ++da)
        for (int db = 0; da + db <= trunc && db < (int)b.c.size(); ++db) {
            Tensor2 t = tensor_of(p, a.get(da), b.get(db));
            r.at(da + db) = r.get(da + db) + t;
        }
    return r;
}

namespace {

// Reduce one slot word; the reduction result is t-graded on deformed
// presentations, plain slice zero otherwise.
TNC reduce_word(const Presentation &p, const Word &w, int trunc) {
    if (p.t_cap() == 0) {
        TNC out(0);
        out.at(0) = p.normal_form_word(w);
        return out;
    }
    TNC in(trunc);
    in.at(0) = NCPoly::monomial(w);
    return p.reduce(in);
}

} // namespace

TT2 t2_reduce(const Presentation &p, const TT2 &x) {
    TT2 out(x.trunc);
    for (int d = 0; d < (int)x.c.size(); ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            TNC r0 = reduce_word(p, k[0], x.trunc - d);
            TNC r1 = reduce_word(p, k[1], x.trunc - d);
            for (int d0 = 0; d0 < (int)r0.c.size(); ++d0)
                for (const auto &[w0, c0] : r0.c[d0].terms())
                    for (int d1 = 0; d + d0 + d1 <= x.trunc && d1 < (int)r1.c.size(); ++d1)
                        for (const auto &[w1, c1] : r1.c[d1].terms())
                            out.at(d + d0 + d1).add_term({w0, w1}, c * c0 * c1);
        }
    return out;
}

TT3 t3_reduce(const Presentation &p, const TT3 &x) {
    TT3 out(x.trunc);
    for (int d = 0; d < (int)x.c.size(); ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            TNC r0 = reduce_word(p, k[0], x.trunc - d);
            TNC r1 = reduce_word(p, k[1], x.trunc - d);
            TNC r2 = reduce_word(p, k[2], x.trunc - d);
            for (int d0 = 0; d0 < (int)r0.c.size(); ++d0)
                for (const auto &[w0, c0] : r0.c[d0].terms())
                    for (int d1 = 0; d + d0 + d1 <= x.trunc && d1 < (int)r1.c.size(); ++d1)
                        for (const auto &[w1, c1] : r1.c[d1].terms())
                            for (int d2 = 0; d + d0 + d1 + d2 <= x.trunc && d2 < (int)r2.c.size(); ++d2)
                                for (const auto &[w2, c2] : r2.c[d2].terms())
                                    out.at(d + d0 + d1 + d2).add_term({w0, w1, w2}, c * c0 * c1 * c2);
        }
    return out;
}

TT2 t2_mul(const Presentation &p, const TT2 &a, const TT2 &b, int trunc) {
    TT2 raw(trunc);
    for (int da = 0; da < (int)a.c.size() && da <= trunc; ++da)
        for (const auto &[ka, ca] : a.c[da].terms())
            for (int db = 0; da + db <= trunc && db < (int)b.c.size(); ++db)
                for (const auto &[kb, cb] : b.c[db].terms()) {
                    NCPoly m0 = p.multiply_words_raw(ka[0], kb[0], QRatFunc(1));
                    NCPoly m1 = p.multiply_words_raw(ka[1], kb[1], QRatFunc(1));
                    const auto &[w0, c0] = *m0.terms().begin();
                    const auto &[w1, c1] = *m1.terms().begin();
                    raw.at(da + db).add_term({w0, w1}, ca * cb * c0 * c1);
                }
    return t2_reduce(p, raw);
}

TT3 t3_mul(const Presentation &p, const TT3 &a, const TT3 &b, int trunc) {
    TT3 raw(trunc);
    for (int da = 0; da < (int)a.c.size() && da <= trunc; ++da)
        for (const auto &[ka, ca] : a.c[da].terms())
            for (int db = 0; da + db <= trunc && db < (int)b.c.size(); ++db)
                for (const auto &[kb, cb] : b.c[db].terms()) {
                    QRatFunc coeff = ca * cb;
                    std::array<Word, 3> key;
                    for (int s = 0; s < 3; ++s) {
                        NCPoly m = p.multiply_words_raw(ka[s], kb[s], QRatFunc(1));
                        const auto &[w, c] = *m.terms().begin();
                        key[s] = w;
                        coeff = coeff * c;
                    }
                    raw.at(da + db).add_term(key, coeff);
                }
    return t3_reduce(p, raw);
}

Tensor2 flip(const Tensor2 &x) {
    Tensor2 r;
    for (const auto &[k, c] : x.terms()) r.add_term({k[1], k[0]}, c);
    return r;
}

TT2 tt2_flip(const TT2 &x) {
    TT2 r(x.trunc);
    for (int d = 0; d < (int)x.c.size(); ++d) r.at(d) = flip(x.c[d]);
    return r;
}

TT3 embed12(const Presentation &p, const TT2 &x) {
    TT3 r(x.trunc);
    Word id = p.make_word({});
    for (int d = 0; d < (int)x.c.size(); ++d)
        for (const auto &[k, c] : x.c[d].terms()) r.at(d).add_term({k[0], k[1], id}, c);
    return r;
}

TT3 embed23(const Presentation &p, const TT2 &x) {
    TT3 r(x.trunc);
    Word id = p.make_word({});
    for (int d = 0; d < (int)x.c.size(); ++d)
        for (const auto &[k, c] : x.c[d].terms()) r.at(d).add_term({id, k[0], k[1]}, c);
    return r;
}

TNC t2_fold(const Presentation &p, const TT2 &x, int trunc) {
    TNC out(trunc);
    ncalg::TNC tmp(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            NCPoly raw = p.multiply_words_raw(k[0], k[1], c);
            TNC in(trunc);
            in.at(d) = raw;
            TNC red = p.reduce(in);
            for (int e = 0; e <= trunc; ++e) out.at(e) += red.get(e);
        }
    return out;
}

TNC tnc_inv(const Presentation &p, const TNC &x) {
    if (!(x.get(0) == NCPoly::one())) throw NotInvertible("degree-0 coefficient is not 1");
    TNC y(x.trunc);
    y.at(0) = NCPoly::one();
    for (int d = 1; d <= x.trunc; ++d) {
        TNC acc(x.trunc);
        for (int j = 1; j <= d; ++j) {
            TNC xj(x.trunc), yk(x.trunc);
            xj.at(j) = x.get(j);
            yk.at(d - j) = y.get(d - j);
            TNC prod = p.mul(xj, yk, d);
            acc.at(d) += prod.get(d);
        }
        y.at(d) = -acc.get(d);
    }
    return y;
}

TT2 tt2_inv(const Presentation &p, const TT2 &x) {
    if (!(x.get(0) == identity2(p))) throw NotInvertible("degree-0 coefficient is not 1(x)1");
    TT2 y(x.trunc);
    y.at(0) = identity2(p);
    for (int d = 1; d <= x.trunc; ++d) {
        Tensor2 acc;
        for (int j = 1; j <= d; ++j) {
            TT2 xj(d), yk(d);
            xj.at(j) = x.get(j);
            yk.at(d - j) = y.get(d - j);
            TT2 prod = t2_mul(p, xj, yk, d);
            acc = acc + prod.get(d);
        }
        y.at(d) = acc.scaled(QRatFunc(-1));
    }
    return y;
}

std::string tensor2_str(const Presentation &p, const Tensor2 &x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * " << ncalg::word_str(p, k[0]) << " ox " << ncalg::word_str(p, k[1]);
    }
    return os.str();
}

std::string tt2_str(const Presentation &p, const TT2 &x) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d < (int)x.c.size(); ++d) {
        if (x.get(d).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "t^" << d << "*(" << tensor2_str(p, x.c[d]) << ")";
    }
    if (first) return "0";
    return os.str();
}

} // namespace twistforge::hopf
