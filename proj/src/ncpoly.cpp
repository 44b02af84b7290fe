#include "twistforge/ncpoly.hpp"

namespace twistforge::ncalg {

NCPoly NCPoly::one() {
    return scalar(QRatFunc(1));
}

NCPoly NCPoly::scalar(QRatFunc c) {
    NCPoly p;
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::monomial(Word w, QRatFunc c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word &w, const QRatFunc &c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly &o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly &o) const {
    NCPoly r = *this;
    r -= o;
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto &[w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::scaled(const QRatFunc &c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto &[w, x] : terms_) r.terms_.emplace(w, x * c);
    return r;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
    for (const auto &[w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) {
    for (const auto &[w, c] : o.terms_) add_term(w, -c);
    return *this;
}

} // namespace twistforge::ncalg
