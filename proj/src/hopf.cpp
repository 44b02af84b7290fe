#include "twistforge/hopf.hpp"

#include "twistforge/errors.hpp"

#include <random>

namespace twistforge::hopf {

void HopfPresentation::set_delta(int sym_id, TT2 v) {
    if ((int)delta_.size() <= sym_id) delta_.resize(sym_id + 1);
    delta_[sym_id] = std::move(v);
}

void HopfPresentation::set_counit(int sym_id, QRatFunc v) {
    if ((int)counit_.size() <= sym_id) counit_.resize(sym_id + 1);
    counit_[sym_id] = std::move(v);
}

void HopfPresentation::set_antipode(int sym_id, TNC v) {
    if ((int)antipode_.size() <= sym_id) antipode_.resize(sym_id + 1);
    antipode_[sym_id] = std::move(v);
}

void HopfPresentation::set_generator_hopf(int sym_id, TT2 delta, QRatFunc counit, TNC antipode) {
    set_delta(sym_id, std::move(delta));
    set_counit(sym_id, std::move(counit));
    set_antipode(sym_id, std::move(antipode));
}

bool HopfPresentation::hopf_complete() const {
    return (int)delta_.size() == alg.n_symbols() && (int)counit_.size() == alg.n_symbols() &&
           (int)antipode_.size() == alg.n_symbols();
}

TT2 HopfPresentation::coproduct_word(const Word &w, int trunc) const {
    const bool cacheable = alg.t_cap() == 0;
    if (cacheable) {
        if (cache_trunc_ != trunc) {
            // All plain-presentation coproducts are t-degree 0, so the cache is
            // truncation-independent; only tensors on deformed presentations are not.
            cache_trunc_ = trunc;
        }
        auto it = coproduct_cache_.find(w);
        if (it != coproduct_cache_.end()) {
            TT2 r = it->second;
            r.trunc = trunc;
            return r;
        }
    }
    TT2 acc = tt2_identity(alg, trunc);
    for (int id : w.seq) acc = t2_mul(alg, acc, delta_[id], trunc);
    bool has_cartan = false;
    for (int c : w.cartan)
        if (c != 0) has_cartan = true;
    if (has_cartan) {
        NCPoly k = NCPoly::monomial(alg.make_word({}, w.cartan));
        TT2 kk(trunc);
        kk.at(0) = tensor_of(alg, k, k);
        acc = t2_mul(alg, acc, kk, trunc);
    }
    if (cacheable && w.seq.size() <= 12) {
        TT2 store = acc;
        coproduct_cache_.emplace(w, std::move(store));
    }
    return acc;
}

TT2 HopfPresentation::coproduct(const TNC &x, int trunc) const {
    TT2 out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[w, c] : x.c[d].terms()) {
            TT2 dw = coproduct_word(w, trunc - d);
            for (int e = 0; e < (int)dw.c.size(); ++e) {
                if (dw.get(e).is_zero()) continue;
                out.at(d + e) = out.get(d + e) + dw.get(e).scaled(c);
            }
        }
    return out;
}

TT2 HopfPresentation::coproduct(const NCPoly &x, int trunc) const {
    TNC t(trunc);
    t.at(0) = x;
    return coproduct(t, trunc);
}

std::vector<QRatFunc> HopfPresentation::counit(const TNC &x) const {
    std::vector<QRatFunc> out(x.c.size());
    for (int d = 0; d < (int)x.c.size(); ++d)
        for (const auto &[w, c] : x.c[d].terms()) {
            QRatFunc v = c;
            for (int id : w.seq) {
                v = v * counit_[id];
                if (v.is_zero()) break;
            }
            out[d] += v;
        }
    return out;
}

QRatFunc HopfPresentation::counit(const NCPoly &x) const {
    TNC t(0);
    t.at(0) = x;
    return counit(t)[0];
}

TNC HopfPresentation::antipode(const TNC &x, int trunc) const {
    TNC out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[w, c] : x.c[d].terms()) {
            TNC acc(trunc - d);
            // S is an anti-homomorphism: reverse the word, S the letters, and
            // invert the cartan part.
            bool has_cartan = false;
            for (int e : w.cartan)
                if (e != 0) has_cartan = true;
            if (has_cartan) {
                std::vector<int> inv = w.cartan;
                for (auto &e : inv) e = -e;
                acc.at(0) = NCPoly::monomial(alg.make_word({}, inv));
            } else {
                acc.at(0) = NCPoly::one();
            }
            for (auto it = w.seq.rbegin(); it != w.seq.rend(); ++it)
                acc = alg.mul(acc, antipode_[*it], trunc - d);
            for (int e = 0; e < (int)acc.c.size(); ++e) {
                if (acc.get(e).is_zero()) continue;
                out.at(d + e) += acc.get(e).scaled(c);
            }
        }
    return out;
}

TNC HopfPresentation::antipode(const NCPoly &x, int trunc) const {
    TNC t(trunc);
    t.at(0) = x;
    return antipode(t, trunc);
}

TT3 HopfPresentation::delta_slot1(const TT2 &x, int trunc) const {
    TT3 out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            TT2 dw = coproduct_word(k[0], trunc - d);
            for (int e = 0; e < (int)dw.c.size(); ++e)
                for (const auto &[kk, cc] : dw.get(e).terms())
                    out.at(d + e).add_term({kk[0], kk[1], k[1]}, c * cc);
        }
    return out;
}

TT3 HopfPresentation::delta_slot2_of3(const TT2 &x, int trunc) const {
    TT3 out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            TT2 dw = coproduct_word(k[1], trunc - d);
            for (int e = 0; e < (int)dw.c.size(); ++e)
                for (const auto &[kk, cc] : dw.get(e).terms())
                    out.at(d + e).add_term({k[0], kk[0], kk[1]}, c * cc);
        }
    return out;
}

TNC HopfPresentation::counit_slot(const TT2 &x, int slot, int trunc) const {
    TNC out(trunc);
    for (int d = 0; d < (int)x.c.size() && d <= trunc; ++d)
        for (const auto &[k, c] : x.c[d].terms()) {
            QRatFunc v = c;
            for (int id : k[slot].seq) {
                v = v * counit_[id];
                if (v.is_zero()) break;
            }
            if (v.is_zero()) continue;
            out.at(d).add_term(k[1 - slot], v);
        }
    return out;
}

namespace {

bool check_word_axioms(const HopfPresentation &h, const Word &w, int trunc, AxiomReport &rep,
                       const std::string &label) {
    const auto &p = h.alg;
    bool ok = true;
    TT2 dw = h.coproduct_word(w, trunc);
    // coassociativity
    TT3 l = h.delta_slot1(dw, trunc);
    TT3 r = h.delta_slot2_of3(dw, trunc);
    ++rep.checks;
    if (!(l == r)) {
        ok = false;
        ++rep.failures;
        rep.failed.push_back(label + ": coassociativity");
    }
    // counit laws
    TNC id_nc(trunc);
    TNC wrd(trunc);
    wrd.at(0) = NCPoly::monomial(w);
    wrd = p.reduce(wrd);
    TNC lhs = h.counit_slot(dw, 0, trunc);
    TNC rhs = h.counit_slot(dw, 1, trunc);
    ++rep.checks;
    if (!(p.reduce(lhs) == wrd) || !(p.reduce(rhs) == wrd)) {
        ok = false;
        ++rep.failures;
        rep.failed.push_back(label + ": counit law");
    }
    // antipode law: m(S (x) id)Delta = eta eps = m(id (x) S)Delta
    TNC acc1(trunc), acc2(trunc);
    for (int d = 0; d < (int)dw.c.size(); ++d)
        for (const auto &[k, c] : dw.get(d).terms()) {
            TNC s0 = h.antipode(NCPoly::monomial(k[0]), trunc - d);
            TNC w1(trunc - d);
            w1.at(0) = NCPoly::monomial(k[1]);
            TNC m1 = p.mul(s0, w1, trunc - d);
            TNC s1 = h.antipode(NCPoly::monomial(k[1]), trunc - d);
            TNC w0(trunc - d);
            w0.at(0) = NCPoly::monomial(k[0]);
            TNC m2 = p.mul(w0, s1, trunc - d);
            for (int e = 0; e < (int)m1.c.size(); ++e) acc1.at(d + e) += m1.get(e).scaled(c);
            for (int e = 0; e < (int)m2.c.size(); ++e) acc2.at(d + e) += m2.get(e).scaled(c);
        }
    QRatFunc eps(1);
    for (int id : w.seq) eps = eps * h.counit_value(id);
    TNC target(trunc);
    target.at(0) = NCPoly::scalar(eps);
    ++rep.checks;
    if (!(acc1 == target) || !(acc2 == target)) {
        ok = false;
        ++rep.failures;
        rep.failed.push_back(label + ": antipode law");
    }
    return ok;
}

} // namespace

AxiomReport hopf_axiom_check(const HopfPresentation &h, int degree, int trials, unsigned long seed) {
    AxiomReport rep;
    const auto &p = h.alg;
    const int trunc = p.t_cap() > 0 ? 2 * std::max(degree, 2) : 0;

    // generators, including pure cartan letters
    for (int id = 0; id < p.n_symbols(); ++id)
        check_word_axioms(h, p.make_word({id}), trunc, rep, "generator " + p.symbol(id).name);
    for (int c = 0; c < p.cartan_rank(); ++c) {
        std::vector<int> v(p.cartan_rank(), 0);
        v[c] = 1;
        check_word_axioms(h, p.make_word({}, v), trunc, rep, "cartan " + p.cartan_name(c));
        v[c] = -1;
        check_word_axioms(h, p.make_word({}, v), trunc, rep, "cartan " + p.cartan_name(c) + "^-1");
    }

    // Delta, eps, S respect every rewrite rule.
    for (size_t ri = 0; ri < p.rules().size(); ++ri) {
        const auto &R = p.rules()[ri];
        Word lw = p.make_word(R.lhs);
        TNC rhs(trunc);
        for (const auto &[shift, poly] : R.rhs) {
            if (shift > trunc && trunc > 0) continue;
            rhs.at(shift) = poly;
        }
        std::string label = "rule " + ncalg::word_str(p, lw);
        ++rep.checks;
        if (!(h.coproduct_word(lw, trunc) == h.coproduct(rhs, trunc))) {
            ++rep.failures;
            rep.failed.push_back(label + ": Delta not a homomorphism");
        }
        ++rep.checks;
        {
            QRatFunc el(1);
            for (int id : R.lhs) el = el * h.counit_value(id);
            auto er = h.counit(rhs);
            bool ok = er.empty() ? el.is_zero() : (er[0] == el);
            for (size_t d = 1; d < er.size(); ++d)
                if (!er[d].is_zero()) ok = false;
            if (!ok) {
                ++rep.failures;
                rep.failed.push_back(label + ": eps not a homomorphism");
            }
        }
        ++rep.checks;
        {
            TNC sl = h.antipode(NCPoly::monomial(lw), trunc);
            TNC sr = h.antipode(rhs, trunc);
            if (!(p.reduce(sl) == p.reduce(sr))) {
                ++rep.failures;
                rep.failed.push_back(label + ": S not an anti-homomorphism");
            }
        }
    }

    // random words
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int len = 1 + (int)(rng() % (unsigned)degree);
        std::vector<int> seq;
        for (int i = 0; i < len; ++i) seq.push_back((int)(rng() % (unsigned)p.n_symbols()));
        std::vector<int> cart(p.cartan_rank(), 0);
        for (auto &c : cart) c = (int)(rng() % 3) - 1;
        Word w = p.make_word(seq, cart);
        check_word_axioms(h, w, trunc, rep, "word " + ncalg::word_str(p, w));
    }
    return rep;
}

} // namespace twistforge::hopf
