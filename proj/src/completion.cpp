#include "twistforge/errors.hpp"
#include "twistforge/presentation.hpp"

namespace twistforge::ncalg {

namespace {

NCPoly reduce_plain(const Presentation &p, const NCPoly &x) {
    TNC in(0);
    in.at(0) = x;
    return p.reduce(in).get(0);
}

// Apply rule r at position pos of seq (no further reduction).
NCPoly apply_once(const Presentation &p, const std::vector<int> &seq, int pos, const RewriteRule &R) {
    NCPoly out;
    const int L = (int)R.lhs.size();
    std::vector<int> suffix(seq.begin() + pos + L, seq.end());
    for (const auto &[shift, poly] : R.rhs) {
        if (shift != 0) throw EngineError("completion restricted to t-free rules");
        for (const auto &[rw, rc] : poly.terms()) {
            Word nw;
            nw.seq.insert(nw.seq.end(), seq.begin(), seq.begin() + pos);
            nw.seq.insert(nw.seq.end(), rw.seq.begin(), rw.seq.end());
            nw.seq.insert(nw.seq.end(), suffix.begin(), suffix.end());
            nw.cartan = rw.cartan;
            QRatFunc c = rc;
            int cross = p.crossing_exponent(rw.cartan, suffix);
            if (cross != 0) c = c * QRatFunc::q_power(cross);
            out.add_term(nw, c);
        }
    }
    return out;
}

} // namespace

void knuth_bendix_complete(Presentation &p, int max_degree, int max_rounds) {
    if (p.t_cap() > 0) throw EngineError("completion restricted to t-free presentations");
    p.finalize();
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<NCPoly> found;
        const auto rules = p.rules(); // copy: p mutates below
        const int nr = (int)rules.size();
        for (int i = 0; i < nr; ++i) {
            for (int j = 0; j < nr; ++j) {
                const auto &a = rules[i].lhs;
                const auto &b = rules[j].lhs;
                // proper overlaps: suffix of a == prefix of b
                int maxo = (int)std::min(a.size(), b.size()) - (i == j ? 1 : 0);
                for (int o = 1; o <= maxo; ++o) {
                    if ((int)(a.size() + b.size()) - o > max_degree) continue;
                    if (!std::equal(a.end() - o, a.end(), b.begin())) continue;
                    if (o == (int)a.size() && o == (int)b.size()) continue; // identical lhs
                    std::vector<int> w(a.begin(), a.end());
                    w.insert(w.end(), b.begin() + o, b.end());
                    NCPoly r1 = reduce_plain(p, apply_once(p, w, 0, rules[i]));
                    NCPoly r2 = reduce_plain(p, apply_once(p, w, (int)a.size() - o, rules[j]));
                    NCPoly diff = r1 - r2;
                    if (!diff.is_zero()) found.push_back(diff);
                }
                // containment: b inside a (strictly)
                if (i != j && b.size() < a.size()) {
                    for (int pos = 0; pos + (int)b.size() <= (int)a.size(); ++pos) {
                        if (!std::equal(b.begin(), b.end(), a.begin() + pos)) continue;
                        NCPoly r1 = reduce_plain(p, apply_once(p, a, 0, rules[i]));
                        NCPoly r2 = reduce_plain(p, apply_once(p, a, pos, rules[j]));
                        NCPoly diff = r1 - r2;
                        if (!diff.is_zero()) found.push_back(diff);
                    }
                }
            }
        }
        if (found.empty()) return;
        for (const auto &rel : found) {
            NCPoly r = reduce_plain(p, rel); // may already be joinable after earlier additions
            if (r.is_zero()) continue;
            p.add_relation(r);
            p.finalize();
        }
    }
}

} // namespace twistforge::ncalg
