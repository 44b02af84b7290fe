#include "twistforge/presentation.hpp"

#include "twistforge/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace twistforge::ncalg {

int Presentation::add_symbol(GeneratorSymbol s) {
    symbols_.push_back(std::move(s));
    prec_.push_back((int)symbols_.size() - 1);
    for (auto &row : pairing_) row.push_back(0);
    return (int)symbols_.size() - 1;
}

int Presentation::add_cartan(const std::string &name, std::vector<int> grading) {
    cartan_names_.push_back(name);
    cartan_gradings_.push_back(std::move(grading));
    pairing_.emplace_back(symbols_.size(), 0);
    return (int)cartan_names_.size() - 1;
}

void Presentation::set_pairing(int cartan_idx, int sym_id, int q_exp) {
    pairing_[cartan_idx][sym_id] = q_exp;
}

std::optional<int> Presentation::find_symbol(const std::string &name) const {
    for (int i = 0; i < (int)symbols_.size(); ++i)
        if (symbols_[i].name == name) return i;
    return std::nullopt;
}

std::optional<int> Presentation::find_cartan(const std::string &name) const {
    for (int i = 0; i < (int)cartan_names_.size(); ++i)
        if (cartan_names_[i] == name) return i;
    return std::nullopt;
}

int Presentation::crossing_exponent(const std::vector<int> &cartan, const std::vector<int> &seq) const {
    int e = 0;
    for (int s : seq)
        for (int c = 0; c < (int)cartan.size(); ++c)
            if (cartan[c] != 0) e += cartan[c] * pairing_[c][s];
    return e;
}

Word Presentation::make_word(const std::vector<int> &seq, std::vector<int> cartan) const {
    Word w;
    w.seq = seq;
    w.cartan = std::move(cartan);
    w.canonicalize();
    return w;
}

NCPoly Presentation::generator(int sym_id) const {
    return NCPoly::monomial(make_word({sym_id}));
}

NCPoly Presentation::generator(const std::string &name) const {
    if (auto id = find_symbol(name)) return generator(*id);
    if (auto c = find_cartan(name)) {
        std::vector<int> v(cartan_rank(), 0);
        v[*c] = 1;
        return cartan_monomial(std::move(v));
    }
    throw UnknownGenerator(name);
}

NCPoly Presentation::cartan_monomial(std::vector<int> cartan) const {
    return NCPoly::monomial(make_word({}, std::move(cartan)));
}

std::vector<int> Presentation::weight(const Word &w) const {
    size_t dim = 0;
    for (const auto &s : symbols_) dim = std::max(dim, s.grading.size());
    std::vector<int> r(dim, 0);
    for (int id : w.seq)
        for (size_t i = 0; i < symbols_[id].grading.size(); ++i) r[i] += symbols_[id].grading[i];
    return r;
}

bool Presentation::word_order_less(const Word &a, const Word &b) const {
    if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
    for (size_t i = 0; i < a.seq.size(); ++i)
        if (prec_[a.seq[i]] != prec_[b.seq[i]]) return prec_[a.seq[i]] < prec_[b.seq[i]];
    return a.cartan < b.cartan;
}

void Presentation::add_rule_raw(std::vector<int> lhs, std::map<int, NCPoly> rhs) {
    for (auto &[shift, poly] : rhs) t_cap_ = std::max(t_cap_, shift);
    rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
    finalized_ = false;
}

void Presentation::add_relation(const NCPoly &rel) {
    if (rel.is_zero()) return;
    const Word *lead = nullptr;
    for (const auto &[w, c] : rel.terms())
        if (!lead || word_order_less(*lead, w)) lead = &w;
    QRatFunc lead_coeff = rel.terms().at(*lead);
    // Normalize the cartan part away by multiplying by k^{-cartan(lead)} on the right.
    std::vector<int> shift = lead->cartan;
    NCPoly rhs;
    for (const auto &[w, c] : rel.terms()) {
        if (w == *lead) continue;
        if (w.seq.size() == lead->seq.size() && w.seq == lead->seq)
            throw EngineError("cannot orient relation: equal letter sequences with distinct cartan parts");
        Word v = w;
        v.cartan.resize(std::max(v.cartan.size(), shift.size()), 0);
        for (size_t i = 0; i < shift.size(); ++i) v.cartan[i] -= shift[i];
        v.canonicalize();
        rhs.add_term(v, -(c / lead_coeff));
    }
    add_rule_raw(lead->seq, {{0, std::move(rhs)}});
}

void Presentation::finalize() {
    rules_by_first_.assign(symbols_.size(), {});
    for (int r = 0; r < (int)rules_.size(); ++r) {
        if (rules_[r].lhs.empty()) throw EngineError("empty rule lhs");
        rules_by_first_[rules_[r].lhs[0]].push_back(r);
    }
    finalized_ = true;
}

long Presentation::rewrite_budget() const {
    if (const char *env = std::getenv("TWISTFORGE_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 200000000L;
}

bool Presentation::find_match(const std::vector<int> &seq, Strategy s, int &pos, int &rule) const {
    const int n = (int)seq.size();
    auto try_at = [&](int i) -> int {
        const auto &cands = rules_by_first_[seq[i]];
        if (cands.empty()) return -1;
        if (s == Strategy::LeftmostFirstRule) {
            for (int r : cands) {
                const auto &lhs = rules_[r].lhs;
                if (i + (int)lhs.size() <= n && std::equal(lhs.begin(), lhs.end(), seq.begin() + i)) return r;
            }
        } else {
            for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
                const auto &lhs = rules_[*it].lhs;
                if (i + (int)lhs.size() <= n && std::equal(lhs.begin(), lhs.end(), seq.begin() + i)) return *it;
            }
        }
        return -1;
    };
    if (s == Strategy::LeftmostFirstRule) {
        for (int i = 0; i < n; ++i)
            if (int r = try_at(i); r >= 0) {
                pos = i;
                rule = r;
                return true;
            }
    } else {
        for (int i = n - 1; i >= 0; --i)
            if (int r = try_at(i); r >= 0) {
                pos = i;
                rule = r;
                return true;
            }
    }
    return false;
}

void Presentation::reduce_into(TNC &out, int tdeg0, Word w0, QRatFunc c0, Strategy s, long &steps,
                               int trunc) const {
    struct Item {
        int tdeg;
        Word w;
        QRatFunc c;
    };
    const long budget = rewrite_budget();
    std::vector<Item> stack;
    stack.push_back({tdeg0, std::move(w0), std::move(c0)});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        int pos, rule;
        if (!find_match(it.w.seq, s, pos, rule)) {
            out.at(it.tdeg).add_term(it.w, it.c);
            continue;
        }
        if (++steps > budget) throw BudgetExceeded(steps);
        const RewriteRule &R = rules_[rule];
        const int L = (int)R.lhs.size();
        std::vector<int> suffix(it.w.seq.begin() + pos + L, it.w.seq.end());
        for (const auto &[shift, poly] : R.rhs) {
            int d = it.tdeg + shift;
            if (d > trunc) continue;
            for (const auto &[rw, rc] : poly.terms()) {
                Word nw;
                nw.seq.reserve(pos + rw.seq.size() + suffix.size());
                nw.seq.insert(nw.seq.end(), it.w.seq.begin(), it.w.seq.begin() + pos);
                nw.seq.insert(nw.seq.end(), rw.seq.begin(), rw.seq.end());
                nw.seq.insert(nw.seq.end(), suffix.begin(), suffix.end());
                nw.cartan = it.w.cartan;
                nw.cartan.resize(std::max(nw.cartan.size(), rw.cartan.size()), 0);
                for (size_t i = 0; i < rw.cartan.size(); ++i) nw.cartan[i] += rw.cartan[i];
                nw.canonicalize();
                int cross = crossing_exponent(rw.cartan, suffix);
                QRatFunc nc = it.c * rc;
                if (cross != 0) nc = nc * QRatFunc::q_power(cross);
                stack.push_back({d, std::move(nw), std::move(nc)});
            }
        }
    }
}

TNC Presentation::reduce(const TNC &x, Strategy s) const {
    if (!finalized_) throw EngineError("presentation not finalized");
    TNC out(x.trunc);
    long steps = 0;
    for (int d = 0; d < (int)x.c.size(); ++d)
        for (const auto &[w, c] : x.c[d].terms()) reduce_into(out, d, w, c, s, steps, x.trunc);
    return out;
}

const NCPoly &Presentation::normal_form_word(const Word &w) const {
    if (t_cap_ > 0) throw EngineError("normal_form_word on a t-deformed presentation");
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
    TNC in(0);
    in.at(0) = NCPoly::monomial(w);
    NCPoly nf = reduce(in).get(0);
    return nf_cache_.emplace(w, std::move(nf)).first->second;
}

NCPoly Presentation::normal_form(const NCPoly &x, Strategy s) const {
    TNC in(t_cap_ > 0 ? t_cap_ : 0);
    in.at(0) = x;
    if (t_cap_ > 0) throw EngineError("normal_form on a t-deformed presentation; use reduce()");
    TNC out = reduce(in, s);
    return out.get(0);
}

NCPoly Presentation::multiply_words_raw(const Word &a, const Word &b, QRatFunc c) const {
    Word w;
    w.seq = a.seq;
    w.seq.insert(w.seq.end(), b.seq.begin(), b.seq.end());
    w.cartan = a.cartan;
    w.cartan.resize(std::max(w.cartan.size(), b.cartan.size()), 0);
    for (size_t i = 0; i < b.cartan.size(); ++i) w.cartan[i] += b.cartan[i];
    w.canonicalize();
    int cross = crossing_exponent(a.cartan, b.seq);
    if (cross != 0) c = c * QRatFunc::q_power(cross);
    return NCPoly::monomial(std::move(w), std::move(c));
}

TNC Presentation::mul(const TNC &a, const TNC &b, int trunc, Strategy s) const {
    TNC out(trunc);
    long steps = 0;
    for (int da = 0; da < (int)a.c.size() && da <= trunc; ++da)
        for (const auto &[wa, ca] : a.c[da].terms())
            for (int db = 0; db + da <= trunc && db < (int)b.c.size(); ++db)
                for (const auto &[wb, cb] : b.c[db].terms()) {
                    NCPoly raw = multiply_words_raw(wa, wb, ca * cb);
                    for (const auto &[w, c] : raw.terms()) reduce_into(out, da + db, w, c, s, steps, trunc);
                }
    return out;
}

NCPoly Presentation::nc_multiply(const NCPoly &a, const NCPoly &b) const {
    if (t_cap_ > 0) throw EngineError("nc_multiply on a t-deformed presentation; use mul()");
    TNC ta(0), tb(0);
    ta.at(0) = a;
    tb.at(0) = b;
    return mul(ta, tb, 0).get(0);
}

NCPoly Presentation::q_commutator(const NCPoly &a, const NCPoly &b, const QRatFunc &v) const {
    return nc_multiply(a, b) - nc_multiply(b, a).scaled(v);
}

SmokeReport confluence_smoke_check(const Presentation &p, int degree, int trials, unsigned long seed) {
    SmokeReport rep;
    std::mt19937_64 rng(seed);
    const int nsym = p.n_symbols();
    if (nsym == 0) return rep;
    for (int t = 0; t < trials; ++t) {
        int len = 1 + (int)(rng() % (unsigned)degree);
        std::vector<int> seq;
        for (int i = 0; i < len; ++i) seq.push_back((int)(rng() % (unsigned)nsym));
        std::vector<int> cartan(p.cartan_rank(), 0);
        for (auto &c : cartan) c = (int)(rng() % 5) - 2;
        Word w = p.make_word(seq, cartan);
        TNC in(p.t_cap() > 0 ? degree : 0);
        in.at(0) = NCPoly::monomial(w);
        TNC a = p.reduce(in, Strategy::LeftmostFirstRule);
        TNC b = p.reduce(in, Strategy::RightmostLastRule);
        ++rep.trials;
        if (!(a == b)) {
            ++rep.divergences;
            if (rep.examples.size() < 5) rep.examples.push_back(word_str(p, w));
        }
    }
    return rep;
}

std::string word_str(const Presentation &p, const Word &w) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < w.seq.size();) {
        size_t j = i;
        while (j < w.seq.size() && w.seq[j] == w.seq[i]) ++j;
        if (any) os << "*";
        os << p.symbol(w.seq[i]).name;
        if (j - i > 1) os << "^" << (j - i);
        any = true;
        i = j;
    }
    for (int c = 0; c < (int)w.cartan.size(); ++c) {
        if (w.cartan[c] == 0) continue;
        if (any) os << "*";
        os << p.cartan_name(c);
        if (w.cartan[c] != 1) os << "^" << w.cartan[c];
        any = true;
    }
    if (!any) return "1";
    return os.str();
}

std::string ncpoly_str(const Presentation &p, const NCPoly &x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * " << word_str(p, w);
    }
    return os.str();
}

std::string tnc_str(const Presentation &p, const TNC &x) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d < (int)x.c.size(); ++d) {
        if (x.get(d).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "t^" << d << "*(" << ncpoly_str(p, x.get(d)) << ")";
    }
    if (first) return "0";
    return os.str();
}

} // namespace twistforge::ncalg
