#include "twistforge/membership.hpp"

#include <map>
#include <sstream>

namespace twistforge::qgroups {

using coeff::QRatFunc;
using ncalg::NCPoly;
using ncalg::Sort;
using ncalg::Word;

namespace {

struct AtomAccumulator {
    const UqContext &ctx;
    bool plus_only;
    MembershipResult res;
    std::ostringstream witness;

    explicit AtomAccumulator(const UqContext &c, bool plus) : ctx(c), plus_only(plus) {}

    bool skeleton_ok(const Word &w) {
        if (!plus_only) return true;
        for (int id : w.seq)
            if (ctx.alg().symbol(id).sort != Sort::Raising) return false;
        return true;
    }

    // Decompose the cartan part of a group of terms sharing a letter skeleton
    // over the atom basis k^-M D^s and test every coefficient.
    void process_group(const std::vector<std::pair<std::vector<std::vector<int>>, QRatFunc>> &terms,
                       const std::string &label) {
        if (terms.empty()) return;
        const size_t slots = terms[0].first.size();
        const int rank = ctx.alg().cartan_rank();
        // per slot, per cartan variable: M = max(0, -min exponent)
        std::vector<std::vector<int>> M(slots, std::vector<int>(rank, 0));
        for (const auto &[kappas, c] : terms)
            for (size_t s = 0; s < slots; ++s)
                for (int v = 0; v < rank; ++v) {
                    int e = v < (int)kappas[s].size() ? kappas[s][v] : 0;
                    M[s][v] = std::max(M[s][v], -e);
                }
        // expand (1 + (q-1)D)^{kappa+M} per variable: atom-slot index svec
        std::map<std::vector<int>, QRatFunc> atoms; // flattened svec over slots*rank
        QRatFunc qm1 = QRatFunc::q_power(1) - QRatFunc(1);
        for (const auto &[kappas, c] : terms) {
            std::map<std::vector<int>, QRatFunc> acc;
            acc[std::vector<int>(slots * rank, 0)] = c;
            for (size_t s = 0; s < slots; ++s)
                for (int v = 0; v < rank; ++v) {
                    int e = v < (int)kappas[s].size() ? kappas[s][v] : 0;
                    int p = e + M[s][v];
                    std::map<std::vector<int>, QRatFunc> next;
                    QRatFunc binom(1), qpow(1);
                    for (int m = 0; m <= p; ++m) {
                        if (m > 0) {
                            binom = binom * QRatFunc(coeff::Rational(p - m + 1, m));
                            qpow = qpow * qm1;
                        }
                        QRatFunc tau = binom * qpow;
                        for (const auto &[sv, cv] : acc) {
                            auto key = sv;
                            key[s * rank + v] = m;
                            auto it = next.find(key);
                            if (it == next.end())
                                next.emplace(key, cv * tau);
                            else
                                it->second += cv * tau;
                        }
                    }
                    acc = std::move(next);
                }
            for (const auto &[sv, cv] : acc) {
                auto it = atoms.find(sv);
                if (it == atoms.end())
                    atoms.emplace(sv, cv);
                else
                    it->second += cv;
            }
        }
        for (const auto &[sv, cv] : atoms) {
            if (cv.is_zero()) continue;
            if (!cv.regular_at_one()) {
                res.member = false;
                res.violations.push_back(label + std::string(": ") + cv.str());
            } else {
                witness << label << " : " << cv.str() << " *";
                for (size_t s = 0; s < slots; ++s)
                    for (int v = 0; v < rank; ++v) {
                        if (M[s][v] != 0)
                            witness << " " << ctx.alg().cartan_name(v) << "^-" << M[s][v] << "[" << s << "]";
                        if (sv[s * rank + v] != 0)
                            witness << " D(" << ctx.alg().cartan_name(v) << ")^" << sv[s * rank + v]
                                    << "[" << s << "]";
                    }
                witness << "\n";
            }
        }
    }
};

std::string seq_label(const UqContext &ctx, const Word &w) {
    Word bare;
    bare.seq = w.seq;
    return ncalg::word_str(ctx.alg(), bare);
}

} // namespace

MembershipResult integral_membership(const UqContext &ctx, const NCPoly &x, bool plus_only) {
    AtomAccumulator acc(ctx, plus_only);
    std::map<std::vector<int>, std::vector<std::pair<std::vector<std::vector<int>>, QRatFunc>>> groups;
    for (const auto &[w, c] : x.terms()) {
        if (!acc.skeleton_ok(w)) {
            acc.res.member = false;
            acc.res.violations.push_back("letter outside the plus subalgebra: " + seq_label(ctx, w));
            continue;
        }
        groups[w.seq].push_back({{w.cartan}, c});
    }
    for (const auto &[seq, terms] : groups) {
        Word bare;
        bare.seq = seq;
        acc.process_group(terms, ncalg::word_str(ctx.alg(), bare));
    }
    acc.res.witness = acc.witness.str();
    return acc.res;
}

MembershipResult integral_membership(const UqContext &ctx, const hopf::Tensor2 &x, bool plus_only) {
    AtomAccumulator acc(ctx, plus_only);
    std::map<std::pair<std::vector<int>, std::vector<int>>,
             std::vector<std::pair<std::vector<std::vector<int>>, QRatFunc>>>
        groups;
    for (const auto &[k, c] : x.terms()) {
        if (!acc.skeleton_ok(k[0]) || !acc.skeleton_ok(k[1])) {
            acc.res.member = false;
            acc.res.violations.push_back("letter outside the plus subalgebra: " +
                                         seq_label(ctx, k[0]) + " ox " + seq_label(ctx, k[1]));
            continue;
        }
        groups[{k[0].seq, k[1].seq}].push_back({{k[0].cartan, k[1].cartan}, c});
    }
    for (const auto &[seqs, terms] : groups) {
        Word b1, b2;
        b1.seq = seqs.first;
        b2.seq = seqs.second;
        acc.process_group(terms, ncalg::word_str(ctx.alg(), b1) + " ox " + ncalg::word_str(ctx.alg(), b2));
    }
    acc.res.witness = acc.witness.str();
    return acc.res;
}

MembershipResult integral_membership(const UqContext &ctx, const hopf::TT2 &x, bool plus_only) {
    MembershipResult res;
    for (int d = 0; d < (int)x.c.size(); ++d) {
        MembershipResult r = integral_membership(ctx, x.get(d), plus_only);
        if (!r.member) {
            res.member = false;
            for (auto &v : r.violations) res.violations.push_back("t^" + std::to_string(d) + " " + v);
        }
        res.witness += r.witness;
    }
    return res;
}

} // namespace twistforge::qgroups
