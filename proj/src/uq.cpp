#include "twistforge/uq.hpp"

#include "twistforge/errors.hpp"
#include "twistforge/qnumbers.hpp"

#include <algorithm>

namespace twistforge::qgroups {

using coeff::QConvention;
using coeff::QRatFunc;
using coeff::q_binomial;
using hopf::TT2;
using hopf::tensor_of;
using ncalg::GeneratorSymbol;
using ncalg::Sort;
using ncalg::TNC;

std::vector<int> UqContext::k_lattice(const std::vector<int> &alpha) const {
    if (!prime) return alpha;
    // K_j = prod_i L_i^{a_ij}; lattice vector of K_gamma is A * gamma.
    std::vector<int> v(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) v[i] += rs.cartan_matrix[i][j] * alpha[j];
    return v;
}

NCPoly UqContext::k_monomial(const std::vector<int> &alpha, int power) const {
    std::vector<int> v = k_lattice(alpha);
    for (auto &x : v) x *= power;
    return NCPoly::monomial(alg().make_word({}, v));
}

namespace {

// Precedence ranks for the simple-root letters follow the position of each
// simple root in the ascending normal ordering.
std::vector<int> simple_ranks(const RootSystem &rs, const NormalOrdering &o) {
    std::vector<std::pair<int, int>> pos; // (ordering position, simple index)
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> alpha(rs.rank, 0);
        alpha[i] = 1;
        int idx = -1;
        for (int r = 0; r < rs.n_positive(); ++r)
            if (rs.positive_alpha[r] == alpha) idx = r;
        pos.push_back({o.position[idx], i});
    }
    std::sort(pos.begin(), pos.end());
    std::vector<int> rank_of(rs.rank);
    for (int r = 0; r < rs.rank; ++r) rank_of[pos[r].second] = r;
    return rank_of;
}

void add_serre_relations(Presentation &p, const RootSystem &rs, const std::vector<int> &gen,
                         int sign) {
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            if (i == j) continue;
            int m = 1 - rs.cartan_matrix[i][j];
            QConvention conv = QConvention::symmetric(rs.bilinear[i][i] / 2);
            NCPoly rel;
            for (int n = 0; n <= m; ++n) {
                std::vector<int> seq;
                seq.insert(seq.end(), n, gen[i]);
                seq.push_back(gen[j]);
                seq.insert(seq.end(), m - n, gen[i]);
                QRatFunc c = q_binomial(m, n, conv);
                if (n % 2 == 1) c = -c;
                rel.add_term(p.make_word(seq), c);
            }
            (void)sign;
            p.add_relation(rel);
        }
}

} // namespace

UqContext build_uq(LieType type, int rank) {
    UqContext ctx;
    ctx.rs = build_root_system(type, rank);
    ctx.ordering = paper_normal_ordering(ctx.rs);
    ctx.composite_sign = (type == LieType::A) ? -1 : +1;
    const RootSystem &rs = ctx.rs;
    Presentation &p = ctx.H.alg;
    p.name = "Uq(" + lie_type_name(type) + std::to_string(rank) + ")";

    auto ranks = simple_ranks(rs, ctx.ordering);
    std::vector<int> grading0(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> g(rs.rank, 0);
        g[i] = -1;
        ctx.f_id.push_back(p.add_symbol({"f" + std::to_string(i + 1), Sort::Lowering, g}));
    }
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> g(rs.rank, 0);
        g[i] = 1;
        ctx.e_id.push_back(p.add_symbol({"e" + std::to_string(i + 1), Sort::Raising, g}));
    }
    for (int i = 0; i < rs.rank; ++i) p.set_precedence(ctx.f_id[i], ranks[i]);
    for (int i = 0; i < rs.rank; ++i) p.set_precedence(ctx.e_id[i], rs.rank + ranks[i]);

    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> g(rs.rank, 0);
        g[i] = 0;
        int c = p.add_cartan("k" + std::to_string(i + 1));
        for (int j = 0; j < rs.rank; ++j) {
            p.set_pairing(c, ctx.e_id[j], rs.bilinear[i][j]);
            p.set_pairing(c, ctx.f_id[j], -rs.bilinear[i][j]);
        }
    }

    // e_i f_j = f_j e_i + delta_ij (k_i - k_i^-1)/(q - q^-1)
    QRatFunc qm1 = (QRatFunc::q_power(1) - QRatFunc::q_power(-1)).inv();
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            NCPoly rhs = NCPoly::monomial(p.make_word({ctx.f_id[j], ctx.e_id[i]}));
            if (i == j) {
                std::vector<int> plus(rs.rank, 0), minus(rs.rank, 0);
                plus[i] = 1;
                minus[i] = -1;
                rhs.add_term(p.make_word({}, plus), qm1);
                rhs.add_term(p.make_word({}, minus), -qm1);
            }
            p.add_rule_raw({ctx.e_id[i], ctx.f_id[j]}, {{0, rhs}});
        }

    add_serre_relations(p, rs, ctx.e_id, +1);
    add_serre_relations(p, rs, ctx.f_id, -1);
    p.finalize();
    knuth_bendix_complete(p, 8);

    // Hopf data on the Chevalley generators.
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> ki(rs.rank, 0);
        ki[i] = 1;
        std::vector<int> ki_inv(rs.rank, 0);
        ki_inv[i] = -1;
        NCPoly e = p.generator(ctx.e_id[i]);
        NCPoly f = p.generator(ctx.f_id[i]);
        NCPoly kinv = NCPoly::monomial(p.make_word({}, ki_inv));
        NCPoly k = NCPoly::monomial(p.make_word({}, ki));
        {
            TT2 d(0);
            d.at(0) = tensor_of(p, kinv, e) + tensor_of(p, e, NCPoly::one());
            TNC s(0);
            s.at(0) = p.normal_form(-p.nc_multiply(k, e));
            ctx.H.set_generator_hopf(ctx.e_id[i], d, QRatFunc(0), s);
        }
        {
            TT2 d(0);
            d.at(0) = tensor_of(p, f, k) + tensor_of(p, NCPoly::one(), f);
            TNC s(0);
            s.at(0) = p.normal_form(-p.nc_multiply(f, kinv));
            ctx.H.set_generator_hopf(ctx.f_id[i], d, QRatFunc(0), s);
        }
    }
    return ctx;
}

UqContext build_uq_prime_sl3() {
    UqContext ctx;
    ctx.rs = build_root_system(LieType::A, 2);
    ctx.ordering = paper_normal_ordering(ctx.rs);
    ctx.prime = true;
    const RootSystem &rs = ctx.rs;
    Presentation &p = ctx.H.alg;
    p.name = "Uq'(sl3)";

    auto ranks = simple_ranks(rs, ctx.ordering);
    for (int i = 0; i < 2; ++i) {
        std::vector<int> g(2, 0);
        g[i] = -1;
        ctx.f_id.push_back(p.add_symbol({"f" + std::to_string(i + 1), Sort::Lowering, g}));
    }
    for (int i = 0; i < 2; ++i) {
        std::vector<int> g(2, 0);
        g[i] = 1;
        ctx.e_id.push_back(p.add_symbol({"e" + std::to_string(i + 1), Sort::Raising, g}));
    }
    for (int i = 0; i < 2; ++i) p.set_precedence(ctx.f_id[i], ranks[i]);
    for (int i = 0; i < 2; ++i) p.set_precedence(ctx.e_id[i], 2 + ranks[i]);

    // Weight-lattice cartan basis: L_i e_j L_i^-1 = q^{delta_ij} e_j.
    for (int i = 0; i < 2; ++i) {
        int c = p.add_cartan("L" + std::to_string(i + 1));
        p.set_pairing(c, ctx.e_id[i], 1);
        p.set_pairing(c, ctx.f_id[i], -1);
    }

    // e_i f_j = f_j e_i + delta_ij (K_i - K_i^-1)/(q - q^-1), K_i in L-coordinates.
    QRatFunc qm1 = (QRatFunc::q_power(1) - QRatFunc::q_power(-1)).inv();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NCPoly rhs = NCPoly::monomial(p.make_word({ctx.f_id[j], ctx.e_id[i]}));
            if (i == j) {
                std::vector<int> unit(2, 0);
                unit[i] = 1;
                std::vector<int> plus = ctx.k_lattice(unit);
                std::vector<int> minus = plus;
                for (auto &x : minus) x = -x;
                rhs.add_term(p.make_word({}, plus), qm1);
                rhs.add_term(p.make_word({}, minus), -qm1);
            }
            p.add_rule_raw({ctx.e_id[i], ctx.f_id[j]}, {{0, rhs}});
        }
    add_serre_relations(p, rs, ctx.e_id, +1);
    add_serre_relations(p, rs, ctx.f_id, -1);
    p.finalize();
    knuth_bendix_complete(p, 8);

    // The section-4 coproduct table.
    auto L = [&](int a, int b) {
        return NCPoly::monomial(p.make_word({}, {a, b}));
    };
    NCPoly e1 = p.generator(ctx.e_id[0]), e2 = p.generator(ctx.e_id[1]);
    NCPoly f1 = p.generator(ctx.f_id[0]), f2 = p.generator(ctx.f_id[1]);
    auto d2 = [&](const NCPoly &a, const NCPoly &b, const NCPoly &c, const NCPoly &d) {
        TT2 t(0);
        t.at(0) = tensor_of(p, a, b) + tensor_of(p, c, d);
        return t;
    };
    auto s0 = [&](const NCPoly &x) {
        TNC t(0);
        t.at(0) = p.normal_form(x);
        return t;
    };
    // Delta(e1) = L1^-2 L2^2 (x) e1 + e1 (x) 1
    ctx.H.set_generator_hopf(ctx.e_id[0], d2(L(-2, 2), e1, e1, NCPoly::one()), QRatFunc(0),
                             s0(-p.nc_multiply(L(2, -2), e1)));
    // Delta(e2) = L1 L2^-2 (x) e2 + e2 (x) L1
    ctx.H.set_generator_hopf(ctx.e_id[1], d2(L(1, -2), e2, e2, L(1, 0)), QRatFunc(0),
                             s0(-p.nc_multiply(L(-2, 2), e2)));
    // Delta(f1) = f1 (x) L1^2 L2^-1 + L2^-1 (x) f1
    ctx.H.set_generator_hopf(ctx.f_id[0], d2(f1, L(2, -1), L(0, -1), f1), QRatFunc(0),
                             s0(-p.nc_multiply(L(-2, 2), f1).scaled(QRatFunc::q_power(-2))));
    // Delta(f2) = f2 (x) L1^-2 L2^2 + 1 (x) f2
    ctx.H.set_generator_hopf(ctx.f_id[1], d2(f2, L(-2, 2), NCPoly::one(), f2), QRatFunc(0),
                             s0(-p.nc_multiply(f2, L(2, -2))));
    return ctx;
}

NCPoly composite_generator_for(const UqContext &ctx, const NormalOrdering &o, int root_index,
                               bool positive) {
    const RootSystem &rs = ctx.rs;
    const Presentation &p = ctx.alg();
    const auto &alpha = rs.positive_alpha[root_index];
    int height = 0;
    for (int x : alpha) height += x;
    if (height == 1) {
        for (int i = 0; i < rs.rank; ++i)
            if (alpha[i] == 1) return p.generator(positive ? ctx.e_id[i] : ctx.f_id[i]);
    }
    // decompositions gamma = u + v with u < gamma < v in the ordering
    std::vector<std::pair<int, int>> cands; // (u, v)
    for (int u = 0; u < rs.n_positive(); ++u) {
        for (int v = 0; v < rs.n_positive(); ++v) {
            if (u == v) continue;
            std::vector<int> sum(rs.eps_dim);
            for (int k = 0; k < rs.eps_dim; ++k)
                sum[k] = rs.positive_eps[u][k] + rs.positive_eps[v][k];
            if (sum != rs.positive_eps[root_index]) continue;
            if (o.precedes(u, root_index) && o.precedes(root_index, v)) cands.push_back({u, v});
        }
    }
    if (cands.empty()) throw AmbiguousDecomposition(rs.root_str(root_index) + ": no admissible split");
    // tie-break: minimal v in the ordering
    std::sort(cands.begin(), cands.end(), [&](auto a, auto b) {
        return o.position[a.second] < o.position[b.second];
    });
    auto [u, v] = cands[0];
    NCPoly eu = composite_generator_for(ctx, o, u, positive);
    NCPoly ev = composite_generator_for(ctx, o, v, positive);
    int m = ctx.composite_sign * rs.pairing_roots(v, u);
    if (positive) {
        // e_gamma = e_v e_u - q^{sign*(v,u)} e_u e_v
        return p.nc_multiply(ev, eu) - p.nc_multiply(eu, ev).scaled(QRatFunc::q_power(m));
    }
    // f-side partner with the mirrored factor order
    return p.nc_multiply(eu, ev) - p.nc_multiply(ev, eu).scaled(QRatFunc::q_power(m));
}

NCPoly composite_generator(const UqContext &ctx, int root_index, bool positive) {
    auto key = std::make_pair(root_index, positive);
    auto it = ctx.composite_cache.find(key);
    if (it != ctx.composite_cache.end()) return it->second;
    NCPoly r = composite_generator_for(ctx, ctx.ordering, root_index, positive);
    ctx.composite_cache.emplace(key, r);
    return r;
}

QCommutationReport q_commutation_check(const UqContext &ctx, const NormalOrdering &o,
                                       bool build_composites_from_o, int trunc) {
    QCommutationReport rep;
    const RootSystem &rs = ctx.rs;
    const Presentation &p = ctx.alg();
    const int lambda = rs.highest;
    NCPoly e_lambda = build_composites_from_o ? composite_generator_for(ctx, o, lambda, true)
                                              : composite_generator(ctx, lambda);
    for (int g = 0; g < rs.n_positive(); ++g) {
        if (g == lambda || !o.precedes(g, lambda)) continue;
        NCPoly e_g = build_composites_from_o ? composite_generator_for(ctx, o, g, true)
                                             : composite_generator(ctx, g);
        ++rep.pairs;
        QRatFunc v = QRatFunc::q_power(-ctx.composite_sign * rs.pairing_roots(g, lambda));
        NCPoly comm = p.q_commutator(e_g, e_lambda, v);
        if (!comm.is_zero()) {
            ++rep.failures;
            rep.failed.push_back(rs.root_str(g));
            continue;
        }
        // Eq. "ext": only letters supported strictly between g and lambda may
        // survive (for the vanishing pairs this holds trivially).
        std::vector<bool> allowed(rs.rank, false);
        for (int m = 0; m < rs.n_positive(); ++m)
            if (o.precedes(g, m) && o.precedes(m, lambda))
                for (int i = 0; i < rs.rank; ++i)
                    if (rs.positive_alpha[m][i] != 0) allowed[i] = true;
        for (const auto &[w, c] : comm.terms())
            for (int id : w.seq)
                for (int i = 0; i < rs.rank; ++i)
                    if (id == ctx.e_id[i] && !allowed[i]) rep.ext_ok = false;
    }
    // Prop. 3: (e_l (x) 1)(Delta e_l - e_l (x) 1) = q_l (Delta e_l - e_l (x) 1)(e_l (x) 1)
    {
        int ll = rs.pairing_roots(lambda, lambda);
        QRatFunc ql = QRatFunc::q_power(ll);
        TT2 d = ctx.H.coproduct(e_lambda, trunc);
        TT2 el1(trunc);
        el1.at(0) = tensor_of(p, e_lambda, NCPoly::one());
        TT2 rest = d - el1;
        TT2 lhs = hopf::t2_mul(p, el1, rest, trunc);
        TT2 rhs = hopf::t2_mul(p, rest, el1, trunc).scaled(ql);
        rep.prop3_ok = (lhs == rhs);
    }
    return rep;
}

} // namespace twistforge::qgroups
