#include "twistforge/specialize.hpp"

#include "twistforge/errors.hpp"
#include "twistforge/useries.hpp"

#include <map>

namespace twistforge::qgroups {

using coeff::laurent_expand;
using coeff::QRatFunc;
using coeff::Rational;
using coeff::USeries;
using hopf::tensor_of;
using ncalg::GeneratorSymbol;
using ncalg::NCPoly;
using ncalg::Sort;
using ncalg::Word;

ClassicalTarget build_classical(const UqContext &src) {
    ClassicalTarget tgt;
    const RootSystem &rs = src.rs;
    Presentation &p = tgt.H.alg;
    const int r = rs.rank;
    p.name = src.prime ? "U(sl3)'" : ("U(" + lie_type_name(rs.type) + std::to_string(r) + ")");

    auto lowering_name = [&](int i) {
        if (src.prime) return std::string(i == 0 ? "E21" : "E32");
        if (rs.type == LieType::A) return "E" + std::to_string(i + 2) + std::to_string(i + 1);
        return "F" + std::to_string(i + 1);
    };
    auto raising_name = [&](int i) {
        if (src.prime) return std::string(i == 0 ? "E12" : "E23");
        if (rs.type == LieType::A) return "E" + std::to_string(i + 1) + std::to_string(i + 2);
        return "E" + std::to_string(i + 1);
    };
    auto cartan_name = [&](int i) {
        if (src.prime) return "hw" + std::to_string(i + 1);
        return "H" + std::to_string(i + 1);
    };

    // letters: lowering block, then cartan letters, then raising block
    for (int i = 0; i < r; ++i) {
        std::vector<int> g(r, 0);
        g[i] = -1;
        tgt.f_map.push_back(p.add_symbol({lowering_name(i), Sort::Lowering, g}));
    }
    for (int i = 0; i < r; ++i)
        tgt.cartan_H.push_back(p.add_symbol({cartan_name(i), Sort::Generic, std::vector<int>(r, 0)}));
    for (int i = 0; i < r; ++i) {
        std::vector<int> g(r, 0);
        g[i] = 1;
        tgt.e_map.push_back(p.add_symbol({raising_name(i), Sort::Raising, g}));
    }

    // precedence: F (by ordering rank), H (natural), E (by ordering rank)
    {
        // reuse the quantum letter ranks so normal forms align across the map
        std::vector<int> rank_of(r);
        for (int i = 0; i < r; ++i) rank_of[i] = src.alg().precedence(src.f_id[i]);
        for (int i = 0; i < r; ++i) p.set_precedence(tgt.f_map[i], rank_of[i]);
        for (int i = 0; i < r; ++i) p.set_precedence(tgt.cartan_H[i], r + i);
        for (int i = 0; i < r; ++i) p.set_precedence(tgt.e_map[i], 2 * r + rank_of[i]);
    }

    // [H_i, E_j] and [H_i, F_j]: the pairing exponents of the quantum cartan basis
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int c = src.alg().pairing(i, src.e_id[j]);
            if (c != 0) {
                NCPoly rhs = NCPoly::monomial(p.make_word({tgt.cartan_H[i], tgt.e_map[j]}));
                rhs.add_term(p.make_word({tgt.e_map[j]}), QRatFunc(-c));
                p.add_rule_raw({tgt.e_map[j], tgt.cartan_H[i]}, {{0, rhs}});
            } else {
                p.add_rule_raw({tgt.e_map[j], tgt.cartan_H[i]},
                               {{0, NCPoly::monomial(p.make_word({tgt.cartan_H[i], tgt.e_map[j]}))}});
            }
            int cf = src.alg().pairing(i, src.f_id[j]);
            NCPoly rhs = NCPoly::monomial(p.make_word({tgt.f_map[j], tgt.cartan_H[i]}));
            if (cf != 0) rhs.add_term(p.make_word({tgt.f_map[j]}), QRatFunc(cf));
            p.add_rule_raw({tgt.cartan_H[i], tgt.f_map[j]}, {{0, rhs}});
        }
    // H letters commute
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            p.add_rule_raw({tgt.cartan_H[j], tgt.cartan_H[i]},
                           {{0, NCPoly::monomial(p.make_word({tgt.cartan_H[i], tgt.cartan_H[j]}))}});

    // [E_i, F_j] = delta_ij * (limit of (K_i - K_i^-1)/(q - q^-1))
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            NCPoly rhs = NCPoly::monomial(p.make_word({tgt.f_map[j], tgt.e_map[i]}));
            if (i == j) {
                std::vector<int> unit(r, 0);
                unit[i] = 1;
                std::vector<int> kv = src.k_lattice(unit);
                for (int c = 0; c < r; ++c)
                    if (kv[c] != 0) rhs.add_term(p.make_word({tgt.cartan_H[c]}), QRatFunc(kv[c]));
            }
            p.add_rule_raw({tgt.e_map[i], tgt.f_map[j]}, {{0, rhs}});
        }

    // classical Serre relations on both sides
    for (int sgn = 0; sgn < 2; ++sgn) {
        const auto &gen = sgn == 0 ? tgt.e_map : tgt.f_map;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                int m = 1 - rs.cartan_matrix[i][j];
                NCPoly rel;
                Rational binom(1);
                for (int n = 0; n <= m; ++n) {
                    if (n > 0) binom = binom * (m - n + 1) / n;
                    std::vector<int> seq;
                    seq.insert(seq.end(), n, gen[i]);
                    seq.push_back(gen[j]);
                    seq.insert(seq.end(), m - n, gen[i]);
                    Rational c = (n % 2 == 1) ? -binom : binom;
                    rel.add_term(p.make_word(seq), QRatFunc(c));
                }
                p.add_relation(rel);
            }
    }
    p.finalize();
    knuth_bendix_complete(p, 8);

    // primitive Hopf structure
    for (int id = 0; id < p.n_symbols(); ++id) {
        NCPoly g = p.generator(id);
        hopf::TT2 d(0);
        d.at(0) = tensor_of(p, g, NCPoly::one()) + tensor_of(p, NCPoly::one(), g);
        TNC s(0);
        s.at(0) = -g;
        tgt.H.set_generator_hopf(id, d, QRatFunc(0), s);
    }
    return tgt;
}

namespace {

Rational binomial(int top, int m) {
    Rational r(1);
    for (int j = 0; j < m; ++j) r = r * (top - j) / (j + 1);
    return r;
}

// u-expansion of prod_c (1 + u H_c)^{kappa_c} through u^order.
std::vector<NCPoly> cartan_u_expansion(const ClassicalTarget &tgt, const std::vector<int> &kappa,
                                       int order) {
    const Presentation &p = tgt.alg();
    std::vector<NCPoly> out(order + 1);
    out[0] = NCPoly::one();
    for (int c = 0; c < (int)kappa.size(); ++c) {
        if (kappa[c] == 0) continue;
        // series for (1 + u H_c)^{kappa_c}
        std::vector<NCPoly> fac(order + 1);
        for (int m = 0; m <= order; ++m) {
            if (kappa[c] >= 0 && m > kappa[c]) break;
            Word w;
            w.seq.assign(m, tgt.cartan_H[c]);
            fac[m] = NCPoly::monomial(w, QRatFunc(binomial(kappa[c], m)));
        }
        std::vector<NCPoly> next(order + 1);
        for (int a = 0; a <= order; ++a) {
            if (out[a].is_zero()) continue;
            for (int b = 0; a + b <= order; ++b) {
                if (fac[b].is_zero()) continue;
                // H letters commute; concatenation is enough, reduction sorts later
                for (const auto &[wa, ca] : out[a].terms())
                    for (const auto &[wb, cb] : fac[b].terms()) {
                        Word w = wa;
                        w.seq.insert(w.seq.end(), wb.seq.begin(), wb.seq.end());
                        next[a + b].add_term(w, ca * cb);
                    }
            }
        }
        out = std::move(next);
    }
    return out;
}

Word map_skeleton(const UqContext &src, const ClassicalTarget &tgt, const Word &w) {
    Word out;
    for (int id : w.seq) {
        bool mapped = false;
        for (int i = 0; i < src.rs.rank; ++i) {
            if (id == src.e_id[i]) {
                out.seq.push_back(tgt.e_map[i]);
                mapped = true;
            } else if (id == src.f_id[i]) {
                out.seq.push_back(tgt.f_map[i]);
                mapped = true;
            }
        }
        if (!mapped) throw EngineError("specialize: unmapped letter");
    }
    return out;
}

} // namespace

NCPoly specialize_nc(const UqContext &src, const ClassicalTarget &tgt, const NCPoly &x) {
    const Presentation &cp = tgt.alg();
    std::map<int, NCPoly> slices; // u-degree -> contribution, degrees <= 0
    for (const auto &[w, c] : x.terms()) {
        USeries s = laurent_expand(c, 0);
        if (s.is_zero() || s.min_degree > 0) continue;
        int depth = -s.min_degree;
        auto kappa = w.cartan;
        auto upoly = cartan_u_expansion(tgt, kappa, depth);
        Word sk = map_skeleton(src, tgt, w);
        for (int a = s.min_degree; a <= 0; ++a) {
            if (s.coeff(a) == 0) continue;
            for (int b = 0; a + b <= 0 && b <= depth; ++b) {
                if (upoly[b].is_zero()) continue;
                for (const auto &[hw, hc] : upoly[b].terms()) {
                    Word full = sk;
                    full.seq.insert(full.seq.end(), hw.seq.begin(), hw.seq.end());
                    slices[a + b].add_term(full, hc * QRatFunc(s.coeff(a)));
                }
            }
        }
    }
    for (auto &[d, poly] : slices) {
        NCPoly nf = cp.normal_form(poly);
        if (d < 0 && !nf.is_zero())
            throw NotRegular("u^" + std::to_string(d) + " residue " + ncalg::ncpoly_str(cp, nf));
        if (d == 0) return nf;
    }
    return NCPoly();
}

TNC specialize_tnc(const UqContext &src, const ClassicalTarget &tgt, const TNC &x) {
    TNC out(x.trunc);
    for (int d = 0; d < (int)x.c.size(); ++d) out.at(d) = specialize_nc(src, tgt, x.get(d));
    return out;
}

TT2 specialize_tt2(const UqContext &src, const ClassicalTarget &tgt, const TT2 &x) {
    const Presentation &cp = tgt.alg();
    TT2 out(x.trunc);
    for (int td = 0; td < (int)x.c.size(); ++td) {
        std::map<int, Tensor2> slices;
        for (const auto &[k, c] : x.c[td].terms()) {
            USeries s = laurent_expand(c, 0);
            if (s.is_zero() || s.min_degree > 0) continue;
            int depth = -s.min_degree;
            auto up1 = cartan_u_expansion(tgt, k[0].cartan, depth);
            auto up2 = cartan_u_expansion(tgt, k[1].cartan, depth);
            Word sk1 = map_skeleton(src, tgt, k[0]);
            Word sk2 = map_skeleton(src, tgt, k[1]);
            for (int a = s.min_degree; a <= 0; ++a) {
                if (s.coeff(a) == 0) continue;
                for (int b1 = 0; a + b1 <= 0 && b1 <= depth; ++b1) {
                    if (up1[b1].is_zero()) continue;
                    for (int b2 = 0; a + b1 + b2 <= 0 && b2 <= depth; ++b2) {
                        if (up2[b2].is_zero()) continue;
                        for (const auto &[h1, c1] : up1[b1].terms())
                            for (const auto &[h2, c2] : up2[b2].terms()) {
                                Word w1 = sk1, w2 = sk2;
                                w1.seq.insert(w1.seq.end(), h1.seq.begin(), h1.seq.end());
                                w2.seq.insert(w2.seq.end(), h2.seq.begin(), h2.seq.end());
                                slices[a + b1 + b2].add_term({w1, w2},
                                                             c1 * c2 * QRatFunc(s.coeff(a)));
                            }
                    }
                }
            }
        }
        for (auto &[ud, tens] : slices) {
            TT2 raw(0);
            raw.at(0) = tens;
            TT2 nf = hopf::t2_reduce(cp, raw);
            if (ud < 0 && !nf.get(0).is_zero())
                throw NotRegular("t^" + std::to_string(td) + " u^" + std::to_string(ud) +
                                 " residue with " + std::to_string(nf.get(0).size()) + " terms");
            if (ud == 0) out.at(td) = nf.get(0);
        }
    }
    return out;
}

} // namespace twistforge::qgroups
