#pragma once

#include "twistforge/hopf.hpp"
#include "twistforge/rootsys.hpp"

#include <map>

namespace twistforge::qgroups {

using hopf::HopfPresentation;
using ncalg::NCPoly;
using ncalg::Presentation;
using ncalg::Word;

// A presented quantized enveloping algebra with its root data, paper ordering,
// and composite-generator cache.
struct UqContext {
    RootSystem rs;
    NormalOrdering ordering;
    HopfPresentation H;
    std::vector<int> e_id, f_id; // Chevalley symbol ids per simple root
    bool prime = false;          // U'_q(sl3): cartan basis is the weight lattice L_i
    // e_gamma = e_v e_u - q^{sign*(v,u)} e_u e_v; -1 for type A (the Example-1
    // anchor), +1 for B/C/D (required by the Prop. 3 tensor q-commutation).
    int composite_sign = -1;

    const Presentation &alg() const { return H.alg; }
    // Lattice vector of k_gamma (resp. K_gamma for the prime form) for a root
    // given in simple-root coordinates.
    std::vector<int> k_lattice(const std::vector<int> &alpha) const;
    NCPoly k_monomial(const std::vector<int> &alpha, int power = 1) const;

    mutable std::map<std::pair<int, bool>, NCPoly> composite_cache;
};

UqContext build_uq(LieType type, int rank);
UqContext build_uq_prime_sl3();

// Cartan-Weyl generator e_gamma (positive=true) or its f-side partner, built
// by iterated q-commutators along the ordering; memoized for the context's own
// ordering.
NCPoly composite_generator(const UqContext &ctx, int root_index, bool positive = true);
NCPoly composite_generator_for(const UqContext &ctx, const NormalOrdering &o, int root_index,
                               bool positive);

struct QCommutationReport {
    int pairs = 0;
    int failures = 0;
    bool prop3_ok = false;
    bool ext_ok = true;
    std::vector<std::string> failed;
    bool pass() const { return failures == 0 && prop3_ok && ext_ok; }
};

// Prop. 2 q-commutations against the highest root plus the Prop. 3 tensor
// identity; `o` controls both the pair enumeration and, when build_composites
// is true, the composites themselves (the negative control keeps the paper
// composites and only flips the pair side).
QCommutationReport q_commutation_check(const UqContext &ctx, const NormalOrdering &o,
                                       bool build_composites_from_o, int trunc = 2);

} // namespace twistforge::qgroups
