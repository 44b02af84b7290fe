#pragma once

#include "twistforge/uq.hpp"

namespace twistforge::qgroups {

using hopf::Tensor2;
using hopf::TT2;
using ncalg::TNC;

// Classical target U(g): letters for the Chevalley generators plus commuting
// Cartan letters H (images of the divided atoms (k-1)/(q-1)), primitive
// coproducts throughout.
struct ClassicalTarget {
    HopfPresentation H;
    std::vector<int> e_map, f_map; // per simple root: classical symbol ids
    std::vector<int> cartan_H;     // per quantum cartan basis index: H symbol id

    const Presentation &alg() const { return H.alg; }
};

ClassicalTarget build_classical(const UqContext &src);

// Specialization q -> 1: expands cartan monomials via k = 1 + u*H, multiplies
// by the exact Laurent expansion of each scalar, asserts cancellation of all
// negative powers of u, and returns the u^0 part. Throws NotRegular.
ncalg::NCPoly specialize_nc(const UqContext &src, const ClassicalTarget &tgt, const ncalg::NCPoly &x);
TNC specialize_tnc(const UqContext &src, const ClassicalTarget &tgt, const TNC &x);
TT2 specialize_tt2(const UqContext &src, const ClassicalTarget &tgt, const TT2 &x);

} // namespace twistforge::qgroups
