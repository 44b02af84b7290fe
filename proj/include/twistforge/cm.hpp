#pragma once

#include "twistforge/section5.hpp"

namespace twistforge::twists {

// Presented Connes-Moscovici family: H1 (Y, X, delta_1..3), its quotient H1'
// (Z for delta_1), the quantum D_q (k, x, z) and the classical D1 (xb, yb, zb).
// The D algebras carry the deformation parameter inside their relations, so
// their rewrite rules are t-shifted.
struct CMPresentations {
    HopfPresentation H1;
    HopfPresentation H1p;
    HopfPresentation Dq;
    HopfPresentation D1;
};

CMPresentations build_cm_presentations();

struct CMAlgebraReport {
    // (a) the displayed D_q structure inside U'_q^J(sl3)[[t]]
    bool dq_kx = false, dq_kz = false, dq_xz = false;
    bool dq_delta_k = false, dq_delta_z = false, dq_delta_x = false;
    // (b) D1 structure after specialization
    bool d1_yx = false, d1_yz = false, d1_xz = false;
    bool d1_delta_y = false, d1_delta_z = false, d1_delta_x = false;
    // (c) iota is a Hopf homomorphism
    bool iota_rel_yx = false, iota_rel_yz = false, iota_rel_xz = false;
    bool iota_delta_x = false, iota_delta_y = false, iota_delta_z = false;
    // (d) PBW correspondence at bounded degree
    bool pbw_independent = false;
    std::vector<std::string> notes;
    bool pass() const {
        return dq_kx && dq_kz && dq_xz && dq_delta_k && dq_delta_z && dq_delta_x && d1_yx &&
               d1_yz && d1_xz && d1_delta_y && d1_delta_z && d1_delta_x && iota_rel_yx &&
               iota_rel_yz && iota_rel_xz && iota_delta_x && iota_delta_y && iota_delta_z &&
               pbw_independent;
    }
};

CMAlgebraReport cm_algebra_suite(const UqContext &prime, const ClassicalTarget &ptgt,
                                 const Section5Artifacts &s5, int order);

struct CMTwistReport {
    TwistReport fq_cocycle;        // F_q in U'^J_q(sl3)
    bool fq_regular = false;       // F_q coefficients integral
    bool ftilde_closed_ok = false; // displayed closed form of (V x V) exp(...) Delta(V^-1)
    bool fq_closed_ok = false;     // displayed closed form of F_q
    bool f1_match = false;         // specialize(F_q) = (iota x iota) F1 through `order`
    std::string f1p_t1_derived;    // engine value of the F1' first-order coefficient
    bool f1p_t1_derived_ok = false;   // equals t(X(x)Y - Y(x)X - ZY(x)Y)
    bool f1p_t1_displayed_ok = false; // equals the displayed  t(X(x)Y - Y(x)X + ZY(x)Y)
    bool eq3_t1_ok = false;           // Eq.(3) t^1 = 2(Y(x)X - X(x)Y + ZY(x)Y)
    bool equivalence_t1_ok = false;   // F1'(t -> -2t) = Eq.(3) at t^1
    bool equivalence_t2_ok = false;   // reported, not asserted
    std::vector<std::string> notes;
};

CMTwistReport cm_twist_chain(const UqContext &prime, const ClassicalTarget &ptgt,
                             const Section5Artifacts &s5, int order);

} // namespace twistforge::twists
