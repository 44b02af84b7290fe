#pragma once

#include "twistforge/twist.hpp"

namespace twistforge::twists {

struct Section5Artifacts {
    NCPoly E;   // e_{1+2} L1
    TNC W;      // exp_{q^-2}(-t/(1-q^2) e_{1+2} L1)
    TNC Winv;
    TT2 J;      // the section-5 coboundary twist
    TT2 Jbar;   // its specialization
    TNC z;      // q^-1 L1^2 L2^-2 e1 (1 - t E)^-1

    bool delta_E_ok = false;      // displayed coproduct of e_{1+2} L1
    bool qcomm1_ok = false;       // (1 (x) E)(...) = q^-2 (...)(1 (x) E)
    bool qcomm2_ok = false;       // (G (x) e2 L1)(E (x) L1^2) = q^-2 (...)
    bool conj_k_ok = false;       // W k W^-1 = k exactly
    bool conj_e1_ok = false;      // W e1 W^-1 = e1/(1 - t E)
    bool conj_f2_ok = false;      // W f2 W^-1 = f2 - t/(1-q^2) z
    bool j1j2_ok = false;         // J equals the displayed J1 * J2 product
    bool regular = false;         // J coefficients integral
    bool jbar_t1_ok = false;      // t^1 of Jbar = E12 (x) E23 - E13 (x) h_w1
    bool jbar_closed_ok = false;  // the displayed specialized closed form
    bool noncoboundary = false;   // Jbar_21 != Jbar at t^1
};

Section5Artifacts build_section5(const UqContext &prime, const ClassicalTarget &ptgt, int order);

} // namespace twistforge::twists
