#pragma once

#include "twistforge/twist.hpp"

namespace twistforge::twists {

struct CGArtifacts {
    Twist phi_hat; // exp_{q^-2}(zeta f2 (x) e1)
    Twist f_cg;    // (V (x) V) exp_{q^-2}(q^-2 zeta t/(1-q^2) f2 (x) e1) Delta(V^-1)
    TNC V;
    bool closed_form_ok = false; // the displayed Heine-form expansion
    bool regular = false;        // every F_CG coefficient is integral
    bool atoms_ok = false;       // (L1^-2 L2^2 q^{2(n-1)}-1)/(q^2-1) for n <= 3
};

// zeta = zeta_c * t with zeta_c regular at q=1 (default 1).
CGArtifacts build_cg(const UqContext &prime, const QRatFunc &zeta_c, int order);

struct IdentityReport {
    std::string name;
    int order = 0;
    bool pass = false;
    std::vector<std::string> notes;
};

IdentityReport heine_check(int alpha, int order);
IdentityReport heine2_check(const UqContext &uq_sl3, int order);
IdentityReport dilog_check(int order);
IdentityReport five_term_check(const UqContext &prime, const QRatFunc &zeta_c, int order);
IdentityReport qexp_addition_check(int order);

} // namespace twistforge::twists
