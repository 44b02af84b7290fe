#pragma once

#include "twistforge/uq.hpp"
#include "twistforge/tensor.hpp"

namespace twistforge::qgroups {

struct MembershipResult {
    bool member = true;
    std::vector<std::string> violations; // singular atom coefficients
    std::string witness;                 // rewritten atom expression (on success)
};

// Membership in the A-span of integral-atom monomials (e_i, f_i, k^-1 letters,
// divided cartans D = (k-1)/(q-1)): rewrites every cartan monomial over the
// canonical atom basis k^-M D^s and checks each resulting scalar is regular at
// q=1. plus_only additionally restricts the letter skeleton to raising sort.
MembershipResult integral_membership(const UqContext &ctx, const ncalg::NCPoly &x, bool plus_only);
MembershipResult integral_membership(const UqContext &ctx, const hopf::Tensor2 &x, bool plus_only);
MembershipResult integral_membership(const UqContext &ctx, const hopf::TT2 &x, bool plus_only);

} // namespace twistforge::qgroups
