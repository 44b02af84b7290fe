#pragma once

#include "twistforge/membership.hpp"
#include "twistforge/qexp.hpp"
#include "twistforge/specialize.hpp"

#include <unordered_map>

namespace twistforge::twists {

using hopf::HopfPresentation;
using hopf::Tensor2;
using hopf::TNC;
using hopf::TT2;
using hopf::TT3;
using ncalg::NCPoly;
using ncalg::Presentation;
using ncalg::Word;
using qgroups::ClassicalTarget;
using qgroups::UqContext;
using coeff::QRatFunc;

struct Twist {
    TT2 series;
    std::string provenance;
};

struct TwistReport {
    std::string twist;
    std::string algebra;
    int t_order = 0;
    std::vector<int> residual_terms; // per t-degree residual counts of the cocycle identity
    bool counit_ok = false;
    bool pass = false;
    long elapsed_ms = 0;
    std::vector<std::string> notes;
};

// Coproduct context: the plain Hopf coproduct or its Ad(J) twist. Slot
// applications are cached per slot word.
class CoproductCtx {
  public:
    explicit CoproductCtx(const HopfPresentation &h) : h_(&h) {}
    CoproductCtx(const HopfPresentation &h, TT2 conjugator)
        : h_(&h), conj_(std::move(conjugator)), twisted_(true) {}

    const HopfPresentation &hopf() const { return *h_; }
    const Presentation &alg() const { return h_->alg; }
    bool twisted() const { return twisted_; }

    TT2 delta_word(const Word &w, int trunc) const;
    TT2 delta(const TNC &x, int trunc) const;
    TT3 slot1(const TT2 &x, int trunc) const; // (Delta (x) id)
    TT3 slot2(const TT2 &x, int trunc) const; // (id (x) Delta)

  private:
    const HopfPresentation *h_;
    TT2 conj_;
    mutable std::optional<TT2> conj_inv_;
    bool twisted_ = false;
    mutable std::unordered_map<Word, TT2, ncalg::WordHash> cache_;
    mutable int cache_trunc_ = -1;
};

// Eq. (1): F12 (Delta (x) id)(F) = F23 (id (x) Delta)(F) plus the counit
// condition, order by order.
TwistReport cocycle_check(const CoproductCtx &ctx, const TT2 &F, int order,
                          const std::string &twist_name, const std::string &algebra_name);

// (W (x) W) Delta(W^{-1})
TT2 coboundary_twist(const CoproductCtx &ctx, const TNC &W, int trunc);

struct JordanianArtifacts {
    Twist twist;              // the quantum coboundary twist J(e_lambda)
    TNC W;                    // exp_{q_lambda}(t/(1-q_lambda) e_lambda)
    TT2 specialized;          // q -> 1 limit
    bool regular = false;     // every t-coefficient passed integral membership
    bool w_singular = false;  // W alone fails specialization, as it must
    bool two_factor_ok = false; // Prop. 4 proof's two-exponential product form
};

JordanianArtifacts build_jordanian(const UqContext &ctx, const ClassicalTarget &tgt, int order);

// classical cocycle re-check of a specialized twist (Prop. 1)
TwistReport classical_recheck(const ClassicalTarget &tgt, const TT2 &Fbar, int order,
                              const std::string &twist_name);

struct RMatrixReport {
    bool skew = false;
    bool proportional = false;
    QRatFunc constant; // recorded, not asserted
    bool pass() const { return skew && proportional; }
};

// t^1 coefficient of Fbar_21 Fbar^{-1} against the extended Jordanian pattern
// H_lambda ^ E_lambda + 2 sum E_v ^ E_u.
RMatrixReport semiclassical_r_check(const UqContext &ctx, const ClassicalTarget &tgt, const TT2 &Fbar);

// Example 1 classical closed forms.
TT2 example1_sl2_closed(const ClassicalTarget &tgt, int order);
TT2 example1_sl3_closed(const ClassicalTarget &tgt, int order);

} // namespace twistforge::twists
