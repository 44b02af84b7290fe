#pragma once

#include "twistforge/tensor.hpp"

#include <unordered_map>

namespace twistforge::hopf {

// Presentation plus Hopf structure data on the generators. Cartan basis
// letters are always group-like (Delta k = k (x) k, eps = 1, S(k) = k^-1);
// non-cartan generators carry explicit values, t-graded where the coproduct
// itself involves the deformation parameter.
class HopfPresentation {
  public:
    ncalg::Presentation alg;

    void set_delta(int sym_id, TT2 v);
    void set_counit(int sym_id, QRatFunc v);
    void set_antipode(int sym_id, TNC v);
    // Convenience for the common primitive-like shapes.
    void set_generator_hopf(int sym_id, TT2 delta, QRatFunc counit, TNC antipode);

    const TT2 &delta(int sym_id) const { return delta_[sym_id]; }
    const QRatFunc &counit_value(int sym_id) const { return counit_[sym_id]; }
    const TNC &antipode_value(int sym_id) const { return antipode_[sym_id]; }
    bool hopf_complete() const;

    TT2 coproduct_word(const Word &w, int trunc) const;
    TT2 coproduct(const TNC &x, int trunc) const;
    TT2 coproduct(const NCPoly &x, int trunc) const;
    // counit per t-degree
    std::vector<QRatFunc> counit(const TNC &x) const;
    QRatFunc counit(const NCPoly &x) const;
    TNC antipode(const TNC &x, int trunc) const;
    TNC antipode(const NCPoly &x, int trunc) const;

    // (Delta (x) id) and (id (x) Delta) applied slot-wise.
    TT3 delta_slot1(const TT2 &x, int trunc) const;
    TT3 delta_slot2_of3(const TT2 &x, int trunc) const;
    // counit applied to one slot of a rank-2 series
    TNC counit_slot(const TT2 &x, int slot, int trunc) const;

  private:
    std::vector<TT2> delta_;
    std::vector<QRatFunc> counit_;
    std::vector<TNC> antipode_;
    mutable std::unordered_map<Word, TT2, ncalg::WordHash> coproduct_cache_;
    mutable int cache_trunc_ = -1;
};

struct AxiomReport {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failed;
    bool pass() const { return failures == 0; }
};

// Coassociativity, counit and antipode laws on all generators, respect of
// every rewrite rule by Delta/eps/S, and the same axioms on random words.
AxiomReport hopf_axiom_check(const HopfPresentation &h, int degree, int trials, unsigned long seed);

} // namespace twistforge::hopf
