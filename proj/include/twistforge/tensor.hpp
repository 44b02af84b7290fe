#pragma once

#include "twistforge/presentation.hpp"

#include <array>

namespace twistforge::hopf {

using coeff::QRatFunc;
using ncalg::NCPoly;
using ncalg::Presentation;
using ncalg::TNC;
using ncalg::TSeries;
using ncalg::Word;

// Finite linear combination of word tuples; each slot is independently kept in
// normal form by the operations below.
template <int R> class Tensor {
  public:
    using Key = std::array<Word, R>;

    void add_term(const Key &k, const QRatFunc &c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Key, QRatFunc> &terms() const { return terms_; }

    Tensor operator+(const Tensor &o) const {
        Tensor r = *this;
        for (const auto &[k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    Tensor operator-(const Tensor &o) const {
        Tensor r = *this;
        for (const auto &[k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    Tensor scaled(const QRatFunc &c) const {
        Tensor r;
        if (c.is_zero()) return r;
        for (const auto &[k, x] : terms_) r.terms_.emplace(k, x * c);
        return r;
    }
    bool operator==(const Tensor &o) const { return terms_ == o.terms_; }

  private:
    std::map<Key, QRatFunc> terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;
using TT2 = TSeries<Tensor2>;
using TT3 = TSeries<Tensor3>;

Tensor2 tensor_of(const Presentation &p, const NCPoly &a, const NCPoly &b);
Tensor3 tensor_of(const Presentation &p, const NCPoly &a, const NCPoly &b, const NCPoly &c);
Tensor2 identity2(const Presentation &p);
Tensor3 identity3(const Presentation &p);
TT2 tt2_identity(const Presentation &p, int trunc);
TT2 tt2_of(const Presentation &p, const TNC &a, const TNC &b, int trunc);

// Slot-wise reduction to normal form; may shift t-degrees on t-deformed
// presentations.
TT2 t2_reduce(const Presentation &p, const TT2 &x);
TT3 t3_reduce(const Presentation &p, const TT3 &x);

TT2 t2_mul(const Presentation &p, const TT2 &a, const TT2 &b, int trunc);
TT3 t3_mul(const Presentation &p, const TT3 &a, const TT3 &b, int trunc);

Tensor2 flip(const Tensor2 &x); // a(x)b -> b(x)a
TT2 tt2_flip(const TT2 &x);

// F (x) 1 and 1 (x) F embeddings into three tensor slots.
TT3 embed12(const Presentation &p, const TT2 &x);
TT3 embed23(const Presentation &p, const TT2 &x);

// Multiplication fold m(a (x) b) = ab.
TNC t2_fold(const Presentation &p, const TT2 &x, int trunc);

// Series inverse; degree-0 coefficient must be the identity.
TNC tnc_inv(const Presentation &p, const TNC &x);
TT2 tt2_inv(const Presentation &p, const TT2 &x);

std::string tensor2_str(const Presentation &p, const Tensor2 &x);
std::string tt2_str(const Presentation &p, const TT2 &x);

} // namespace twistforge::hopf
