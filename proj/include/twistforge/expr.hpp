#pragma once

#include "twistforge/specialize.hpp"

#include <memory>

namespace twistforge::cli {

using coeff::QRatFunc;
using hopf::TT2;
using ncalg::TNC;
using qgroups::ClassicalTarget;
using qgroups::UqContext;

// Minimal expression language for spot checks: scalars in q and t, generator
// names, + - * / ^, the tensor constructor `ox`, and the function forms
// qexp(base; prefactor; arg), coproduct(x), antipode(x), counit(x),
// specialize(x). Precedence: ^ > * > ox > +-.
struct Expr {
    enum class Type { Num, Sym, Add, Sub, Neg, Mul, Div, Pow, Ox, Call };
    Type type = Type::Num;
    long num = 0;          // Num
    std::string name;      // Sym, Call
    int exponent = 0;      // Pow
    std::vector<Expr> kids;
    int pos = 0; // 1-based source position

    bool same_shape(const Expr &o) const;
};

Expr parse_expr(const std::string &src);
std::string print_expr(const Expr &e);

// Evaluation result: a t-graded scalar, algebra element, or rank-2 tensor,
// together with the presentation it lives in.
struct Value {
    enum class Kind { Scalar, NC, Tensor };
    Kind kind = Kind::Scalar;
    std::vector<QRatFunc> scalar; // index = t-degree
    TNC nc;
    TT2 t2;
    const ncalg::Presentation *home = nullptr;
};

struct EvalContext {
    const UqContext *uq = nullptr;
    const ClassicalTarget *classical = nullptr; // for specialize()
    int trunc = 4;
};

Value eval_expr(const Expr &e, const EvalContext &ctx);
std::string value_str(const Value &v);

} // namespace twistforge::cli
