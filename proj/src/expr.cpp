#include "twistforge/expr.hpp"

#include "twistforge/errors.hpp"
#include "twistforge/qexp.hpp"

#include <cctype>
#include <sstream>

namespace twistforge::cli {

using ncalg::NCPoly;
using ncalg::tnc_of;

bool Expr::same_shape(const Expr &o) const {
    if (type != o.type || num != o.num || name != o.name || exponent != o.exponent) return false;
    if (kids.size() != o.kids.size()) return false;
    for (size_t i = 0; i < kids.size(); ++i)
        if (!kids[i].same_shape(o.kids[i])) return false;
    return true;
}

namespace {

struct Token {
    enum class Kind { Num, Ident, Op, End };
    Kind kind = Kind::End;
    long num = 0;
    std::string text;
    int pos = 0;
};

struct Lexer {
    const std::string &src;
    size_t i = 0;
    explicit Lexer(const std::string &s) : src(s) {}

    Token next() {
        while (i < src.size() && std::isspace((unsigned char)src[i])) ++i;
        Token t;
        t.pos = (int)i + 1;
        if (i >= src.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = src[i];
        if (std::isdigit((unsigned char)c)) {
            long v = 0;
            while (i < src.size() && std::isdigit((unsigned char)src[i])) v = v * 10 + (src[i++] - '0');
            t.kind = Token::Kind::Num;
            t.num = v;
            return t;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string s;
            while (i < src.size() && (std::isalnum((unsigned char)src[i]) || src[i] == '_')) s += src[i++];
            t.kind = Token::Kind::Ident;
            t.text = s;
            return t;
        }
        static const std::string ops = "+-*/^();,";
        if (ops.find(c) != std::string::npos) {
            t.kind = Token::Kind::Op;
            t.text = std::string(1, c);
            ++i;
            return t;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", (int)i + 1);
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t k = 0;
    const Token &peek() const { return toks[k]; }
    Token take() { return toks[k++]; }
    bool is_op(const char *s) const {
        return peek().kind == Token::Kind::Op && peek().text == s;
    }
    bool is_ident(const char *s) const {
        return peek().kind == Token::Kind::Ident && peek().text == s;
    }
    void expect_op(const char *s) {
        if (!is_op(s)) throw SyntaxError(std::string("expected '") + s + "'", peek().pos);
        take();
    }

    Expr parse_sum() {
        Expr e = parse_tensor();
        while (is_op("+") || is_op("-")) {
            Token op = take();
            Expr rhs = parse_tensor();
            Expr n;
            n.type = op.text == "+" ? Expr::Type::Add : Expr::Type::Sub;
            n.pos = op.pos;
            n.kids = {std::move(e), std::move(rhs)};
            e = std::move(n);
        }
        return e;
    }
    Expr parse_tensor() {
        Expr e = parse_product();
        while (is_ident("ox")) {
            Token op = take();
            Expr rhs = parse_product();
            Expr n;
            n.type = Expr::Type::Ox;
            n.pos = op.pos;
            n.kids = {std::move(e), std::move(rhs)};
            e = std::move(n);
        }
        return e;
    }
    Expr parse_product() {
        Expr e = parse_unary();
        while (is_op("*") || is_op("/")) {
            Token op = take();
            Expr rhs = parse_unary();
            Expr n;
            n.type = op.text == "*" ? Expr::Type::Mul : Expr::Type::Div;
            n.pos = op.pos;
            n.kids = {std::move(e), std::move(rhs)};
            e = std::move(n);
        }
        return e;
    }
    Expr parse_unary() {
        if (is_op("-")) {
            Token op = take();
            Expr n;
            n.type = Expr::Type::Neg;
            n.pos = op.pos;
            n.kids = {parse_unary()};
            return n;
        }
        return parse_power();
    }
    Expr parse_power() {
        Expr e = parse_atom();
        if (is_op("^")) {
            Token op = take();
            int sign = 1;
            if (is_op("-")) {
                take();
                sign = -1;
            }
            if (peek().kind != Token::Kind::Num)
                throw SyntaxError("expected integer exponent", peek().pos);
            Token n = take();
            Expr p;
            p.type = Expr::Type::Pow;
            p.pos = op.pos;
            p.exponent = sign * (int)n.num;
            p.kids = {std::move(e)};
            return p;
        }
        return e;
    }
    Expr parse_atom() {
        if (peek().kind == Token::Kind::Num) {
            Token t = take();
            Expr e;
            e.type = Expr::Type::Num;
            e.num = t.num;
            e.pos = t.pos;
            return e;
        }
        if (peek().kind == Token::Kind::Ident) {
            Token t = take();
            if (t.text == "qexp" || t.text == "coproduct" || t.text == "antipode" ||
                t.text == "counit" || t.text == "specialize") {
                Expr e;
                e.type = Expr::Type::Call;
                e.name = t.text;
                e.pos = t.pos;
                expect_op("(");
                e.kids.push_back(parse_sum());
                while (is_op(";") || is_op(",")) {
                    take();
                    e.kids.push_back(parse_sum());
                }
                expect_op(")");
                if (e.name == "qexp" && e.kids.size() != 3)
                    throw SyntaxError("qexp takes (base; prefactor; arg)", t.pos);
                if (e.name != "qexp" && e.kids.size() != 1)
                    throw SyntaxError(e.name + " takes one argument", t.pos);
                return e;
            }
            if (t.text == "ox") throw SyntaxError("'ox' needs a left operand", t.pos);
            Expr e;
            e.type = Expr::Type::Sym;
            e.name = t.text;
            e.pos = t.pos;
            return e;
        }
        if (is_op("(")) {
            take();
            Expr e = parse_sum();
            expect_op(")");
            return e;
        }
        throw SyntaxError("expected an operand", peek().pos);
    }
};

} // namespace

Expr parse_expr(const std::string &src) {
    Lexer lex(src);
    Parser p;
    for (;;) {
        Token t = lex.next();
        bool end = t.kind == Token::Kind::End;
        p.toks.push_back(std::move(t));
        if (end) break;
    }
    Expr e = p.parse_sum();
    if (p.peek().kind != Token::Kind::End) throw SyntaxError("trailing input", p.peek().pos);
    return e;
}

std::string print_expr(const Expr &e) {
    auto paren = [](const std::string &s) { return "(" + s + ")"; };
    switch (e.type) {
    case Expr::Type::Num: return std::to_string(e.num);
    case Expr::Type::Sym: return e.name;
    case Expr::Type::Add: return paren(print_expr(e.kids[0]) + " + " + print_expr(e.kids[1]));
    case Expr::Type::Sub: return paren(print_expr(e.kids[0]) + " - " + print_expr(e.kids[1]));
    case Expr::Type::Neg: return paren("-" + print_expr(e.kids[0]));
    case Expr::Type::Mul: return paren(print_expr(e.kids[0]) + "*" + print_expr(e.kids[1]));
    case Expr::Type::Div: return paren(print_expr(e.kids[0]) + "/" + print_expr(e.kids[1]));
    case Expr::Type::Pow: return paren(print_expr(e.kids[0]) + "^" + std::to_string(e.exponent));
    case Expr::Type::Ox: return paren(print_expr(e.kids[0]) + " ox " + print_expr(e.kids[1]));
    case Expr::Type::Call: {
        std::string s = e.name + "(";
        for (size_t i = 0; i < e.kids.size(); ++i) {
            if (i) s += "; ";
            s += print_expr(e.kids[i]);
        }
        return s + ")";
    }
    }
    return "?";
}

namespace {

std::vector<QRatFunc> scalar_mul(const std::vector<QRatFunc> &a, const std::vector<QRatFunc> &b,
                                 int trunc) {
    std::vector<QRatFunc> r(trunc + 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size() && (int)(i + j) <= trunc; ++j) r[i + j] += a[i] * b[j];
    return r;
}

Value scalar_value(QRatFunc c, int trunc) {
    Value v;
    v.kind = Value::Kind::Scalar;
    v.scalar.assign(trunc + 1, QRatFunc(0));
    v.scalar[0] = std::move(c);
    return v;
}

TNC to_nc(const Value &v, int trunc) {
    if (v.kind == Value::Kind::NC) return v.nc;
    TNC r(trunc);
    for (int d = 0; d < (int)v.scalar.size(); ++d) r.at(d) = NCPoly::scalar(v.scalar[d]);
    return r;
}

} // namespace

Value eval_expr(const Expr &e, const EvalContext &ctx) {
    const ncalg::Presentation &p = ctx.uq->alg();
    const int trunc = ctx.trunc;
    auto eval = [&](const Expr &k) { return eval_expr(k, ctx); };
    switch (e.type) {
    case Expr::Type::Num: return scalar_value(QRatFunc((int)e.num), trunc);
    case Expr::Type::Sym: {
        if (e.name == "q") return scalar_value(QRatFunc::q_power(1), trunc);
        if (e.name == "t") {
            Value v = scalar_value(QRatFunc(0), trunc);
            if (trunc >= 1) v.scalar[1] = QRatFunc(1);
            return v;
        }
        Value v;
        v.kind = Value::Kind::NC;
        v.nc = tnc_of(p.generator(e.name), trunc); // throws UnknownGenerator
        v.home = &p;
        return v;
    }
    case Expr::Type::Neg: {
        Value a = eval(e.kids[0]);
        switch (a.kind) {
        case Value::Kind::Scalar:
            for (auto &c : a.scalar) c = -c;
            return a;
        case Value::Kind::NC: a.nc = -a.nc; return a;
        case Value::Kind::Tensor: a.t2 = a.t2.scaled(QRatFunc(-1)); return a;
        }
        return a;
    }
    case Expr::Type::Add:
    case Expr::Type::Sub: {
        Value a = eval(e.kids[0]), b = eval(e.kids[1]);
        QRatFunc sgn(e.type == Expr::Type::Add ? 1 : -1);
        if (a.kind == Value::Kind::Tensor || b.kind == Value::Kind::Tensor) {
            if (a.kind != Value::Kind::Tensor || b.kind != Value::Kind::Tensor)
                throw EngineError("cannot add a tensor to a non-tensor");
            a.t2 = a.t2 + b.t2.scaled(sgn);
            return a;
        }
        if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar) {
            for (int d = 0; d <= trunc; ++d)
                a.scalar[d] += sgn * (d < (int)b.scalar.size() ? b.scalar[d] : QRatFunc(0));
            return a;
        }
        Value r;
        r.kind = Value::Kind::NC;
        r.home = a.home ? a.home : b.home;
        r.nc = to_nc(a, trunc) + to_nc(b, trunc).scaled(sgn);
        return r;
    }
    case Expr::Type::Mul: {
        Value a = eval(e.kids[0]), b = eval(e.kids[1]);
        if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar) {
            a.scalar = scalar_mul(a.scalar, b.scalar, trunc);
            return a;
        }
        if (a.kind == Value::Kind::Scalar || b.kind == Value::Kind::Scalar) {
            const Value &s = a.kind == Value::Kind::Scalar ? a : b;
            Value o = a.kind == Value::Kind::Scalar ? b : a;
            if (o.kind == Value::Kind::NC) {
                TNC r(trunc);
                for (int i = 0; i < (int)s.scalar.size(); ++i)
                    for (int j = 0; i + j <= trunc && j < (int)o.nc.c.size(); ++j)
                        r.at(i + j) += o.nc.get(j).scaled(s.scalar[i]);
                o.nc = r;
            } else {
                TT2 r(trunc);
                for (int i = 0; i < (int)s.scalar.size(); ++i)
                    for (int j = 0; i + j <= trunc && j < (int)o.t2.c.size(); ++j)
                        r.at(i + j) = r.get(i + j) + o.t2.get(j).scaled(s.scalar[i]);
                o.t2 = r;
            }
            return o;
        }
        if (a.kind == Value::Kind::Tensor && b.kind == Value::Kind::Tensor) {
            a.t2 = hopf::t2_mul(p, a.t2, b.t2, trunc);
            return a;
        }
        if (a.kind == Value::Kind::NC && b.kind == Value::Kind::NC) {
            a.nc = p.mul(a.nc, b.nc, trunc);
            return a;
        }
        throw EngineError("cannot multiply a tensor by an algebra element");
    }
    case Expr::Type::Div: {
        Value a = eval(e.kids[0]), b = eval(e.kids[1]);
        if (b.kind != Value::Kind::Scalar)
            throw SyntaxError("division requires a scalar divisor", e.pos);
        for (size_t d = 1; d < b.scalar.size(); ++d)
            if (!b.scalar[d].is_zero())
                throw SyntaxError("division requires a t-free scalar divisor", e.pos);
        QRatFunc inv = b.scalar[0].inv();
        switch (a.kind) {
        case Value::Kind::Scalar:
            for (auto &c : a.scalar) c = c * inv;
            return a;
        case Value::Kind::NC: a.nc = a.nc.scaled(inv); return a;
        case Value::Kind::Tensor: a.t2 = a.t2.scaled(inv); return a;
        }
        return a;
    }
    case Expr::Type::Pow: {
        Value a = eval(e.kids[0]);
        int n = e.exponent;
        if (a.kind == Value::Kind::Scalar) {
            bool tfree = true;
            for (size_t d = 1; d < a.scalar.size(); ++d)
                if (!a.scalar[d].is_zero()) tfree = false;
            if (tfree) return scalar_value(a.scalar[0].pow(n), trunc);
            if (n < 0) throw SyntaxError("negative power of a t-dependent scalar", e.pos);
            Value r = scalar_value(QRatFunc(1), trunc);
            for (int i = 0; i < n; ++i) r.scalar = scalar_mul(r.scalar, a.scalar, trunc);
            return r;
        }
        if (n < 0) {
            // only cartan monomials are invertible as bare elements
            if (a.kind == Value::Kind::NC && a.nc.get(0).size() == 1 &&
                a.nc.get(0).terms().begin()->first.seq.empty()) {
                const auto &[w, c] = *a.nc.get(0).terms().begin();
                std::vector<int> inv = w.cartan;
                for (auto &x : inv) x *= n;
                Value r;
                r.kind = Value::Kind::NC;
                r.home = a.home;
                r.nc = tnc_of(NCPoly::monomial(p.make_word({}, inv), c.pow(n)), trunc);
                return r;
            }
            throw SyntaxError("negative powers need an invertible cartan monomial", e.pos);
        }
        if (a.kind == Value::Kind::NC) {
            TNC r = tnc_of(NCPoly::one(), trunc);
            for (int i = 0; i < n; ++i) r = p.mul(r, a.nc, trunc);
            a.nc = r;
            return a;
        }
        TT2 r = hopf::tt2_identity(p, trunc);
        for (int i = 0; i < n; ++i) r = hopf::t2_mul(p, r, a.t2, trunc);
        a.t2 = r;
        return a;
    }
    case Expr::Type::Ox: {
        Value a = eval(e.kids[0]), b = eval(e.kids[1]);
        if (a.kind == Value::Kind::Tensor || b.kind == Value::Kind::Tensor)
            throw SyntaxError("'ox' takes algebra elements, not tensors", e.pos);
        Value r;
        r.kind = Value::Kind::Tensor;
        r.home = a.home ? a.home : b.home;
        r.t2 = hopf::tt2_of(p, to_nc(a, trunc), to_nc(b, trunc), trunc);
        return r;
    }
    case Expr::Type::Call: {
        if (e.name == "qexp") {
            Value base = eval(e.kids[0]);
            if (base.kind != Value::Kind::Scalar)
                throw SyntaxError("qexp base must be a q-power", e.kids[0].pos);
            // base must be a pure power of q
            QRatFunc b = base.scalar[0];
            int m = 0;
            for (int try_m = -12; try_m <= 12; ++try_m)
                if (b == QRatFunc::q_power(try_m)) m = try_m;
            if (m == 0) throw SyntaxError("qexp base must be a nonzero power of q", e.kids[0].pos);
            Value pref = eval(e.kids[1]);
            if (pref.kind != Value::Kind::Scalar)
                throw SyntaxError("qexp prefactor must be scalar", e.kids[1].pos);
            Value arg = eval(e.kids[2]);
            auto conv = coeff::QConvention::onesided(m);
            if (arg.kind == Value::Kind::NC || arg.kind == Value::Kind::Scalar) {
                TNC x = to_nc(arg, trunc);
                TNC shifted(trunc);
                bool pref_has_t = false;
                for (size_t d = 1; d < pref.scalar.size(); ++d)
                    if (!pref.scalar[d].is_zero()) pref_has_t = true;
                // one power of t per argument power; an explicit t in the
                // prefactor supplies it, otherwise it is hard-wired
                for (int i = 0; i < (int)pref.scalar.size(); ++i)
                    for (int j = 0; i + j <= trunc && j < (int)x.c.size(); ++j) {
                        int d = i + j + (pref_has_t ? 0 : 1);
                        if (d <= trunc) shifted.at(d) += x.get(j).scaled(pref.scalar[i]);
                    }
                Value r;
                r.kind = Value::Kind::NC;
                r.home = arg.home ? arg.home : &p;
                r.nc = hopf::qexp(p, p.reduce(shifted), conv, trunc);
                return r;
            }
            throw SyntaxError("qexp argument must be an algebra element", e.kids[2].pos);
        }
        Value a = eval(e.kids[0]);
        if (e.name == "coproduct") {
            Value r;
            r.kind = Value::Kind::Tensor;
            r.home = &p;
            r.t2 = ctx.uq->H.coproduct(to_nc(a, trunc), trunc);
            return r;
        }
        if (e.name == "antipode") {
            Value r;
            r.kind = Value::Kind::NC;
            r.home = &p;
            r.nc = ctx.uq->H.antipode(to_nc(a, trunc), trunc);
            return r;
        }
        if (e.name == "counit") {
            Value r;
            r.kind = Value::Kind::Scalar;
            r.scalar = ctx.uq->H.counit(to_nc(a, trunc));
            r.scalar.resize(trunc + 1, QRatFunc(0));
            return r;
        }
        if (e.name == "specialize") {
            if (!ctx.classical) throw EngineError("no classical target configured");
            Value r;
            r.home = &ctx.classical->alg();
            if (a.kind == Value::Kind::Tensor) {
                r.kind = Value::Kind::Tensor;
                r.t2 = qgroups::specialize_tt2(*ctx.uq, *ctx.classical, a.t2);
            } else {
                r.kind = Value::Kind::NC;
                r.nc = qgroups::specialize_tnc(*ctx.uq, *ctx.classical, to_nc(a, trunc));
            }
            return r;
        }
        throw SyntaxError("unknown function " + e.name, e.pos);
    }
    }
    throw EngineError("unreachable");
}

std::string value_str(const Value &v) {
    switch (v.kind) {
    case Value::Kind::Scalar: {
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d < (int)v.scalar.size(); ++d) {
            if (v.scalar[d].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (d == 0)
                os << v.scalar[d].str();
            else
                os << "t^" << d << "*(" << v.scalar[d].str() << ")";
        }
        return first ? "0" : os.str();
    }
    case Value::Kind::NC: return ncalg::tnc_str(*v.home, v.nc);
    case Value::Kind::Tensor: return hopf::tt2_str(*v.home, v.t2);
    }
    return "?";
}

} // namespace twistforge::cli
