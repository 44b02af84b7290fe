#pragma once

#include <stdexcept>
#include <string>

namespace twistforge {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : EngineError {
    DivisionByZero() : EngineError("division by zero") {}
};

struct PoleAtOne : EngineError {
    explicit PoleAtOne(const std::string &what) : EngineError("pole at q=1: " + what) {}
};

struct BudgetExceeded : EngineError {
    explicit BudgetExceeded(long steps)
        : EngineError("rewrite budget exceeded after " + std::to_string(steps) + " steps") {}
};

struct NotRegular : EngineError {
    explicit NotRegular(const std::string &what) : EngineError("not regular at q=1: " + what) {}
};

struct NotInvertible : EngineError {
    explicit NotInvertible(const std::string &what) : EngineError("not invertible: " + what) {}
};

struct ZeroQFactorial : EngineError {
    ZeroQFactorial() : EngineError("q-factorial vanishes identically (base exponent 0)") {}
};

struct UnsupportedType : EngineError {
    explicit UnsupportedType(const std::string &what) : EngineError("unsupported root system: " + what) {}
};

struct SyntaxError : EngineError {
    int position; // 1-based offset into the source text
    SyntaxError(const std::string &what, int pos)
        : EngineError(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownGenerator : EngineError {
    explicit UnknownGenerator(const std::string &name) : EngineError("unknown generator: " + name) {}
};

struct AmbiguousDecomposition : EngineError {
    explicit AmbiguousDecomposition(const std::string &what)
        : EngineError("ambiguous root decomposition: " + what) {}
};

} // namespace twistforge
