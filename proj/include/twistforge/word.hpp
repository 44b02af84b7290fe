#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twistforge::ncalg {

enum class Sort { Lowering, Cartan, Raising, Generic };

struct GeneratorSymbol {
    std::string name;
    Sort sort = Sort::Generic;
    std::vector<int> grading; // root-lattice weight, for weight bookkeeping
};

// A monomial: expanded sequence of non-cartan letter ids plus one lattice
// vector of cartan exponents, held at the right end of the word. Crossing a
// cartan letter over a non-cartan one only produces a power of q, so the
// lattice vector never needs to sit anywhere else.
struct Word {
    std::vector<int> seq;
    std::vector<int> cartan; // canonical: no trailing zero entries

    int degree() const { return (int)seq.size(); }
    bool is_identity() const;
    void canonicalize() {
        while (!cartan.empty() && cartan.back() == 0) cartan.pop_back();
    }
    bool operator==(const Word &o) const = default;
    bool operator<(const Word &o) const; // canonical storage order: degree, seq, cartan
};

std::size_t word_hash(const Word &w);

struct WordHash {
    std::size_t operator()(const Word &w) const { return word_hash(w); }
};

} // namespace twistforge::ncalg
