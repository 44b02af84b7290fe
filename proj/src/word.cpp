#include "twistforge/word.hpp"

namespace twistforge::ncalg {

bool Word::is_identity() const {
    if (!seq.empty()) return false;
    for (int e : cartan)
        if (e != 0) return false;
    return true;
}

bool Word::operator<(const Word &o) const {
    if (seq.size() != o.seq.size()) return seq.size() < o.seq.size();
    if (seq != o.seq) return seq < o.seq;
    return cartan < o.cartan;
}

std::size_t word_hash(const Word &w) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int x : w.seq) mix((std::size_t)(x + 1));
    mix(0xabcdefull);
    for (int x : w.cartan) mix((std::size_t)(unsigned)(x + (1 << 16)));
    return h;
}

} // namespace twistforge::ncalg
