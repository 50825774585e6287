#include "mealy/levels.hpp"

#include "mealy/error.hpp"

namespace mealy {

std::uint64_t level_size(const Automaton& m, std::size_t n, std::uint64_t cap) {
    const std::uint64_t a = m.alphabet_size();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a != 0 && size > cap / a)
            throw CapacityError("level " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) + " vertices");
        size *= a;
    }
    if (size > cap) throw CapacityError("level " + std::to_string(n) + " exceeds the vertex cap");
    return size;
}

std::uint64_t word_index(const LetterWord& s, std::size_t alphabet_size) {
    std::uint64_t v = 0;
    for (std::size_t i = s.size(); i-- > 0;) v = v * alphabet_size + s[i];
    return v;
}

LetterWord index_word(std::uint64_t index, std::size_t n, std::size_t alphabet_size) {
    LetterWord s;
    s.letters.reserve(n);
    for (std::size_t i = 0; i < n; ++i, index /= alphabet_size)
        s.letters.push_back(static_cast<LetterId>(index % alphabet_size));
    return s;
}

std::vector<LevelMap> level_maps(const Automaton& m, std::size_t n, std::uint64_t cap) {
    const std::size_t nq = m.num_states(), na = m.alphabet_size();
    level_size(m, n, std::min<std::uint64_t>(cap, std::uint64_t{1} << 32));
    std::vector<LevelMap> cur(nq, LevelMap{0});
    std::uint64_t size = 1;
    for (std::size_t level = 1; level <= n; ++level) {
        std::vector<LevelMap> nxt(nq, LevelMap(size * na));
        for (StateId q = 0; q < nq; ++q) {
            auto& out = nxt[q];
            for (LetterId x = 0; x < na; ++x) {
                const auto y = m.out(q, x);
                const auto& below = cur[m.next(q, x)];
                for (std::uint64_t r = 0; r < size; ++r)
                    out[x + na * r] = static_cast<std::uint32_t>(y + na * below[r]);
            }
        }
        cur.swap(nxt);
        size *= na;
    }
    return cur;
}

LevelMap invert_map(const LevelMap& f) {
    LevelMap g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[f[i]] = static_cast<std::uint32_t>(i);
    return g;
}

} // namespace mealy
