#pragma once

#include <cstdint>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// Maps a vertex index of level n to the index of its image.
using LevelMap = std::vector<std::uint32_t>;

inline constexpr std::uint64_t default_level_cap = std::uint64_t{1} << 24;

/// |A|^n; throws CapacityError above `cap`.
std::uint64_t level_size(const Automaton& m, std::size_t n, std::uint64_t cap = default_level_cap);

/// Vertex index of a word: sum of s_i |A|^i, the first-read letter least significant.
std::uint64_t word_index(const LetterWord& s, std::size_t alphabet_size);
LetterWord index_word(std::uint64_t index, std::size_t n, std::size_t alphabet_size);

/// sigma~_q on A^n for every state q, built level by level from
/// map_n[q][x + m r] = sigma(q, x) + m map_{n-1}[tau(q, x)][r].
std::vector<LevelMap> level_maps(const Automaton& m, std::size_t n, std::uint64_t cap = default_level_cap);

/// Inverse of a bijective level map.
LevelMap invert_map(const LevelMap& f);

} // namespace mealy
