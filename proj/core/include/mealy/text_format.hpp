#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mealy/automaton.hpp"

namespace mealy {

/**
 * Plain-text automaton format:
 *
 *     # comment
 *     states: a b c
 *     alphabet: 0 1
 *     a 0 0 b
 *     ...
 *
 * One row `<state> <read> <write> <next>` for every (state, letter) pair.
 * Missing or duplicate rows are rejected with ParseError.
 */
Automaton parse_automaton(std::string_view text, std::string name = {});
Automaton load_automaton(const std::filesystem::path& path);

/// Rows sorted by (state index, letter index); parse(serialize(M)) == M.
std::string serialize(const Automaton& m);
void save_automaton(const Automaton& m, const std::filesystem::path& path);

/// Moore diagram in Graphviz syntax, edges labelled `read|write`.
std::string to_dot(const Automaton& m);

} // namespace mealy
