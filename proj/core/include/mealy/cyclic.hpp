#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// A full-length cycle rho of the alphabet together with exponents k_q such
/// that sigma_q = rho^{k_q} for every state.
struct CyclicStructure {
    std::vector<LetterId> rho;          // rho[x] = image of x
    std::vector<std::uint32_t> exponent; // per state, in [0, m)
    std::uint32_t modulus = 1;           // m = |A|
    /// The sigma_q generate all of <rho> (gcd of exponents and m is 1).
    bool generates = false;
};

/**
 * Finds the lexicographically least full cycle rho (compared as the array
 * rho[0..m)) with every sigma_q in <rho>. Empty when no such cycle exists or
 * the automaton is not invertible. The all-identity case yields exponents 0
 * and generates == (m == 1).
 */
std::optional<CyclicStructure> cyclic_structure(const Automaton& m);

} // namespace mealy
