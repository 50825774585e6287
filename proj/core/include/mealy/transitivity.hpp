#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/cycle.hpp"
#include "mealy/levels.hpp"
#include "mealy/series.hpp"

namespace mealy {

/// sigma~_w on A^n as a permutation of vertex indices (see word_index).
LevelMap level_permutation(const Automaton& m, const GroupWord& w, std::size_t n,
                           std::uint64_t cap = default_level_cap);

using WordPredicate = std::function<bool(const LetterWord&)>;

/// Words with no two equal adjacent letters whose first-read letter is in
/// `first`. In the dual of an automaton whose states are involutions these are
/// the reduced group words ending (on the right) in one of `first`.
WordPredicate reduced_words(std::vector<LetterId> first);

struct OrbitReport {
    std::size_t level = 0;
    std::uint64_t set_size = 0;
    std::vector<std::uint64_t> sizes;           // one per orbit, in order of representatives
    std::vector<std::uint64_t> representatives; // least vertex index of each orbit
    bool transitive = false;

    std::uint64_t max_orbit() const;
};

/// Orbits of <w> on A^n, or on the subset selected by `subset` (which must be
/// invariant under w; a PreconditionError is thrown if an orbit leaves it).
OrbitReport orbits_on_level(const Automaton& m, const GroupWord& w, std::size_t n, const WordPredicate& subset = {},
                            std::uint64_t cap = default_level_cap);

/// CSV with header `level,orbit_count,max_orbit,transitive`.
void write_orbit_csv(std::ostream& out, std::span<const OrbitReport> reports);

/// Coefficients c_1..c_N of chi(sigma~_q) over Z_m, where m = |A| and
/// c_1 = k_q with sigma_q = rho^{k_q} for the reference cycle of
/// cyclic_structure(). Throws PreconditionError when no reference cycle exists.
std::vector<std::uint32_t> char_coeffs(const Automaton& m, StateId q, std::size_t count);

/// chi(sigma~_q) = sum_n c_n t^{n-1} as an exact rational function over Z_p, p = |A| prime.
RationalSeries char_rational(const Automaton& m, StateId q);

/// Whether sigma~_q acts transitively on every level: every coefficient of
/// chi(q) generates Z_m. Walks the coefficient-vector trajectory to its cycle.
bool is_transitive_exact(const Automaton& m, StateId q, std::uint64_t max_steps = std::uint64_t{1} << 26);

/// Smallest level on which sigma~_q is not transitive, if any (the index of the
/// first non-generator coefficient).
std::optional<std::size_t> first_intransitive_level(const Automaton& m, StateId q,
                                                    std::uint64_t max_steps = std::uint64_t{1} << 26);

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

struct CotransitivityReport {
    Verdict verdict = Verdict::unknown;
    bool exact = false;                       // decided through the characteristic series of the dual
    std::optional<LetterId> witness;          // a letter x with tau~_x transitive (Yes)
    std::optional<std::size_t> refutation_level; // every tau~_x fails by this level (No)
    /// Per letter: first level where tau~_x is not transitive on Q^n, if found.
    std::vector<std::optional<std::size_t>> first_failure;
};

/// Decides whether some tau~_x acts transitively on every Q^n. Exact when the
/// dual has a reference cycle; otherwise refutes level by level up to
/// `level_budget` and reports Unknown if some letter survives.
CotransitivityReport cotransitivity(const Automaton& m, std::size_t level_budget);

/// Whether w fixes x^inf: every word in the orbit of w under w -> w^x sends x to x.
bool stabilizes_infinite(const Automaton& m, const GroupWord& w, LetterId x,
                         std::uint64_t max_words = std::uint64_t{1} << 26);

/// Preperiod and period of v under repeated tau~_x.
CycleShape orbit_cycle(const Automaton& m, LetterId x, const StateWord& v,
                       std::uint64_t max_steps = std::uint64_t{1} << 26);

} // namespace mealy
