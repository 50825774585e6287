#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/levels.hpp"

namespace mealy {

/**
 * Level-n Schreier graph Gamma_{M,n}: vertices are the words of A^n indexed by
 * word_index(), and every state q contributes the edges s -> sigma~_q(s)
 * (self-loops and multiple edges kept).
 */
class SchreierGraph {
public:
    static SchreierGraph build(const Automaton& m, std::size_t n, std::uint64_t cap = default_level_cap);

    const Automaton& automaton() const noexcept { return *automaton_; }
    std::size_t level() const noexcept { return level_; }
    std::uint64_t vertex_count() const noexcept { return vertices_; }
    std::size_t degree() const noexcept { return edges_.size(); }
    /// Neighbour array of state q: vertex v -> sigma~_q(v).
    const LevelMap& edges(StateId q) const { return edges_.at(q); }
    /// The same maps reversed: vertex v -> sigma~_q^{-1}(v).
    const LevelMap& reverse_edges(StateId q) const { return reverse_.at(q); }

private:
    std::shared_ptr<const Automaton> automaton_;
    std::size_t level_ = 0;
    std::uint64_t vertices_ = 1;
    std::vector<LevelMap> edges_;
    std::vector<LevelMap> reverse_;
};

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

/// BFS distances from `source`; edges are undirected unless `directed`.
std::vector<std::uint32_t> distances(const SchreierGraph& g, std::uint64_t source, bool directed = false);
/// Largest distance from source, or `unreachable` when some vertex cannot be reached.
std::uint32_t eccentricity(const SchreierGraph& g, std::uint64_t source);

enum class DiameterMode { exact, bound };

struct DiameterOptions {
    std::uint64_t exact_cap = std::uint64_t{1} << 14;
    std::size_t samples = 16;       // bound mode: random sources for the lower bound
    std::uint64_t seed = 1;
    std::optional<LetterId> hub;    // bound mode: x for the upper bound 2 ecc(x^n); default: last letter
    unsigned jobs = 1;
};

struct DiameterResult {
    std::size_t level = 0;
    std::uint64_t vertices = 0;
    std::uint32_t lower = 0;
    std::uint32_t upper = 0; // `unreachable` for a disconnected graph
    bool exact = false;
};

/// Exact: maximum over all-pairs BFS (throws CapacityError above exact_cap).
/// Bound: lower = largest sampled eccentricity, upper = 2 ecc(x^n).
DiameterResult diameter(const SchreierGraph& g, DiameterMode mode, const DiameterOptions& options = {});

/// CSV with header `n,vertices,diam_lower,diam_upper,exact_flag`.
void write_diameter_csv(std::ostream& out, std::span<const DiameterResult> rows);

/// Graphviz digraph with one edge per state and vertex, labeled by the state.
std::string to_dot(const SchreierGraph& g);

/// Parameters of the growth and steering experiments, recorded with every output.
struct ExperimentConfig {
    std::size_t radius = 8;
    std::size_t depth = 16;
    std::size_t witness_budget = 0; // 0: use max(1, n) at level n
    std::size_t buffer = 16;        // extra depth B of the witness search
    double growth_k = 2.0;          // K and alpha are reporting parameters only
    double growth_alpha = 1.0;
    std::uint64_t seed = 1;
};

/// |B(x^L, r)| in Gamma_{M u M^-1, L}: the ball around x^L using every state
/// and its inverse.
std::uint64_t ball_size(const Automaton& m, LetterId x, std::size_t radius, std::size_t depth,
                        std::uint64_t cap = std::uint64_t{1} << 24);

/**
 * A group word u with act(u, x^n) = x^n that moves x^inf. Found by BFS in the
 * ball of radius `budget` around x^{n+B} in Gamma_{M u M^-1, n+B}: two words
 * of the ball agreeing on their first n letters give u = g_v^{-1} g_w.
 * Throws NotFoundError when the ball holds no such pair.
 */
GroupWord find_level_witness(const Automaton& m, LetterId x, std::size_t n, std::size_t budget,
                             std::size_t buffer = 16);

/**
 * Steers words to x^n by the level-by-level induction: after fixing the first
 * i letters, a witness for level i is sectioned so that it fixes x^i and
 * permutes letter i cyclically, and is applied at most |A| - 1 times.
 * Witnesses are cached per level. Needs an automaton with a reference cycle
 * and |A| prime.
 */
class Steerer {
public:
    Steerer(const Automaton& m, LetterId x, std::size_t buffer = 16, std::size_t witness_budget = 0);

    /// w with act(w, s) = x^|s| (checked before returning).
    GroupWord steer(const LetterWord& s);
    /// The element fixing x^i and moving letter i, as used by steer().
    const GroupWord& level_element(std::size_t i);

private:
    const Automaton& m_;
    LetterId x_;
    std::size_t buffer_;
    std::size_t budget_;
    std::vector<std::optional<GroupWord>> cache_;
};

GroupWord steer_to(const Automaton& m, LetterId x, const LetterWord& s);

/// How an s-edge of Gamma_n lifts: from the vertex e v (first letter e) the
/// lifted edge is labelled lifts[e] and ends at sigma(lifts[e], e) w.
struct LiftRule {
    StateId edge = 0;
    std::vector<std::vector<StateId>> lifts; // per first letter e: states q with tau(q, e) = edge
    std::string kind;                        // straight | crossed | mixed
};

struct LiftReport {
    bool holds = true;
    std::size_t levels_checked = 0;
    std::vector<LiftRule> rules;
    std::string counterexample;
};

/// "a => crossed c,c" style description (lift labels in first-letter order).
std::string format_rule(const Automaton& m, const LiftRule& rule);
std::vector<LiftRule> lift_rules(const Automaton& m);

/// Checks, for levels 0..n-1, that every edge of Gamma_{k+1} computed by direct
/// simulation projects onto an edge of Gamma_k, and that lifting Gamma_k by
/// the rules alone reproduces Gamma_{k+1}.
LiftReport verify_lift(const Automaton& m, std::size_t n);

} // namespace mealy
