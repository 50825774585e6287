#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mealy/words.hpp"

namespace mealy {

/**
 * Mealy automaton M = (Q, A, tau, sigma) with total transition and output tables.
 *
 * States and letters are interned strings; their ids are the declaration
 * order. Tables are row-major: entry (q, x) lives at q * |A| + x.
 * Immutable after construction.
 */
class Automaton {
public:
    Automaton(std::vector<std::string> states, std::vector<std::string> alphabet,
              std::vector<StateId> transition, std::vector<LetterId> output, std::string name = {});

    std::size_t num_states() const noexcept { return states_.size(); }
    std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
    const std::string& name() const noexcept { return name_; }
    Automaton renamed(std::string name) const;

    /// tau(q, x), written q^x.
    StateId next(StateId q, LetterId x) const { return transition_[q * alphabet_.size() + x]; }
    /// sigma(q, x), written q.x.
    LetterId out(StateId q, LetterId x) const { return output_[q * alphabet_.size() + x]; }
    /// sigma_q^{-1}(y). Only valid on invertible automata.
    LetterId out_inverse(StateId q, LetterId y) const;

    bool is_invertible() const noexcept { return !inverse_output_.empty() || alphabet_.empty(); }

    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    const std::string& state_name(StateId q) const { return states_.at(q); }
    const std::string& letter_name(LetterId x) const { return alphabet_.at(x); }
    std::span<const StateId> transition_table() const noexcept { return transition_; }
    std::span<const LetterId> output_table() const noexcept { return output_; }

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<LetterId> find_letter(std::string_view name) const;
    /// Throws SymbolError when absent.
    StateId state_id(std::string_view name) const;
    LetterId letter_id(std::string_view name) const;

    /// Structural equality: symbols and tables (the name is ignored).
    friend bool operator==(const Automaton& a, const Automaton& b) {
        return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ && a.transition_ == b.transition_ &&
               a.output_ == b.output_;
    }

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<StateId> transition_;
    std::vector<LetterId> output_;
    std::vector<LetterId> inverse_output_;
    std::string name_;
};

struct Properties {
    bool invertible = false;
    bool reversible = false;
    bool bireversible = false;
    bool cyclic = false;
    bool cocyclic = false;

    friend bool operator==(const Properties&, const Properties&) = default;
};

/// Whether sigma_q is a permutation for every q.
bool is_invertible(const Automaton& m);
/// Whether tau_x is a permutation of Q for every x (the dual is invertible).
bool is_reversible(const Automaton& m);
/// Invertible, and the group generated by the sigma_q is exactly the cyclic
/// group of some full-length cycle of A.
bool is_cyclic(const Automaton& m);
Properties properties(const Automaton& m);

/// Interchanges states and letters: x -(q|r)-> y in dual(M) iff q -(x|y)-> r in M.
Automaton dual(const Automaton& m);
/// States are renamed q -> q'; sigma_{q'} = sigma_q^{-1}.
Automaton inverse(const Automaton& m);
/// Disjoint union over a shared alphabet. Colliding state names of the second
/// automaton get a numeric suffix; their ids follow the first automaton's.
Automaton disjoint_union(const Automaton& a, const Automaton& b);
/// Applies a state permutation and a letter permutation:
/// the new state state_perm[q] behaves like q with letters mapped by letter_perm.
/// Symbols keep their positions (only the tables change).
Automaton relabel(const Automaton& m, std::span<const StateId> state_perm, std::span<const LetterId> letter_perm);

/// One factor of a product: an element of the automaton group of `automaton`.
struct ProductPart {
    const Automaton* automaton;
    GroupWord word;
};

/**
 * Builds an automaton whose designated state acts on A* as
 * parts[0].word * parts[1].word * ... (rightmost applied first).
 *
 * Composite states are tuples of (automaton, state, sign), one per generator,
 * enumerated breadth-first from the designated tuple, so only reachable tuples
 * appear. The designated state is returned alongside and is always state 0.
 */
std::pair<Automaton, StateId> product(std::span<const ProductPart> parts);

/**
 * Merges states with equal actions on A* by Moore partition refinement on
 * (output row, transition row) signatures. Each class keeps the name of its
 * first member and classes are ordered by first member.
 */
Automaton minimize(const Automaton& m);
/// The class id of every state after minimization.
std::vector<StateId> equivalence_classes(const Automaton& m);
/// Restriction to the states reachable from `from`, in breadth-first order.
std::pair<Automaton, std::vector<StateId>> reachable_part(const Automaton& m, StateId from);

} // namespace mealy
