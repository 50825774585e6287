#include "mealy/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"

namespace mealy {

namespace {

void check_distinct(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw PreconditionError(std::string("empty ") + what + " symbol");
        if (!seen.insert(n).second) throw PreconditionError(std::string("duplicate ") + what + " symbol '" + n + "'");
    }
}

bool is_permutation_of(std::span<const std::uint32_t> values, std::size_t n) {
    std::vector<bool> hit(n, false);
    for (auto v : values) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

} // namespace

Automaton::Automaton(std::vector<std::string> states, std::vector<std::string> alphabet,
                     std::vector<StateId> transition, std::vector<LetterId> output, std::string name)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), transition_(std::move(transition)),
      output_(std::move(output)), name_(std::move(name)) {
    check_distinct(states_, "state");
    check_distinct(alphabet_, "letter");
    const std::size_t cells = states_.size() * alphabet_.size();
    if (transition_.size() != cells || output_.size() != cells)
        throw PreconditionError("transition and output tables must cover every (state, letter) pair");
    for (auto r : transition_)
        if (r >= states_.size()) throw PreconditionError("transition table refers to an unknown state");
    for (auto y : output_)
        if (y >= alphabet_.size()) throw PreconditionError("output table refers to an unknown letter");

    const std::size_t m = alphabet_.size();
    bool invertible = true;
    for (std::size_t q = 0; q < states_.size() && invertible; ++q)
        invertible = is_permutation_of(std::span(output_).subspan(q * m, m), m);
    if (invertible && m > 0) {
        inverse_output_.resize(cells);
        for (std::size_t q = 0; q < states_.size(); ++q)
            for (std::size_t x = 0; x < m; ++x) inverse_output_[q * m + output_[q * m + x]] = static_cast<LetterId>(x);
    }
}

Automaton Automaton::renamed(std::string name) const {
    Automaton copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

LetterId Automaton::out_inverse(StateId q, LetterId y) const {
    if (!is_invertible()) throw PreconditionError("inverse action requires an invertible automaton");
    return inverse_output_[q * alphabet_.size() + y];
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<StateId>(it - states_.begin());
}

std::optional<LetterId> Automaton::find_letter(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) return std::nullopt;
    return static_cast<LetterId>(it - alphabet_.begin());
}

StateId Automaton::state_id(std::string_view name) const {
    if (auto q = find_state(name)) return *q;
    throw SymbolError("unknown state '" + std::string(name) + "'");
}

LetterId Automaton::letter_id(std::string_view name) const {
    if (auto x = find_letter(name)) return *x;
    throw SymbolError("unknown letter '" + std::string(name) + "'");
}

bool is_invertible(const Automaton& m) { return m.is_invertible(); }

bool is_reversible(const Automaton& m) {
    std::vector<StateId> column(m.num_states());
    for (LetterId x = 0; x < m.alphabet_size(); ++x) {
        for (StateId q = 0; q < m.num_states(); ++q) column[q] = m.next(q, x);
        if (!is_permutation_of(column, m.num_states())) return false;
    }
    return true;
}

bool is_cyclic(const Automaton& m) {
    if (!m.is_invertible()) return false;
    auto cs = cyclic_structure(m);
    return cs && cs->generates;
}

Properties properties(const Automaton& m) {
    Properties p;
    p.invertible = m.is_invertible();
    p.reversible = is_reversible(m);
    p.bireversible = p.invertible && p.reversible && is_reversible(inverse(m));
    p.cyclic = is_cyclic(m);
    p.cocyclic = is_cyclic(dual(m));
    return p;
}

Automaton dual(const Automaton& m) {
    const std::size_t nq = m.num_states(), na = m.alphabet_size();
    // Dual states are the letters, dual letters are the states.
    std::vector<StateId> transition(na * nq);
    std::vector<LetterId> output(na * nq);
    for (LetterId x = 0; x < na; ++x)
        for (StateId q = 0; q < nq; ++q) {
            output[x * nq + q] = m.next(q, x);
            transition[x * nq + q] = m.out(q, x);
        }
    return Automaton(m.alphabet(), m.states(), std::move(transition), std::move(output),
                     m.name().empty() ? std::string{} : "dual(" + m.name() + ")");
}

Automaton inverse(const Automaton& m) {
    if (!m.is_invertible()) throw PreconditionError("inverse of a non-invertible automaton");
    const std::size_t nq = m.num_states(), na = m.alphabet_size();
    std::vector<std::string> names;
    names.reserve(nq);
    for (const auto& s : m.states()) names.push_back(s + "'");
    std::vector<StateId> transition(nq * na);
    std::vector<LetterId> output(nq * na);
    for (StateId q = 0; q < nq; ++q)
        for (LetterId y = 0; y < na; ++y) {
            const LetterId x = m.out_inverse(q, y);
            output[q * na + y] = x;
            transition[q * na + y] = m.next(q, x);
        }
    return Automaton(std::move(names), m.alphabet(), std::move(transition), std::move(output),
                     m.name().empty() ? std::string{} : m.name() + "^-1");
}

Automaton disjoint_union(const Automaton& a, const Automaton& b) {
    if (a.alphabet() != b.alphabet()) throw PreconditionError("union requires the same alphabet");
    std::vector<std::string> names = a.states();
    std::unordered_set<std::string> used(names.begin(), names.end());
    for (const auto& s : b.states()) {
        std::string candidate = s;
        for (int k = 1; used.count(candidate); ++k) candidate = s + std::to_string(k);
        used.insert(candidate);
        names.push_back(candidate);
    }
    const auto na = a.alphabet_size();
    const auto off = static_cast<StateId>(a.num_states());
    std::vector<StateId> transition(a.transition_table().begin(), a.transition_table().end());
    std::vector<LetterId> output(a.output_table().begin(), a.output_table().end());
    for (StateId q = 0; q < b.num_states(); ++q)
        for (LetterId x = 0; x < na; ++x) {
            transition.push_back(off + b.next(q, x));
            output.push_back(b.out(q, x));
        }
    std::string name;
    if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
    return Automaton(std::move(names), a.alphabet(), std::move(transition), std::move(output), std::move(name));
}

Automaton relabel(const Automaton& m, std::span<const StateId> state_perm, std::span<const LetterId> letter_perm) {
    const std::size_t nq = m.num_states(), na = m.alphabet_size();
    if (state_perm.size() != nq || letter_perm.size() != na) throw PreconditionError("relabel: permutation size mismatch");
    std::vector<StateId> transition(nq * na);
    std::vector<LetterId> output(nq * na);
    for (StateId q = 0; q < nq; ++q)
        for (LetterId x = 0; x < na; ++x) {
            const std::size_t cell = state_perm[q] * na + letter_perm[x];
            transition[cell] = state_perm[m.next(q, x)];
            output[cell] = letter_perm[m.out(q, x)];
        }
    return Automaton(m.states(), m.alphabet(), std::move(transition), std::move(output), m.name());
}

std::pair<Automaton, StateId> product(std::span<const ProductPart> parts) {
    const Automaton* ref = nullptr;
    // One entry per generator, in application order (rightmost generator first).
    struct Factor {
        const Automaton* m;
        bool inverse;
    };
    std::vector<Factor> factors;
    std::vector<StateId> start;
    for (const auto& part : parts) {
        if (!part.automaton) throw PreconditionError("product: null automaton");
        if (!ref) ref = part.automaton;
        if (part.automaton->alphabet() != ref->alphabet()) throw PreconditionError("product: alphabet mismatch");
        for (const auto& g : part.word.letters) {
            if (g.state >= part.automaton->num_states()) throw SymbolError("product: state id out of range");
            if (g.inverse && !part.automaton->is_invertible())
                throw PreconditionError("product: inverse generator of a non-invertible automaton");
        }
    }
    for (auto pit = parts.rbegin(); pit != parts.rend(); ++pit)
        for (auto git = pit->word.letters.rbegin(); git != pit->word.letters.rend(); ++git) {
            factors.push_back({pit->automaton, git->inverse});
            start.push_back(git->state);
        }
    if (!ref) throw PreconditionError("product: no parts");
    const std::size_t na = ref->alphabet_size();

    std::unordered_map<std::vector<StateId>, StateId, WordHash> index;
    std::vector<std::vector<StateId>> tuples;
    std::deque<StateId> queue;
    auto intern = [&](std::vector<StateId> t) {
        auto [it, fresh] = index.try_emplace(t, static_cast<StateId>(tuples.size()));
        if (fresh) {
            tuples.push_back(std::move(t));
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(start);

    std::vector<StateId> transition;
    std::vector<LetterId> output;
    while (!queue.empty()) {
        const StateId id = queue.front();
        queue.pop_front();
        if (transition.size() < (id + 1) * na) {
            transition.resize((id + 1) * na);
            output.resize((id + 1) * na);
        }
        for (LetterId x = 0; x < na; ++x) {
            std::vector<StateId> next = tuples[id];
            LetterId y = x;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const auto& f = factors[i];
                if (f.inverse) {
                    const LetterId z = f.m->out_inverse(next[i], y);
                    next[i] = f.m->next(next[i], z);
                    y = z;
                } else {
                    const LetterId z = f.m->out(next[i], y);
                    next[i] = f.m->next(next[i], y);
                    y = z;
                }
            }
            const StateId target = intern(std::move(next));
            transition[id * na + x] = target;
            output[id * na + x] = y;
        }
    }
    transition.resize(tuples.size() * na);
    output.resize(tuples.size() * na);
    std::vector<std::string> names;
    names.reserve(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) names.push_back("p" + std::to_string(i));
    return {Automaton(std::move(names), ref->alphabet(), std::move(transition), std::move(output), "product"), 0};
}

std::vector<StateId> equivalence_classes(const Automaton& m) {
    const std::size_t nq = m.num_states(), na = m.alphabet_size();
    std::vector<StateId> cls(nq, 0);
    // Initial partition by output row.
    {
        std::map<std::vector<LetterId>, StateId> ids;
        for (StateId q = 0; q < nq; ++q) {
            std::vector<LetterId> row(m.output_table().begin() + q * na, m.output_table().begin() + (q + 1) * na);
            cls[q] = ids.try_emplace(std::move(row), static_cast<StateId>(ids.size())).first->second;
        }
    }
    std::size_t count = std::set<StateId>(cls.begin(), cls.end()).size();
    for (;;) {
        std::map<std::vector<StateId>, StateId> ids;
        std::vector<StateId> refined(nq);
        for (StateId q = 0; q < nq; ++q) {
            std::vector<StateId> sig;
            sig.reserve(na + 1);
            sig.push_back(cls[q]);
            for (LetterId x = 0; x < na; ++x) sig.push_back(cls[m.next(q, x)]);
            refined[q] = ids.try_emplace(std::move(sig), static_cast<StateId>(ids.size())).first->second;
        }
        cls.swap(refined);
        if (ids.size() == count) break;
        count = ids.size();
    }
    // Renumber by first member.
    std::vector<StateId> renumber(nq, static_cast<StateId>(-1));
    StateId next_id = 0;
    for (StateId q = 0; q < nq; ++q)
        if (renumber[cls[q]] == static_cast<StateId>(-1)) renumber[cls[q]] = next_id++;
    for (auto& c : cls) c = renumber[c];
    return cls;
}

Automaton minimize(const Automaton& m) {
    const auto cls = equivalence_classes(m);
    const std::size_t na = m.alphabet_size();
    const std::size_t k = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<std::string> names(k);
    std::vector<StateId> transition(k * na);
    std::vector<LetterId> output(k * na);
    std::vector<bool> done(k, false);
    for (StateId q = 0; q < m.num_states(); ++q) {
        const StateId c = cls[q];
        if (done[c]) continue;
        done[c] = true;
        names[c] = m.state_name(q);
        for (LetterId x = 0; x < na; ++x) {
            transition[c * na + x] = cls[m.next(q, x)];
            output[c * na + x] = m.out(q, x);
        }
    }
    return Automaton(std::move(names), m.alphabet(), std::move(transition), std::move(output), m.name());
}

std::pair<Automaton, std::vector<StateId>> reachable_part(const Automaton& m, StateId from) {
    const std::size_t na = m.alphabet_size();
    std::vector<StateId> order{from};
    std::vector<StateId> pos(m.num_states(), static_cast<StateId>(-1));
    pos[from] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (LetterId x = 0; x < na; ++x) {
            const StateId r = m.next(order[i], x);
            if (pos[r] == static_cast<StateId>(-1)) {
                pos[r] = static_cast<StateId>(order.size());
                order.push_back(r);
            }
        }
    std::vector<std::string> names;
    std::vector<StateId> transition;
    std::vector<LetterId> output;
    for (StateId q : order) {
        names.push_back(m.state_name(q));
        for (LetterId x = 0; x < na; ++x) {
            transition.push_back(pos[m.next(q, x)]);
            output.push_back(m.out(q, x));
        }
    }
    return {Automaton(std::move(names), m.alphabet(), std::move(transition), std::move(output), m.name()),
            std::move(order)};
}

} // namespace mealy
