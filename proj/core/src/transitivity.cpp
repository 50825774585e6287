#include "mealy/transitivity.hpp"

#include <map>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "mealy/action.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"

namespace mealy {

namespace {

CyclicStructure require_cycle(const Automaton& m) {
    auto cs = cyclic_structure(m);
    if (!cs) throw PreconditionError("automaton has no reference cycle: its outputs are not powers of one full cycle");
    return *cs;
}

/// States reachable from q, q first.
std::vector<StateId> reachable_from(const Automaton& m, StateId q) {
    std::vector<StateId> order{q};
    std::vector<char> seen(m.num_states(), 0);
    seen[q] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (LetterId x = 0; x < m.alphabet_size(); ++x) {
            const auto r = m.next(order[i], x);
            if (!seen[r]) {
                seen[r] = 1;
                order.push_back(r);
            }
        }
    return order;
}

} // namespace

LevelMap level_permutation(const Automaton& m, const GroupWord& w, std::size_t n, std::uint64_t cap) {
    for (const auto& g : w.letters) {
        if (g.state >= m.num_states()) throw SymbolError("state id out of range");
        if (g.inverse && !m.is_invertible()) throw PreconditionError("inverse generators need an invertible automaton");
    }
    const auto size = level_size(m, n, cap);
    LevelMap result(size);
    std::iota(result.begin(), result.end(), 0u);
    if (w.empty()) return result;
    auto maps = level_maps(m, n, cap);
    std::map<StateId, LevelMap> inverses;
    for (std::size_t i = w.size(); i-- > 0;) {
        const auto& g = w.letters[i];
        const LevelMap* f = &maps[g.state];
        if (g.inverse) {
            auto it = inverses.find(g.state);
            if (it == inverses.end()) it = inverses.emplace(g.state, invert_map(maps[g.state])).first;
            f = &it->second;
        }
        for (auto& v : result) v = (*f)[v];
    }
    return result;
}

WordPredicate reduced_words(std::vector<LetterId> first) {
    return [first = std::move(first)](const LetterWord& s) {
        if (s.empty()) return true;
        if (std::find(first.begin(), first.end(), s[0]) == first.end()) return false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == s[i - 1]) return false;
        return true;
    };
}

std::uint64_t OrbitReport::max_orbit() const {
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

OrbitReport orbits_on_level(const Automaton& m, const GroupWord& w, std::size_t n, const WordPredicate& subset,
                            std::uint64_t cap) {
    const auto perm = level_permutation(m, w, n, cap);
    const auto na = m.alphabet_size();
    OrbitReport rep;
    rep.level = n;
    std::vector<char> seen(perm.size(), 0);
    for (std::uint64_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        if (subset && !subset(index_word(i, n, na))) continue;
        std::uint64_t size = 0;
        for (std::uint64_t v = i; !seen[v]; v = perm[v]) {
            if (subset && v != i && !subset(index_word(v, n, na)))
                throw PreconditionError("the selected subset is not invariant under the group element");
            seen[v] = 1;
            ++size;
        }
        rep.sizes.push_back(size);
        rep.representatives.push_back(i);
        rep.set_size += size;
    }
    rep.transitive = rep.sizes.size() == 1;
    return rep;
}

void write_orbit_csv(std::ostream& out, std::span<const OrbitReport> reports) {
    out << "level,orbit_count,max_orbit,transitive\n";
    for (const auto& r : reports)
        out << r.level << ',' << r.sizes.size() << ',' << r.max_orbit() << ',' << (r.transitive ? "true" : "false")
            << '\n';
}

std::vector<std::uint32_t> char_coeffs(const Automaton& m, StateId q, std::size_t count) {
    if (q >= m.num_states()) throw SymbolError("state id out of range");
    const auto cs = require_cycle(m);
    const auto mod = cs.modulus;
    std::vector<std::uint32_t> v(cs.exponent.begin(), cs.exponent.end()), next(v.size());
    std::vector<std::uint32_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(v[q] % mod);
        for (StateId r = 0; r < m.num_states(); ++r) {
            std::uint64_t s = 0;
            for (LetterId x = 0; x < m.alphabet_size(); ++x) s += v[m.next(r, x)];
            next[r] = static_cast<std::uint32_t>(s % mod);
        }
        v.swap(next);
    }
    return out;
}

RationalSeries char_rational(const Automaton& m, StateId q) {
    if (q >= m.num_states()) throw SymbolError("state id out of range");
    const auto p = static_cast<std::uint32_t>(m.alphabet_size());
    if (!is_prime(p)) throw PreconditionError("exact rational form needs a prime alphabet size");
    const auto cs = require_cycle(m);
    const auto states = reachable_from(m, q);
    const std::size_t n = states.size();
    std::vector<std::size_t> local(m.num_states(), n);
    for (std::size_t i = 0; i < n; ++i) local[states[i]] = i;

    // (I - tT) chi = k with T[i][j] = #{x : tau_x(i) = j}.
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> counts(n, 0);
        for (LetterId x = 0; x < p; ++x) ++counts[local[m.next(states[i], x)]];
        for (std::size_t j = 0; j < n; ++j) {
            Poly e;
            e.c = {i == j ? 1u : 0u, (p - counts[j] % p) % p};
            a[i][j] = poly::trim(std::move(e));
        }
    }
    auto den = poly::determinant(a, p);
    for (std::size_t i = 0; i < n; ++i) a[i][0] = poly::constant(cs.exponent[states[i]], p);
    auto num = poly::determinant(std::move(a), p);
    return RationalSeries(std::move(num), std::move(den), p);
}

std::optional<std::size_t> first_intransitive_level(const Automaton& m, StateId q, std::uint64_t max_steps) {
    if (q >= m.num_states()) throw SymbolError("state id out of range");
    const auto cs = require_cycle(m);
    const auto mod = cs.modulus;
    if (mod <= 1) return std::nullopt;
    const auto states = reachable_from(m, q);
    const std::size_t n = states.size();
    std::vector<std::size_t> local(m.num_states(), n);
    for (std::size_t i = 0; i < n; ++i) local[states[i]] = i;
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i)
        for (LetterId x = 0; x < m.alphabet_size(); ++x) succ[i].push_back(local[m.next(states[i], x)]);

    using Vec = std::vector<std::uint32_t>;
    Vec v0(n);
    for (std::size_t i = 0; i < n; ++i) v0[i] = cs.exponent[states[i]] % mod;
    auto step = [&](const Vec& v) {
        Vec out(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = 0;
            for (auto j : succ[i]) s += v[j];
            out[i] = static_cast<std::uint32_t>(s % mod);
        }
        return out;
    };
    // The hare visits c_1, c_2, ... in order, so the visit count is the level.
    std::size_t level = 0;
    std::optional<std::size_t> failure;
    auto visit = [&](const Vec& v) {
        ++level;
        if (std::gcd(v[0], mod) != 1) {
            failure = level;
            return false;
        }
        return true;
    };
    CycleShape shape;
    brent(v0, step, visit, max_steps, shape);
    return failure;
}

bool is_transitive_exact(const Automaton& m, StateId q, std::uint64_t max_steps) {
    return !first_intransitive_level(m, q, max_steps).has_value();
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
    }
}

CotransitivityReport cotransitivity(const Automaton& m, std::size_t level_budget) {
    if (!is_reversible(m)) throw PreconditionError("cotransitivity needs a reversible automaton");
    const auto d = dual(m);
    CotransitivityReport rep;
    rep.first_failure.assign(m.alphabet_size(), std::nullopt);
    if (cyclic_structure(d)) {
        rep.exact = true;
        for (LetterId x = 0; x < m.alphabet_size(); ++x) {
            rep.first_failure[x] = first_intransitive_level(d, x);
            if (!rep.first_failure[x] && !rep.witness) rep.witness = x;
        }
    } else {
        for (LetterId x = 0; x < m.alphabet_size(); ++x)
            for (std::size_t n = 1; n <= level_budget; ++n) {
                OrbitReport orb;
                try {
                    orb = orbits_on_level(d, GroupWord::single(x), n);
                } catch (const CapacityError&) {
                    break;
                }
                if (!orb.transitive) {
                    rep.first_failure[x] = n;
                    break;
                }
            }
    }
    if (rep.witness) {
        rep.verdict = Verdict::yes;
    } else if (std::all_of(rep.first_failure.begin(), rep.first_failure.end(), [](const auto& f) { return f.has_value(); })) {
        rep.verdict = Verdict::no;
        std::size_t level = 0;
        for (const auto& f : rep.first_failure) level = std::max(level, *f);
        rep.refutation_level = level;
    } else {
        rep.verdict = Verdict::unknown;
    }
    return rep;
}

bool stabilizes_infinite(const Automaton& m, const GroupWord& w, LetterId x, std::uint64_t max_words) {
    if (x >= m.alphabet_size()) throw SymbolError("letter id out of range");
    std::unordered_set<GroupWord, WordHash> seen;
    GroupWord cur = w;
    const LetterWord xs{x};
    while (seen.insert(cur).second) {
        if (seen.size() > max_words) throw CapacityError("section orbit exceeded its size budget");
        if (act_letter(m, cur, x) != x) return false;
        cur = section(m, cur, xs);
    }
    return true;
}

CycleShape orbit_cycle(const Automaton& m, LetterId x, const StateWord& v, std::uint64_t max_steps) {
    if (x >= m.alphabet_size()) throw SymbolError("letter id out of range");
    const LetterWord xs{x};
    return brent(v, [&](const StateWord& s) { return dual_act(m, s, xs); }, max_steps);
}

} // namespace mealy
