#include "mealy/schreier.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "mealy/action.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"
#include "mealy/series.hpp"

namespace mealy {

SchreierGraph SchreierGraph::build(const Automaton& m, std::size_t n, std::uint64_t cap) {
    if (!m.is_invertible()) throw PreconditionError("Schreier graphs need an invertible automaton");
    SchreierGraph g;
    g.automaton_ = std::make_shared<const Automaton>(m);
    g.level_ = n;
    g.vertices_ = level_size(m, n, cap);
    g.edges_ = level_maps(m, n, cap);
    for (const auto& e : g.edges_) g.reverse_.push_back(invert_map(e));
    return g;
}

std::vector<std::uint32_t> distances(const SchreierGraph& g, std::uint64_t source, bool directed) {
    if (source >= g.vertex_count()) throw PreconditionError("source vertex out of range");
    std::vector<std::uint32_t> dist(g.vertex_count(), unreachable);
    std::vector<std::uint32_t> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto v = queue[head];
        const auto d = dist[v] + 1;
        for (StateId q = 0; q < g.degree(); ++q) {
            const auto w = g.edges(q)[v];
            if (dist[w] == unreachable) dist[w] = d, queue.push_back(w);
            if (!directed) {
                const auto u = g.reverse_edges(q)[v];
                if (dist[u] == unreachable) dist[u] = d, queue.push_back(u);
            }
        }
    }
    return dist;
}

std::uint32_t eccentricity(const SchreierGraph& g, std::uint64_t source) {
    const auto d = distances(g, source);
    return *std::max_element(d.begin(), d.end());
}

DiameterResult diameter(const SchreierGraph& g, DiameterMode mode, const DiameterOptions& options) {
    DiameterResult res;
    res.level = g.level();
    res.vertices = g.vertex_count();
    const auto nv = g.vertex_count();
    if (mode == DiameterMode::exact) {
        if (nv > options.exact_cap)
            throw CapacityError("exact diameter is limited to " + std::to_string(options.exact_cap) + " vertices");
        const unsigned jobs = std::max(1u, options.jobs);
        std::atomic<std::uint64_t> next{0};
        std::vector<std::uint32_t> best(jobs, 0);
        auto work = [&](unsigned j) {
            for (std::uint64_t s; (s = next++) < nv;) best[j] = std::max(best[j], eccentricity(g, s));
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
            for (auto& t : pool) t.join();
        }
        res.lower = res.upper = *std::max_element(best.begin(), best.end());
        res.exact = true;
        return res;
    }
    const auto na = g.automaton().alphabet_size();
    const LetterId x = options.hub.value_or(static_cast<LetterId>(na - 1));
    const auto hub = word_index(LetterWord::repeat(x, g.level()), na);
    const auto hub_ecc = eccentricity(g, hub);
    res.lower = hub_ecc;
    res.upper = hub_ecc == unreachable ? unreachable : 2 * hub_ecc;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, nv - 1);
    for (std::size_t i = 0; i < options.samples && res.lower != unreachable; ++i)
        res.lower = std::max(res.lower, eccentricity(g, pick(rng)));
    if (res.upper != unreachable) res.upper = static_cast<std::uint32_t>(std::min<std::uint64_t>(res.upper, nv - 1));
    if (res.lower == res.upper) res.exact = true;
    return res;
}

void write_diameter_csv(std::ostream& out, std::span<const DiameterResult> rows) {
    out << "n,vertices,diam_lower,diam_upper,exact_flag\n";
    auto show = [](std::uint32_t v) { return v == unreachable ? std::string("inf") : std::to_string(v); };
    for (const auto& r : rows)
        out << r.level << ',' << r.vertices << ',' << show(r.lower) << ',' << show(r.upper) << ','
            << (r.exact ? 1 : 0) << '\n';
}

std::string to_dot(const SchreierGraph& g) {
    const Automaton& m = g.automaton();
    std::string out = "digraph \"" + m.name() + "_" + std::to_string(g.level()) + "\" {\n";
    auto label = [&](std::uint64_t v) {
        std::string s = format(m, index_word(v, g.level(), m.alphabet_size()));
        return s.empty() ? std::string("e") : s;
    };
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) out += "  v" + std::to_string(v) + " [label=\"" + label(v) + "\"];\n";
    for (StateId q = 0; q < g.degree(); ++q)
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
            out += "  v" + std::to_string(v) + " -> v" + std::to_string(g.edges(q)[v]) + " [label=\"" +
                   m.state_name(q) + "\"];\n";
    out += "}\n";
    return out;
}

namespace {

/// Words of length L packed as base-|A| integers (first letter least significant).
class PackedLevel {
public:
    PackedLevel(const Automaton& m, std::size_t length) : m_(m), length_(length), base_(m.alphabet_size()) {
        unsigned __int128 size = 1;
        for (std::size_t i = 0; i < length; ++i) {
            size *= base_;
            if (size > std::numeric_limits<std::uint64_t>::max())
                throw CapacityError("words of length " + std::to_string(length) + " do not fit in 64 bits");
        }
    }

    std::uint64_t constant(LetterId x) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < length_; ++i) v = v * base_ + x;
        return v;
    }

    std::uint64_t apply(Generator g, std::uint64_t v) const {
        std::uint64_t out = 0, pw = 1;
        StateId q = g.state;
        for (std::size_t i = 0; i < length_; ++i) {
            const auto x = static_cast<LetterId>(v % base_);
            v /= base_;
            LetterId y;
            if (g.inverse) {
                y = m_.out_inverse(q, x);
                q = m_.next(q, y);
            } else {
                y = m_.out(q, x);
                q = m_.next(q, x);
            }
            out += y * pw;
            pw *= base_;
        }
        return out;
    }

    std::vector<Generator> generators() const {
        std::vector<Generator> gens;
        for (StateId q = 0; q < m_.num_states(); ++q) {
            gens.push_back({q, false});
            gens.push_back({q, true});
        }
        return gens;
    }

private:
    const Automaton& m_;
    std::size_t length_;
    std::uint64_t base_;
};

} // namespace

std::uint64_t ball_size(const Automaton& m, LetterId x, std::size_t radius, std::size_t depth, std::uint64_t cap) {
    if (!m.is_invertible()) throw PreconditionError("ball growth needs an invertible automaton");
    if (x >= m.alphabet_size()) throw SymbolError("letter id out of range");
    PackedLevel level(m, depth);
    const auto gens = level.generators();
    std::unordered_set<std::uint64_t> seen{level.constant(x)};
    std::vector<std::uint64_t> frontier{level.constant(x)};
    for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
        std::vector<std::uint64_t> next;
        for (auto v : frontier)
            for (const auto& g : gens) {
                const auto w = level.apply(g, v);
                if (seen.insert(w).second) {
                    if (seen.size() > cap) throw CapacityError("ball exceeded the vertex cap");
                    next.push_back(w);
                }
            }
        frontier.swap(next);
    }
    return seen.size();
}

GroupWord find_level_witness(const Automaton& m, LetterId x, std::size_t n, std::size_t budget, std::size_t buffer) {
    if (!m.is_invertible()) throw PreconditionError("witness search needs an invertible automaton");
    if (x >= m.alphabet_size()) throw SymbolError("letter id out of range");
    const std::size_t depth = n + buffer;
    PackedLevel level(m, depth);
    std::uint64_t prefix_mod = 1;
    for (std::size_t i = 0; i < n; ++i) prefix_mod *= m.alphabet_size();
    const auto gens = level.generators();
    const auto root = level.constant(x);

    struct Parent {
        std::uint64_t from;
        Generator gen;
    };
    std::unordered_map<std::uint64_t, Parent> parent{{root, {root, {}}}};
    std::unordered_map<std::uint64_t, std::uint64_t> by_prefix{{root % prefix_mod, root}};
    auto path = [&](std::uint64_t v) {
        GroupWord w;
        while (v != root) {
            const auto& p = parent.at(v);
            w.letters.push_back(p.gen);
            v = p.from;
        }
        return w;
    };
    const LetterWord xn = LetterWord::repeat(x, n);
    const auto xinf = EventuallyPeriodicWord::constant(x);
    std::vector<std::uint64_t> frontier{root};
    constexpr std::size_t vertex_cap = std::size_t{1} << 22;
    for (std::size_t r = 0; r < budget && !frontier.empty(); ++r) {
        std::vector<std::uint64_t> next;
        for (auto v : frontier)
            for (const auto& g : gens) {
                const auto w = level.apply(g, v);
                if (!parent.try_emplace(w, Parent{v, g}).second) continue;
                next.push_back(w);
                auto [it, fresh] = by_prefix.try_emplace(w % prefix_mod, w);
                if (fresh) continue;
                auto u = (path(it->second).inverse() * path(w)).reduced();
                if (u.empty() || act(m, u, xn) != xn || act_inf(m, u, xinf) == xinf) continue;
                return u;
            }
        if (parent.size() > vertex_cap) break;
        frontier.swap(next);
    }
    throw NotFoundError("no level-" + std::to_string(n) + " witness within radius " + std::to_string(budget));
}

Steerer::Steerer(const Automaton& m, LetterId x, std::size_t buffer, std::size_t witness_budget)
    : m_(m), x_(x), buffer_(buffer), budget_(witness_budget) {
    if (x >= m.alphabet_size()) throw SymbolError("letter id out of range");
    if (!m.is_invertible()) throw PreconditionError("steering needs an invertible automaton");
    if (!cyclic_structure(m)) throw PreconditionError("steering needs outputs that are powers of one full cycle");
    if (!is_prime(m.alphabet_size())) throw PreconditionError("steering needs a prime alphabet size");
}

const GroupWord& Steerer::level_element(std::size_t i) {
    if (cache_.size() <= i) cache_.resize(i + 1);
    if (cache_[i]) return *cache_[i];
    const auto budget = budget_ ? budget_ : std::max<std::size_t>(1, i);
    auto u = find_level_witness(m_, x_, i, budget, buffer_);
    const auto image = act_inf(m_, u, EventuallyPeriodicWord::constant(x_));
    std::size_t k = i;
    while (image.at(k) == x_) ++k;
    // u fixes x^k and moves letter k; its section at x^{k-i} fixes x^i and moves letter i.
    auto v = section(m_, u, LetterWord::repeat(x_, k - i)).reduced();
    cache_[i] = std::move(v);
    return *cache_[i];
}

GroupWord Steerer::steer(const LetterWord& s) {
    LetterWord cur = s;
    GroupWord w;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t t = 0; cur[i] != x_; ++t) {
            if (t + 1 >= m_.alphabet_size()) throw Error("level element does not cycle the letter");
            const auto& g = level_element(i);
            cur = act(m_, g, cur);
            w = g * w;
        }
    }
    w = w.reduced();
    if (act(m_, w, s) != LetterWord::repeat(x_, s.size())) throw Error("steering postcondition failed");
    return w;
}

GroupWord steer_to(const Automaton& m, LetterId x, const LetterWord& s) { return Steerer(m, x).steer(s); }

std::vector<LiftRule> lift_rules(const Automaton& m) {
    std::vector<LiftRule> rules(m.num_states());
    for (StateId r = 0; r < m.num_states(); ++r) {
        rules[r].edge = r;
        rules[r].lifts.assign(m.alphabet_size(), {});
    }
    for (StateId q = 0; q < m.num_states(); ++q)
        for (LetterId e = 0; e < m.alphabet_size(); ++e) rules[m.next(q, e)].lifts[e].push_back(q);
    for (auto& rule : rules) {
        bool straight = true, crossed = true;
        for (LetterId e = 0; e < m.alphabet_size(); ++e)
            for (auto q : rule.lifts[e]) (m.out(q, e) == e ? crossed : straight) = false;
        rule.kind = straight ? "straight" : crossed ? "crossed" : "mixed";
    }
    return rules;
}

std::string format_rule(const Automaton& m, const LiftRule& rule) {
    std::string out = m.state_name(rule.edge) + " => " + rule.kind + " ";
    for (std::size_t e = 0; e < rule.lifts.size(); ++e) {
        if (e) out += ",";
        const auto& l = rule.lifts[e];
        if (l.size() == 1) {
            out += m.state_name(l[0]);
            continue;
        }
        out += "{";
        for (std::size_t i = 0; i < l.size(); ++i) out += (i ? " " : "") + m.state_name(l[i]);
        out += "}";
    }
    return out;
}

LiftReport verify_lift(const Automaton& m, std::size_t n) {
    LiftReport rep;
    rep.rules = lift_rules(m);
    const auto na = m.alphabet_size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto base = level_maps(m, k);
        const auto size = level_size(m, k + 1);
        // Gamma_{k+1} lifted from Gamma_k using only the rules.
        std::vector<LevelMap> lifted(m.num_states(), LevelMap(size, 0));
        for (const auto& rule : rep.rules)
            for (LetterId e = 0; e < na; ++e)
                for (auto q : rule.lifts[e])
                    for (std::uint64_t v = 0; v < base[rule.edge].size(); ++v)
                        lifted[q][e + na * v] = static_cast<std::uint32_t>(m.out(q, e) + na * base[rule.edge][v]);
        for (std::uint64_t v = 0; v < size; ++v) {
            const auto s = index_word(v, k + 1, na);
            for (StateId q = 0; q < m.num_states(); ++q) {
                const auto t = act(m, GroupWord::single(q), s);
                const auto ti = word_index(t, na);
                const LetterId e = s[0];
                const bool projects =
                    t[0] == m.out(q, e) && ti / na == base[m.next(q, e)][v / na];
                if (!projects || lifted[q][v] != ti) {
                    rep.holds = false;
                    rep.counterexample = "level " + std::to_string(k + 1) + ": " + format(m, s) + " -" +
                                         m.state_name(q) + "-> " + format(m, t);
                    rep.levels_checked = k;
                    return rep;
                }
            }
        }
        rep.levels_checked = k + 1;
    }
    return rep;
}

} // namespace mealy
