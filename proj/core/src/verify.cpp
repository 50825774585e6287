#include "mealy/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "mealy/action.hpp"
#include "mealy/builtins.hpp"
#include "mealy/error.hpp"
#include "mealy/levels.hpp"
#include "mealy/transitivity.hpp"

namespace mealy {

namespace {

constexpr StateId st_a = 0, st_b = 1, st_c = 2;

/// phi_x(arrow w) = y phi_y(w): up moves a->b->c->a, down the other way.
StateId phi_letter(StateId x, Arrow d) { return d == Arrow::up ? (x + 1) % 3 : (x + 2) % 3; }

std::optional<Arrow> phi_arrow(StateId x, StateId y) {
    if (y == (x + 1) % 3) return Arrow::up;
    if (y == (x + 2) % 3) return Arrow::down;
    return std::nullopt;
}

std::string triple_name(StateId x, LetterId d, StateId y) {
    const char* n = "abc";
    return std::string{n[x]} + std::to_string(d) + n[y];
}

struct Triple {
    StateId x;
    LetterId d;
    StateId y;
};

Triple parse_triple(std::string_view s) {
    return {static_cast<StateId>(s[0] - 'a'), static_cast<LetterId>(s[1] - '0'), static_cast<StateId>(s[2] - 'a')};
}

struct WreathRow {
    const char* state;
    bool swap;
    const char* up;
    const char* down;
};

// sigma~_{x,d,y} = pi(section at up, section at down).
constexpr std::array<WreathRow, 6> wreath_rows{{
    {"b1b", true, "a0c", "c1a"},
    {"a0c", false, "b0a", "c0b"},
    {"c1a", true, "b1b", "a0c"},
    {"b0a", false, "c0b", "a1c"},
    {"c0b", false, "a1c", "b0a"},
    {"a1c", true, "c1a", "b1b"},
}};

RWord rword_of(std::uint64_t idx, std::size_t n) {
    RWord w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Arrow>((idx >> i) & 1);
    return w;
}

std::uint64_t rword_index(const RWord& w) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < w.size(); ++i) idx |= static_cast<std::uint64_t>(w[i]) << i;
    return idx;
}

std::uint32_t parity(const std::vector<std::uint64_t>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return static_cast<std::uint32_t>((perm.size() - cycles) & 1);
}

} // namespace

RWord parse_rword(std::string_view text) {
    RWord w;
    for (char ch : text) {
        if (ch == '^' || ch == 'u') w.push_back(Arrow::up);
        else if (ch == 'v' || ch == 'd') w.push_back(Arrow::down);
        else if (ch != ' ') throw ParseError(std::string("bad arrow '") + ch + "'");
    }
    return w;
}

std::string format_rword(const RWord& w) {
    std::string s;
    for (auto d : w) s += d == Arrow::up ? '^' : 'v';
    return s;
}

std::vector<StateId> phi(StateId x, const RWord& w) {
    if (x > 2) throw SymbolError("phi needs a state of {a, b, c}");
    std::vector<StateId> out;
    out.reserve(w.size());
    for (auto d : w) out.push_back(x = phi_letter(x, d));
    return out;
}

std::optional<RWord> phi_inverse(StateId x, const std::vector<StateId>& v) {
    RWord out;
    out.reserve(v.size());
    for (auto y : v) {
        auto d = phi_arrow(x, y);
        if (!d) return std::nullopt;
        out.push_back(*d);
        x = y;
    }
    return out;
}

std::optional<RWord> conjugated_action(StateId x, LetterId d, StateId y, const RWord& w) {
    static const Automaton b = bellaterra();
    auto v = phi(y, w);
    // the dual automaton in state d reads the letters of v in order
    for (auto& q : v) {
        const StateId r = b.next(q, d);
        d = b.out(q, d);
        q = r;
    }
    return phi_inverse(x, v);
}

Automaton wreath_automaton() {
    const Automaton b = bellaterra();
    std::vector<Triple> states{{st_b, 1, st_b}};
    std::vector<std::string> names{triple_name(st_b, 1, st_b)};
    std::vector<StateId> next;
    std::vector<LetterId> out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [x, d, y] = states[i];
        for (Arrow a : {Arrow::up, Arrow::down}) {
            const StateId z = phi_letter(y, a);
            const StateId z2 = b.next(z, d);
            const LetterId d2 = b.out(z, d);
            auto a2 = phi_arrow(x, z2);
            if (!a2) throw Error("sigma~_" + names[i] + " is not defined on phi_" + names[i].substr(2, 1));
            const auto name = triple_name(z2, d2, z);
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) {
                names.push_back(name);
                states.push_back({z2, d2, z});
                it = names.end() - 1;
            }
            next.push_back(static_cast<StateId>(it - names.begin()));
            out.push_back(static_cast<LetterId>(*a2));
        }
    }
    return Automaton(std::move(names), {"^", "v"}, std::move(next), std::move(out), "bellaterra-wreath");
}

CheckResult wreath_table_check(std::size_t n) {
    if (n > 24) throw CapacityError("wreath_table_check: n <= 24");
    std::uint64_t checked = 0;
    for (const auto& row : wreath_rows) {
        const Triple g = parse_triple(row.state), up = parse_triple(row.up), down = parse_triple(row.down);
        for (std::size_t k = 1; k <= n; ++k)
            for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx) {
                const RWord w = rword_of(idx, k);
                auto lhs = conjugated_action(g.x, g.d, g.y, w);
                if (!lhs) return {false, std::string("sigma~_") + row.state + " undefined at " + format_rword(w)};
                const Triple& s = w[0] == Arrow::up ? up : down;
                auto tail = conjugated_action(s.x, s.d, s.y, RWord(w.begin() + 1, w.end()));
                if (!tail) return {false, std::string("section of ") + row.state + " undefined at " + format_rword(w)};
                RWord rhs{row.swap ? static_cast<Arrow>(1 - static_cast<int>(w[0])) : w[0]};
                rhs.insert(rhs.end(), tail->begin(), tail->end());
                if (*lhs != rhs)
                    return {false, std::string(row.state) + " fails at " + format_rword(w) + ": " + format_rword(*lhs) +
                                       " vs " + format_rword(rhs)};
                ++checked;
            }
    }
    // the mechanically derived automaton has the same table
    const Automaton wa = wreath_automaton();
    if (wa.num_states() != wreath_rows.size()) return {false, "derived automaton has a different state set"};
    for (const auto& row : wreath_rows) {
        const auto q = wa.state_id(row.state);
        if ((wa.out(q, 0) == 1) != row.swap || wa.state_name(wa.next(q, 0)) != row.up ||
            wa.state_name(wa.next(q, 1)) != row.down)
            return {false, std::string("derived row of ") + row.state + " differs"};
    }
    return {true, std::to_string(checked) + " words"};
}

std::map<std::string, RationalSeries> f_solution() {
    const Automaton wa = wreath_automaton();
    std::map<std::string, RationalSeries> out;
    for (StateId q = 0; q < wa.num_states(); ++q) out.emplace(wa.state_name(q), char_rational(wa, q));
    return out;
}

std::vector<std::uint32_t> direct_sign_coefficients(StateId x, LetterId d, StateId y, std::size_t max_level) {
    if (max_level > 24) throw CapacityError("direct_sign_coefficients: level <= 24");
    std::vector<std::uint32_t> out;
    for (std::size_t k = 1; k <= max_level; ++k) {
        std::vector<std::uint64_t> perm(std::uint64_t{1} << k);
        for (std::uint64_t idx = 0; idx < perm.size(); ++idx) {
            auto img = conjugated_action(x, d, y, rword_of(idx, k));
            if (!img) throw PreconditionError("conjugated action undefined on level " + std::to_string(k));
            perm[idx] = rword_index(*img);
        }
        out.push_back(parity(perm));
    }
    return out;
}

ReducedOrbitReport lemma_transitive_check(std::size_t n) {
    if (n > 30) throw CapacityError("lemma_transitive_check: n <= 30");
    if (n == 0) return {true, 1, 1};
    const Automaton b = bellaterra();
    // alternate c and a, rightmost letter a
    std::vector<std::uint8_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = ((n - 1 - i) % 2 == 0) ? st_a : st_c;
    const auto start = w;
    auto in_set = [&](const std::vector<std::uint8_t>& v) {
        if (v.back() == st_b) return false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1]) return false;
        return true;
    };
    ReducedOrbitReport r;
    // reduced words ending in a or c: 2 choices for the last letter, 2 for each other
    r.set_size = std::uint64_t{1} << n;
    const std::uint64_t limit = r.set_size + 1;
    do {
        if (!in_set(w)) return r;
        ++r.orbit_size;
        LetterId x = 1;
        for (std::size_t i = n; i-- > 0;) {
            const StateId q = w[i];
            w[i] = static_cast<std::uint8_t>(b.next(q, x));
            x = b.out(q, x);
        }
    } while (w != start && r.orbit_size < limit);
    r.holds = w == start && r.orbit_size == r.set_size;
    return r;
}

AleshinRelationReport aleshin_relation_check(std::size_t n, std::size_t path_samples, std::uint64_t seed) {
    if (n == 0) throw PreconditionError("aleshin_relation_check: n >= 1");
    const auto ma = level_maps(aleshin(), n);
    const auto mb = level_maps(bellaterra(), n);
    AleshinRelationReport r;
    const std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<StateId> pi{0, 1, 2};
    do {
        bool ok = true;
        for (StateId q = 0; q < 3 && ok; ++q)
            for (std::size_t v = 0; v < ma[q].size() && ok; ++v) ok = ma[q][v] == (mb[pi[q]][v] ^ mask);
        if (ok) r.all_pairings.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    if (r.all_pairings.empty()) {
        r.detail = "no pairing on level " + std::to_string(n);
        return r;
    }
    r.pairing = r.all_pairings.front();

    // sigma~_{A,q}^-1 sigma~_{A,r} = sigma~_{B,pi q} sigma~_{B,pi r}
    std::vector<LevelMap> ia;
    for (const auto& f : ma) ia.push_back(invert_map(f));
    r.difference_identity = true;
    for (StateId q = 0; q < 3 && r.difference_identity; ++q)
        for (StateId s = 0; s < 3 && r.difference_identity; ++s)
            for (std::size_t v = 0; v < ma[q].size(); ++v)
                if (ia[q][ma[s][v]] != mb[r.pairing[q]][mb[r.pairing[s]][v]]) {
                    r.difference_identity = false;
                    r.detail = "identity fails for pair " + std::to_string(q) + "," + std::to_string(s);
                    break;
                }

    // an even walk in the Bellaterra graph, read two edges at a time, is a
    // walk of the same length in the Aleshin graph
    std::vector<StateId> inv_pi(3);
    for (StateId q = 0; q < 3; ++q) inv_pi[r.pairing[q]] = q;
    std::mt19937_64 rng(seed);
    r.even_paths = true;
    for (std::size_t s = 0; s < path_samples && r.even_paths; ++s) {
        const std::size_t len = 2 * (1 + rng() % 16);
        std::uint32_t vb = static_cast<std::uint32_t>(rng() % ma[0].size()), va = vb;
        for (std::size_t i = 0; i < len; i += 2) {
            const StateId q1 = rng() % 3, q2 = rng() % 3;
            vb = mb[q2][mb[q1][vb]];
            va = ia[inv_pi[q2]][ma[inv_pi[q1]][va]];
        }
        if (va != vb) {
            r.even_paths = false;
            r.detail = "even path transfer fails in sample " + std::to_string(s);
        }
    }
    r.holds = r.difference_identity && r.even_paths;
    if (r.holds) r.detail = std::to_string(r.all_pairings.size()) + " pairing(s) on level " + std::to_string(n);
    return r;
}

namespace {

constexpr LetterId digit_id(int d) { return static_cast<LetterId>(d + 1); }
constexpr int id_digit(LetterId x) { return static_cast<int>(x) - 1; }

} // namespace

EventuallyPeriodicWord balanced_ternary(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den % 3 == 0) throw PreconditionError("balanced_ternary: denominator divisible by 3");
    const int den_mod = static_cast<int>(den % 3); // its own inverse mod 3
    std::map<BigInt, std::size_t> seen;
    std::vector<LetterId> digits;
    while (true) {
        auto [it, fresh] = seen.try_emplace(num, digits.size());
        if (!fresh) {
            const auto j = static_cast<std::ptrdiff_t>(it->second);
            return EventuallyPeriodicWord(LetterWord(std::vector<LetterId>(digits.begin(), digits.begin() + j)),
                                          LetterWord(std::vector<LetterId>(digits.begin() + j, digits.end())));
        }
        int r = static_cast<int>(((num % 3) * den_mod) % 3);
        if (r < 0) r += 3;
        const int d = r == 2 ? -1 : r;
        digits.push_back(digit_id(d));
        num = (num - d * den) / 3;
    }
}

Rational balanced_ternary_value(const EventuallyPeriodicWord& w) {
    auto value_of = [](const LetterWord& s) {
        BigInt v = 0, p = 1;
        for (auto x : s.letters) {
            if (x > 2) throw SymbolError("balanced ternary letter out of range");
            v += id_digit(x) * p;
            p *= 3;
        }
        return std::pair{v, p};
    };
    const auto [pre, scale] = value_of(w.preperiod());
    const auto [per, period_scale] = value_of(w.period());
    return Rational(pre) - Rational(scale * per, period_scale - 1); // period sums to per / (1 - 3^L)
}

EventuallyPeriodicWord alpha(const EventuallyPeriodicWord& w) {
    return balanced_ternary((balanced_ternary_value(w) - 1) / 2);
}

EventuallyPeriodicWord alpha_inverse(const EventuallyPeriodicWord& w) {
    return balanced_ternary(2 * balanced_ternary_value(w) + 1);
}

GrowthReport preperiod_growth(std::size_t n_max, std::size_t adding_max) {
    if (n_max > 10000 || adding_max > 1000000) throw CapacityError("preperiod_growth: n_max <= 10^4");
    GrowthReport r;
    // alpha^{-n}(c^inf) is the integer 2^n - 1; iterate on the value directly
    Rational v = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        r.alpha_h.push_back(balanced_ternary(v).preperiod_length());
        v = 2 * v + 1;
    }
    if (n_max >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double cnt = static_cast<double>(n_max);
        for (std::size_t n = 1; n <= n_max; ++n) {
            const double x = static_cast<double>(n), y = static_cast<double>(r.alpha_h[n]);
            sx += x, sy += y, sxx += x * x, sxy += x * y;
        }
        r.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        r.intercept = (sy - r.slope * sx) / cnt;
    }

    const Automaton add = adding_machine();
    const GroupWord rho = GroupWord::single(add.state_id("r"));
    auto e = EventuallyPeriodicWord::constant(add.letter_id("0"));
    r.adding_logarithmic = true;
    for (std::size_t n = 0; n <= adding_max; ++n) {
        const std::size_t h = e.preperiod_length();
        r.adding_h.push_back(h);
        const auto bound = static_cast<std::size_t>(std::bit_width(n)) + 2; // bit_width(n) = ceil(log2(n + 1))
        if (h > bound) r.adding_logarithmic = false;
        e = act_inf(add, rho, e);
    }
    return r;
}

} // namespace mealy
