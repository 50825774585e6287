#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mealy/action.hpp"
#include "mealy/builtins.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"
#include "mealy/text_format.hpp"
#include "mealy/transitivity.hpp"

using namespace mealy;

namespace {

// Random automaton whose outputs are powers of the cycle x -> x+1.
Automaton random_cyclic(std::mt19937& rng, std::size_t nq, std::size_t na) {
    std::vector<std::string> states, letters;
    for (std::size_t i = 0; i < nq; ++i) states.push_back("q" + std::to_string(i));
    for (std::size_t i = 0; i < na; ++i) letters.push_back(std::to_string(i));
    std::uniform_int_distribution<std::uint32_t> dq(0, static_cast<std::uint32_t>(nq - 1)),
        da(0, static_cast<std::uint32_t>(na - 1));
    std::vector<StateId> tr(nq * na);
    std::vector<LetterId> out(nq * na);
    for (std::size_t q = 0; q < nq; ++q) {
        const auto k = da(rng);
        for (std::size_t x = 0; x < na; ++x) {
            tr[q * na + x] = dq(rng);
            out[q * na + x] = static_cast<LetterId>((x + k) % na);
        }
    }
    return Automaton(states, letters, tr, out);
}

bool transitive_up_to(const Automaton& m, StateId q, std::size_t levels) {
    for (std::size_t n = 1; n <= levels; ++n)
        if (!orbits_on_level(m, GroupWord::single(q), n).transitive) return false;
    return true;
}

} // namespace

TEST_CASE("level permutations") {
    auto b = bellaterra();
    CHECK(level_permutation(b, GroupWord::single(2), 1) == LevelMap{1, 0});
    CHECK(level_permutation(aleshin(), GroupWord::single(2), 1) == LevelMap{0, 1});
    CHECK(level_permutation(b, GroupWord{}, 5) == level_permutation(b, GroupWord::single(1, false) * GroupWord::single(1), 5));
    auto a = aleshin();
    auto w = parse_group_word(a, "ab'c");
    auto perm = level_permutation(a, w, 7);
    for (std::uint64_t v = 0; v < perm.size(); ++v)
        CHECK(perm[v] == word_index(act(a, w, index_word(v, 7, 2)), 2));
    CHECK_THROWS_AS(level_permutation(b, GroupWord::single(0), 30), CapacityError);
}

TEST_CASE("orbits") {
    auto add = adding_machine();
    auto r = orbits_on_level(add, GroupWord::single(0), 5);
    CHECK(r.transitive);
    CHECK(r.sizes == std::vector<std::uint64_t>{32});
    auto b = bellaterra();
    auto o = orbits_on_level(b, GroupWord::single(0), 1);
    CHECK(o.sizes.size() == 2);
    CHECK_FALSE(o.transitive);

    auto db = dual(b);
    auto ac = reduced_words({b.state_id("a"), b.state_id("c")});
    for (std::size_t n = 1; n <= 8; ++n) {
        auto sub = orbits_on_level(db, GroupWord::single(1), n, ac);
        CHECK(sub.transitive);
        CHECK(sub.set_size == (std::uint64_t{1} << n));
    }

    std::ostringstream csv;
    std::vector<OrbitReport> reps{r, o};
    write_orbit_csv(csv, reps);
    CHECK(csv.str() == "level,orbit_count,max_orbit,transitive\n5,1,32,true\n1,2,1,false\n");
}

TEST_CASE("orbit sizes partition the level") {
    std::mt19937 rng(1);
    for (const auto& m : {bellaterra(), aleshin(), bireversible52(), affine(5, 3)}) {
        for (int t = 0; t < 5; ++t) {
            GroupWord w;
            for (int i = 0; i < 4; ++i)
                w.letters.push_back({static_cast<StateId>(rng() % m.num_states()), rng() % 2 == 0});
            auto rep = orbits_on_level(m, w, 6);
            std::uint64_t total = 0;
            for (auto s : rep.sizes) total += s;
            CHECK(total == level_size(m, 6));
        }
    }
}

TEST_CASE("characteristic series") {
    auto add = adding_machine();
    CHECK(char_coeffs(add, 0, 8) == std::vector<std::uint32_t>(8, 1));
    auto b = bellaterra();
    CHECK(char_coeffs(b, 2, 8) == std::vector<std::uint32_t>{1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(char_coeffs(b, 0, 5) == std::vector<std::uint32_t>{0, 1, 1, 1, 1});

    CHECK(char_rational(add, 0).to_string() == "1/(1 - t)");
    CHECK(char_rational(b, 0).to_string() == "t/(1 - t)");
    CHECK(char_rational(b, 2).to_string() == "1");
    CHECK(char_rational(add, 1).to_string() == "0");
    CHECK_THROWS_AS(char_coeffs(dual(b), 0, 3), PreconditionError);
    CHECK_THROWS_AS(char_rational(affine(3, 4), 0), PreconditionError);

    CHECK(is_transitive_exact(add, 0));
    CHECK_FALSE(is_transitive_exact(b, 0));
    CHECK_FALSE(is_transitive_exact(b, 2));
    CHECK(first_intransitive_level(b, 0) == 1u);
    CHECK(first_intransitive_level(b, 2) == 2u);
}

TEST_CASE("rational form matches the recursion") {
    std::vector<Automaton> ms{adding_machine(), bellaterra(), aleshin(), division_by_three(), affine(2, 3),
                              affine(4, 5), bireversible52()};
    std::mt19937 rng(2);
    for (int t = 0; t < 40; ++t) ms.push_back(random_cyclic(rng, 1 + t % 5, t % 2 ? 2 : 3));
    for (const auto& m : ms) {
        if (!cyclic_structure(m)) continue;
        for (StateId q = 0; q < m.num_states(); ++q) CHECK(char_rational(m, q).expand(200) == char_coeffs(m, q, 200));
    }
}

TEST_CASE("exact transitivity agrees with brute-force orbits") {
    std::mt19937 rng(4);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t nq = 1 + t % 3, na = 2 + (t / 3) % 2;
        auto m = random_cyclic(rng, nq, na);
        const std::size_t levels = na == 2 ? 12 : 8;
        for (StateId q = 0; q < nq; ++q) {
            CHECK(is_transitive_exact(m, q) == transitive_up_to(m, q, levels));
            ++checked;
        }
    }
    CHECK(checked > 500);
    CHECK(transitive_up_to(affine(3, 2), 1, 10) == is_transitive_exact(affine(3, 2), 1));
}

TEST_CASE("first intransitive level matches orbits") {
    std::mt19937 rng(8);
    for (int t = 0; t < 100; ++t) {
        auto m = random_cyclic(rng, 3, 2);
        for (StateId q = 0; q < 3; ++q) {
            auto f = first_intransitive_level(m, q);
            for (std::size_t n = 1; n <= 10; ++n)
                CHECK(orbits_on_level(m, GroupWord::single(q), n).transitive == (!f || *f > n));
        }
    }
}

TEST_CASE("cotransitivity") {
    auto b = cotransitivity(bellaterra(), 8);
    CHECK(b.verdict == Verdict::no);
    auto d = cotransitivity(division_by_three(), 8);
    CHECK(d.verdict == Verdict::no);
    CHECK(d.refutation_level == 1u);
    auto single = parse_automaton("states: s\nalphabet: 0 1\ns 0 1 s\ns 1 0 s\n");
    CHECK(cotransitivity(single, 4).verdict == Verdict::yes);
    CHECK_THROWS_AS(cotransitivity(adding_machine(), 4), PreconditionError);
    auto bi = cotransitivity(bireversible52(), 6);
    CHECK(bi.verdict == Verdict::unknown);
}

TEST_CASE("stabilizers of constant words") {
    auto b = bellaterra();
    CHECK_FALSE(stabilizes_infinite(b, parse_group_word(b, "ab"), 1));
    CHECK(stabilizes_infinite(b, GroupWord{}, 0));
    CHECK(stabilizes_infinite(b, parse_group_word(b, "bb"), 1));

    std::mt19937 rng(6);
    for (const auto& m : {bellaterra(), aleshin(), adding_machine(), division_by_three()}) {
        for (int t = 0; t < 200; ++t) {
            GroupWord w;
            const auto len = rng() % 9;
            for (std::size_t i = 0; i < len; ++i)
                w.letters.push_back({static_cast<StateId>(rng() % m.num_states()), rng() % 3 == 0});
            const auto x = static_cast<LetterId>(rng() % m.alphabet_size());
            auto xinf = EventuallyPeriodicWord::constant(x);
            CHECK(stabilizes_infinite(m, w, x) == (act_inf(m, w, xinf) == xinf));
        }
    }
}

TEST_CASE("orbit cycles") {
    auto d3 = division_by_three();
    auto c = orbit_cycle(d3, 0, parse_states(d3, "01"));
    CHECK(c.preperiod == 0);
    CHECK(c.period == 6);
    CHECK(orbit_cycle(d3, 0, StateWord{}).period == 1);
    CHECK(orbit_cycle(d3, 0, parse_states(d3, "00")).period == 1);
    for (std::size_t n = 1; n <= 6; ++n) {
        StateWord one(std::vector<StateId>(n, 0));
        one.states.back() = 1;
        CHECK(orbit_cycle(d3, 0, one).period == 2 * static_cast<std::uint64_t>(std::pow(3, n - 1)));
    }
    // Non-reversible: preperiod can be positive.
    auto add = adding_machine();
    CHECK(orbit_cycle(add, 0, parse_states(add, "rr")).preperiod > 0);
    auto b = bellaterra();
    std::mt19937 rng(12);
    for (int t = 0; t < 50; ++t) {
        StateWord v;
        for (int i = 0; i < 6; ++i) v.states.push_back(static_cast<StateId>(rng() % 3));
        CHECK(orbit_cycle(b, static_cast<LetterId>(t % 2), v).preperiod == 0);
    }
}
