#include <doctest.h>

#include <random>

#include "mealy/action.hpp"
#include "mealy/builtins.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"
#include "mealy/text_format.hpp"

using namespace mealy;

namespace {

LetterWord word_of(std::uint64_t v, std::size_t n, unsigned m) {
    LetterWord s;
    for (std::size_t i = 0; i < n; ++i, v /= m) s.letters.push_back(static_cast<LetterId>(v % m));
    return s;
}

std::uint64_t value_of(const LetterWord& s, unsigned m) {
    std::uint64_t v = 0;
    for (std::size_t i = s.size(); i-- > 0;) v = v * m + s[i];
    return v;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Modular inverse by brute force, independent of the library.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod) {
    for (std::uint64_t x = 1; x < mod; ++x)
        if (a * x % mod == 1) return x;
    return 0;
}

LetterWord random_word(std::mt19937& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<LetterId> d(0, static_cast<LetterId>(m - 1));
    LetterWord s;
    for (std::size_t i = 0; i < n; ++i) s.letters.push_back(d(rng));
    return s;
}

GroupWord random_positive(std::mt19937& rng, std::size_t n, std::size_t q) {
    std::uniform_int_distribution<StateId> d(0, static_cast<StateId>(q - 1));
    GroupWord w;
    for (std::size_t i = 0; i < n; ++i) w.letters.push_back({d(rng), false});
    return w;
}

std::vector<Automaton> all_builtins() {
    return {bellaterra(), aleshin(), adding_machine(), division_by_three(), affine(5, 3), conjugator(), bireversible52()};
}

} // namespace

TEST_CASE("builtin examples") {
    auto b = bellaterra();
    CHECK(format(b, act(b, parse_group_word(b, "c"), parse_letters(b, "0000"))) == "1001");
    CHECK(format(b, act(b, parse_group_word(b, "a"), parse_letters(b, "0000"))) == "0010");
    auto add = adding_machine();
    CHECK(format(add, act(add, parse_group_word(add, "r"), parse_letters(add, "110"))) == "001");
    auto d3 = division_by_three();
    CHECK(format(d3, act(d3, parse_group_word(d3, "0"), parse_letters(d3, "1001"))) == "1100");
    CHECK(builtin("affine(3,2)") == d3);
    CHECK_THROWS_AS(builtin("nope"), SymbolError);
    CHECK_THROWS_AS(builtin("affine(4,2)"), PreconditionError);
}

TEST_CASE("affine automata divide by k in the m-adic integers") {
    for (auto [k, m] : {std::pair{3u, 2u}, {5u, 3u}, {2u, 3u}, {7u, 4u}}) {
        auto a = affine(k, m);
        const unsigned n = 6;
        const auto mod = ipow(m, n);
        const auto kinv = inv_mod(k % mod, mod);
        for (StateId q = 0; q < k; ++q)
            for (std::uint64_t v = 0; v < mod; v += 7) {
                auto img = act(a, GroupWord::single(q), word_of(v, n, m));
                CHECK(value_of(img, m) == (v + mod * q - q) % mod * kinv % mod);
            }
    }
}

TEST_CASE("adding machine adds") {
    auto add = adding_machine();
    for (unsigned p = 1; p <= 4; ++p)
        for (std::uint64_t v = 0; v < 64; ++v)
            CHECK(value_of(act(add, GroupWord::power(0, p), word_of(v, 6, 2)), 2) == (v + p) % 64);
}

TEST_CASE("properties") {
    auto pb = properties(bellaterra());
    CHECK(pb.invertible);
    CHECK(pb.reversible);
    CHECK(pb.bireversible);
    CHECK(pb.cyclic);
    CHECK(properties(aleshin()).bireversible);
    auto pa = properties(adding_machine());
    CHECK(pa.invertible);
    CHECK_FALSE(pa.reversible);
    CHECK(properties(bireversible52()).bireversible);
}

TEST_CASE("dual, inverse, union") {
    auto b = bellaterra();
    CHECK(dual(dual(b)) == b);
    auto bi = inverse(b);
    for (std::uint64_t v = 0; v < 256; ++v)
        for (StateId q = 0; q < 3; ++q)
            CHECK(act(bi, GroupWord::single(q), word_of(v, 8, 2)) == act(b, GroupWord::single(q), word_of(v, 8, 2)));
    auto u = disjoint_union(b, bi);
    CHECK(u.num_states() == 6);
    CHECK(u.is_invertible());
    auto uu = disjoint_union(b, b);
    CHECK(uu.num_states() == 6);
    CHECK(minimize(uu).num_states() == 3);
    CHECK(minimize(b) == b);
    auto reset = parse_automaton("states: s\nalphabet: 0 1\ns 0 0 s\ns 1 0 s\n");
    CHECK_FALSE(reset.is_invertible());
    CHECK_THROWS_AS(inverse(reset), PreconditionError);
}

TEST_CASE("inverse undoes the action") {
    for (const auto& m : all_builtins()) {
        if (!m.is_invertible()) continue;
        auto mi = inverse(m);
        const auto na = m.alphabet_size();
        std::mt19937 rng(7);
        for (int t = 0; t < 200; ++t) {
            auto s = random_word(rng, 10, na);
            for (StateId q = 0; q < m.num_states(); ++q) {
                CHECK(act(mi, GroupWord::single(q), act(m, GroupWord::single(q), s)) == s);
                CHECK(act(m, GroupWord::single(q, true), act(m, GroupWord::single(q), s)) == s);
            }
        }
    }
}

TEST_CASE("products and minimization") {
    auto b = bellaterra();
    std::vector<ProductPart> aa{{&b, GroupWord::single(0)}, {&b, GroupWord::single(0)}};
    auto [p, d] = product(aa);
    for (std::uint64_t v = 0; v < 1024; ++v) CHECK(act(p, GroupWord::single(d), word_of(v, 10, 2)) == word_of(v, 10, 2));
    auto pm = minimize(p);
    CHECK(pm.num_states() == 1);

    auto add = adding_machine();
    std::vector<ProductPart> rr{{&add, GroupWord::single(0)}, {&add, GroupWord::single(0)}};
    auto [p2, d2] = product(rr);
    for (std::uint64_t v = 0; v < 256; ++v)
        CHECK(value_of(act(p2, GroupWord::single(d2), word_of(v, 8, 2)), 2) == (v + 2) % 256);

    std::vector<ProductPart> one{{&b, GroupWord::single(2)}};
    auto [p1, d1] = product(one);
    for (std::uint64_t v = 0; v < 256; ++v)
        CHECK(act(p1, GroupWord::single(d1), word_of(v, 8, 2)) == act(b, GroupWord::single(2), word_of(v, 8, 2)));

    // Mixed signs and several generators.
    auto a = aleshin();
    auto w = parse_group_word(a, "ab'cc'a'b");
    std::vector<ProductPart> mixed{{&a, w}};
    auto [p3, d3] = product(mixed);
    auto p3m = minimize(p3);
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto s = random_word(rng, 12, 2);
        CHECK(act(p3, GroupWord::single(d3), s) == act(a, w, s));
    }
    CHECK(p3m.num_states() <= p3.num_states());
    auto c = conjugator();
    CHECK_THROWS_AS(product(std::vector<ProductPart>{{&b, GroupWord{}}, {&c, GroupWord{}}}), PreconditionError);
}

TEST_CASE("minimize preserves every state's action") {
    auto a = aleshin();
    auto u = disjoint_union(a, inverse(a));
    auto [p, d] = product(std::vector<ProductPart>{{&u, parse_group_word(u, "a b' c")}});
    auto classes = equivalence_classes(p);
    auto pm = minimize(p);
    for (StateId q = 0; q < p.num_states(); ++q)
        for (std::uint64_t v = 0; v < 256; ++v)
            CHECK(act(p, GroupWord::single(q), word_of(v, 8, 2)) ==
                  act(pm, GroupWord::single(classes[q]), word_of(v, 8, 2)));
}

TEST_CASE("action laws") {
    std::mt19937 rng(11);
    for (const auto& m : all_builtins()) {
        const auto nq = m.num_states(), na = m.alphabet_size();
        for (int t = 0; t < 50; ++t) {
            auto u = random_positive(rng, 3, nq), v = random_positive(rng, 4, nq);
            auto s = random_word(rng, 9, na), s2 = random_word(rng, 5, na);
            CHECK(act(m, u * v, s) == act(m, u, act(m, v, s)));
            CHECK(act(m, u, s).size() == s.size());
            // Cross relation: w(st) = w(s) w^s(t).
            auto whole = act(m, u, s.concat(s2));
            auto sec = section(m, u, s);
            CHECK(whole == act(m, u, s).concat(act(m, sec, s2)));
            CHECK(GroupWord::from_states(dual_act(m, StateWord(std::vector<StateId>{u.letters[0].state, u.letters[1].state, u.letters[2].state}), s)) == sec);
            // Prefix compatibility.
            CHECK(act(m, v, s.prefix(4)) == act(m, v, s).prefix(4));
        }
        CHECK(act(m, GroupWord{}, LetterWord{0, 0}) == LetterWord{0, 0});
    }
}

TEST_CASE("dual action") {
    auto b = bellaterra();
    CHECK(format(b, dual_act(b, parse_states(b, "ab"), parse_letters(b, "1"))) == "cb");
    CHECK(dual_act(b, parse_states(b, "abc"), LetterWord{}) == parse_states(b, "abc"));
    auto d3 = division_by_three();
    CHECK(format(d3, dual_act(d3, parse_states(d3, "10"), parse_letters(d3, "0"))) == "20");

    // The action of dual(M) is dual_act written backwards.
    std::mt19937 rng(5);
    for (const auto& m : all_builtins()) {
        auto dm = dual(m);
        for (int t = 0; t < 50; ++t) {
            auto v = random_word(rng, 12, m.num_states());
            StateId x = std::uniform_int_distribution<StateId>(0, static_cast<StateId>(m.alphabet_size() - 1))(rng);
            StateWord sv(std::vector<StateId>(v.letters.rbegin(), v.letters.rend()));
            auto img = dual_act(m, sv, LetterWord{x});
            auto img2 = act(dm, GroupWord::single(x), v);
            CHECK(std::vector<StateId>(img.states.rbegin(), img.states.rend()) == img2.letters);
        }
    }
}

TEST_CASE("eventually periodic words") {
    EventuallyPeriodicWord e(LetterWord{0, 1, 0, 1}, LetterWord{0, 1, 0, 1});
    CHECK(e.preperiod_length() == 0);
    CHECK(e.period() == LetterWord{0, 1});
    EventuallyPeriodicWord f(LetterWord{1, 1, 0}, LetterWord{1, 0});
    CHECK(f.preperiod() == LetterWord{1});
    CHECK(f.period() == LetterWord{1, 0});
    CHECK_THROWS_AS(EventuallyPeriodicWord(LetterWord{1}, LetterWord{}), PreconditionError);

    auto b = bellaterra();
    auto img = act_inf(b, GroupWord::single(0), EventuallyPeriodicWord::constant(1));
    CHECK(format(b, img) == "(10)^inf");
    CHECK(act_inf(b, GroupWord{}, f) == f);

    auto add = adding_machine();
    auto r5 = act_inf(add, GroupWord::power(0, 5), EventuallyPeriodicWord::constant(0));
    CHECK(r5.preperiod_length() == 3);

    // Prefix consistency against finite action.
    std::mt19937 rng(9);
    for (const auto& m : all_builtins()) {
        for (int t = 0; t < 30; ++t) {
            EventuallyPeriodicWord w(random_word(rng, t % 5, m.alphabet_size()),
                                     random_word(rng, 1 + t % 3, m.alphabet_size()));
            auto g = random_positive(rng, 3, m.num_states());
            auto im = act_inf(m, g, w);
            CHECK(im.prefix(40) == act(m, g, w.prefix(40)));
        }
    }
}

TEST_CASE("group words") {
    GroupWord w{{0, false}, {1, false}, {1, true}, {0, true}, {2, false}};
    CHECK(w.reduced() == GroupWord{{2, false}});
    CHECK((w * w.inverse()).reduced().empty());
    auto b = bellaterra();
    CHECK(format(b, parse_group_word(b, "ab'c")) == "ab'c");
    CHECK(parse_group_word(b, "b^-1") == GroupWord{{1, true}});
}

TEST_CASE("cyclic structure") {
    auto cs = cyclic_structure(bellaterra());
    REQUIRE(cs);
    CHECK(cs->generates);
    CHECK(cs->exponent == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(is_cyclic(adding_machine()));
    auto cd = cyclic_structure(dual(bellaterra()));
    CHECK_FALSE(cd); // tau_1 = (a c) is not a power of a 3-cycle
    CHECK_FALSE(cyclic_structure(dual(adding_machine())));
}

TEST_CASE("text format round trip") {
    for (const auto& m : all_builtins()) {
        auto text = serialize(m);
        auto back = parse_automaton(text);
        CHECK(back == m);
        CHECK(serialize(back) == text);
    }
    CHECK_THROWS_AS(parse_automaton("states: a\nalphabet: 0 1\na 0 0 a\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("states: a\nalphabet: 0\na 0 0 a\na 0 0 a\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("states: a a\nalphabet: 0\na 0 0 a\n"), ParseError);
    auto m = parse_automaton("# comment\nstates: p q   # trailing\n\nalphabet: x\nq x x p\np x x q\n");
    CHECK(m.num_states() == 2);
    CHECK(to_dot(bellaterra()).find("label=\"0|1\"") != std::string::npos);
}
