#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mealy/action.hpp"
#include "mealy/builtins.hpp"
#include "mealy/error.hpp"
#include "mealy/schreier.hpp"
#include "mealy/text_format.hpp"
#include "mealy/transitivity.hpp"

using namespace mealy;

namespace {

// Floyd-Warshall over the undirected graph, independent of the BFS code.
std::vector<std::vector<std::uint32_t>> all_pairs(const SchreierGraph& g) {
    const auto n = g.vertex_count();
    const std::uint32_t inf = 1u << 30;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::uint64_t v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (StateId q = 0; q < g.degree(); ++q) {
            auto w = word_index(act(g.automaton(), GroupWord::single(q), index_word(v, g.level(), g.automaton().alphabet_size())),
                                g.automaton().alphabet_size());
            if (w != v) d[v][w] = d[w][v] = 1;
        }
    }
    for (std::uint64_t k = 0; k < n; ++k)
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

} // namespace

TEST_CASE("graph construction") {
    auto b = bellaterra();
    auto g1 = SchreierGraph::build(b, 1);
    CHECK(g1.vertex_count() == 2);
    CHECK(g1.edges(0) == LevelMap{0, 1});
    CHECK(g1.edges(1) == LevelMap{0, 1});
    CHECK(g1.edges(2) == LevelMap{1, 0});
    auto g2 = SchreierGraph::build(b, 2);
    CHECK(g2.edges(2)[0] == 1); // c: 00 -> 10, index of 10 is 1
    auto g0 = SchreierGraph::build(b, 0);
    CHECK(g0.vertex_count() == 1);
    CHECK(g0.degree() == 3);
    CHECK_THROWS_AS(SchreierGraph::build(parse_automaton("states: s\nalphabet: 0 1\ns 0 0 s\ns 1 0 s\n"), 2),
                    PreconditionError);
}

TEST_CASE("graphs are regular and reverse to the inverse automaton") {
    for (const auto& m : {bellaterra(), aleshin(), division_by_three(), bireversible52()}) {
        auto g = SchreierGraph::build(m, 6);
        auto gi = SchreierGraph::build(inverse(m), 6);
        for (StateId q = 0; q < g.degree(); ++q) {
            CHECK(g.reverse_edges(q) == gi.edges(q));
            auto sorted = g.edges(q);
            std::sort(sorted.begin(), sorted.end());
            for (std::uint32_t v = 0; v < sorted.size(); ++v) CHECK(sorted[v] == v);
        }
    }
    // Bellaterra generators are involutions, so every edge's reverse is an edge.
    auto g = SchreierGraph::build(bellaterra(), 8);
    for (StateId q = 0; q < 3; ++q) CHECK(g.edges(q) == g.reverse_edges(q));
}

TEST_CASE("distances and diameters") {
    auto b = bellaterra();
    auto g2 = SchreierGraph::build(b, 2);
    auto d = distances(g2, 0);
    CHECK(d[0] == 0);
    CHECK(d[2] == 1); // 01
    CHECK(d[3] == 2); // 11
    CHECK(diameter(SchreierGraph::build(b, 1), DiameterMode::exact).upper == 1);
    CHECK(diameter(g2, DiameterMode::exact).upper == 2);

    for (const auto& m : {bellaterra(), aleshin(), division_by_three()}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            auto g = SchreierGraph::build(m, n);
            auto fw = all_pairs(g);
            std::uint32_t diam = 0;
            for (std::uint64_t s = 0; s < g.vertex_count(); ++s) {
                auto ds = distances(g, s);
                for (std::uint64_t t = 0; t < g.vertex_count(); ++t) CHECK(ds[t] == fw[s][t]);
                diam = std::max(diam, *std::max_element(ds.begin(), ds.end()));
            }
            auto ex = diameter(g, DiameterMode::exact);
            CHECK(ex.exact);
            CHECK(ex.upper == diam);
            auto bd = diameter(g, DiameterMode::bound);
            CHECK(bd.lower <= diam);
            CHECK(bd.upper >= diam);
        }
    }
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(diameter(SchreierGraph::build(b, n), DiameterMode::exact).upper <= 2 * n * n);

    DiameterOptions par;
    par.jobs = 3;
    auto g7 = SchreierGraph::build(aleshin(), 7);
    CHECK(diameter(g7, DiameterMode::exact, par).upper == diameter(g7, DiameterMode::exact).upper);
    CHECK_THROWS_AS(diameter(SchreierGraph::build(b, 15), DiameterMode::exact), CapacityError);

    std::ostringstream csv;
    std::vector<DiameterResult> rows{diameter(g2, DiameterMode::exact)};
    write_diameter_csv(csv, rows);
    CHECK(csv.str() == "n,vertices,diam_lower,diam_upper,exact_flag\n2,4,2,2,1\n");
}

TEST_CASE("div3 distances stay within the diameter") {
    auto g = SchreierGraph::build(division_by_three(), 3);
    auto diam = diameter(g, DiameterMode::exact).upper;
    for (auto v : distances(g, 0)) CHECK(v <= diam);
}

TEST_CASE("ball growth") {
    auto b = bellaterra();
    CHECK(ball_size(b, 1, 0, 5) == 1);
    for (std::size_t L = 3; L <= 8; ++L) CHECK(ball_size(b, 1, 1, L) == 3);
    for (std::size_t r = 1; r <= 6; ++r) {
        for (std::size_t L = r; L < 2 * r; ++L) CHECK(ball_size(b, 1, r, L) <= ball_size(b, 1, r, L + 1));
        CHECK(ball_size(b, 1, r - 1, 2 * r) <= ball_size(b, 1, r, 2 * r));
    }
    // Independent count: BFS over explicit words with act().
    auto a = aleshin();
    for (std::size_t r = 0; r <= 4; ++r) {
        std::set<LetterWord> seen{LetterWord::repeat(0, 10)};
        std::vector<LetterWord> frontier{LetterWord::repeat(0, 10)};
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<LetterWord> next;
            for (const auto& w : frontier)
                for (StateId q = 0; q < 3; ++q)
                    for (bool inv : {false, true}) {
                        auto img = act(a, GroupWord::single(q, inv), w);
                        if (seen.insert(img).second) next.push_back(img);
                    }
            frontier = next;
        }
        CHECK(ball_size(a, 0, r, 10) == seen.size());
    }
}

TEST_CASE("level witnesses") {
    auto b = bellaterra();
    auto xinf = EventuallyPeriodicWord::constant(1);
    for (std::size_t n = 0; n <= 14; ++n) {
        auto u = find_level_witness(b, 1, n, std::max<std::size_t>(n, 2));
        CHECK(u.size() <= 2 * std::max<std::size_t>(n, 2));
        CHECK(act(b, u, LetterWord::repeat(1, n)) == LetterWord::repeat(1, n));
        CHECK_FALSE(stabilizes_infinite(b, u, 1));
        CHECK(act_inf(b, u, xinf) != xinf);
    }
    auto u0 = find_level_witness(b, 1, 0, 1);
    CHECK(u0.size() == 1);
    CHECK_THROWS_AS(find_level_witness(b, 1, 6, 0), NotFoundError);
}

TEST_CASE("steering") {
    auto b = bellaterra();
    CHECK(format(b, steer_to(b, 1, parse_letters(b, "10"))) == "a");
    CHECK(steer_to(b, 1, LetterWord::repeat(1, 7)).empty());
    Steerer st(b, 1);
    std::size_t longest = 0;
    for (std::uint64_t v = 0; v < 1024; ++v) {
        auto s = index_word(v, 10, 2);
        auto w = st.steer(s);
        CHECK(act(b, w, s) == LetterWord::repeat(1, 10));
        longest = std::max(longest, w.size());
    }
    CHECK(longest <= 100);

    // Cyclic automaton over a prime alphabet of size 3.
    auto a = affine(4, 3);
    Steerer s3(a, 0);
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        LetterWord s;
        for (int i = 0; i < 7; ++i) s.letters.push_back(static_cast<LetterId>(rng() % 3));
        CHECK(act(a, s3.steer(s), s) == LetterWord::repeat(0, 7));
    }
    CHECK_THROWS_AS(Steerer(affine(3, 4), 0), PreconditionError);
}

TEST_CASE("lift rules") {
    auto rep = verify_lift(bellaterra(), 10);
    CHECK(rep.holds);
    CHECK(rep.levels_checked == 10);
    auto b = bellaterra();
    CHECK(format_rule(b, rep.rules[0]) == "a => crossed c,c");
    CHECK(format_rule(b, rep.rules[1]) == "b => straight a,b");
    CHECK(format_rule(b, rep.rules[2]) == "c => straight b,a");
    auto a = aleshin();
    auto ra = verify_lift(a, 10);
    CHECK(ra.holds);
    CHECK(format_rule(a, ra.rules[0]) == "a => straight c,c");
    CHECK(format_rule(a, ra.rules[1]) == "b => crossed a,b");
    CHECK(format_rule(a, ra.rules[2]) == "c => crossed b,a");

    std::mt19937 rng(10);
    for (int t = 0; t < 20; ++t) {
        const std::size_t nq = 2 + t % 3, na = 2 + t % 2;
        std::vector<std::string> st, al;
        for (std::size_t i = 0; i < nq; ++i) st.push_back("s" + std::to_string(i));
        for (std::size_t i = 0; i < na; ++i) al.push_back(std::to_string(i));
        std::vector<StateId> tr;
        std::vector<LetterId> out;
        for (std::size_t q = 0; q < nq; ++q) {
            std::vector<LetterId> perm(na);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (std::size_t x = 0; x < na; ++x) {
                tr.push_back(static_cast<StateId>(rng() % nq));
                out.push_back(perm[x]);
            }
        }
        CHECK(verify_lift(Automaton(st, al, tr, out), 6).holds);
    }
}
